#include "treeavoid/pattern.hpp"

#include <algorithm>

namespace treeavoid {

PatternSet::PatternSet(std::vector<SyntaxTree> trees) : trees_(std::move(trees)) {
    for (const SyntaxTree& t : trees_)
        if (t.is_leaf())
            throw InputError("the leaf is not allowed as a pattern");
    std::sort(trees_.begin(), trees_.end(), TreeLess{});
    trees_.erase(std::unique(trees_.begin(), trees_.end()), trees_.end());
}

bool PatternSet::contains(const SyntaxTree& t) const {
    return std::binary_search(trees_.begin(), trees_.end(), t, TreeLess{});
}

PatternSet PatternSet::union_with(const PatternSet& other) const {
    std::vector<SyntaxTree> all = trees_;
    all.insert(all.end(), other.trees_.begin(), other.trees_.end());
    return PatternSet(std::move(all));
}

PatternSet PatternSet::inserted(const SyntaxTree& t) const {
    std::vector<SyntaxTree> all = trees_;
    all.push_back(t);
    return PatternSet(std::move(all));
}

PatternSet PatternSet::removed(const SyntaxTree& t) const {
    std::vector<SyntaxTree> all;
    all.reserve(trees_.size());
    for (const SyntaxTree& x : trees_)
        if (x != t) all.push_back(x);
    return PatternSet(std::move(all));
}

std::string PatternSet::key() const {
    std::string k;
    for (std::size_t i = 0; i < trees_.size(); ++i) {
        if (i > 0) k += ',';
        k += trees_[i].key();
    }
    return k;
}

PatternSet restrict_to_root(const PatternSet& P, const Letter& a) {
    std::vector<SyntaxTree> out;
    for (const SyntaxTree& t : P.trees())
        if (t.root() == a) out.push_back(t);
    return PatternSet(std::move(out));
}

PatternSet truncate_patterns(const PatternSet& P, int d) {
    std::vector<SyntaxTree> out;
    for (const SyntaxTree& t : P.trees())
        if (t.degree() <= d) out.push_back(t);
    return PatternSet(std::move(out));
}

bool factor_avoids(const SyntaxTree& t, const PatternSet& P) {
    return std::none_of(P.trees().begin(), P.trees().end(),
                        [&t](const SyntaxTree& p) { return is_factor(p, t); });
}

bool prefix_avoids(const SyntaxTree& t, const PatternSet& P) {
    return std::none_of(P.trees().begin(), P.trees().end(),
                        [&t](const SyntaxTree& p) { return is_prefix(p, t); });
}

}  // namespace treeavoid
