#include "treeavoid/oracle.hpp"

#include <algorithm>
#include <set>

namespace treeavoid {

namespace {

// trees_by_degree[d] lists the trees of degree exactly d.
std::vector<std::vector<SyntaxTree>> trees_by_degree(const GradedAlphabet& alphabet,
                                                     int max_degree) {
    std::vector<std::vector<SyntaxTree>> lists(
        static_cast<std::size_t>(max_degree) + 1);
    lists[0] = {SyntaxTree::leaf()};
    for (int d = 1; d <= max_degree; ++d) {
        for (const Letter& a : alphabet.letters()) {
            // Distribute the remaining d-1 internal nodes over a's children.
            std::vector<SyntaxTree> stack;
            auto fill = [&](auto&& self, int position, int remaining) -> void {
                if (position == a.arity) {
                    if (remaining == 0) {
                        std::vector<SyntaxTree> children = stack;
                        lists[static_cast<std::size_t>(d)].push_back(
                            SyntaxTree::node(a, std::move(children)));
                    }
                    return;
                }
                for (int take = 0; take <= remaining; ++take)
                    for (const SyntaxTree& c : lists[static_cast<std::size_t>(take)]) {
                        stack.push_back(c);
                        self(self, position + 1, remaining - take);
                        stack.pop_back();
                    }
            };
            fill(fill, 0, d - 1);
        }
    }
    return lists;
}

}  // namespace

std::vector<SyntaxTree> enumerate_trees(const GradedAlphabet& alphabet,
                                        int max_degree) {
    if (max_degree < 0) throw InputError("max degree must be >= 0");
    std::vector<SyntaxTree> out;
    for (auto& bucket : trees_by_degree(alphabet, max_degree))
        out.insert(out.end(), bucket.begin(), bucket.end());
    std::sort(out.begin(), out.end(), TreeLess{});
    return out;
}

long long RefinedCount::count(const Exponents& exps) const {
    auto it = counts_.find(exps);
    return it == counts_.end() ? 0 : it->second;
}

void RefinedCount::record(const Exponents& exps) { counts_[exps] += 1; }

TraceSeries RefinedCount::to_series() const {
    TraceSeries f(alphabet_, max_degree_);
    for (const auto& [exps, c] : counts_) f.add_term(exps, c);
    return f;
}

RefinedCount count_avoiding(const GradedAlphabet& alphabet, const PatternSet& P,
                            const PatternSet& Q, int max_degree) {
    RefinedCount census(alphabet, max_degree);
    for (const SyntaxTree& t : enumerate_trees(alphabet, max_degree))
        if (factor_avoids(t, P) && prefix_avoids(t, Q))
            census.record(trace_monomial(alphabet, t));
    return census;
}

std::vector<SyntaxTree> factors_by_decomposition(const SyntaxTree& t) {
    std::set<SyntaxTree, TreeLess> out;
    auto walk = [&out](auto&& self, const SyntaxTree& u) -> void {
        for (const SyntaxTree& p : prefixes(u)) out.insert(p);
        if (u.is_leaf()) return;
        for (const SyntaxTree& c : u.children()) self(self, c);
    };
    walk(walk, t);
    return std::vector<SyntaxTree>(out.begin(), out.end());
}

}  // namespace treeavoid
