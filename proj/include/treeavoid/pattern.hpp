#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "treeavoid/tree.hpp"

namespace treeavoid {

// A finite set of non-leaf trees, stored deduplicated in canonical order.
// The leaf is never a member: a leaf pattern would exclude every tree.
class PatternSet {
public:
    PatternSet() = default;
    explicit PatternSet(std::vector<SyntaxTree> trees);
    PatternSet(std::initializer_list<SyntaxTree> trees)
        : PatternSet(std::vector<SyntaxTree>(trees)) {}

    const std::vector<SyntaxTree>& trees() const { return trees_; }
    bool empty() const { return trees_.empty(); }
    std::size_t size() const { return trees_.size(); }
    bool contains(const SyntaxTree& t) const;

    PatternSet union_with(const PatternSet& other) const;
    PatternSet inserted(const SyntaxTree& t) const;
    PatternSet removed(const SyntaxTree& t) const;

    // Canonical keys of the members joined with ','; injective on sets.
    std::string key() const;

    friend bool operator==(const PatternSet& x, const PatternSet& y) {
        return x.trees_ == y.trees_;
    }
    friend bool operator!=(const PatternSet& x, const PatternSet& y) {
        return !(x == y);
    }

private:
    std::vector<SyntaxTree> trees_;  // sorted by canonical key, unique
};

// Total order on pattern sets: lexicographic on keys.
struct PatternSetLess {
    bool operator()(const PatternSet& x, const PatternSet& y) const {
        return x.key() < y.key();
    }
};

// Members of P whose root letter is `a`.
PatternSet restrict_to_root(const PatternSet& P, const Letter& a);

// Members of P of degree <= d.
PatternSet truncate_patterns(const PatternSet& P, int d);

// True iff no member of P is a factor of t.
bool factor_avoids(const SyntaxTree& t, const PatternSet& P);

// True iff no member of P is a prefix of t.
bool prefix_avoids(const SyntaxTree& t, const PatternSet& P);

}  // namespace treeavoid
