#pragma once

#include <map>
#include <string>
#include <vector>

#include "treeavoid/tree.hpp"

namespace treeavoid {

// A monoid over nonnegative integer elements: the additive naturals, or the
// cyclic monoid Z/order with addition.  0 is always the unit.
class Monoid {
public:
    enum class Kind { AdditiveNaturals, Cyclic };

    static Monoid additive_naturals();
    static Monoid cyclic(int order);

    Kind kind() const { return kind_; }
    // Only meaningful for cyclic monoids.
    int order() const;

    bool valid_element(int x) const;
    int unit() const { return 0; }
    int product(int x, int y) const;

    friend bool operator==(const Monoid&, const Monoid&) = default;

private:
    Kind kind_ = Kind::AdditiveNaturals;
    int order_ = 0;
};

// A nonempty word of monoid elements; its length is its operadic arity.
struct MonoidWord {
    std::vector<int> letters;

    int arity() const { return static_cast<int>(letters.size()); }
    // Space-separated digits, e.g. "0 1 0".
    std::string text() const;

    friend bool operator==(const MonoidWord&, const MonoidWord&) = default;
    friend bool operator<(const MonoidWord& x, const MonoidWord& y) {
        if (x.letters.size() != y.letters.size())
            return x.letters.size() < y.letters.size();
        return x.letters < y.letters;
    }
};

// The arity-1 unit word "0".
MonoidWord unit_word();

// Word composition u o_i v: substitutes v for position i of u, multiplying
// every letter of v by u's i-th letter on the left.
MonoidWord word_composition(const Monoid& monoid, const MonoidWord& u, int i,
                            const MonoidWord& v);

// Elements of the suboperad generated by `generators` (plus the unit word),
// grouped by arity 1..max_arity, each group sorted.  Generators of arity 1
// other than the unit word are rejected: over the additive naturals they
// generate infinitely many arity-1 elements, so saturation would diverge.
std::vector<std::vector<MonoidWord>> suboperad_elements(
    const Monoid& monoid, const std::vector<MonoidWord>& generators,
    int max_arity);

// Evaluates a tree in the word operad: the leaf maps to the unit word, an
// internal node to the full composition of its letter's assigned word with
// the evaluated children.
MonoidWord evaluate_tree(const Monoid& monoid, const SyntaxTree& t,
                         const std::map<std::string, MonoidWord>& assignment);

}  // namespace treeavoid
