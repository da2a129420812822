#pragma once

#include <map>
#include <vector>

#include "treeavoid/pattern.hpp"
#include "treeavoid/series.hpp"

namespace treeavoid {

// All trees over the alphabet of degree <= max_degree, in canonical order.
std::vector<SyntaxTree> enumerate_trees(const GradedAlphabet& alphabet,
                                        int max_degree);

// Brute-force census of the trees of degree <= max_degree that avoid P as
// factors and Q as prefixes, refined by trace monomial.  This is the
// reference route: it never touches consistent words, equation systems or the
// solver.
class RefinedCount {
public:
    RefinedCount(GradedAlphabet alphabet, int max_degree)
        : alphabet_(std::move(alphabet)), max_degree_(max_degree) {}

    const GradedAlphabet& alphabet() const { return alphabet_; }
    int max_degree() const { return max_degree_; }
    const std::map<Exponents, long long>& counts() const { return counts_; }
    long long count(const Exponents& exps) const;
    void record(const Exponents& exps);

    // The census as a trace series truncated at max_degree.
    TraceSeries to_series() const;

private:
    GradedAlphabet alphabet_;
    int max_degree_;
    std::map<Exponents, long long> counts_;
};

RefinedCount count_avoiding(const GradedAlphabet& alphabet, const PatternSet& P,
                            const PatternSet& Q, int max_degree);

// Factor census by decomposition: every factor of t is a prefix of a subtree
// of t, so the set of factors is the union of prefixes over all subtree
// occurrences.  Used as a second route for checking is_factor.
std::vector<SyntaxTree> factors_by_decomposition(const SyntaxTree& t);

}  // namespace treeavoid
