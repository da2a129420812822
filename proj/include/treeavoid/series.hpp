#pragma once

#include <map>
#include <string>
#include <vector>

#include "treeavoid/system.hpp"
#include "treeavoid/tree.hpp"

namespace treeavoid {

// Exponent vector over the alphabet's canonical letter order.  Monomials are
// ordered by exponent-lexicographic comparison.
using Exponents = std::vector<int>;

int monomial_degree(const Exponents& exps);
int monomial_arity(const GradedAlphabet& alphabet, const Exponents& exps);

// The per-letter trace monomial of a tree: letter a's exponent is the number
// of internal nodes labelled a.  Degree and arity of the tree are recoverable
// from it.
Exponents trace_monomial(const GradedAlphabet& alphabet, const SyntaxTree& t);

// A series in the per-letter trace monomials, truncated beyond a fixed total
// degree.  Coefficients are exact integers.
class TraceSeries {
public:
    TraceSeries(GradedAlphabet alphabet, int truncation_degree);

    static TraceSeries zero(const GradedAlphabet& alphabet, int truncation_degree);
    // The series with a single degree-0 term of coefficient 1.
    static TraceSeries leaf(const GradedAlphabet& alphabet, int truncation_degree);

    const GradedAlphabet& alphabet() const { return alphabet_; }
    int truncation_degree() const { return degree_cap_; }
    // Nonzero coefficients keyed by exponent vector, in monomial order.
    const std::map<Exponents, long long>& terms() const { return terms_; }
    long long coeff(const Exponents& exps) const;
    // Adds c to the coefficient of `exps`; silently drops degrees beyond the
    // truncation degree.
    void add_term(const Exponents& exps, long long c);

    friend bool operator==(const TraceSeries& x, const TraceSeries& y) {
        return x.degree_cap_ == y.degree_cap_ && x.alphabet_ == y.alphabet_ &&
               x.terms_ == y.terms_;
    }

private:
    GradedAlphabet alphabet_;
    int degree_cap_;
    std::map<Exponents, long long> terms_;
};

// Arithmetic; the operands must share alphabet and truncation degree.
TraceSeries add(const TraceSeries& f, const TraceSeries& g);
TraceSeries scale(long long c, const TraceSeries& f);
// Product of trace monomials adds exponent vectors; terms beyond the
// truncation degree are dropped.
TraceSeries multiply(const TraceSeries& f, const TraceSeries& g);

// Solves the system by iteration from the Leaf series.  Coefficients of
// degree <= truncation_degree are exact; one extra iteration past the
// (truncation_degree+1)-th is run and checked to be a fixed point.
std::map<std::string, TraceSeries> solve_system(const EquationSystem& system,
                                                int truncation_degree);

// Root component of solve_system.
TraceSeries solve_root(const EquationSystem& system, int truncation_degree);

enum class SpecializeMode { Arity, Degree };

// Collapses a trace series to an integer sequence: by arity (values for
// arities 1..D+1; requires an alphabet without arity-1 letters, otherwise the
// arity slices are not finite) or by degree (values for degrees 0..D).
std::vector<long long> specialize(const TraceSeries& f, SpecializeMode mode);

// Text rendering: header line `truncation_degree D`, then one line per term,
//   <coeff> t^<arity> q^<degree> <letter>^<exp> ...
// in monomial order (exponent 1 prints without ^; q omitted at degree 0).
std::string print_series(const TraceSeries& f);

}  // namespace treeavoid
