#pragma once

#include <map>
#include <string>
#include <vector>

#include "treeavoid/series.hpp"

namespace treeavoid {

// Monomial of the full ring Z[t, q, q_a...]: leaf-count marker t, node-count
// marker q, one marker per letter.
struct FullMonomial {
    int t = 0;
    int q = 0;
    Exponents exps;

    friend bool operator==(const FullMonomial&, const FullMonomial&) = default;
    friend bool operator<(const FullMonomial& x, const FullMonomial& y) {
        if (x.t != y.t) return x.t < y.t;
        if (x.q != y.q) return x.q < y.q;
        return x.exps < y.exps;
    }
};

// Truncated polynomial over the full ring.  Exponents only ever add, so
// computing with caps yields the exact low-order part of any polynomial
// combination.
class FullPoly {
public:
    FullPoly(GradedAlphabet alphabet, int t_cap, int q_cap);

    const GradedAlphabet& alphabet() const { return alphabet_; }
    int t_cap() const { return t_cap_; }
    int q_cap() const { return q_cap_; }
    const std::map<FullMonomial, long long>& terms() const { return terms_; }

    void add_term(const FullMonomial& m, long long c);

    friend FullPoly add(const FullPoly& f, const FullPoly& g);
    friend FullPoly multiply(const FullPoly& f, const FullPoly& g);

private:
    GradedAlphabet alphabet_;
    int t_cap_;
    int q_cap_;
    std::map<FullMonomial, long long> terms_;
};

// Lifts a trace series into the full ring: a trace monomial of arity n and
// degree d maps to t^n q^d times its letter markers.
FullPoly lift_series(const TraceSeries& f, int t_cap, int q_cap);

// One summand scalar * t^t_exp * q^q_exp * (letter markers) * H^h_power of a
// polynomial identity in the generating series H.
struct IdentityTerm {
    long long scalar = 0;
    int t_exp = 0;
    int q_exp = 0;
    std::map<std::string, int> letter_exps;
    int h_power = 0;
};

struct AlgebraicIdentity {
    std::string name;
    std::vector<IdentityTerm> terms;
};

struct ResidualReport {
    bool pass = false;
    // Nonzero residual monomials with q-degree within the series truncation,
    // in monomial order.
    std::vector<std::pair<FullMonomial, long long>> nonzero;
};

// Substitutes f for H in the identity and reports the residual truncated to
// the q-degree of f.  The truncation is exact: monomial exponents only add,
// so every low-order residual coefficient is fully determined by f.
ResidualReport check_algebraic_equation(const TraceSeries& f,
                                        const AlgebraicIdentity& identity);

std::string render_monomial(const GradedAlphabet& alphabet, const FullMonomial& m);
std::string render_report(const GradedAlphabet& alphabet, const ResidualReport& report);

}  // namespace treeavoid
