#include "treeavoid/series.hpp"

#include <algorithm>
#include <numeric>

namespace treeavoid {

int monomial_degree(const Exponents& exps) {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

int monomial_arity(const GradedAlphabet& alphabet, const Exponents& exps) {
    int n = 1;
    for (std::size_t i = 0; i < exps.size(); ++i)
        n += exps[i] * (alphabet.at(i).arity - 1);
    return n;
}

Exponents trace_monomial(const GradedAlphabet& alphabet, const SyntaxTree& t) {
    Exponents exps(alphabet.size(), 0);
    auto walk = [&](auto&& self, const SyntaxTree& u) -> void {
        if (u.is_leaf()) return;
        exps[alphabet.index_of(u.root().name)] += 1;
        for (const SyntaxTree& c : u.children()) self(self, c);
    };
    walk(walk, t);
    return exps;
}

TraceSeries::TraceSeries(GradedAlphabet alphabet, int truncation_degree)
    : alphabet_(std::move(alphabet)), degree_cap_(truncation_degree) {
    if (truncation_degree < 0)
        throw InputError("truncation degree must be >= 0");
}

TraceSeries TraceSeries::zero(const GradedAlphabet& alphabet, int truncation_degree) {
    return TraceSeries(alphabet, truncation_degree);
}

TraceSeries TraceSeries::leaf(const GradedAlphabet& alphabet, int truncation_degree) {
    TraceSeries f(alphabet, truncation_degree);
    f.add_term(Exponents(alphabet.size(), 0), 1);
    return f;
}

long long TraceSeries::coeff(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? 0 : it->second;
}

void TraceSeries::add_term(const Exponents& exps, long long c) {
    if (exps.size() != alphabet_.size())
        throw InputError("exponent vector length does not match the alphabet");
    if (c == 0 || monomial_degree(exps) > degree_cap_) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

void check_compatible(const TraceSeries& f, const TraceSeries& g) {
    if (f.truncation_degree() != g.truncation_degree())
        throw InputError("truncation degrees differ: " +
                         std::to_string(f.truncation_degree()) + " vs " +
                         std::to_string(g.truncation_degree()));
    if (!(f.alphabet() == g.alphabet()))
        throw InputError("series alphabets differ");
}

}  // namespace

TraceSeries add(const TraceSeries& f, const TraceSeries& g) {
    check_compatible(f, g);
    TraceSeries out = f;
    for (const auto& [exps, c] : g.terms()) out.add_term(exps, c);
    return out;
}

TraceSeries scale(long long c, const TraceSeries& f) {
    TraceSeries out = TraceSeries::zero(f.alphabet(), f.truncation_degree());
    for (const auto& [exps, k] : f.terms()) out.add_term(exps, c * k);
    return out;
}

TraceSeries multiply(const TraceSeries& f, const TraceSeries& g) {
    check_compatible(f, g);
    TraceSeries out = TraceSeries::zero(f.alphabet(), f.truncation_degree());
    const int cap = f.truncation_degree();
    for (const auto& [xe, xc] : f.terms()) {
        const int xd = monomial_degree(xe);
        for (const auto& [ye, yc] : g.terms()) {
            if (xd + monomial_degree(ye) > cap) continue;
            Exponents ze = xe;
            for (std::size_t i = 0; i < ze.size(); ++i) ze[i] += ye[i];
            out.add_term(ze, xc * yc);
        }
    }
    return out;
}

namespace {

// Multiplies by the degree-1 monomial of `letter_index`.
TraceSeries shift_by_letter(const TraceSeries& f, std::size_t letter_index) {
    TraceSeries out = TraceSeries::zero(f.alphabet(), f.truncation_degree());
    for (const auto& [exps, c] : f.terms()) {
        Exponents shifted = exps;
        shifted[letter_index] += 1;
        out.add_term(shifted, c);
    }
    return out;
}

std::map<std::string, TraceSeries> iterate_once(
    const EquationSystem& system, int cap,
    const std::map<std::string, TraceSeries>& current) {
    std::map<std::string, TraceSeries> next;
    for (const Equation& eq : system.equations()) {
        TraceSeries rhs = TraceSeries::leaf(system.alphabet(), cap);
        for (const Term& term : eq.terms) {
            TraceSeries prod = current.at(term.operands.front().key());
            for (std::size_t i = 1; i < term.operands.size(); ++i)
                prod = multiply(prod, current.at(term.operands[i].key()));
            prod = shift_by_letter(prod, system.alphabet().index_of(term.letter.name));
            rhs = add(rhs, scale(term.coeff, prod));
        }
        next.emplace(eq.variable.key(), std::move(rhs));
    }
    return next;
}

}  // namespace

std::map<std::string, TraceSeries> solve_system(const EquationSystem& system,
                                                int truncation_degree) {
    std::map<std::string, TraceSeries> current;
    for (const Equation& eq : system.equations())
        current.emplace(eq.variable.key(),
                        TraceSeries::leaf(system.alphabet(), truncation_degree));
    // After r iterations all coefficients of degree < r are exact, so
    // truncation_degree + 1 iterations suffice; the extra iteration must then
    // be a no-op.
    for (int round = 0; round < truncation_degree + 1; ++round)
        current = iterate_once(system, truncation_degree, current);
    std::map<std::string, TraceSeries> settled =
        iterate_once(system, truncation_degree, current);
    if (settled != current)
        throw std::logic_error("solver did not reach a fixed point");
    return current;
}

TraceSeries solve_root(const EquationSystem& system, int truncation_degree) {
    auto solved = solve_system(system, truncation_degree);
    return solved.at(system.root().key());
}

std::vector<long long> specialize(const TraceSeries& f, SpecializeMode mode) {
    const int cap = f.truncation_degree();
    if (mode == SpecializeMode::Arity) {
        if (f.alphabet().has_arity_one())
            throw InputError(
                "arity specialization requires an alphabet without arity-1 "
                "letters");
        // Without arity-1 letters a tree's degree is < its arity, so the
        // slices for arities 1..cap+1 are complete.
        std::vector<long long> out(static_cast<std::size_t>(cap) + 1, 0);
        for (const auto& [exps, c] : f.terms()) {
            const int n = monomial_arity(f.alphabet(), exps);
            if (n <= cap + 1) out[static_cast<std::size_t>(n - 1)] += c;
        }
        return out;
    }
    std::vector<long long> out(static_cast<std::size_t>(cap) + 1, 0);
    for (const auto& [exps, c] : f.terms())
        out[static_cast<std::size_t>(monomial_degree(exps))] += c;
    return out;
}

std::string print_series(const TraceSeries& f) {
    std::vector<std::pair<Exponents, long long>> terms(f.terms().begin(),
                                                       f.terms().end());
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& x, const auto& y) {
                         return monomial_degree(x.first) < monomial_degree(y.first);
                     });
    std::string out = "truncation_degree " + std::to_string(f.truncation_degree()) + "\n";
    auto power = [](const std::string& base, int e) {
        return e == 1 ? base : base + "^" + std::to_string(e);
    };
    for (const auto& [exps, c] : terms) {
        out += std::to_string(c);
        out += ' ';
        out += power("t", monomial_arity(f.alphabet(), exps));
        const int d = monomial_degree(exps);
        if (d > 0) out += " " + power("q", d);
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) out += " " + power(f.alphabet().at(i).name, exps[i]);
        out += '\n';
    }
    return out;
}

}  // namespace treeavoid
