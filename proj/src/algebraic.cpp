#include "treeavoid/algebraic.hpp"

#include <algorithm>

namespace treeavoid {

FullPoly::FullPoly(GradedAlphabet alphabet, int t_cap, int q_cap)
    : alphabet_(std::move(alphabet)), t_cap_(t_cap), q_cap_(q_cap) {}

void FullPoly::add_term(const FullMonomial& m, long long c) {
    if (m.exps.size() != alphabet_.size())
        throw InputError("exponent vector length does not match the alphabet");
    if (c == 0 || m.t > t_cap_ || m.q > q_cap_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FullPoly add(const FullPoly& f, const FullPoly& g) {
    FullPoly out = f;
    for (const auto& [m, c] : g.terms_) out.add_term(m, c);
    return out;
}

FullPoly multiply(const FullPoly& f, const FullPoly& g) {
    FullPoly out(f.alphabet_, f.t_cap_, f.q_cap_);
    for (const auto& [xm, xc] : f.terms_)
        for (const auto& [ym, yc] : g.terms_) {
            if (xm.t + ym.t > f.t_cap_ || xm.q + ym.q > f.q_cap_) continue;
            FullMonomial zm{xm.t + ym.t, xm.q + ym.q, xm.exps};
            for (std::size_t i = 0; i < zm.exps.size(); ++i) zm.exps[i] += ym.exps[i];
            out.add_term(zm, xc * yc);
        }
    return out;
}

FullPoly lift_series(const TraceSeries& f, int t_cap, int q_cap) {
    FullPoly out(f.alphabet(), t_cap, q_cap);
    for (const auto& [exps, c] : f.terms())
        out.add_term({monomial_arity(f.alphabet(), exps), monomial_degree(exps), exps},
                     c);
    return out;
}

ResidualReport check_algebraic_equation(const TraceSeries& f,
                                        const AlgebraicIdentity& identity) {
    const GradedAlphabet& alphabet = f.alphabet();
    const int q_cap = f.truncation_degree();
    int max_t = 0;
    int max_h = 0;
    for (const IdentityTerm& term : identity.terms) {
        if (term.scalar == 0)
            throw InputError("identity '" + identity.name + "' has a zero summand");
        if (term.t_exp < 0 || term.q_exp < 0 || term.h_power < 0)
            throw InputError("identity '" + identity.name + "' has a negative exponent");
        for (const auto& [name, e] : term.letter_exps) {
            alphabet.index_of(name);  // validates the name
            if (e <= 0)
                throw InputError("identity '" + identity.name +
                                 "' has a non-positive letter exponent");
        }
        max_t = std::max(max_t, term.t_exp);
        max_h = std::max(max_h, term.h_power);
    }
    // Any H-monomial of q-degree <= q_cap has t-exponent at most
    // 1 + q_cap*(max_arity-1); residual monomials with q <= q_cap therefore
    // fit under this t cap, and capping changes nothing below it.
    const int t_cap =
        max_t + max_h * (1 + q_cap * std::max(0, alphabet.max_arity() - 1));
    const FullPoly H = lift_series(f, t_cap, q_cap);
    std::vector<FullPoly> h_powers;
    h_powers.emplace_back(alphabet, t_cap, q_cap);  // H^0 = 1
    h_powers[0].add_term({0, 0, Exponents(alphabet.size(), 0)}, 1);
    for (int p = 1; p <= max_h; ++p) h_powers.push_back(multiply(h_powers.back(), H));

    FullPoly residual(alphabet, t_cap, q_cap);
    for (const IdentityTerm& term : identity.terms) {
        FullMonomial prefix{term.t_exp, term.q_exp, Exponents(alphabet.size(), 0)};
        for (const auto& [name, e] : term.letter_exps)
            prefix.exps[alphabet.index_of(name)] = e;
        FullPoly scaled(alphabet, t_cap, q_cap);
        scaled.add_term(prefix, term.scalar);
        residual = add(residual, multiply(scaled, h_powers[static_cast<std::size_t>(
                                                      term.h_power)]));
    }
    ResidualReport report;
    report.nonzero.assign(residual.terms().begin(), residual.terms().end());
    report.pass = report.nonzero.empty();
    return report;
}

std::string render_monomial(const GradedAlphabet& alphabet, const FullMonomial& m) {
    auto power = [](const std::string& base, int e) {
        return e == 1 ? base : base + "^" + std::to_string(e);
    };
    std::string out;
    auto append = [&out](const std::string& piece) {
        if (!out.empty()) out += ' ';
        out += piece;
    };
    if (m.t > 0) append(power("t", m.t));
    if (m.q > 0) append(power("q", m.q));
    for (std::size_t i = 0; i < m.exps.size(); ++i)
        if (m.exps[i] > 0) append(power(alphabet.at(i).name, m.exps[i]));
    if (out.empty()) out = "1";
    return out;
}

std::string render_report(const GradedAlphabet& alphabet, const ResidualReport& report) {
    if (report.pass) return "residual: 0\n";
    std::string out = "residual:\n";
    for (const auto& [m, c] : report.nonzero)
        out += "  " + std::to_string(c) + " " + render_monomial(alphabet, m) + "\n";
    return out;
}

}  // namespace treeavoid
