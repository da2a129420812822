#include "treeavoid/nalg.hpp"

#include <algorithm>

#include "treeavoid/series.hpp"

namespace treeavoid {

namespace {

long long coeff_at(const NAlgebraicSpec& spec, int k, int l) {
    auto it = spec.polys.find(k);
    if (it == spec.polys.end()) return 0;
    if (l < 0 || l >= static_cast<int>(it->second.size())) return 0;
    return it->second[static_cast<std::size_t>(l)];
}

}  // namespace

void validate_nalg_spec(const NAlgebraicSpec& spec) {
    for (const auto& [k, poly] : spec.polys) {
        if (k < 0) throw InputError("negative power " + std::to_string(k));
        for (long long c : poly)
            if (c < 0)
                throw InputError("coefficients must be nonnegative, got " +
                                 std::to_string(c));
    }
    if (coeff_at(spec, 0, 0) != 0)
        throw InputError("properness requires a zero constant term in P_0");
    if (coeff_at(spec, 0, 1) != 1)
        throw InputError("properness requires <t^1|P_0> = 1");
    if (coeff_at(spec, 1, 0) != 0)
        throw InputError("properness requires a zero constant term in P_1");
}

Realization realize_nalg(const NAlgebraicSpec& spec) {
    validate_nalg_spec(spec);
    std::vector<Letter> letters;
    std::vector<std::pair<Letter, int>> leaf_slots;  // letter with its l value
    for (const auto& [k, poly] : spec.polys)
        for (int l = 0; l < static_cast<int>(poly.size()); ++l) {
            if (k == 0 && l == 1) continue;  // the forced base term t stays the leaf
            for (long long m = 1; m <= poly[static_cast<std::size_t>(l)]; ++m) {
                Letter a{"a_" + std::to_string(k) + "_" + std::to_string(l) + "_" +
                             std::to_string(m),
                         k + l};
                letters.push_back(a);
                leaf_slots.emplace_back(a, l);
            }
        }
    GradedAlphabet alphabet(letters);
    // Positions 1..l of a_k_l_m must stay leaves: forbid every letter there.
    std::vector<SyntaxTree> patterns;
    for (const auto& [a, l] : leaf_slots)
        for (int i = 1; i <= l; ++i)
            for (const Letter& b : alphabet.letters()) {
                std::vector<SyntaxTree> children(static_cast<std::size_t>(a.arity));
                children[static_cast<std::size_t>(i - 1)] = SyntaxTree::corolla(b);
                patterns.push_back(SyntaxTree::node(a, std::move(children)));
            }
    return Realization{std::move(alphabet), PatternSet(std::move(patterns))};
}

NAlgReport verify_nalg(const NAlgebraicSpec& spec, int truncation_degree,
                       const BuildOptions& options) {
    NAlgReport report;
    report.realization = realize_nalg(spec);
    const TraceSeries root = solve_root(
        build_system(report.realization.alphabet, report.realization.patterns,
                     PatternSet{}, options),
        truncation_degree);
    report.series_by_arity = specialize(root, SpecializeMode::Arity);
    // f as a univariate polynomial; index = power of t, f[0] = 0.
    const std::size_t n = report.series_by_arity.size() + 1;
    std::vector<long long> f(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) f[i + 1] = report.series_by_arity[i];
    // residual = f - sum_k P_k f^k, truncated at t^{D+1}
    std::vector<long long> residual = f;
    std::vector<long long> f_power(n, 0);
    f_power[0] = 1;  // f^0
    int max_k = 0;
    for (const auto& [k, poly] : spec.polys) {
        (void)poly;
        max_k = std::max(max_k, k);
    }
    for (int k = 0; k <= max_k; ++k) {
        if (k > 0) {
            std::vector<long long> next(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; i + j < n; ++j)
                    next[i + j] += f_power[i] * f[j];
            f_power = std::move(next);
        }
        for (int l = 0; l < static_cast<int>(n); ++l) {
            const long long c = coeff_at(spec, k, l);
            if (c == 0) continue;
            for (std::size_t j = 0; static_cast<std::size_t>(l) + j < n; ++j)
                residual[static_cast<std::size_t>(l) + j] -= c * f_power[j];
        }
    }
    report.residual = std::move(residual);
    report.pass = std::all_of(report.residual.begin(), report.residual.end(),
                              [](long long c) { return c == 0; });
    return report;
}

}  // namespace treeavoid
