#pragma once

#include <map>
#include <vector>

#include "treeavoid/pattern.hpp"
#include "treeavoid/system.hpp"

namespace treeavoid {

// A proper algebraic equation f = sum_k P_k(t) f^k with nonnegative integer
// coefficients: polys[k][l] is the coefficient of t^l in P_k.  Properness:
// <t^0|P_0> = 0, <t^1|P_0> = 1, <t^0|P_1> = 0.
struct NAlgebraicSpec {
    std::map<int, std::vector<long long>> polys;
};

void validate_nalg_spec(const NAlgebraicSpec& spec);

struct Realization {
    GradedAlphabet alphabet;
    PatternSet patterns;
};

// Builds the avoidance instance whose arity generating series solves the
// equation: one letter a_k_l_m of arity k+l per unit of polys[k][l] (skipping
// the forced base coefficient <t^1|P_0>), with patterns pinning the first l
// children of each letter to leaves.  All patterns are stringy.
Realization realize_nalg(const NAlgebraicSpec& spec);

struct NAlgReport {
    Realization realization;
    // Arity census of the avoiding trees, arities 1..D+1.
    std::vector<long long> series_by_arity;
    // Residual coefficients f - sum_k P_k f^k for t^0..t^{D+1}.
    std::vector<long long> residual;
    bool pass = false;
};

// Solves the realized instance to truncation degree D and checks the
// univariate equation up to t^{D+1}.
NAlgReport verify_nalg(const NAlgebraicSpec& spec, int truncation_degree,
                       const BuildOptions& options = BuildOptions{});

}  // namespace treeavoid
