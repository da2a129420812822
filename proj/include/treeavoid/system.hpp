#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treeavoid/avoidance.hpp"
#include "treeavoid/pattern.hpp"

namespace treeavoid {

// An unknown of an equation system.  Generated systems identify variables by
// their canonical prefix set; hand-encoded systems may instead use an opaque
// tag (rendered as #tag) when the intended prefix set has no finite canonical
// representative.
struct SystemVariable {
    PatternSet prefix_set;
    std::string tag;

    std::string key() const { return tag.empty() ? prefix_set.key() : "#" + tag; }

    friend bool operator==(const SystemVariable& x, const SystemVariable& y) {
        return x.key() == y.key();
    }
};

// One summand c * a[V_1, ..., V_k] on a right-hand side; k = arity of the
// letter.
struct Term {
    long long coeff = 0;
    Letter letter;
    std::vector<SystemVariable> operands;
};

// variable = Leaf + sum of terms.  The Leaf constant is implicit.
struct Equation {
    SystemVariable variable;
    std::vector<Term> terms;
};

class EquationSystem {
public:
    // `equations` must contain one equation per distinct variable and cover
    // the root and every term operand (closure).
    EquationSystem(GradedAlphabet alphabet, SystemVariable root,
                   std::vector<Equation> equations);

    const GradedAlphabet& alphabet() const { return alphabet_; }
    const SystemVariable& root() const { return root_; }
    // Root equation first, the rest sorted by variable key.
    const std::vector<Equation>& equations() const { return equations_; }
    const Equation& equation(const std::string& variable_key) const;
    bool has_variable(const std::string& variable_key) const;

private:
    GradedAlphabet alphabet_;
    SystemVariable root_;
    std::vector<Equation> equations_;
    std::map<std::string, std::size_t> index_;
};

struct BuildOptions {
    // Cap on the number of nonempty subsets inspected per (variable, letter)
    // during system construction.
    std::uint64_t subset_cap = std::uint64_t{1} << 20;
};

// Reads TREEAVOID_SUBSET_CAP from the environment when set (positive integer).
BuildOptions default_build_options();

// Canonical form of a prefix set Q relative to the factor set P: members lying
// in P are dropped (they are already excluded as factors), then members with a
// strict prefix in the same set are dropped (the prefix constraint subsumes
// them).  The result excludes the same trees from the same universe.
PatternSet canonicalize_prefix_set(const PatternSet& Q, const PatternSet& P);

// Builds the inclusion-exclusion equation system for trees avoiding P as
// factors and Q as prefixes.  Variables are canonical prefix sets; the
// construction closes under the operand sets that appear, which all consist of
// suffixes of members of P and Q.  Terms with equal letter and operands are
// merged; zero coefficients are dropped.
EquationSystem build_system(const GradedAlphabet& alphabet, const PatternSet& P,
                            const PatternSet& Q,
                            const BuildOptions& options = BuildOptions{});

// The i-th derivative of P at letter a: the trees s with a o_i s in P, where
// all other children of the root are leaves.  A corolla in P contributes no
// member (the leaf cannot be a pattern); stringy_system accounts for corollas
// separately.
PatternSet derivative(const PatternSet& P, const Letter& a, int i);

// Specialized system for stringy patterns: every right-hand side carries one
// +1 term per letter whose corolla is not excluded, with operand sets given by
// derivatives.  Requires every member of P and Q to be stringy.  On such
// inputs the result coincides with build_system term for term.
EquationSystem stringy_system(const GradedAlphabet& alphabet, const PatternSet& P,
                              const PatternSet& Q);

// Text rendering: one equation per line,
//   F{key} = Leaf + c1*a[F{..},..] - c2*b[..] ...
std::string print_system(const EquationSystem& system);

}  // namespace treeavoid
