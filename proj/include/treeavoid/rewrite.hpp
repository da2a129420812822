#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treeavoid/pattern.hpp"
#include "treeavoid/series.hpp"
#include "treeavoid/system.hpp"

namespace treeavoid {

// An oriented rule lhs -> rhs between trees of equal arity; the lhs is never
// the leaf.
struct RewriteRule {
    SyntaxTree lhs;
    SyntaxTree rhs;
};

RewriteRule make_rule(SyntaxTree lhs, SyntaxTree rhs);

// A set of unoriented relations presenting a quotient of the free structure.
struct Presentation {
    GradedAlphabet alphabet;
    std::vector<std::pair<SyntaxTree, SyntaxTree>> relations;
};

Presentation make_presentation(GradedAlphabet alphabet,
                               std::vector<std::pair<SyntaxTree, SyntaxTree>> relations);

// An ordered list of rewrite rules; declaration order is the tie-break used
// by normalize.
struct Orientation {
    std::vector<RewriteRule> rules;
};

// The left-hand sides as a pattern set.
PatternSet lefts(const Orientation& orientation);

// All trees reachable from t by one rule application at one factor
// occurrence, deduplicated, in canonical order.  Applying a rule at an
// occurrence overlays the lhs as a prefix of the subtree there, collects the
// subtrees standing under the lhs leaves, and grafts them onto the rhs.
std::vector<SyntaxTree> rewrite_successors(const SyntaxTree& t,
                                           const Orientation& orientation);

// True iff t has no rewrite successor.  Also computed independently as
// factor-avoidance of the left-hand sides; the two routes must agree.
bool is_normal_form(const SyntaxTree& t, const Orientation& orientation);

struct NormalizeResult {
    SyntaxTree result;
    int steps = 0;
    bool budget_exhausted = false;
};

// Repeatedly applies the first applicable rewrite (leftmost-innermost
// occurrence, rules in declaration order) until a normal form is reached or
// the step budget runs out.
NormalizeResult normalize(const SyntaxTree& t, const Orientation& orientation,
                          int step_budget);

// True iff no rewrite sequence from any tree of degree <= max_degree revisits
// a tree (no cycles; the reachable state space is finite when the alphabet
// has no arity-1 letters, since rewriting preserves arity).
bool check_termination_upto(const Orientation& orientation,
                            const GradedAlphabet& alphabet, int max_degree);

// True iff every tree of degree <= max_degree reaches exactly one normal
// form.  Requires termination on the reachable space; a detected cycle raises
// InputError.
bool check_confluence_upto(const Orientation& orientation,
                           const GradedAlphabet& alphabet, int max_degree);

struct ArityCount {
    int arity = 0;
    long long congruence_classes = 0;
    long long normal_forms = 0;
};

struct FaithfulnessReport {
    int max_degree = 0;
    bool terminating = false;
    bool confluent = false;
    std::vector<ArityCount> counts;  // arities 1..max_degree+1

    bool pass() const;
};

// Probes whether the orientation presents the quotient faithfully up to
// max_degree: each rule must be joinable using the unoriented relations, the
// rules must terminate and be confluent on trees of degree <= max_degree, and
// for each arity n <= max_degree+1 the number of congruence classes (under
// the relation-generated congruence) must equal the number of normal forms.
// Requires an alphabet without arity-1 letters.
FaithfulnessReport faithfulness_probe(const Presentation& presentation,
                                      const Orientation& orientation,
                                      int max_degree);

std::string render_report(const FaithfulnessReport& report);

// Generating series of the normal forms: the trees factor-avoiding the
// left-hand sides, via the equation-system route.
TraceSeries normal_form_series(const Orientation& orientation,
                               const GradedAlphabet& alphabet,
                               int truncation_degree,
                               const BuildOptions& options = BuildOptions{});

}  // namespace treeavoid
