#include "treeavoid/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "treeavoid/oracle.hpp"

namespace treeavoid {

RewriteRule make_rule(SyntaxTree lhs, SyntaxTree rhs) {
    if (lhs.is_leaf())
        throw InputError("rewrite rule left-hand side cannot be the leaf");
    if (lhs.arity() != rhs.arity())
        throw InputError("rewrite rule sides have different arities: " +
                         std::to_string(lhs.arity()) + " vs " +
                         std::to_string(rhs.arity()));
    return RewriteRule{std::move(lhs), std::move(rhs)};
}

Presentation make_presentation(
    GradedAlphabet alphabet,
    std::vector<std::pair<SyntaxTree, SyntaxTree>> relations) {
    for (const auto& [l, r] : relations) {
        if (l.is_leaf() || r.is_leaf())
            throw InputError("relation sides cannot be the leaf");
        if (l.arity() != r.arity())
            throw InputError("relation sides have different arities: " +
                             std::to_string(l.arity()) + " vs " +
                             std::to_string(r.arity()));
    }
    return Presentation{std::move(alphabet), std::move(relations)};
}

PatternSet lefts(const Orientation& orientation) {
    std::vector<SyntaxTree> out;
    out.reserve(orientation.rules.size());
    for (const RewriteRule& rule : orientation.rules) out.push_back(rule.lhs);
    return PatternSet(std::move(out));
}

namespace {

// Collects, in leaf order of `lhs`, the subtrees of `u` standing under the
// leaves of `lhs`; fails if `lhs` is not a prefix of `u`.
bool match_prefix(const SyntaxTree& u, const SyntaxTree& lhs,
                  std::vector<SyntaxTree>& bound) {
    if (lhs.is_leaf()) {
        bound.push_back(u);
        return true;
    }
    if (u.is_leaf() || u.root() != lhs.root()) return false;
    for (int i = 1; i <= lhs.root().arity; ++i)
        if (!match_prefix(u.child(i), lhs.child(i), bound)) return false;
    return true;
}

std::optional<SyntaxTree> apply_at_root(const SyntaxTree& u, const RewriteRule& rule) {
    std::vector<SyntaxTree> bound;
    if (!match_prefix(u, rule.lhs, bound)) return std::nullopt;
    return full_composition(rule.rhs, bound);
}

void collect_successors(const SyntaxTree& t, const Orientation& orientation,
                        std::set<SyntaxTree, TreeLess>& out) {
    if (t.is_leaf()) return;
    for (const RewriteRule& rule : orientation.rules)
        if (auto rewritten = apply_at_root(t, rule)) out.insert(std::move(*rewritten));
    const auto& cs = t.children();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        std::set<SyntaxTree, TreeLess> inner;
        collect_successors(cs[i], orientation, inner);
        for (const SyntaxTree& s : inner) {
            std::vector<SyntaxTree> rebuilt = cs;
            rebuilt[i] = s;
            out.insert(SyntaxTree::node(t.root(), std::move(rebuilt)));
        }
    }
}

}  // namespace

std::vector<SyntaxTree> rewrite_successors(const SyntaxTree& t,
                                           const Orientation& orientation) {
    std::set<SyntaxTree, TreeLess> out;
    collect_successors(t, orientation, out);
    return std::vector<SyntaxTree>(out.begin(), out.end());
}

bool is_normal_form(const SyntaxTree& t, const Orientation& orientation) {
    const bool no_successor = rewrite_successors(t, orientation).empty();
    const bool avoids = factor_avoids(t, lefts(orientation));
    if (no_successor != avoids)
        throw std::logic_error("normal-form routes disagree on " + t.key());
    return no_successor;
}

namespace {

// First applicable rewrite under the leftmost-innermost strategy: children
// before the root, left to right; rules in declaration order at each
// position.
std::optional<SyntaxTree> innermost_step(const SyntaxTree& t,
                                         const Orientation& orientation) {
    if (t.is_leaf()) return std::nullopt;
    const auto& cs = t.children();
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (auto stepped = innermost_step(cs[i], orientation)) {
            std::vector<SyntaxTree> rebuilt = cs;
            rebuilt[i] = std::move(*stepped);
            return SyntaxTree::node(t.root(), std::move(rebuilt));
        }
    for (const RewriteRule& rule : orientation.rules)
        if (auto rewritten = apply_at_root(t, rule)) return rewritten;
    return std::nullopt;
}

}  // namespace

NormalizeResult normalize(const SyntaxTree& t, const Orientation& orientation,
                          int step_budget) {
    if (step_budget < 0) throw InputError("step budget must be >= 0");
    NormalizeResult res{t, 0, false};
    for (;;) {
        auto stepped = innermost_step(res.result, orientation);
        if (!stepped) return res;
        if (res.steps == step_budget) {
            res.budget_exhausted = true;
            return res;
        }
        res.result = std::move(*stepped);
        res.steps += 1;
    }
}

namespace {

constexpr int kGray = 1;
constexpr int kBlack = 2;

// Depth-first cycle search over the rewrite graph; `color` is shared across
// start trees so every state is expanded once.
bool cycle_reachable(const SyntaxTree& start, const Orientation& orientation,
                     std::map<std::string, int>& color) {
    if (color.count(start.key())) return false;  // already fully explored
    struct Frame {
        SyntaxTree tree;
        std::vector<SyntaxTree> succ;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    color[start.key()] = kGray;
    stack.push_back({start, rewrite_successors(start, orientation)});
    while (!stack.empty()) {
        Frame& frame = stack.back();
        if (frame.next == frame.succ.size()) {
            color[frame.tree.key()] = kBlack;
            stack.pop_back();
            continue;
        }
        SyntaxTree next = frame.succ[frame.next++];
        auto it = color.find(next.key());
        if (it == color.end()) {
            color[next.key()] = kGray;
            stack.push_back({next, rewrite_successors(next, orientation)});
        } else if (it->second == kGray) {
            return true;
        }
    }
    return false;
}

// Memoized normal-form sets; throws on a cycle (the set would be undefined).
class NormalFormSets {
public:
    explicit NormalFormSets(const Orientation& orientation)
        : orientation_(orientation) {}

    const std::set<std::string>& of(const SyntaxTree& start) {
        struct Frame {
            SyntaxTree tree;
            std::vector<SyntaxTree> succ;
            std::size_t next = 0;
        };
        std::vector<Frame> stack;
        auto push = [this, &stack](const SyntaxTree& u) {
            if (!in_progress_.insert(u.key()).second)
                throw InputError(
                    "rewriting cycle detected; normal-form sets need a "
                    "terminating orientation");
            stack.push_back({u, rewrite_successors(u, orientation_)});
        };
        if (!memo_.count(start.key())) push(start);
        while (!stack.empty()) {
            Frame& frame = stack.back();
            if (frame.next < frame.succ.size()) {
                const SyntaxTree& next = frame.succ[frame.next];
                if (memo_.count(next.key())) {
                    ++frame.next;
                } else {
                    push(next);
                }
                continue;
            }
            std::set<std::string> nfs;
            if (frame.succ.empty()) {
                nfs.insert(frame.tree.key());
            } else {
                for (const SyntaxTree& s : frame.succ) {
                    const auto& sub = memo_.at(s.key());
                    nfs.insert(sub.begin(), sub.end());
                }
            }
            in_progress_.erase(frame.tree.key());
            memo_.emplace(frame.tree.key(), std::move(nfs));
            stack.pop_back();
        }
        return memo_.at(start.key());
    }

private:
    const Orientation& orientation_;
    std::map<std::string, std::set<std::string>> memo_;
    std::set<std::string> in_progress_;
};

}  // namespace

bool check_termination_upto(const Orientation& orientation,
                            const GradedAlphabet& alphabet, int max_degree) {
    std::map<std::string, int> color;
    for (const SyntaxTree& t : enumerate_trees(alphabet, max_degree))
        if (cycle_reachable(t, orientation, color)) return false;
    return true;
}

bool check_confluence_upto(const Orientation& orientation,
                           const GradedAlphabet& alphabet, int max_degree) {
    NormalFormSets sets(orientation);
    for (const SyntaxTree& t : enumerate_trees(alphabet, max_degree))
        if (sets.of(t).size() != 1) return false;
    return true;
}

namespace {

// Union-find over tree indices.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    void unite(std::size_t x, std::size_t y) { parent_[find(x)] = find(y); }

private:
    std::vector<std::size_t> parent_;
};

Orientation bidirectional(const Presentation& presentation) {
    Orientation both;
    for (const auto& [l, r] : presentation.relations) {
        both.rules.push_back(make_rule(l, r));
        both.rules.push_back(make_rule(r, l));
    }
    return both;
}

// Breadth-first joinability of lhs and rhs under unoriented relation steps.
bool derivable(const RewriteRule& rule, const Orientation& both,
               std::size_t visit_cap) {
    if (rule.lhs == rule.rhs) return true;
    std::set<std::string> visited{rule.lhs.key()};
    std::deque<SyntaxTree> frontier{rule.lhs};
    while (!frontier.empty()) {
        SyntaxTree t = frontier.front();
        frontier.pop_front();
        for (const SyntaxTree& s : rewrite_successors(t, both)) {
            if (s == rule.rhs) return true;
            if (visited.size() >= visit_cap)
                throw CapError("derivability search cap exceeded");
            if (visited.insert(s.key()).second) frontier.push_back(s);
        }
    }
    return false;
}

}  // namespace

bool FaithfulnessReport::pass() const {
    if (!terminating || !confluent) return false;
    return std::all_of(counts.begin(), counts.end(), [](const ArityCount& c) {
        return c.congruence_classes == c.normal_forms;
    });
}

FaithfulnessReport faithfulness_probe(const Presentation& presentation,
                                      const Orientation& orientation,
                                      int max_degree) {
    const GradedAlphabet& alphabet = presentation.alphabet;
    if (alphabet.has_arity_one())
        throw InputError("faithfulness probe requires an alphabet without arity-1 letters");
    if (max_degree < 0) throw InputError("max degree must be >= 0");
    const Orientation both = bidirectional(presentation);
    for (const RewriteRule& rule : orientation.rules)
        if (!derivable(rule, both, 200000))
            throw InputError("rule '" + rule.lhs.key() + " -> " + rule.rhs.key() +
                             "' is not generated by the relations");

    FaithfulnessReport report;
    report.max_degree = max_degree;
    report.terminating = check_termination_upto(orientation, alphabet, max_degree);
    report.confluent =
        report.terminating &&
        check_confluence_upto(orientation, alphabet, max_degree);

    // Without arity-1 letters, degree < arity, so the trees of arity
    // n <= max_degree+1 all have degree <= max_degree: each arity class below
    // is complete, and relation steps (which preserve arity) stay inside it.
    // Trees of larger arity are excluded; their classes would be incomplete.
    std::vector<SyntaxTree> all;
    for (SyntaxTree& t : enumerate_trees(alphabet, max_degree))
        if (t.arity() <= max_degree + 1) all.push_back(std::move(t));
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i].key(), i);
    UnionFind uf(all.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (const SyntaxTree& s : rewrite_successors(all[i], both))
            uf.unite(i, index.at(s.key()));
    const PatternSet L = lefts(orientation);
    std::map<int, ArityCount> by_arity;
    for (int n = 1; n <= max_degree + 1; ++n) by_arity[n] = ArityCount{n, 0, 0};
    std::set<std::size_t> roots_seen;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const int n = all[i].arity();
        ArityCount& c = by_arity.at(n);
        if (roots_seen.insert(uf.find(i)).second) c.congruence_classes += 1;
        if (factor_avoids(all[i], L)) c.normal_forms += 1;
    }
    for (auto& [n, c] : by_arity) {
        (void)n;
        report.counts.push_back(c);
    }
    return report;
}

std::string render_report(const FaithfulnessReport& report) {
    std::string out;
    out += "max_degree " + std::to_string(report.max_degree) + "\n";
    out += std::string("terminating ") + (report.terminating ? "yes" : "no") + "\n";
    out += std::string("confluent ") + (report.confluent ? "yes" : "no") + "\n";
    for (const ArityCount& c : report.counts)
        out += "arity " + std::to_string(c.arity) + ": classes " +
               std::to_string(c.congruence_classes) + ", normal_forms " +
               std::to_string(c.normal_forms) + "\n";
    out += std::string(report.pass() ? "PASS" : "FAIL") + "\n";
    return out;
}

TraceSeries normal_form_series(const Orientation& orientation,
                               const GradedAlphabet& alphabet,
                               int truncation_degree, const BuildOptions& options) {
    return solve_root(
        build_system(alphabet, lefts(orientation), PatternSet{}, options),
        truncation_degree);
}

}  // namespace treeavoid
