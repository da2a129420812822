#include "treeavoid/system.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

namespace treeavoid {

EquationSystem::EquationSystem(GradedAlphabet alphabet, SystemVariable root,
                               std::vector<Equation> equations)
    : alphabet_(std::move(alphabet)),
      root_(std::move(root)),
      equations_(std::move(equations)) {
    std::stable_sort(equations_.begin(), equations_.end(),
                     [this](const Equation& x, const Equation& y) {
                         bool xr = x.variable == root_;
                         bool yr = y.variable == root_;
                         if (xr != yr) return xr;
                         return x.variable.key() < y.variable.key();
                     });
    for (std::size_t i = 0; i < equations_.size(); ++i) {
        auto [it, inserted] = index_.emplace(equations_[i].variable.key(), i);
        (void)it;
        if (!inserted)
            throw InputError("duplicate equation for variable F{" +
                             equations_[i].variable.key() + "}");
    }
    if (!index_.count(root_.key()))
        throw InputError("no equation for the root variable F{" + root_.key() + "}");
    for (const Equation& eq : equations_)
        for (const Term& term : eq.terms) {
            if (!alphabet_.has(term.letter.name) ||
                alphabet_.letter(term.letter.name) != term.letter)
                throw InputError("term letter '" + term.letter.name +
                                 "' is not in the alphabet");
            if (static_cast<int>(term.operands.size()) != term.letter.arity)
                throw InputError("term for letter '" + term.letter.name + "' has " +
                                 std::to_string(term.operands.size()) +
                                 " operands; expected " +
                                 std::to_string(term.letter.arity));
            for (const SystemVariable& v : term.operands)
                if (!index_.count(v.key()))
                    throw InputError("no equation for operand variable F{" + v.key() +
                                     "}");
        }
}

const Equation& EquationSystem::equation(const std::string& variable_key) const {
    auto it = index_.find(variable_key);
    if (it == index_.end())
        throw InputError("unknown variable F{" + variable_key + "}");
    return equations_[it->second];
}

bool EquationSystem::has_variable(const std::string& variable_key) const {
    return index_.count(variable_key) != 0;
}

BuildOptions default_build_options() {
    BuildOptions options;
    if (const char* v = std::getenv("TREEAVOID_SUBSET_CAP")) {
        std::string s(v);
        std::uint64_t parsed = 0;
        std::size_t consumed = 0;
        try {
            parsed = std::stoull(s, &consumed);
        } catch (const std::exception&) {
            consumed = 0;
        }
        if (consumed != s.size() || parsed == 0)
            throw InputError("TREEAVOID_SUBSET_CAP must be a positive integer, got '" +
                             s + "'");
        options.subset_cap = parsed;
    }
    return options;
}

PatternSet canonicalize_prefix_set(const PatternSet& Q, const PatternSet& P) {
    std::vector<SyntaxTree> kept;
    for (const SyntaxTree& x : Q.trees())
        if (!P.contains(x)) kept.push_back(x);
    std::vector<SyntaxTree> out;
    for (const SyntaxTree& x : kept) {
        bool subsumed = std::any_of(kept.begin(), kept.end(), [&x](const SyntaxTree& y) {
            return y != x && is_prefix(y, x);
        });
        if (!subsumed) out.push_back(x);
    }
    return PatternSet(std::move(out));
}

namespace {

// Accumulates merged terms for one right-hand side and schedules newly seen
// operand variables.
class SystemBuilder {
public:
    SystemBuilder(const GradedAlphabet& alphabet, const PatternSet& P,
                  const BuildOptions& options)
        : alphabet_(alphabet), P_(P), options_(options) {}

    SystemVariable schedule(const PatternSet& raw_prefix_set) {
        SystemVariable v{canonicalize_prefix_set(raw_prefix_set, P_), ""};
        if (scheduled_.insert(v.key()).second) queue_.push_back(v);
        return v;
    }

    std::vector<Equation> run() {
        std::vector<Equation> equations;
        while (!queue_.empty()) {
            SystemVariable v = queue_.front();
            queue_.pop_front();
            equations.push_back(build_equation(v));
        }
        return equations;
    }

private:
    Equation build_equation(const SystemVariable& v) {
        Equation eq{v, {}};
        const PatternSet U = P_.union_with(v.prefix_set);
        for (const Letter& a : alphabet_.letters()) {
            const PatternSet Pa = restrict_to_root(U, a);
            const auto words = minimal_consistent_words(Pa, a);
            if (words.empty()) continue;
            if (words.size() >= 63 ||
                (std::uint64_t{1} << words.size()) - 1 > options_.subset_cap)
                throw CapError("subset cap exceeded for variable F{" + v.key() +
                               "}, letter '" + a.name + "': " +
                               std::to_string(words.size()) +
                               " minimal consistent words");
            // One inclusion-exclusion summand per nonempty subset of minimal
            // words; summands with equal operand tuples merge.
            std::map<std::string, Term> merged;
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << words.size());
                 ++mask) {
                ConsistentWord sum = empty_word(a.arity);
                int picked = 0;
                for (std::size_t j = 0; j < words.size(); ++j)
                    if (mask & (std::uint64_t{1} << j)) {
                        sum = word_sum(sum, words[j]);
                        ++picked;
                    }
                const long long sign = (picked % 2 == 1) ? 1 : -1;
                Term term{sign, a, {}};
                std::string term_key = a.name;
                for (const PatternSet& slot : sum.slots) {
                    SystemVariable operand{canonicalize_prefix_set(slot, P_), ""};
                    term_key += '|';
                    term_key += operand.key();
                    term.operands.push_back(std::move(operand));
                }
                auto [it, inserted] = merged.emplace(term_key, term);
                if (!inserted) it->second.coeff += sign;
            }
            for (auto& [unused, term] : merged) {
                (void)unused;
                if (term.coeff == 0) continue;
                for (const SystemVariable& operand : term.operands) schedule(operand.prefix_set);
                eq.terms.push_back(std::move(term));
            }
        }
        sort_terms(eq.terms);
        return eq;
    }

    static void sort_terms(std::vector<Term>& terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
            if (!(x.letter == y.letter)) return LetterLess{}(x.letter, y.letter);
            for (std::size_t i = 0; i < x.operands.size(); ++i) {
                const std::string xk = x.operands[i].key();
                const std::string yk = y.operands[i].key();
                if (xk != yk) return xk < yk;
            }
            return false;
        });
    }

    const GradedAlphabet& alphabet_;
    const PatternSet& P_;
    const BuildOptions& options_;
    std::deque<SystemVariable> queue_;
    std::set<std::string> scheduled_;
};

void check_letters_known(const GradedAlphabet& alphabet, const PatternSet& P) {
    for (const SyntaxTree& t : P.trees())
        for (const SyntaxTree& s : suffixes(t))
            if (!s.is_leaf() && (!alphabet.has(s.root().name) ||
                                 alphabet.letter(s.root().name) != s.root()))
                throw InputError("pattern '" + t.key() + "' uses letter '" +
                                 s.root().name + "' not in the alphabet");
}

}  // namespace

EquationSystem build_system(const GradedAlphabet& alphabet, const PatternSet& P,
                            const PatternSet& Q, const BuildOptions& options) {
    check_letters_known(alphabet, P);
    check_letters_known(alphabet, Q);
    SystemBuilder builder(alphabet, P, options);
    SystemVariable root = builder.schedule(Q);
    std::vector<Equation> equations = builder.run();
    return EquationSystem(alphabet, std::move(root), std::move(equations));
}

PatternSet derivative(const PatternSet& P, const Letter& a, int i) {
    if (i < 1 || i > a.arity)
        throw InputError("derivative position " + std::to_string(i) +
                         " out of range 1.." + std::to_string(a.arity));
    std::vector<SyntaxTree> out;
    for (const SyntaxTree& t : P.trees()) {
        if (t.root() != a) continue;
        bool shape = !t.child(i).is_leaf();
        for (int j = 1; j <= a.arity && shape; ++j)
            if (j != i) shape = t.child(j).is_leaf();
        if (shape) out.push_back(t.child(i));
    }
    return PatternSet(std::move(out));
}

EquationSystem stringy_system(const GradedAlphabet& alphabet, const PatternSet& P,
                              const PatternSet& Q) {
    check_letters_known(alphabet, P);
    check_letters_known(alphabet, Q);
    for (const PatternSet* S : {&P, &Q})
        for (const SyntaxTree& t : S->trees())
            if (!t.is_stringy())
                throw InputError("pattern '" + t.key() + "' is not stringy");
    std::deque<SystemVariable> queue;
    std::set<std::string> scheduled;
    auto schedule = [&](const PatternSet& raw) {
        SystemVariable v{canonicalize_prefix_set(raw, P), ""};
        if (scheduled.insert(v.key()).second) queue.push_back(v);
        return v;
    };
    SystemVariable root = schedule(Q);
    std::vector<Equation> equations;
    while (!queue.empty()) {
        SystemVariable v = queue.front();
        queue.pop_front();
        Equation eq{v, {}};
        const PatternSet U = P.union_with(v.prefix_set);
        for (const Letter& a : alphabet.letters()) {
            if (U.contains(SyntaxTree::corolla(a))) continue;
            Term term{1, a, {}};
            for (int i = 1; i <= a.arity; ++i)
                term.operands.push_back(schedule(derivative(U, a, i)));
            eq.terms.push_back(std::move(term));
        }
        equations.push_back(std::move(eq));
    }
    return EquationSystem(alphabet, std::move(root), std::move(equations));
}

std::string print_system(const EquationSystem& system) {
    std::string out;
    for (const Equation& eq : system.equations()) {
        out += "F{" + eq.variable.key() + "} = Leaf";
        for (const Term& term : eq.terms) {
            const long long c = term.coeff;
            out += (c < 0) ? " - " : " + ";
            const long long mag = c < 0 ? -c : c;
            if (mag != 1) out += std::to_string(mag) + "*";
            out += term.letter.name;
            out += '[';
            for (std::size_t i = 0; i < term.operands.size(); ++i) {
                if (i > 0) out += ',';
                out += "F{" + term.operands[i].key() + "}";
            }
            out += ']';
        }
        out += '\n';
    }
    return out;
}

}  // namespace treeavoid
