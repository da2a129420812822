#pragma once
// Randomized property suites shared by the unit tests and the acceptance
// runner.  Every suite draws its instances from a fixed-seed generator, so a
// reported failure is reproducible from the suite name and case index alone.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "treeavoid/alphabet.hpp"
#include "treeavoid/avoidance.hpp"
#include "treeavoid/monoid.hpp"
#include "treeavoid/oracle.hpp"
#include "treeavoid/pattern.hpp"
#include "treeavoid/series.hpp"
#include "treeavoid/tree.hpp"

namespace treeavoid::props {

struct SuiteResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::string first_failure;

    bool ok() const { return cases > 0 && failures == 0; }
};

namespace detail {

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Small alphabets in the same shape as the random oracle instances: at most
// three letters, arities at most three.
inline const std::vector<GradedAlphabet>& alphabet_pool() {
    static const std::vector<GradedAlphabet> pool = {
        GradedAlphabet{{{"a", 2}}},
        GradedAlphabet{{{"a", 3}}},
        GradedAlphabet{{{"a", 2}, {"b", 2}}},
        GradedAlphabet{{{"a", 2}, {"b", 3}}},
        GradedAlphabet{{{"a", 1}, {"b", 2}}},
        GradedAlphabet{{{"a", 1}, {"b", 2}, {"c", 3}}},
        GradedAlphabet{{{"a", 2}, {"b", 2}, {"c", 3}}},
    };
    return pool;
}

inline const GradedAlphabet& random_alphabet(Rng& rng) {
    const auto& pool = alphabet_pool();
    return pool[pick(rng, 0, static_cast<int>(pool.size()) - 1)];
}

inline const Letter& random_letter(Rng& rng, const GradedAlphabet& alphabet) {
    return alphabet.letters()[pick(rng, 0, static_cast<int>(alphabet.size()) - 1)];
}

// Extends `t` by grafting `extra` random corollas at random leaves; the
// original tree stays a prefix of the result.
inline SyntaxTree grow(Rng& rng, const GradedAlphabet& alphabet, SyntaxTree t, int extra) {
    for (int step = 0; step < extra; ++step)
        t = partial_composition(t, pick(rng, 1, t.arity()),
                                SyntaxTree::corolla(random_letter(rng, alphabet)));
    return t;
}

inline SyntaxTree random_tree(Rng& rng, const GradedAlphabet& alphabet, int degree) {
    return grow(rng, alphabet, SyntaxTree::leaf(), degree);
}

inline PatternSet random_patterns(Rng& rng, const GradedAlphabet& alphabet, int max_count,
                                  int max_degree) {
    std::vector<SyntaxTree> trees;
    const int count = pick(rng, 0, max_count);
    for (int i = 0; i < count; ++i)
        trees.push_back(random_tree(rng, alphabet, pick(rng, 1, max_degree)));
    return PatternSet(std::move(trees));
}

inline MonoidWord random_word(Rng& rng, const Monoid& monoid, int max_length) {
    const int top = monoid.kind() == Monoid::Kind::Cyclic ? monoid.order() - 1 : 3;
    MonoidWord word;
    const int length = pick(rng, 1, max_length);
    for (int i = 0; i < length; ++i) word.letters.push_back(pick(rng, 0, top));
    return word;
}

// Counts one failure per case at most and keeps the first failing check.
class Recorder {
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    void begin(long long index) {
        index_ = index;
        failed_ = false;
        ++result_.cases;
    }

    void check(bool ok, const char* what) {
        if (ok || failed_) return;
        failed_ = true;
        ++result_.failures;
        if (result_.first_failure.empty())
            result_.first_failure = "case " + std::to_string(index_) + ": " + what;
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
    long long index_ = 0;
    bool failed_ = false;
};

}  // namespace detail

// Partial composition on trees and on monoid words obeys the operad axioms:
// nested and parallel associativity plus the two unit laws.
inline SuiteResult operad_axioms_suite(int cases, std::uint32_t seed) {
    detail::Rng rng(seed);
    detail::Recorder r("operad-axioms");
    for (long long n = 0; n < cases; ++n) {
        r.begin(n);
        const GradedAlphabet& alphabet = detail::random_alphabet(rng);
        SyntaxTree t = detail::random_tree(rng, alphabet, detail::pick(rng, 0, 4));
        SyntaxTree s = detail::random_tree(rng, alphabet, detail::pick(rng, 0, 3));
        SyntaxTree u = detail::random_tree(rng, alphabet, detail::pick(rng, 0, 3));
        const int i = detail::pick(rng, 1, t.arity());
        const int j = detail::pick(rng, 1, s.arity());
        r.check(partial_composition(t, i, partial_composition(s, j, u)) ==
                    partial_composition(partial_composition(t, i, s), i + j - 1, u),
                "nested associativity on trees");
        if (t.arity() >= 2) {
            const int lo = detail::pick(rng, 1, t.arity() - 1);
            const int hi = detail::pick(rng, lo + 1, t.arity());
            r.check(partial_composition(partial_composition(t, lo, s),
                                        hi + s.arity() - 1, u) ==
                        partial_composition(partial_composition(t, hi, u), lo, s),
                    "parallel associativity on trees");
        }
        r.check(partial_composition(t, i, SyntaxTree::leaf()) == t, "right unit on trees");
        r.check(partial_composition(SyntaxTree::leaf(), 1, t) == t, "left unit on trees");

        const Monoid monoid = detail::pick(rng, 0, 1) == 0
                                  ? Monoid::additive_naturals()
                                  : Monoid::cyclic(detail::pick(rng, 2, 4));
        MonoidWord wu = detail::random_word(rng, monoid, 4);
        MonoidWord wv = detail::random_word(rng, monoid, 3);
        MonoidWord ww = detail::random_word(rng, monoid, 3);
        const int wi = detail::pick(rng, 1, wu.arity());
        const int wj = detail::pick(rng, 1, wv.arity());
        r.check(word_composition(monoid, wu, wi, word_composition(monoid, wv, wj, ww)) ==
                    word_composition(monoid, word_composition(monoid, wu, wi, wv),
                                     wi + wj - 1, ww),
                "nested associativity on words");
        if (wu.arity() >= 2) {
            const int lo = detail::pick(rng, 1, wu.arity() - 1);
            const int hi = detail::pick(rng, lo + 1, wu.arity());
            r.check(word_composition(monoid, word_composition(monoid, wu, lo, wv),
                                     hi + wv.arity() - 1, ww) ==
                        word_composition(monoid, word_composition(monoid, wu, hi, ww),
                                         lo, wv),
                    "parallel associativity on words");
        }
        r.check(word_composition(monoid, wu, wi, unit_word()) == wu, "right unit on words");
        r.check(word_composition(monoid, unit_word(), 1, wu) == wu, "left unit on words");
    }
    return r.take();
}

// The prefix and factor relations are partial orders with the leaf at the
// bottom, and growth strictly increases both.
inline SuiteResult poset_laws_suite(int cases, std::uint32_t seed) {
    detail::Rng rng(seed);
    detail::Recorder r("poset-laws");
    for (long long n = 0; n < cases; ++n) {
        r.begin(n);
        const GradedAlphabet& alphabet = detail::random_alphabet(rng);
        SyntaxTree t = detail::random_tree(rng, alphabet, detail::pick(rng, 0, 4));
        r.check(is_prefix(t, t) && is_factor(t, t) && is_suffix(t, t), "reflexivity");
        r.check(is_prefix(SyntaxTree::leaf(), t) && is_factor(SyntaxTree::leaf(), t),
                "the leaf is the bottom element");

        SyntaxTree small = detail::random_tree(rng, alphabet, detail::pick(rng, 0, 2));
        SyntaxTree mid = detail::grow(rng, alphabet, small, detail::pick(rng, 0, 2));
        SyntaxTree big = detail::grow(rng, alphabet, mid, detail::pick(rng, 0, 2));
        r.check(is_prefix(small, mid) && is_prefix(mid, big) && is_prefix(small, big),
                "prefix transitivity");

        SyntaxTree c1 = detail::random_tree(rng, alphabet, detail::pick(rng, 1, 2));
        SyntaxTree host = partial_composition(c1, detail::pick(rng, 1, c1.arity()), mid);
        SyntaxTree c2 = detail::random_tree(rng, alphabet, detail::pick(rng, 1, 2));
        SyntaxTree host2 = partial_composition(c2, detail::pick(rng, 1, c2.arity()), host);
        r.check(is_factor(mid, host) && is_factor(host, host2) && is_factor(mid, host2),
                "factor transitivity");
        r.check(is_factor(small, host2), "prefixes of factors are factors");

        SyntaxTree x = detail::random_tree(rng, alphabet, detail::pick(rng, 0, 3));
        SyntaxTree y = detail::random_tree(rng, alphabet, detail::pick(rng, 0, 3));
        if (is_prefix(x, y) && is_prefix(y, x)) r.check(x == y, "prefix antisymmetry");
        if (is_factor(x, y) && is_factor(y, x)) r.check(x == y, "factor antisymmetry");
        if (is_prefix(x, y)) r.check(x.degree() <= y.degree(), "prefix respects degree");
        if (is_factor(x, y)) r.check(x.degree() <= y.degree(), "factor respects degree");
        if (mid.degree() > small.degree())
            r.check(!is_prefix(mid, small) && !is_factor(mid, small),
                    "strictly larger trees never divide smaller ones");
    }
    return r.take();
}

// Every prefix is a factor, every suffix is a factor, and is_factor agrees
// with the factor census obtained by decomposing the host tree.
inline SuiteResult prefix_factor_suite(int cases, std::uint32_t seed) {
    detail::Rng rng(seed);
    detail::Recorder r("prefix-implies-factor");
    for (long long n = 0; n < cases; ++n) {
        r.begin(n);
        const GradedAlphabet& alphabet = detail::random_alphabet(rng);
        SyntaxTree s = detail::random_tree(rng, alphabet, detail::pick(rng, 1, 3));
        SyntaxTree ext = detail::grow(rng, alphabet, s, detail::pick(rng, 0, 2));
        r.check(is_prefix(s, ext) && is_factor(s, ext), "constructed prefixes are factors");
        SyntaxTree c = detail::random_tree(rng, alphabet, detail::pick(rng, 1, 2));
        SyntaxTree host = partial_composition(c, detail::pick(rng, 1, c.arity()), s);
        r.check(is_suffix(s, host) && is_factor(s, host),
                "constructed suffixes are factors");

        SyntaxTree x = detail::random_tree(rng, alphabet, detail::pick(rng, 0, 3));
        SyntaxTree y = detail::random_tree(rng, alphabet, detail::pick(rng, 0, 4));
        if (is_prefix(x, y)) r.check(is_factor(x, y), "prefix implies factor");
        if (is_suffix(x, y)) r.check(is_factor(x, y), "suffix implies factor");
        std::vector<SyntaxTree> census = factors_by_decomposition(y);
        r.check(std::binary_search(census.begin(), census.end(), x, TreeLess{}) ==
                    is_factor(x, y),
                "factor census agrees with is_factor");
        for (const SyntaxTree& p : prefixes(ext))
            r.check(is_prefix(p, ext) && is_factor(p, ext),
                    "enumerated prefixes are factors");
        for (const SyntaxTree& q : suffixes(ext))
            r.check(is_suffix(q, ext) && is_factor(q, ext),
                    "enumerated suffixes are factors");
    }
    return r.take();
}

// Trace monomials are multiplicative: composition adds exponent vectors,
// degrees add, and arities add minus one per graft.
inline SuiteResult trace_multiplicativity_suite(int cases, std::uint32_t seed) {
    detail::Rng rng(seed);
    detail::Recorder r("trace-multiplicativity");
    for (long long n = 0; n < cases; ++n) {
        r.begin(n);
        const GradedAlphabet& alphabet = detail::random_alphabet(rng);
        SyntaxTree t = detail::random_tree(rng, alphabet, detail::pick(rng, 0, 4));
        SyntaxTree s = detail::random_tree(rng, alphabet, detail::pick(rng, 0, 3));
        const int i = detail::pick(rng, 1, t.arity());
        SyntaxTree ts = partial_composition(t, i, s);
        Exponents et = trace_monomial(alphabet, t);
        Exponents es = trace_monomial(alphabet, s);
        Exponents sum(alphabet.size(), 0);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = et[k] + es[k];
        Exponents both = trace_monomial(alphabet, ts);
        r.check(both == sum, "composition adds trace monomials");
        r.check(ts.degree() == t.degree() + s.degree(), "composition adds degrees");
        r.check(ts.arity() == t.arity() + s.arity() - 1,
                "composition adds arities minus one");
        r.check(monomial_degree(both) == ts.degree(), "monomial degree matches the tree");
        r.check(monomial_arity(alphabet, both) == ts.arity(),
                "monomial arity matches the tree");

        std::vector<SyntaxTree> operands;
        Exponents total = et;
        int arity_total = 0;
        for (int k = 0; k < t.arity(); ++k) {
            operands.push_back(detail::random_tree(rng, alphabet, detail::pick(rng, 0, 1)));
            Exponents eo = trace_monomial(alphabet, operands.back());
            for (std::size_t m = 0; m < total.size(); ++m) total[m] += eo[m];
            arity_total += operands.back().arity();
        }
        SyntaxTree full = full_composition(t, operands);
        r.check(trace_monomial(alphabet, full) == total, "full composition adds traces");
        r.check(full.arity() == arity_total, "full composition arity is the operand sum");
    }
    return r.take();
}

// Every word emitted by minimal_consistent_words is consistent, minimal
// (removing any single member breaks consistency), sorted and deduplicated.
inline SuiteResult minimal_words_suite(int cases, std::uint32_t seed) {
    detail::Rng rng(seed);
    detail::Recorder r("minimal-words");
    for (long long n = 0; n < cases; ++n) {
        r.begin(n);
        const GradedAlphabet& alphabet = detail::random_alphabet(rng);
        const Letter& a = detail::random_letter(rng, alphabet);
        PatternSet Pa = restrict_to_root(detail::random_patterns(rng, alphabet, 4, 3), a);
        std::vector<ConsistentWord> words = minimal_consistent_words(Pa, a);
        std::string previous;
        bool first = true;
        for (const ConsistentWord& word : words) {
            r.check(static_cast<int>(word.slots.size()) == a.arity,
                    "words carry one slot per input");
            r.check(is_consistent(word, Pa, a), "emitted words are consistent");
            std::string key;
            for (const PatternSet& slot : word.slots) key += slot.key() + "|";
            if (!first) r.check(previous < key, "words are sorted and deduplicated");
            previous = key;
            first = false;
            for (std::size_t slot = 0; slot < word.slots.size(); ++slot) {
                for (const SyntaxTree& member : word.slots[slot].trees()) {
                    ConsistentWord smaller = word;
                    smaller.slots[slot] = smaller.slots[slot].removed(member);
                    r.check(!is_consistent(smaller, Pa, a),
                            "removing any member breaks consistency");
                }
            }
        }
        if (Pa.empty())
            r.check(words.size() == 1 && words[0] == empty_word(a.arity),
                    "an empty pattern set admits exactly the empty word");
    }
    return r.take();
}

// Patterns deeper than the truncation degree never affect counts up to that
// degree, and enlarging the pattern sets never increases any count.
inline SuiteResult truncation_limit_suite(int cases, std::uint32_t seed) {
    detail::Rng rng(seed);
    detail::Recorder r("truncation-limit");
    for (long long n = 0; n < cases; ++n) {
        r.begin(n);
        const GradedAlphabet& alphabet = detail::random_alphabet(rng);
        PatternSet P = detail::random_patterns(rng, alphabet, 4, 3);
        PatternSet Q = detail::random_patterns(rng, alphabet, 2, 2);
        const int d = detail::pick(rng, 0, alphabet.size() >= 3 ? 3 : 4);
        RefinedCount full = count_avoiding(alphabet, P, Q, d);
        RefinedCount cut = count_avoiding(alphabet, truncate_patterns(P, d), Q, d);
        r.check(full.counts() == cut.counts(), "truncated patterns count identically");

        PatternSet bigger =
            P.inserted(detail::random_tree(rng, alphabet, detail::pick(rng, 1, 3)));
        RefinedCount shrunk = count_avoiding(alphabet, bigger, Q, d);
        for (const auto& [exps, count] : shrunk.counts())
            r.check(count <= full.count(exps), "larger pattern sets never count more");
    }
    return r.take();
}

}  // namespace treeavoid::props
