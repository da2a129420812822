// Acceptance gate: runs every product-level criterion, prints one timed
// PASS/FAIL line per criterion (with its pinned runtime budget where one
// applies), and exits nonzero when anything fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "property_suites.hpp"
#include "treeavoid/algebraic.hpp"
#include "treeavoid/avoidance.hpp"
#include "treeavoid/catalog.hpp"
#include "treeavoid/monoid.hpp"
#include "treeavoid/nalg.hpp"
#include "treeavoid/oracle.hpp"
#include "treeavoid/pattern.hpp"
#include "treeavoid/rewrite.hpp"
#include "treeavoid/series.hpp"
#include "treeavoid/system.hpp"
#include "treeavoid/tree.hpp"

namespace {

using namespace treeavoid;

void append(std::string& detail, const std::string& item) {
    if (!detail.empty()) detail += "; ";
    detail += item;
}

// binom((m+1)n, n) / (mn + 1), exact in long long for the ranges used here.
long long fuss_catalan(int m, int n) {
    const long long top = static_cast<long long>(m + 1) * n;
    long long binom = 1;
    for (long long i = 1; i <= n; ++i) binom = binom * (top - n + i) / i;
    return binom / (static_cast<long long>(m) * n + 1);
}

// Signed multiplicity of the term `letter[F{op1},...]` in `eq`; 0 when absent.
long long term_coeff(const Equation& eq, const std::string& letter,
                     const std::vector<std::string>& operand_keys) {
    for (const Term& term : eq.terms) {
        if (term.letter.name != letter) continue;
        if (term.operands.size() != operand_keys.size()) continue;
        bool same = true;
        for (std::size_t i = 0; i < operand_keys.size(); ++i)
            if (term.operands[i].key() != operand_keys[i]) same = false;
        if (same) return term.coeff;
    }
    return 0;
}

// Criterion 1: the eight families' dimension tables at truncation degree 7,
// with the Fuss-Catalan entries checked against the closed form.
bool criterion_dimensions(std::string& detail) {
    struct Family {
        const char* id;
        std::vector<long long> expected;
    };
    const std::vector<Family> families = {
        {"2as", {1, 2, 6, 22, 90, 394, 1806, 8558}},
        {"dipt", {1, 2, 6, 22, 90, 394, 1806, 8558}},
        {"dup", {1, 2, 5, 14, 42, 132, 429, 1430}},
        {"nct", {1, 2, 7, 30, 143, 728, 3876, 21318}},
        {"schr", {1, 3, 11, 45, 197, 903, 4279}},
        {"motz", {1, 1, 2, 4, 9, 21, 51, 127}},
        {"da", {1, 2, 5, 13, 35, 96, 267, 750}},
    };
    bool ok = true;
    for (const Family& family : families) {
        const CatalogEntry& entry = catalog_entry(family.id);
        std::vector<long long> got = specialize(catalog_series(entry, 7), entry.dims_mode);
        if (got.size() < family.expected.size()) {
            ok = false;
            append(detail, std::string(family.id) + ": table too short");
            continue;
        }
        got.resize(family.expected.size());
        if (got != family.expected) {
            ok = false;
            append(detail, std::string(family.id) + ": dimensions diverge");
        }
    }
    const std::vector<std::pair<const char*, int>> fuss = {
        {"fcat_1", 1}, {"fcat_1_lr", 1}, {"fcat_2", 2}, {"fcat_3", 3}};
    for (const auto& [id, m] : fuss) {
        const CatalogEntry& entry = catalog_entry(id);
        std::vector<long long> got = specialize(catalog_series(entry, 7), entry.dims_mode);
        if (got.size() != 8) {
            ok = false;
            append(detail, std::string(id) + ": table too short");
            continue;
        }
        for (int n = 1; n <= 8; ++n)
            if (got[static_cast<std::size_t>(n - 1)] != fuss_catalan(m, n)) {
                ok = false;
                append(detail, std::string(id) + ": closed form diverges at arity " +
                                   std::to_string(n));
                break;
            }
    }
    return ok;
}

// Criterion 2: refined coefficient rows, complete for every frozen arity
// (through arity 7 for motz, arity 6 or 4 for the others).
bool criterion_rows(std::string& detail) {
    bool ok = true;
    int with_rows = 0;
    for (const CatalogEntry& entry : catalog()) {
        if (entry.rows_max_arity < 2) continue;
        ++with_rows;
        TraceSeries f = catalog_series(entry, entry.rows_max_arity - 1);
        std::map<Exponents, long long> expected;
        for (const RowTerm& row : entry.expected_rows) {
            Exponents exps(entry.alphabet.size(), 0);
            for (const auto& [name, e] : row.exponents)
                exps[entry.alphabet.index_of(name)] = e;
            expected[exps] = row.coeff;
        }
        std::map<Exponents, long long> got;
        for (const auto& [exps, coeff] : f.terms()) {
            int arity = monomial_arity(entry.alphabet, exps);
            if (arity >= 2 && arity <= entry.rows_max_arity) got[exps] = coeff;
        }
        if (got != expected) {
            ok = false;
            append(detail, entry.id + ": rows diverge");
        }
    }
    if (catalog_entry("motz").rows_max_arity != 7) {
        ok = false;
        append(detail, "motz rows are not frozen through arity 7");
    }
    if (with_rows < 9) {
        ok = false;
        append(detail, "frozen rows missing for some families");
    }
    return ok;
}

// Criterion 3: every catalog identity has a zero residual at degree 8.
bool criterion_identities(std::string& detail) {
    bool ok = true;
    int entries_with_identities = 0;
    for (const CatalogEntry& entry : catalog()) {
        if (entry.identities.empty()) continue;
        ++entries_with_identities;
        TraceSeries f = catalog_series(entry, 8);
        for (const AlgebraicIdentity& identity : entry.identities) {
            ResidualReport res = check_algebraic_equation(f, identity);
            if (!res.pass) {
                ok = false;
                append(detail, entry.id + "/" + identity.name + ": " +
                                   std::to_string(res.nonzero.size()) +
                                   " nonzero residual coefficients");
            }
        }
    }
    if (entries_with_identities != 11) {
        ok = false;
        append(detail, "expected identities on 11 entries, found " +
                           std::to_string(entries_with_identities));
    }
    return ok;
}

// Criterion 4: the solved series equals the exhaustive census to degree 5 on
// every catalog entry and on 100 random instances.
bool criterion_oracle(std::string& detail) {
    bool ok = true;
    for (const CatalogEntry& entry : catalog()) {
        TraceSeries solution = catalog_series(entry, 5);
        PatternSet patterns =
            entry.system_given ? entry.truncated_patterns(5) : entry.patterns;
        TraceSeries census =
            count_avoiding(entry.alphabet, patterns, entry.prefix_patterns, 5).to_series();
        if (!(solution == census)) {
            ok = false;
            append(detail, entry.id + ": solver and census disagree");
        }
    }
    std::mt19937 rng(777);
    for (int n = 0; n < 100; ++n) {
        const GradedAlphabet& G = props::detail::random_alphabet(rng);
        PatternSet P = props::detail::random_patterns(rng, G, 4, 3);
        PatternSet Q = props::detail::random_patterns(rng, G, 2, 2);
        TraceSeries solved = solve_root(build_system(G, P, Q), 5);
        TraceSeries census = count_avoiding(G, P, Q, 5).to_series();
        if (!(solved == census)) {
            ok = false;
            append(detail, "random instance " + std::to_string(n) + " disagrees");
        }
    }
    return ok;
}

// Criterion 5: the running three-letter example's minimal words and the
// cancellation in its merged root equation, both exact.
bool criterion_worked_example(std::string& detail) {
    GradedAlphabet G{{{"a", 2}, {"b", 2}, {"c", 3}}};
    auto t = [&](const char* text) { return parse_tree(G, text); };
    PatternSet P{
        t("a(c(*,*,*),*)"),
        t("c(a(*,*),*,*)"),
        t("c(b(*,*),b(*,*),*)"),
        t("c(b(*,*),*,a(*,*))"),
        t("c(c(*,*,c(*,*,*)),*,a(*,*))"),
    };
    bool ok = true;

    auto slot_keys = [](const ConsistentWord& w) {
        std::vector<std::string> out;
        for (const PatternSet& s : w.slots) out.push_back(s.key());
        return out;
    };
    std::vector<ConsistentWord> Ma =
        minimal_consistent_words(restrict_to_root(P, G.letter("a")), G.letter("a"));
    if (Ma.size() != 1 ||
        slot_keys(Ma[0]) != std::vector<std::string>{"c(*,*,*)", ""}) {
        ok = false;
        append(detail, "binary slice a: wrong minimal words");
    }
    std::vector<ConsistentWord> Mb =
        minimal_consistent_words(restrict_to_root(P, G.letter("b")), G.letter("b"));
    if (Mb.size() != 1 || !(Mb[0] == empty_word(2))) {
        ok = false;
        append(detail, "binary slice b: wrong minimal words");
    }
    std::vector<ConsistentWord> Mc =
        minimal_consistent_words(restrict_to_root(P, G.letter("c")), G.letter("c"));
    std::vector<std::vector<std::string>> got;
    for (const ConsistentWord& w : Mc) got.push_back(slot_keys(w));
    std::sort(got.begin(), got.end());
    std::vector<std::vector<std::string>> expected = {
        {"a(*,*)", "b(*,*)", "a(*,*)"},
        {"a(*,*),b(*,*)", "", "a(*,*)"},
        {"a(*,*),b(*,*),c(*,*,c(*,*,*))", "", ""},
    };
    std::sort(expected.begin(), expected.end());
    if (got != expected) {
        ok = false;
        append(detail, "ternary slice c: wrong minimal words");
    }

    EquationSystem sys = build_system(G, P, PatternSet{});
    const Equation& root = sys.equation("");
    bool merged = root.terms.size() == 7 &&
                  term_coeff(root, "a", {"c(*,*,*)", ""}) == 1 &&
                  term_coeff(root, "b", {"", ""}) == 1 &&
                  term_coeff(root, "c", {"a(*,*)", "b(*,*)", "a(*,*)"}) == 1 &&
                  term_coeff(root, "c", {"a(*,*),b(*,*)", "", "a(*,*)"}) == 1 &&
                  term_coeff(root, "c", {"a(*,*),b(*,*)", "b(*,*)", "a(*,*)"}) == -1 &&
                  term_coeff(root, "c",
                             {"a(*,*),b(*,*),c(*,*,c(*,*,*))", "", ""}) == 1 &&
                  term_coeff(root, "c",
                             {"a(*,*),b(*,*),c(*,*,c(*,*,*))", "", "a(*,*)"}) == -1;
    if (!merged) {
        ok = false;
        append(detail, "root equation: wrong merged terms");
    }
    // The pair that cancels during merging must be absent, not kept at zero.
    if (term_coeff(root, "c", {"a(*,*),b(*,*),c(*,*,c(*,*,*))", "b(*,*)",
                               "a(*,*)"}) != 0) {
        ok = false;
        append(detail, "root equation: cancelled term survived merging");
    }
    for (const Term& term : root.terms)
        if (term.coeff == 0) {
            ok = false;
            append(detail, "root equation: zero coefficient kept");
        }
    return ok;
}

// Criterion 6: every oriented entry's probe terminates, is confluent, and
// counts as many congruence classes as normal forms through arity 6; where a
// monoid realization exists its suboperad counts agree as well.
bool criterion_probes(std::string& detail) {
    bool ok = true;
    int probed = 0;
    int realized = 0;
    for (const CatalogEntry& entry : catalog()) {
        if (entry.orientation.rules.empty()) continue;
        ++probed;
        FaithfulnessReport probe =
            faithfulness_probe(entry.presentation, entry.orientation, 5);
        if (!probe.terminating || !probe.confluent) {
            ok = false;
            append(detail, entry.id + ": probe not terminating/confluent");
        }
        if (probe.counts.size() != 6) {
            ok = false;
            append(detail, entry.id + ": probe rows missing");
            continue;
        }
        for (const ArityCount& row : probe.counts)
            if (row.congruence_classes != row.normal_forms) {
                ok = false;
                append(detail, entry.id + ": classes != normal forms at arity " +
                                   std::to_string(row.arity));
            }
        if (!entry.realization) continue;
        ++realized;
        std::vector<MonoidWord> generators;
        for (const auto& [name, word] : entry.realization->assignment)
            generators.push_back(word);
        std::vector<std::vector<MonoidWord>> groups =
            suboperad_elements(entry.realization->monoid, generators, 6);
        for (const ArityCount& row : probe.counts) {
            long long elements = static_cast<long long>(
                groups[static_cast<std::size_t>(row.arity - 1)].size());
            if (elements != row.congruence_classes) {
                ok = false;
                append(detail, entry.id + ": suboperad count diverges at arity " +
                                   std::to_string(row.arity));
            }
        }
    }
    if (probed != 11 || realized != 7) {
        ok = false;
        append(detail, "expected 11 oriented entries (7 realized), found " +
                           std::to_string(probed) + " (" + std::to_string(realized) +
                           ")");
    }
    return ok;
}

// Criterion 7: algebraic-equation realizations; the mixed table yields 6
// letters and 72 patterns with zero residual at degree 8, and f = t + f^2
// reproduces the Catalan numbers.
bool criterion_nalg(std::string& detail) {
    bool ok = true;
    NAlgebraicSpec mixed;
    mixed.polys[0] = {0, 1, 0, 1};
    mixed.polys[1] = {0, 1, 1};
    mixed.polys[2] = {1, 0, 0, 2};
    NAlgReport report = verify_nalg(mixed, 8);
    if (report.realization.alphabet.size() != 6) {
        ok = false;
        append(detail, "mixed table: expected 6 letters, got " +
                           std::to_string(report.realization.alphabet.size()));
    }
    if (report.realization.patterns.size() != 72) {
        ok = false;
        append(detail, "mixed table: expected 72 patterns, got " +
                           std::to_string(report.realization.patterns.size()));
    }
    if (!report.pass) {
        ok = false;
        append(detail, "mixed table: nonzero residual at degree 8");
    }
    for (long long r : report.residual)
        if (r != 0) {
            ok = false;
            append(detail, "mixed table: residual coefficient " + std::to_string(r));
            break;
        }

    NAlgebraicSpec catalan;
    catalan.polys[0] = {0, 1};
    catalan.polys[2] = {1};
    NAlgReport cat = verify_nalg(catalan, 8);
    if (!cat.pass) {
        ok = false;
        append(detail, "catalan equation: nonzero residual");
    }
    if (cat.series_by_arity !=
        std::vector<long long>{1, 1, 2, 5, 14, 42, 132, 429, 1430}) {
        ok = false;
        append(detail, "catalan equation: wrong arity census");
    }
    return ok;
}

// Criterion 8: the six randomized property suites, 1000 cases each, zero
// failures.
bool criterion_properties(std::string& detail) {
    const std::vector<props::SuiteResult> results = {
        props::operad_axioms_suite(1000, 201),
        props::poset_laws_suite(1000, 202),
        props::prefix_factor_suite(1000, 203),
        props::trace_multiplicativity_suite(1000, 204),
        props::minimal_words_suite(1000, 205),
        props::truncation_limit_suite(1000, 206),
    };
    bool ok = true;
    for (const props::SuiteResult& r : results)
        if (r.cases != 1000 || r.failures != 0) {
            ok = false;
            append(detail, r.name + ": " + std::to_string(r.failures) +
                               " failures (" + r.first_failure + ")");
        }
    return ok;
}

bool run(int number, const char* title, double budget_seconds,
         const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        append(detail, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = budget_seconds <= 0.0 || elapsed <= budget_seconds;
    const bool pass = ok && in_budget;
    std::printf("criterion %d [%s]: %s (%.2fs", number, title, pass ? "PASS" : "FAIL",
                elapsed);
    if (budget_seconds > 0.0) std::printf(", budget %.0fs", budget_seconds);
    std::printf(")");
    if (!in_budget) std::printf(" -- budget exceeded");
    if (!ok && !detail.empty()) std::printf(" -- %s", detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
    return pass;
}

}  // namespace

int main() {
    bool all = true;
    all &= run(1, "eight-family dimension tables at degree 7", 10.0, criterion_dimensions);
    all &= run(2, "refined coefficient rows at the frozen arities", 10.0, criterion_rows);
    all &= run(3, "identity residuals vanish at degree 8", 5.0, criterion_identities);
    all &= run(4, "solver matches the exhaustive census to degree 5", 60.0,
               criterion_oracle);
    all &= run(5, "running-example minimal words and cancellation", 0.0,
               criterion_worked_example);
    all &= run(6, "rewriting probes and suboperad counts", 120.0, criterion_probes);
    all &= run(7, "algebraic-equation realizations", 0.0, criterion_nalg);
    all &= run(8, "randomized property suites, 1000 cases each", 0.0,
               criterion_properties);
    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
