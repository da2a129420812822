// Python bindings: a thin string-oriented surface over the C++ core.  JSON
// documents use the same schemas as the command-line tool, trees use the
// canonical grammar text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "treeavoid/catalog.hpp"
#include "treeavoid/error.hpp"
#include "treeavoid/io.hpp"
#include "treeavoid/nalg.hpp"
#include "treeavoid/oracle.hpp"
#include "treeavoid/rewrite.hpp"
#include "treeavoid/series.hpp"
#include "treeavoid/system.hpp"
#include "treeavoid/tree.hpp"

namespace py = pybind11;

namespace {

using namespace treeavoid;

SpecializeMode parse_mode(const std::string& mode) {
    if (mode == "arity") return SpecializeMode::Arity;
    if (mode == "degree") return SpecializeMode::Degree;
    throw InputError("mode must be 'arity' or 'degree'");
}

struct Instance {
    GradedAlphabet alphabet;
    PatternSet patterns;
    PatternSet prefix_patterns;
};

Instance parse_instance(const std::string& alphabet_json, const std::string& patterns_json,
                        const std::string& prefix_json) {
    GradedAlphabet alphabet = parse_alphabet_json(alphabet_json);
    PatternSet P = parse_patterns_json(patterns_json, alphabet);
    PatternSet Q;
    if (!prefix_json.empty()) Q = parse_patterns_json(prefix_json, alphabet);
    return {std::move(alphabet), std::move(P), std::move(Q)};
}

TraceSeries solved_series(const std::string& alphabet_json, const std::string& patterns_json,
                          const std::string& prefix_json, int max_degree) {
    Instance in = parse_instance(alphabet_json, patterns_json, prefix_json);
    return solve_root(build_system(in.alphabet, in.patterns, in.prefix_patterns,
                                   default_build_options()),
                      max_degree);
}

TraceSeries census_series(const std::string& alphabet_json, const std::string& patterns_json,
                          const std::string& prefix_json, int max_degree) {
    Instance in = parse_instance(alphabet_json, patterns_json, prefix_json);
    return count_avoiding(in.alphabet, in.patterns, in.prefix_patterns, max_degree)
        .to_series();
}

Orientation parse_orientation(const std::string& rules_json, const GradedAlphabet& alphabet) {
    return Orientation{parse_rules_json(rules_json, alphabet)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Counting syntax trees that avoid contiguous patterns";
    m.attr("__version__") = "0.1.0";

    // Subclasses are registered after the base so their translators run first.
    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<InputError>(m, "InputError", base.ptr());
    py::register_exception<CapError>(m, "CapError", base.ptr());

    m.def(
        "catalog_ids",
        [] {
            std::vector<std::string> ids;
            for (const CatalogEntry& e : catalog()) ids.push_back(e.id);
            return ids;
        },
        "Built-in instance ids, in catalog order.");

    m.def(
        "catalog_summary", [](const std::string& id) { return catalog_entry(id).summary; },
        py::arg("id"), "One-line summary of a catalog entry.");

    m.def(
        "catalog_dims_mode",
        [](const std::string& id) {
            return catalog_entry(id).dims_mode == SpecializeMode::Arity
                       ? std::string("arity")
                       : std::string("degree");
        },
        py::arg("id"), "Which specialization the entry's dimension table uses.");

    m.def(
        "catalog_dims",
        [](const std::string& id, int max_degree) {
            const CatalogEntry& entry = catalog_entry(id);
            return specialize(catalog_series(entry, max_degree), entry.dims_mode);
        },
        py::arg("id"), py::arg("max_degree"),
        "Dimension table of a catalog entry to the given truncation degree.");

    m.def(
        "catalog_verify",
        [](const std::string& id, int max_degree) {
            EntryReport report = verify_entry(catalog_entry(id), max_degree);
            return std::make_pair(report.pass(), render_report(report));
        },
        py::arg("id"), py::arg("max_degree"),
        "Runs every cross-check of a catalog entry; returns (ok, report).");

    m.def(
        "solve_dims",
        [](const std::string& alphabet_json, const std::string& patterns_json,
           const std::string& prefix_json, int max_degree, const std::string& mode) {
            return specialize(
                solved_series(alphabet_json, patterns_json, prefix_json, max_degree),
                parse_mode(mode));
        },
        py::arg("alphabet_json"), py::arg("patterns_json"), py::arg("prefix_json") = "",
        py::arg("max_degree") = 6, py::arg("mode") = "arity",
        "Counts avoiding trees via the equation system, by arity or degree.");

    m.def(
        "census_dims",
        [](const std::string& alphabet_json, const std::string& patterns_json,
           const std::string& prefix_json, int max_degree, const std::string& mode) {
            return specialize(
                census_series(alphabet_json, patterns_json, prefix_json, max_degree),
                parse_mode(mode));
        },
        py::arg("alphabet_json"), py::arg("patterns_json"), py::arg("prefix_json") = "",
        py::arg("max_degree") = 6, py::arg("mode") = "arity",
        "Counts avoiding trees by exhaustive enumeration (the reference route).");

    m.def(
        "solve_series_json",
        [](const std::string& alphabet_json, const std::string& patterns_json,
           const std::string& prefix_json, int max_degree) {
            return series_to_json(
                solved_series(alphabet_json, patterns_json, prefix_json, max_degree));
        },
        py::arg("alphabet_json"), py::arg("patterns_json"), py::arg("prefix_json") = "",
        py::arg("max_degree") = 6, "Solved refined series as JSON.");

    m.def(
        "solve_series_text",
        [](const std::string& alphabet_json, const std::string& patterns_json,
           const std::string& prefix_json, int max_degree) {
            return print_series(
                solved_series(alphabet_json, patterns_json, prefix_json, max_degree));
        },
        py::arg("alphabet_json"), py::arg("patterns_json"), py::arg("prefix_json") = "",
        py::arg("max_degree") = 6, "Solved refined series as text.");

    m.def(
        "census_json",
        [](const std::string& alphabet_json, const std::string& patterns_json,
           const std::string& prefix_json, int max_degree) {
            return series_to_json(
                census_series(alphabet_json, patterns_json, prefix_json, max_degree));
        },
        py::arg("alphabet_json"), py::arg("patterns_json"), py::arg("prefix_json") = "",
        py::arg("max_degree") = 6, "Exhaustive census as JSON.");

    m.def(
        "system_text",
        [](const std::string& alphabet_json, const std::string& patterns_json,
           const std::string& prefix_json, bool stringy) {
            Instance in = parse_instance(alphabet_json, patterns_json, prefix_json);
            EquationSystem system =
                stringy ? stringy_system(in.alphabet, in.patterns, in.prefix_patterns)
                        : build_system(in.alphabet, in.patterns, in.prefix_patterns,
                                       default_build_options());
            return print_system(system);
        },
        py::arg("alphabet_json"), py::arg("patterns_json"), py::arg("prefix_json") = "",
        py::arg("stringy") = false, "The avoidance equation system as text.");

    m.def(
        "system_json",
        [](const std::string& alphabet_json, const std::string& patterns_json,
           const std::string& prefix_json, bool stringy) {
            Instance in = parse_instance(alphabet_json, patterns_json, prefix_json);
            EquationSystem system =
                stringy ? stringy_system(in.alphabet, in.patterns, in.prefix_patterns)
                        : build_system(in.alphabet, in.patterns, in.prefix_patterns,
                                       default_build_options());
            return system_to_json(system);
        },
        py::arg("alphabet_json"), py::arg("patterns_json"), py::arg("prefix_json") = "",
        py::arg("stringy") = false, "The avoidance equation system as JSON.");

    m.def(
        "canonical_tree",
        [](const std::string& alphabet_json, const std::string& text) {
            GradedAlphabet alphabet = parse_alphabet_json(alphabet_json);
            return print_tree(parse_tree(alphabet, text));
        },
        py::arg("alphabet_json"), py::arg("text"),
        "Parses grammar text and reprints the canonical form.");

    m.def(
        "tree_json",
        [](const std::string& alphabet_json, const std::string& text) {
            GradedAlphabet alphabet = parse_alphabet_json(alphabet_json);
            return tree_to_json(parse_tree(alphabet, text));
        },
        py::arg("alphabet_json"), py::arg("text"), "Grammar text to nested JSON.");

    m.def(
        "tree_from_json",
        [](const std::string& alphabet_json, const std::string& tree_json) {
            GradedAlphabet alphabet = parse_alphabet_json(alphabet_json);
            return print_tree(parse_tree_json(tree_json, alphabet));
        },
        py::arg("alphabet_json"), py::arg("tree_json"), "Nested JSON to grammar text.");

    m.def(
        "normalize_tree",
        [](const std::string& alphabet_json, const std::string& rules_json,
           const std::string& tree_text, int step_budget) {
            GradedAlphabet alphabet = parse_alphabet_json(alphabet_json);
            Orientation orientation = parse_orientation(rules_json, alphabet);
            NormalizeResult result =
                normalize(parse_tree(alphabet, tree_text), orientation, step_budget);
            return std::make_tuple(print_tree(result.result), result.steps,
                                   result.budget_exhausted);
        },
        py::arg("alphabet_json"), py::arg("rules_json"), py::arg("tree_text"),
        py::arg("step_budget") = 10000,
        "Leftmost-innermost rewriting; returns (tree, steps, budget_exhausted).");

    m.def(
        "is_normal",
        [](const std::string& alphabet_json, const std::string& rules_json,
           const std::string& tree_text) {
            GradedAlphabet alphabet = parse_alphabet_json(alphabet_json);
            Orientation orientation = parse_orientation(rules_json, alphabet);
            return is_normal_form(parse_tree(alphabet, tree_text), orientation);
        },
        py::arg("alphabet_json"), py::arg("rules_json"), py::arg("tree_text"),
        "True iff no rule applies anywhere in the tree.");

    m.def(
        "probe",
        [](const std::string& alphabet_json, const std::string& relations_json,
           const std::string& rules_json, int max_degree) {
            GradedAlphabet alphabet = parse_alphabet_json(alphabet_json);
            Presentation presentation = parse_presentation_json(relations_json, alphabet);
            Orientation orientation = parse_orientation(rules_json, alphabet);
            FaithfulnessReport report =
                faithfulness_probe(presentation, orientation, max_degree);
            return std::make_pair(report.pass(), render_report(report));
        },
        py::arg("alphabet_json"), py::arg("relations_json"), py::arg("rules_json"),
        py::arg("max_degree") = 4,
        "Faithfulness probe of an oriented presentation; returns (ok, report).");

    m.def(
        "nalg_verify",
        [](const std::string& spec_json, int max_degree) {
            NAlgReport report =
                verify_nalg(parse_nalg_json(spec_json), max_degree, default_build_options());
            return std::make_tuple(report.pass, report.series_by_arity, report.residual);
        },
        py::arg("spec_json"), py::arg("max_degree") = 6,
        "Realizes an algebraic equation and checks it; returns (ok, census, residual).");
}
