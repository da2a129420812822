#include <future>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "treeavoid/catalog.hpp"
#include "treeavoid/error.hpp"
#include "treeavoid/io.hpp"
#include "treeavoid/nalg.hpp"
#include "treeavoid/oracle.hpp"
#include "treeavoid/rewrite.hpp"
#include "treeavoid/series.hpp"
#include "treeavoid/system.hpp"

namespace {

using namespace treeavoid;

// Exit codes: 0 success, 1 usage, 2 input, 3 verification failure,
// 4 resource cap.
constexpr int kUsageError = 1;
constexpr int kInputError = 2;
constexpr int kVerificationFailure = 3;
constexpr int kCapError = 4;

void emit(const std::string& text) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
}

int run_catalog_list() {
    std::string out;
    for (const CatalogEntry& e : catalog()) out += e.id + "  " + e.summary + "\n";
    emit(out);
    return 0;
}

int run_enumerate(const std::string& alphabet_path, const std::string& patterns_path,
                  const std::string& prefix_path, int max_degree, const std::string& format) {
    GradedAlphabet G = parse_alphabet_json(read_file(alphabet_path));
    PatternSet P = parse_patterns_json(read_file(patterns_path), G);
    PatternSet Q;
    if (!prefix_path.empty()) Q = parse_patterns_json(read_file(prefix_path), G);
    RefinedCount census = count_avoiding(G, P, Q, max_degree);
    TraceSeries f = census.to_series();
    emit(format == "json" ? series_to_json(f) : print_series(f));
    return 0;
}

int run_system(const std::string& alphabet_path, const std::string& patterns_path,
               const std::string& prefix_path, bool stringy, const std::string& format) {
    GradedAlphabet G = parse_alphabet_json(read_file(alphabet_path));
    PatternSet P = parse_patterns_json(read_file(patterns_path), G);
    PatternSet Q;
    if (!prefix_path.empty()) Q = parse_patterns_json(read_file(prefix_path), G);
    EquationSystem system = stringy ? stringy_system(G, P, Q)
                                    : build_system(G, P, Q, default_build_options());
    emit(format == "json" ? system_to_json(system) : print_system(system));
    return 0;
}

int run_series(const std::string& catalog_id, const std::string& alphabet_path,
               const std::string& patterns_path, int max_degree,
               const std::string& specialize_mode, const std::string& format) {
    TraceSeries f = [&] {
        if (!catalog_id.empty()) return catalog_series(catalog_entry(catalog_id), max_degree);
        GradedAlphabet G = parse_alphabet_json(read_file(alphabet_path));
        PatternSet P = parse_patterns_json(read_file(patterns_path), G);
        return solve_root(build_system(G, P, PatternSet{}, default_build_options()),
                          max_degree);
    }();
    if (!specialize_mode.empty()) {
        SpecializeMode mode = specialize_mode == "arity" ? SpecializeMode::Arity
                                                         : SpecializeMode::Degree;
        emit(sequence_text(specialize(f, mode)));
        return 0;
    }
    emit(format == "json" ? series_to_json(f) : print_series(f));
    return 0;
}

int run_rewrite_check(const std::string& catalog_id, int max_degree) {
    const CatalogEntry& entry = catalog_entry(catalog_id);
    if (entry.orientation.rules.empty())
        throw InputError("catalog entry has no rewrite orientation: " + catalog_id);
    FaithfulnessReport report = faithfulness_probe(entry.presentation, entry.orientation,
                                                   max_degree);
    emit(render_report(report));
    return report.pass() ? 0 : kVerificationFailure;
}

int run_nalg(const std::string& spec_path, int max_degree) {
    NAlgebraicSpec spec = parse_nalg_json(read_file(spec_path));
    NAlgReport report = verify_nalg(spec, max_degree, default_build_options());
    std::string out;
    out += "letters:";
    for (const Letter& letter : report.realization.alphabet.letters())
        out += " " + letter.name + "/" + std::to_string(letter.arity);
    out += "\npatterns: " + std::to_string(report.realization.patterns.size());
    out += "\nseries_by_arity: " + sequence_text(report.series_by_arity);
    out += "\nresidual: ";
    out += report.pass ? "PASS" : "FAIL";
    out += "\n";
    emit(out);
    return report.pass ? 0 : kVerificationFailure;
}

int run_verify(const std::string& catalog_id, int max_degree) {
    std::vector<const CatalogEntry*> entries;
    if (catalog_id == "all") {
        for (const CatalogEntry& e : catalog()) entries.push_back(&e);
    } else {
        entries.push_back(&catalog_entry(catalog_id));
    }
    std::vector<std::future<EntryReport>> futures;
    futures.reserve(entries.size());
    for (const CatalogEntry* e : entries)
        futures.push_back(std::async(std::launch::async, [e, max_degree] {
            return verify_entry(*e, max_degree);
        }));
    bool all_pass = true;
    std::string out;
    for (std::future<EntryReport>& f : futures) {
        EntryReport report = f.get();
        all_pass = all_pass && report.pass();
        out += render_report(report);
    }
    emit(out);
    return all_pass ? 0 : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern avoidance in syntax trees: enumeration, equation systems, "
                 "rewriting probes"};
    app.require_subcommand(1);

    CLI::App* cat = app.add_subcommand("catalog", "built-in instances");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "list entry ids and summaries");

    std::string alphabet_path, patterns_path, prefix_path, format = "text";
    int max_degree = 0;

    CLI::App* enumerate = app.add_subcommand("enumerate", "exhaustive refined census");
    enumerate->add_option("--alphabet", alphabet_path, "alphabet JSON file")->required();
    enumerate->add_option("--patterns", patterns_path, "patterns JSON file")->required();
    enumerate->add_option("--prefix-patterns", prefix_path, "prefix patterns JSON file");
    enumerate->add_option("--max-degree", max_degree, "truncation degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    enumerate->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    bool stringy = false;
    CLI::App* system_cmd = app.add_subcommand("system", "build the equation system");
    system_cmd->add_option("--alphabet", alphabet_path, "alphabet JSON file")->required();
    system_cmd->add_option("--patterns", patterns_path, "patterns JSON file")->required();
    system_cmd->add_option("--prefix-patterns", prefix_path, "prefix patterns JSON file");
    system_cmd->add_flag("--stringy", stringy, "use the stringy construction");
    system_cmd->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    std::string catalog_id, specialize_mode;
    CLI::App* series_cmd = app.add_subcommand("series", "solve for the avoidance series");
    series_cmd->add_option("--catalog", catalog_id, "catalog entry id");
    series_cmd->add_option("--alphabet", alphabet_path, "alphabet JSON file");
    series_cmd->add_option("--patterns", patterns_path, "patterns JSON file");
    series_cmd->add_option("--max-degree", max_degree, "truncation degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    series_cmd->add_option("--specialize", specialize_mode, "arity|degree")
        ->check(CLI::IsMember({"arity", "degree"}));
    series_cmd->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* rewrite_cmd = app.add_subcommand("rewrite-check", "faithfulness probe");
    rewrite_cmd->add_option("--catalog", catalog_id, "catalog entry id")->required();
    rewrite_cmd->add_option("--max-degree", max_degree, "probe degree bound")
        ->required()
        ->check(CLI::NonNegativeNumber);

    std::string spec_path;
    CLI::App* nalg_cmd = app.add_subcommand("nalg", "realize and check an algebraic equation");
    nalg_cmd->add_option("--spec", spec_path, "equation spec JSON file")->required();
    nalg_cmd->add_option("--max-degree", max_degree, "truncation degree")
        ->required()
        ->check(CLI::NonNegativeNumber);

    std::string verify_id = "all";
    CLI::App* verify_cmd = app.add_subcommand("verify", "run golden comparisons");
    verify_cmd->add_option("--catalog", verify_id, "catalog entry id or 'all'");
    verify_cmd->add_option("--max-degree", max_degree, "truncation degree")
        ->required()
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (cat->parsed()) return run_catalog_list();
        if (enumerate->parsed())
            return run_enumerate(alphabet_path, patterns_path, prefix_path, max_degree, format);
        if (system_cmd->parsed())
            return run_system(alphabet_path, patterns_path, prefix_path, stringy, format);
        if (series_cmd->parsed()) {
            bool have_catalog = !catalog_id.empty();
            bool have_files = !alphabet_path.empty() || !patterns_path.empty();
            if (have_catalog == have_files ||
                (have_files && (alphabet_path.empty() || patterns_path.empty()))) {
                std::cerr << "series requires either --catalog or both --alphabet and "
                             "--patterns\n";
                return kUsageError;
            }
            return run_series(catalog_id, alphabet_path, patterns_path, max_degree,
                              specialize_mode, format);
        }
        if (rewrite_cmd->parsed()) return run_rewrite_check(catalog_id, max_degree);
        if (nalg_cmd->parsed()) return run_nalg(spec_path, max_degree);
        if (verify_cmd->parsed()) return run_verify(verify_id, max_degree);
    } catch (const CapError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kCapError;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInputError;
    }
    return 0;
}
