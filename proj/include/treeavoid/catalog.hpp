#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treeavoid/algebraic.hpp"
#include "treeavoid/monoid.hpp"
#include "treeavoid/pattern.hpp"
#include "treeavoid/rewrite.hpp"
#include "treeavoid/series.hpp"
#include "treeavoid/system.hpp"

namespace treeavoid {

// One frozen coefficient of a catalog entry's avoidance series: letter-name
// exponents and the expected value.
struct RowTerm {
    std::map<std::string, int> exponents;
    long long coeff = 0;
};

// Interpretation of the entry's letters as words over a monoid; used to
// cross-check relations and to count suboperad elements independently of the
// rewriting and series routes.
struct MonoidRealization {
    Monoid monoid;
    std::map<std::string, MonoidWord> assignment;  // letter name -> word
};

// A built-in instance: an alphabet with pattern sets to avoid, optionally a
// presentation with an oriented rewrite system realizing the avoiding trees
// as normal forms, plus frozen expected data used by `verify`.
struct CatalogEntry {
    CatalogEntry(std::string id_, std::string summary_, GradedAlphabet alphabet_)
        : id(std::move(id_)),
          summary(std::move(summary_)),
          alphabet(alphabet_),
          presentation{std::move(alphabet_), {}} {}

    std::string id;
    std::string summary;
    GradedAlphabet alphabet;

    // Empty relation / rule lists for plain avoidance entries.
    Presentation presentation;
    Orientation orientation;

    // Avoidance input; for entries with an orientation, `patterns` is the set
    // of rule left-hand sides.
    PatternSet patterns;
    PatternSet prefix_patterns;

    // Entries whose pattern family is infinite carry their equation system
    // directly plus a finite pattern stand-in per truncation degree.
    bool system_given = false;
    std::optional<EquationSystem> given_system;
    std::function<PatternSet(int)> truncated_patterns;

    // When set, stringy_system must reproduce build_system on this entry.
    bool check_stringy = false;

    SpecializeMode dims_mode = SpecializeMode::Arity;
    // Arity mode: values for arities 1,2,...; degree mode: degrees 0,1,...
    std::vector<long long> expected_dims;

    // Frozen refined coefficients, complete for arities 2..rows_max_arity.
    int rows_max_arity = 0;
    std::vector<RowTerm> expected_rows;

    std::vector<AlgebraicIdentity> identities;
    std::optional<MonoidRealization> realization;
};

// All built-in entries, in catalog order.
const std::vector<CatalogEntry>& catalog();

// Entry lookup; raises InputError for unknown ids.
const CatalogEntry& catalog_entry(const std::string& id);

// The entry's equation system: the hand-encoded one when present, otherwise
// built from its pattern sets.
EquationSystem catalog_system(const CatalogEntry& entry);

// Root avoidance series of the entry to the given truncation degree.
TraceSeries catalog_series(const CatalogEntry& entry, int max_degree);

struct EntryCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct EntryReport {
    std::string id;
    std::vector<EntryCheck> checks;

    bool pass() const;
};

// Runs every available cross-check of the entry against its frozen data:
// relation evaluation in the monoid realization, orientation consistency with
// the relations, the faithfulness probe, dimension and refined-row
// comparisons, identity residuals, exhaustive-count agreement, and suboperad
// element counts.
EntryReport verify_entry(const CatalogEntry& entry, int max_degree);

std::string render_report(const EntryReport& report);

}  // namespace treeavoid
