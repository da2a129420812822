#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treeavoid/alphabet.hpp"
#include "treeavoid/monoid.hpp"
#include "treeavoid/nalg.hpp"
#include "treeavoid/pattern.hpp"
#include "treeavoid/rewrite.hpp"
#include "treeavoid/series.hpp"
#include "treeavoid/system.hpp"
#include "treeavoid/tree.hpp"

namespace treeavoid {

// Whole-file reader; raises InputError when the file cannot be read.
std::string read_file(const std::string& path);

// JSON inputs.  Malformed JSON raises ParseError with a byte offset;
// structurally invalid documents raise InputError.
//
//   alphabet     {"letters":[{"name":"a","arity":2},...]}
//   patterns     {"patterns":["a(a(*,*),*)",...]}            (tree grammar strings)
//   rules        {"rules":[{"lhs":"...","rhs":"..."}]}
//   presentation {"relations":[{"lhs":"...","rhs":"..."}]}   (unordered pairs)
//   series       {"truncation_degree":D,
//                 "terms":[{"exponents":{"a":2,"b":1},"coeff":3},...]}
//   word         {"monoid":{"kind":"additive-naturals"|"cyclic","order":N},
//                 "word":[0,1,0]}
//   nalg         {"polys":{"0":[0,1,0,1],"1":[0,1,1]}}
GradedAlphabet parse_alphabet_json(const std::string& text);
PatternSet parse_patterns_json(const std::string& text, const GradedAlphabet& alphabet);
std::vector<RewriteRule> parse_rules_json(const std::string& text,
                                          const GradedAlphabet& alphabet);
Presentation parse_presentation_json(const std::string& text, const GradedAlphabet& alphabet);
TraceSeries parse_series_json(const std::string& text, const GradedAlphabet& alphabet);
std::pair<Monoid, MonoidWord> parse_word_json(const std::string& text);
NAlgebraicSpec parse_nalg_json(const std::string& text);

// Tree JSON: nested {"letter":"a","children":[...]} with "*" for leaves.
SyntaxTree parse_tree_json(const std::string& text, const GradedAlphabet& alphabet);
std::string tree_to_json(const SyntaxTree& t);

// Space-separated monoid word, e.g. "0 1 0".
MonoidWord parse_word_text(const std::string& text);

// Deterministic renderers (canonical order everywhere).
std::string alphabet_to_json(const GradedAlphabet& alphabet);
std::string patterns_to_json(const PatternSet& patterns);
std::string series_to_json(const TraceSeries& f);
std::string system_to_json(const EquationSystem& system);
std::string word_to_json(const Monoid& monoid, const MonoidWord& word);

// Comma-separated integer sequence, e.g. "1,2,5,14,42,132".
std::string sequence_text(const std::vector<long long>& xs);

// One line per total degree 0..D: the stored coefficients of that degree in
// monomial order, comma-separated.
std::string triangle_text(const TraceSeries& f);

}  // namespace treeavoid
