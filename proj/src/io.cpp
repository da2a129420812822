#include "treeavoid/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "treeavoid/error.hpp"

namespace treeavoid {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(),
                         e.byte > 0 ? e.byte - 1 : 0);
    }
}

const Json& field(const Json& doc, const std::string& name) {
    if (!doc.is_object() || !doc.contains(name))
        throw InputError("missing field '" + name + "'");
    return doc.at(name);
}

int int_field(const Json& value, const std::string& what) {
    if (!value.is_number_integer()) throw InputError(what + " must be an integer");
    return value.get<int>();
}

std::string string_field(const Json& value, const std::string& what) {
    if (!value.is_string()) throw InputError(what + " must be a string");
    return value.get<std::string>();
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

GradedAlphabet parse_alphabet_json(const std::string& text) {
    Json doc = parse_json(text);
    const Json& letters = field(doc, "letters");
    if (!letters.is_array()) throw InputError("'letters' must be an array");
    std::vector<Letter> result;
    for (const Json& entry : letters) {
        Letter letter;
        letter.name = string_field(field(entry, "name"), "letter name");
        letter.arity = int_field(field(entry, "arity"), "letter arity");
        result.push_back(std::move(letter));
    }
    return GradedAlphabet(std::move(result));
}

PatternSet parse_patterns_json(const std::string& text, const GradedAlphabet& alphabet) {
    Json doc = parse_json(text);
    const Json& patterns = field(doc, "patterns");
    if (!patterns.is_array()) throw InputError("'patterns' must be an array");
    std::vector<SyntaxTree> trees;
    for (const Json& entry : patterns)
        trees.push_back(parse_tree(alphabet, string_field(entry, "pattern")));
    return PatternSet(std::move(trees));
}

std::vector<RewriteRule> parse_rules_json(const std::string& text,
                                          const GradedAlphabet& alphabet) {
    Json doc = parse_json(text);
    const Json& rules = field(doc, "rules");
    if (!rules.is_array()) throw InputError("'rules' must be an array");
    std::vector<RewriteRule> result;
    for (const Json& entry : rules)
        result.push_back(make_rule(parse_tree(alphabet, string_field(field(entry, "lhs"), "lhs")),
                                   parse_tree(alphabet, string_field(field(entry, "rhs"), "rhs"))));
    return result;
}

Presentation parse_presentation_json(const std::string& text, const GradedAlphabet& alphabet) {
    Json doc = parse_json(text);
    const Json& relations = field(doc, "relations");
    if (!relations.is_array()) throw InputError("'relations' must be an array");
    std::vector<std::pair<SyntaxTree, SyntaxTree>> pairs;
    for (const Json& entry : relations)
        pairs.emplace_back(parse_tree(alphabet, string_field(field(entry, "lhs"), "lhs")),
                           parse_tree(alphabet, string_field(field(entry, "rhs"), "rhs")));
    return make_presentation(alphabet, std::move(pairs));
}

TraceSeries parse_series_json(const std::string& text, const GradedAlphabet& alphabet) {
    Json doc = parse_json(text);
    int degree = int_field(field(doc, "truncation_degree"), "truncation_degree");
    if (degree < 0) throw InputError("truncation_degree must be nonnegative");
    TraceSeries f(alphabet, degree);
    const Json& terms = field(doc, "terms");
    if (!terms.is_array()) throw InputError("'terms' must be an array");
    for (const Json& entry : terms) {
        const Json& exponents = field(entry, "exponents");
        if (!exponents.is_object()) throw InputError("'exponents' must be an object");
        Exponents exps(alphabet.size(), 0);
        for (const auto& [name, value] : exponents.items()) {
            if (!alphabet.has(name)) throw InputError("unknown letter in exponents: " + name);
            int e = int_field(value, "exponent of " + name);
            if (e < 0) throw InputError("exponent of " + name + " must be nonnegative");
            exps[alphabet.index_of(name)] = e;
        }
        const Json& coeff = field(entry, "coeff");
        if (!coeff.is_number_integer()) throw InputError("'coeff' must be an integer");
        f.add_term(exps, coeff.get<long long>());
    }
    return f;
}

namespace {

Monoid parse_monoid(const Json& doc) {
    std::string kind = string_field(field(doc, "kind"), "monoid kind");
    if (kind == "additive-naturals") return Monoid::additive_naturals();
    if (kind == "cyclic") return Monoid::cyclic(int_field(field(doc, "order"), "monoid order"));
    throw InputError("unknown monoid kind: " + kind);
}

}  // namespace

std::pair<Monoid, MonoidWord> parse_word_json(const std::string& text) {
    Json doc = parse_json(text);
    Monoid monoid = parse_monoid(field(doc, "monoid"));
    const Json& word = field(doc, "word");
    if (!word.is_array() || word.empty())
        throw InputError("'word' must be a nonempty array");
    MonoidWord result;
    for (const Json& entry : word) {
        int x = int_field(entry, "word letter");
        if (!monoid.valid_element(x)) throw InputError("word letter out of range");
        result.letters.push_back(x);
    }
    return {monoid, result};
}

NAlgebraicSpec parse_nalg_json(const std::string& text) {
    Json doc = parse_json(text);
    const Json& polys = field(doc, "polys");
    if (!polys.is_object()) throw InputError("'polys' must be an object");
    NAlgebraicSpec spec;
    for (const auto& [key, value] : polys.items()) {
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw InputError("poly keys must be nonnegative integers, got '" + key + "'");
        }
        if (k < 0) throw InputError("poly keys must be nonnegative integers");
        if (!value.is_array()) throw InputError("poly coefficients must be an array");
        std::vector<long long> coeffs;
        for (const Json& c : value) {
            if (!c.is_number_integer())
                throw InputError("poly coefficients must be integers");
            coeffs.push_back(c.get<long long>());
        }
        spec.polys[k] = std::move(coeffs);
    }
    validate_nalg_spec(spec);
    return spec;
}

namespace {

SyntaxTree tree_from_json_value(const Json& value, const GradedAlphabet& alphabet) {
    if (value.is_string()) {
        if (value.get<std::string>() == "*") return SyntaxTree::leaf();
        throw InputError("tree strings must be \"*\"");
    }
    std::string name = string_field(field(value, "letter"), "tree letter");
    if (!alphabet.has(name)) throw InputError("unknown letter: " + name);
    const Json& children = field(value, "children");
    if (!children.is_array()) throw InputError("'children' must be an array");
    std::vector<SyntaxTree> parsed;
    for (const Json& child : children) parsed.push_back(tree_from_json_value(child, alphabet));
    return SyntaxTree::node(alphabet.letter(name), std::move(parsed));
}

Json tree_to_json_value(const SyntaxTree& t) {
    if (t.is_leaf()) return Json("*");
    Json node = Json::object();
    node["letter"] = t.root().name;
    Json children = Json::array();
    for (int i = 1; i <= t.root().arity; ++i) children.push_back(tree_to_json_value(t.child(i)));
    node["children"] = std::move(children);
    return node;
}

}  // namespace

SyntaxTree parse_tree_json(const std::string& text, const GradedAlphabet& alphabet) {
    return tree_from_json_value(parse_json(text), alphabet);
}

std::string tree_to_json(const SyntaxTree& t) { return tree_to_json_value(t).dump(); }

MonoidWord parse_word_text(const std::string& text) {
    std::istringstream in(text);
    MonoidWord word;
    int x = 0;
    while (in >> x) {
        if (x < 0) throw InputError("word letters must be nonnegative");
        word.letters.push_back(x);
    }
    if (!in.eof()) throw InputError("word text must contain integers only");
    if (word.letters.empty()) throw InputError("word text must be nonempty");
    return word;
}

std::string alphabet_to_json(const GradedAlphabet& alphabet) {
    Json letters = Json::array();
    for (const Letter& letter : alphabet.letters()) {
        Json entry = Json::object();
        entry["name"] = letter.name;
        entry["arity"] = letter.arity;
        letters.push_back(std::move(entry));
    }
    Json doc = Json::object();
    doc["letters"] = std::move(letters);
    return doc.dump();
}

std::string patterns_to_json(const PatternSet& patterns) {
    Json list = Json::array();
    for (const SyntaxTree& t : patterns.trees()) list.push_back(print_tree(t));
    Json doc = Json::object();
    doc["patterns"] = std::move(list);
    return doc.dump();
}

std::string series_to_json(const TraceSeries& f) {
    Json terms = Json::array();
    for (const auto& [exps, coeff] : f.terms()) {
        Json exponents = Json::object();
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] != 0) exponents[f.alphabet().at(i).name] = exps[i];
        Json term = Json::object();
        term["exponents"] = std::move(exponents);
        term["coeff"] = coeff;
        terms.push_back(std::move(term));
    }
    Json doc = Json::object();
    doc["truncation_degree"] = f.truncation_degree();
    doc["terms"] = std::move(terms);
    return doc.dump();
}

std::string system_to_json(const EquationSystem& system) {
    Json equations = Json::array();
    for (const Equation& eq : system.equations()) {
        Json terms = Json::array();
        for (const Term& term : eq.terms) {
            Json operands = Json::array();
            for (const SystemVariable& v : term.operands) operands.push_back(v.key());
            Json t = Json::object();
            t["coeff"] = term.coeff;
            t["letter"] = term.letter.name;
            t["operands"] = std::move(operands);
            terms.push_back(std::move(t));
        }
        Json entry = Json::object();
        entry["variable"] = eq.variable.key();
        entry["terms"] = std::move(terms);
        equations.push_back(std::move(entry));
    }
    Json doc = Json::object();
    doc["alphabet"] = parse_json(alphabet_to_json(system.alphabet()));
    doc["root"] = system.root().key();
    doc["equations"] = std::move(equations);
    return doc.dump();
}

std::string word_to_json(const Monoid& monoid, const MonoidWord& word) {
    Json m = Json::object();
    if (monoid.kind() == Monoid::Kind::AdditiveNaturals) {
        m["kind"] = "additive-naturals";
    } else {
        m["kind"] = "cyclic";
        m["order"] = monoid.order();
    }
    Json doc = Json::object();
    doc["monoid"] = std::move(m);
    doc["word"] = word.letters;
    return doc.dump();
}

std::string sequence_text(const std::vector<long long>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ',';
        out << xs[i];
    }
    return out.str();
}

std::string triangle_text(const TraceSeries& f) {
    std::ostringstream out;
    for (int d = 0; d <= f.truncation_degree(); ++d) {
        std::string line;
        for (const auto& [exps, coeff] : f.terms()) {
            if (monomial_degree(exps) != d) continue;
            if (!line.empty()) line += ',';
            line += std::to_string(coeff);
        }
        if (d) out << '\n';
        out << line;
    }
    return out.str();
}

}  // namespace treeavoid
