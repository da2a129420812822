#include "treeavoid/tree.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace treeavoid {

namespace {
const std::string kLeafKey = "*";
}  // namespace

SyntaxTree SyntaxTree::node(const Letter& letter, std::vector<SyntaxTree> children) {
    if (static_cast<int>(children.size()) != letter.arity)
        throw InputError("letter '" + letter.name + "' has arity " +
                         std::to_string(letter.arity) + " but got " +
                         std::to_string(children.size()) + " children");
    auto n = std::make_shared<Node>();
    n->letter = letter;
    n->arity = 0;
    n->degree = 1;
    n->height = 0;
    n->key = letter.name;
    n->key += '(';
    for (std::size_t i = 0; i < children.size(); ++i) {
        const SyntaxTree& c = children[i];
        n->arity += c.arity();
        n->degree += c.degree();
        n->height = std::max(n->height, c.height());
        if (i > 0) n->key += ',';
        n->key += c.key();
    }
    n->key += ')';
    n->height += 1;
    n->children = std::move(children);
    SyntaxTree t;
    t.node_ = std::move(n);
    return t;
}

SyntaxTree SyntaxTree::corolla(const Letter& letter) {
    return node(letter, std::vector<SyntaxTree>(letter.arity));
}

const Letter& SyntaxTree::root() const {
    if (is_leaf()) throw InputError("a leaf has no root letter");
    return node_->letter;
}

const std::vector<SyntaxTree>& SyntaxTree::children() const {
    if (is_leaf()) throw InputError("a leaf has no children");
    return node_->children;
}

const SyntaxTree& SyntaxTree::child(int i) const {
    const auto& cs = children();
    if (i < 1 || i > static_cast<int>(cs.size()))
        throw InputError("child index " + std::to_string(i) + " out of range 1.." +
                         std::to_string(cs.size()));
    return cs[static_cast<std::size_t>(i - 1)];
}

int SyntaxTree::arity() const { return is_leaf() ? 1 : node_->arity; }
int SyntaxTree::degree() const { return is_leaf() ? 0 : node_->degree; }
int SyntaxTree::height() const { return is_leaf() ? 0 : node_->height; }

int SyntaxTree::degree_of(const Letter& letter) const {
    if (is_leaf()) return 0;
    int d = node_->letter == letter ? 1 : 0;
    for (const SyntaxTree& c : node_->children) d += c.degree_of(letter);
    return d;
}

bool SyntaxTree::is_stringy() const { return height() == degree(); }

const std::string& SyntaxTree::key() const {
    return is_leaf() ? kLeafKey : node_->key;
}

std::string print_tree(const SyntaxTree& t) { return t.key(); }

namespace {

class TreeParser {
public:
    TreeParser(const GradedAlphabet& alphabet, std::string_view text)
        : alphabet_(alphabet), text_(text) {}

    SyntaxTree parse() {
        SyntaxTree t = parse_node();
        skip_space();
        if (pos_ != text_.size())
            throw ParseError("trailing input after tree", pos_);
        return t;
    }

private:
    SyntaxTree parse_node() {
        skip_space();
        if (pos_ >= text_.size())
            throw ParseError("expected '*' or a letter name, found end of input", pos_);
        if (text_[pos_] == '*') {
            ++pos_;
            return SyntaxTree::leaf();
        }
        std::size_t name_pos = pos_;
        std::string name = parse_name();
        if (!alphabet_.has(name))
            throw ParseError("unknown letter '" + name + "'", name_pos);
        const Letter& letter = alphabet_.letter(name);
        expect('(');
        std::vector<SyntaxTree> children;
        children.push_back(parse_node());
        skip_space();
        while (pos_ < text_.size() && text_[pos_] == ',') {
            ++pos_;
            children.push_back(parse_node());
            skip_space();
        }
        expect(')');
        if (static_cast<int>(children.size()) != letter.arity)
            throw ParseError("letter '" + name + "' has arity " +
                                 std::to_string(letter.arity) + " but got " +
                                 std::to_string(children.size()) + " children",
                             name_pos);
        return SyntaxTree::node(letter, std::move(children));
    }

    std::string parse_name() {
        auto head = [](unsigned char c) { return std::isalpha(c) || c == '_'; };
        auto tail = [](unsigned char c) { return std::isalnum(c) || c == '_'; };
        if (pos_ >= text_.size() || !head(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected '*' or a letter name", pos_);
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < text_.size() && tail(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    const GradedAlphabet& alphabet_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SyntaxTree parse_tree(const GradedAlphabet& alphabet, std::string_view text) {
    return TreeParser(alphabet, text).parse();
}

SyntaxTree partial_composition(const SyntaxTree& t, int i, const SyntaxTree& s) {
    if (i < 1 || i > t.arity())
        throw InputError("leaf index " + std::to_string(i) + " out of range 1.." +
                         std::to_string(t.arity()));
    if (t.is_leaf()) return s;  // i == 1
    std::vector<SyntaxTree> children = t.children();
    for (SyntaxTree& c : children) {
        if (i <= c.arity()) {
            c = partial_composition(c, i, s);
            return SyntaxTree::node(t.root(), std::move(children));
        }
        i -= c.arity();
    }
    throw std::logic_error("leaf index not located");  // unreachable
}

SyntaxTree full_composition(const SyntaxTree& t, const std::vector<SyntaxTree>& operands) {
    if (static_cast<int>(operands.size()) != t.arity())
        throw InputError("full composition needs " + std::to_string(t.arity()) +
                         " operands but got " + std::to_string(operands.size()));
    // Grafting right-to-left keeps the leaf indices of the remaining operands
    // stable.
    SyntaxTree result = t;
    for (int i = static_cast<int>(operands.size()); i >= 1; --i)
        result = partial_composition(result, i, operands[static_cast<std::size_t>(i - 1)]);
    return result;
}

bool is_prefix(const SyntaxTree& s, const SyntaxTree& t) {
    if (s.is_leaf()) return true;
    if (t.is_leaf()) return false;
    if (s.root() != t.root()) return false;
    for (int i = 1; i <= s.root().arity; ++i)
        if (!is_prefix(s.child(i), t.child(i))) return false;
    return true;
}

bool is_factor(const SyntaxTree& s, const SyntaxTree& t) {
    if (is_prefix(s, t)) return true;
    if (t.is_leaf()) return false;
    return std::any_of(t.children().begin(), t.children().end(),
                       [&s](const SyntaxTree& c) { return is_factor(s, c); });
}

bool is_suffix(const SyntaxTree& s, const SyntaxTree& t) {
    if (s == t) return true;
    if (t.is_leaf()) return false;
    return std::any_of(t.children().begin(), t.children().end(),
                       [&s](const SyntaxTree& c) { return is_suffix(s, c); });
}

std::vector<SyntaxTree> prefixes(const SyntaxTree& t) {
    if (t.is_leaf()) return {SyntaxTree::leaf()};
    // Every prefix is either the leaf or the root with a choice of prefix in
    // each child; distinct choices give distinct trees.
    std::vector<std::vector<SyntaxTree>> per_child;
    per_child.reserve(t.children().size());
    for (const SyntaxTree& c : t.children()) per_child.push_back(prefixes(c));
    std::vector<SyntaxTree> out{SyntaxTree::leaf()};
    std::vector<std::size_t> pick(per_child.size(), 0);
    for (;;) {
        std::vector<SyntaxTree> children;
        children.reserve(pick.size());
        for (std::size_t i = 0; i < pick.size(); ++i)
            children.push_back(per_child[i][pick[i]]);
        out.push_back(SyntaxTree::node(t.root(), std::move(children)));
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == per_child[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    std::sort(out.begin(), out.end(), TreeLess{});
    return out;
}

std::vector<SyntaxTree> suffixes(const SyntaxTree& t) {
    std::set<SyntaxTree, TreeLess> seen;
    auto walk = [&seen](auto&& self, const SyntaxTree& u) -> void {
        if (!seen.insert(u).second) return;
        if (u.is_leaf()) return;
        for (const SyntaxTree& c : u.children()) self(self, c);
    };
    walk(walk, t);
    return std::vector<SyntaxTree>(seen.begin(), seen.end());
}

}  // namespace treeavoid
