#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "treeavoid/alphabet.hpp"
#include "treeavoid/error.hpp"

namespace treeavoid {

// An immutable planar rooted tree: either a leaf, or an internal node carrying
// a letter with exactly arity-many ordered children.  Copies share structure;
// size/height statistics and the canonical print key are cached per node.
class SyntaxTree {
public:
    SyntaxTree() = default;  // a leaf

    static SyntaxTree leaf() { return SyntaxTree{}; }
    static SyntaxTree node(const Letter& letter, std::vector<SyntaxTree> children);
    // The tree with a single internal node labelled by `letter`.
    static SyntaxTree corolla(const Letter& letter);

    bool is_leaf() const { return node_ == nullptr; }
    const Letter& root() const;
    const std::vector<SyntaxTree>& children() const;
    // 1-based child access.
    const SyntaxTree& child(int i) const;

    // Number of leaves; >= 1.
    int arity() const;
    // Number of internal nodes.
    int degree() const;
    // Length of a longest chain of internal nodes from the root; 0 for a leaf.
    int height() const;
    // Number of internal nodes labelled by `letter`.
    int degree_of(const Letter& letter) const;
    // True iff height equals degree, i.e. every internal node has at most one
    // internal child.
    bool is_stringy() const;

    // Canonical textual form; doubles as a total-order key (equal strings iff
    // equal trees, and bytewise comparison is the canonical tree order).
    const std::string& key() const;

    friend bool operator==(const SyntaxTree& x, const SyntaxTree& y) {
        return x.key() == y.key();
    }
    friend bool operator!=(const SyntaxTree& x, const SyntaxTree& y) {
        return !(x == y);
    }

private:
    struct Node {
        Letter letter;
        std::vector<SyntaxTree> children;
        int arity;
        int degree;
        int height;
        std::string key;
    };

    std::shared_ptr<const Node> node_;
};

// Canonical total order on trees: bytewise comparison of canonical keys.
struct TreeLess {
    bool operator()(const SyntaxTree& x, const SyntaxTree& y) const {
        return x.key() < y.key();
    }
};

// Renders a tree in canonical form: '*' for a leaf, name(child,...,child) for
// an internal node, no whitespace.
std::string print_tree(const SyntaxTree& t);

// Parses the canonical form (whitespace between tokens allowed).  Child counts
// must match letter arities declared in `alphabet`.
SyntaxTree parse_tree(const GradedAlphabet& alphabet, std::string_view text);

// Partial composition t o_i s: grafts s onto the i-th leaf of t (1-based,
// left-to-right).
SyntaxTree partial_composition(const SyntaxTree& t, int i, const SyntaxTree& s);

// Full composition t o [s_1, ..., s_n]: grafts s_i onto the i-th leaf of t for
// all i at once; n must equal arity(t).
SyntaxTree full_composition(const SyntaxTree& t, const std::vector<SyntaxTree>& operands);

// Prefix order: s is obtained from t by cutting away subtrees, keeping the
// root.  A leaf is a prefix of everything.
bool is_prefix(const SyntaxTree& s, const SyntaxTree& t);

// Factor order: some internal-node position of t, overlaid with s's root,
// extends to a prefix embedding of s.  A leaf is a factor of everything.
bool is_factor(const SyntaxTree& s, const SyntaxTree& t);

// Suffix order: s equals a subtree of t (rooted at any position).
bool is_suffix(const SyntaxTree& s, const SyntaxTree& t);

// All distinct prefixes of t, in canonical order (includes the leaf and t).
std::vector<SyntaxTree> prefixes(const SyntaxTree& t);

// All distinct suffixes of t, in canonical order, i.e. its distinct subtrees
// (includes the leaf and t).
std::vector<SyntaxTree> suffixes(const SyntaxTree& t);

}  // namespace treeavoid
