#include "treeavoid/avoidance.hpp"

#include <algorithm>
#include <map>

namespace treeavoid {

std::string ConsistentWord::key() const {
    std::string k = "(";
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i > 0) k += '|';
        k += slots[i].key();
    }
    k += ')';
    return k;
}

ConsistentWord empty_word(int k) {
    if (k < 1) throw InputError("word length must be >= 1");
    return ConsistentWord{std::vector<PatternSet>(static_cast<std::size_t>(k))};
}

ConsistentWord word_sum(const ConsistentWord& x, const ConsistentWord& y) {
    if (x.slots.size() != y.slots.size())
        throw InputError("word lengths differ: " + std::to_string(x.slots.size()) +
                         " vs " + std::to_string(y.slots.size()));
    ConsistentWord out = x;
    for (std::size_t i = 0; i < out.slots.size(); ++i)
        out.slots[i] = out.slots[i].union_with(y.slots[i]);
    return out;
}

namespace {

void check_roots(const PatternSet& Pa, const Letter& a) {
    for (const SyntaxTree& s : Pa.trees())
        if (s.root() != a)
            throw InputError("pattern '" + s.key() + "' does not have root letter '" +
                             a.name + "'");
}

}  // namespace

bool is_consistent(const ConsistentWord& word, const PatternSet& Pa, const Letter& a) {
    check_roots(Pa, a);
    if (static_cast<int>(word.slots.size()) != a.arity)
        throw InputError("word length " + std::to_string(word.slots.size()) +
                         " does not match arity " + std::to_string(a.arity) +
                         " of letter '" + a.name + "'");
    for (const SyntaxTree& s : Pa.trees()) {
        bool hit = false;
        for (int i = 1; i <= a.arity && !hit; ++i)
            hit = !s.child(i).is_leaf() &&
                  word.slots[static_cast<std::size_t>(i - 1)].contains(s.child(i));
        if (!hit) return false;
    }
    return true;
}

bool is_admissible(const SyntaxTree& t, const Letter& a, const ConsistentWord& word) {
    if (static_cast<int>(word.slots.size()) != a.arity)
        throw InputError("word length " + std::to_string(word.slots.size()) +
                         " does not match arity " + std::to_string(a.arity) +
                         " of letter '" + a.name + "'");
    if (t.is_leaf() || t.root() != a) return false;
    for (int i = 1; i <= a.arity; ++i)
        if (!prefix_avoids(t.child(i), word.slots[static_cast<std::size_t>(i - 1)]))
            return false;
    return true;
}

std::vector<ConsistentWord> minimal_consistent_words(const PatternSet& Pa, const Letter& a) {
    check_roots(Pa, a);
    const int k = a.arity;
    // One fold step per pattern: place one internal child of the pattern into
    // the matching slot.  A corolla has no internal child, so its presence
    // leaves no candidates.  Every minimal consistent word arises this way.
    std::map<std::string, ConsistentWord> candidates;
    candidates.emplace(empty_word(k).key(), empty_word(k));
    for (const SyntaxTree& s : Pa.trees()) {
        std::map<std::string, ConsistentWord> next;
        for (const auto& [unused, w] : candidates) {
            (void)unused;
            for (int i = 1; i <= k; ++i) {
                if (s.child(i).is_leaf()) continue;
                ConsistentWord w2 = w;
                w2.slots[static_cast<std::size_t>(i - 1)] =
                    w2.slots[static_cast<std::size_t>(i - 1)].inserted(s.child(i));
                next.emplace(w2.key(), std::move(w2));
            }
        }
        candidates = std::move(next);
    }
    std::vector<ConsistentWord> out;
    for (const auto& [unused, w] : candidates) {
        (void)unused;
        if (!is_consistent(w, Pa, a)) continue;
        bool minimal = true;
        for (std::size_t i = 0; i < w.slots.size() && minimal; ++i) {
            for (const SyntaxTree& x : w.slots[i].trees()) {
                ConsistentWord w2 = w;
                w2.slots[i] = w2.slots[i].removed(x);
                if (is_consistent(w2, Pa, a)) {
                    minimal = false;
                    break;
                }
            }
        }
        if (minimal) out.push_back(w);
    }
    return out;  // map iteration: already unique and key-sorted
}

}  // namespace treeavoid
