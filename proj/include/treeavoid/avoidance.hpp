#pragma once

#include <string>
#include <vector>

#include "treeavoid/pattern.hpp"

namespace treeavoid {

// A length-k word of pattern sets, one slot per child position of an arity-k
// letter.
struct ConsistentWord {
    std::vector<PatternSet> slots;

    std::string key() const;

    friend bool operator==(const ConsistentWord& x, const ConsistentWord& y) {
        return x.slots == y.slots;
    }
};

// The word of k empty slots.
ConsistentWord empty_word(int k);

// Slotwise union; the lengths must agree.
ConsistentWord word_sum(const ConsistentWord& x, const ConsistentWord& y);

// Consistency of `word` with the root-restricted pattern set `Pa`: every
// member s of Pa must have a position i whose child s(i) is internal and lies
// in slot i.  Preconditions: all members of Pa share the root letter `a`, and
// the word length equals a's arity.
bool is_consistent(const ConsistentWord& word, const PatternSet& Pa, const Letter& a);

// Admissibility of a tree t for (a, word): t's root is `a` and child i of t
// prefix-avoids slot i for every i.
bool is_admissible(const SyntaxTree& t, const Letter& a, const ConsistentWord& word);

// All minimal Pa-consistent words, deduplicated, sorted by key.  Minimal means
// removing any single tree from any slot breaks consistency.  Empty Pa yields
// the all-empty word; a corolla in Pa yields no words at all.
std::vector<ConsistentWord> minimal_consistent_words(const PatternSet& Pa, const Letter& a);

}  // namespace treeavoid
