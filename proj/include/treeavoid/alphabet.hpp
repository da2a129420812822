#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "treeavoid/error.hpp"

namespace treeavoid {

// A generating letter with a fixed arity >= 1.
struct Letter {
    std::string name;
    int arity = 0;

    friend bool operator==(const Letter&, const Letter&) = default;
};

// Canonical letter order: by (arity, name).  All printed output, exponent
// vectors and operand lists follow this order.
struct LetterLess {
    bool operator()(const Letter& x, const Letter& y) const {
        if (x.arity != y.arity) return x.arity < y.arity;
        return x.name < y.name;
    }
};

// Letter names follow [A-Za-z_][A-Za-z0-9_]*.
bool valid_letter_name(const std::string& name);

// A finite graded alphabet.  Letters are stored in canonical order; names are
// unique and arities are >= 1.
class GradedAlphabet {
public:
    GradedAlphabet() = default;
    explicit GradedAlphabet(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    bool has(const std::string& name) const;
    const Letter& letter(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;
    const Letter& at(std::size_t index) const { return letters_.at(index); }

    int max_arity() const;
    bool has_arity_one() const;

    friend bool operator==(const GradedAlphabet& x, const GradedAlphabet& y) {
        return x.letters_ == y.letters_;
    }

private:
    std::vector<Letter> letters_;
    std::map<std::string, std::size_t> index_;
};

}  // namespace treeavoid
