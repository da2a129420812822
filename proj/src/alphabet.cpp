#include "treeavoid/alphabet.hpp"

#include <algorithm>
#include <cctype>

namespace treeavoid {

bool valid_letter_name(const std::string& name) {
    if (name.empty()) return false;
    auto head = [](unsigned char c) { return std::isalpha(c) || c == '_'; };
    auto tail = [](unsigned char c) { return std::isalnum(c) || c == '_'; };
    if (!head(static_cast<unsigned char>(name[0]))) return false;
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!tail(static_cast<unsigned char>(name[i]))) return false;
    return true;
}

GradedAlphabet::GradedAlphabet(std::vector<Letter> letters)
    : letters_(std::move(letters)) {
    for (const Letter& l : letters_) {
        if (!valid_letter_name(l.name))
            throw InputError("invalid letter name '" + l.name + "'");
        if (l.arity < 1)
            throw InputError("letter '" + l.name + "' has arity " +
                             std::to_string(l.arity) + "; arities must be >= 1");
    }
    std::sort(letters_.begin(), letters_.end(), LetterLess{});
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        auto [it, inserted] = index_.emplace(letters_[i].name, i);
        (void)it;
        if (!inserted)
            throw InputError("duplicate letter name '" + letters_[i].name + "'");
    }
}

bool GradedAlphabet::has(const std::string& name) const {
    return index_.count(name) != 0;
}

const Letter& GradedAlphabet::letter(const std::string& name) const {
    return letters_[index_of(name)];
}

std::size_t GradedAlphabet::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw InputError("unknown letter '" + name + "'");
    return it->second;
}

int GradedAlphabet::max_arity() const {
    int m = 0;
    for (const Letter& l : letters_) m = std::max(m, l.arity);
    return m;
}

bool GradedAlphabet::has_arity_one() const {
    return std::any_of(letters_.begin(), letters_.end(),
                       [](const Letter& l) { return l.arity == 1; });
}

}  // namespace treeavoid
