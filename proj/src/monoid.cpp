#include "treeavoid/monoid.hpp"

#include <algorithm>
#include <set>

namespace treeavoid {

Monoid Monoid::additive_naturals() { return Monoid{}; }

Monoid Monoid::cyclic(int order) {
    if (order < 1) throw InputError("cyclic monoid order must be >= 1");
    Monoid m;
    m.kind_ = Kind::Cyclic;
    m.order_ = order;
    return m;
}

int Monoid::order() const {
    if (kind_ != Kind::Cyclic)
        throw InputError("the additive naturals have no finite order");
    return order_;
}

bool Monoid::valid_element(int x) const {
    if (x < 0) return false;
    return kind_ == Kind::AdditiveNaturals || x < order_;
}

int Monoid::product(int x, int y) const {
    if (!valid_element(x) || !valid_element(y))
        throw InputError("invalid monoid element");
    const int z = x + y;
    return kind_ == Kind::Cyclic ? z % order_ : z;
}

std::string MonoidWord::text() const {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(letters[i]);
    }
    return out;
}

MonoidWord unit_word() { return MonoidWord{{0}}; }

MonoidWord word_composition(const Monoid& monoid, const MonoidWord& u, int i,
                            const MonoidWord& v) {
    if (u.letters.empty() || v.letters.empty())
        throw InputError("monoid words must be nonempty");
    for (int x : u.letters)
        if (!monoid.valid_element(x))
            throw InputError("word letter " + std::to_string(x) +
                             " is not a monoid element");
    for (int x : v.letters)
        if (!monoid.valid_element(x))
            throw InputError("word letter " + std::to_string(x) +
                             " is not a monoid element");
    if (i < 1 || i > u.arity())
        throw InputError("composition position " + std::to_string(i) +
                         " out of range 1.." + std::to_string(u.arity()));
    MonoidWord out;
    out.letters.reserve(u.letters.size() + v.letters.size() - 1);
    for (int j = 0; j < i - 1; ++j) out.letters.push_back(u.letters[static_cast<std::size_t>(j)]);
    const int ui = u.letters[static_cast<std::size_t>(i - 1)];
    for (int x : v.letters) out.letters.push_back(monoid.product(ui, x));
    for (int j = i; j < u.arity(); ++j)
        out.letters.push_back(u.letters[static_cast<std::size_t>(j)]);
    return out;
}

std::vector<std::vector<MonoidWord>> suboperad_elements(
    const Monoid& monoid, const std::vector<MonoidWord>& generators,
    int max_arity) {
    if (max_arity < 1) throw InputError("max arity must be >= 1");
    for (const MonoidWord& g : generators) {
        if (g.letters.empty()) throw InputError("monoid words must be nonempty");
        for (int x : g.letters)
            if (!monoid.valid_element(x))
                throw InputError("generator letter " + std::to_string(x) +
                                 " is not a monoid element");
        if (g.arity() == 1 && g != unit_word())
            throw InputError("arity-1 generators other than the unit are not supported");
    }
    // sets[n-1] holds the arity-n elements found so far; arity 1 stays {unit}
    // because composing with the unit never leaves it.
    std::vector<std::set<MonoidWord>> sets(static_cast<std::size_t>(max_arity));
    sets[0].insert(unit_word());
    for (const MonoidWord& g : generators)
        if (g.arity() <= max_arity)
            sets[static_cast<std::size_t>(g.arity() - 1)].insert(g);
    for (bool changed = true; changed;) {
        changed = false;
        for (int n = 1; n <= max_arity; ++n)
            for (int m = 1; m <= max_arity - n + 1; ++m) {
                auto& target = sets[static_cast<std::size_t>(n + m - 2)];
                for (const MonoidWord& u : sets[static_cast<std::size_t>(n - 1)])
                    for (const MonoidWord& v : sets[static_cast<std::size_t>(m - 1)])
                        for (int i = 1; i <= n; ++i)
                            changed |= target.insert(word_composition(monoid, u, i, v))
                                           .second;
            }
    }
    std::vector<std::vector<MonoidWord>> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.emplace_back(s.begin(), s.end());
    return out;
}

MonoidWord evaluate_tree(const Monoid& monoid, const SyntaxTree& t,
                         const std::map<std::string, MonoidWord>& assignment) {
    if (t.is_leaf()) return unit_word();
    auto it = assignment.find(t.root().name);
    if (it == assignment.end())
        throw InputError("no word assigned to letter '" + t.root().name + "'");
    if (it->second.arity() != t.root().arity)
        throw InputError("word assigned to letter '" + t.root().name +
                         "' has arity " + std::to_string(it->second.arity()) +
                         "; expected " + std::to_string(t.root().arity));
    // Right-to-left grafting keeps the remaining positions stable.
    MonoidWord out = it->second;
    for (int i = t.root().arity; i >= 1; --i)
        out = word_composition(monoid, out, i,
                               evaluate_tree(monoid, t.child(i), assignment));
    return out;
}

}  // namespace treeavoid
