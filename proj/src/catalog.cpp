#include "treeavoid/catalog.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "treeavoid/error.hpp"
#include "treeavoid/oracle.hpp"

namespace treeavoid {

namespace {

std::pair<SyntaxTree, SyntaxTree> rel(const GradedAlphabet& G, const std::string& lhs,
                                      const std::string& rhs) {
    return {parse_tree(G, lhs), parse_tree(G, rhs)};
}

RewriteRule rule(const GradedAlphabet& G, const std::string& lhs, const std::string& rhs) {
    return make_rule(parse_tree(G, lhs), parse_tree(G, rhs));
}

IdentityTerm it(long long scalar, int t_exp, int q_exp, std::map<std::string, int> letter_exps,
                int h_power) {
    return IdentityTerm{scalar, t_exp, q_exp, std::move(letter_exps), h_power};
}

void add_row(std::vector<RowTerm>& out, std::map<std::string, int> exps, long long coeff) {
    out.push_back(RowTerm{std::move(exps), coeff});
}

// Appends the arity-n coefficients c_0..c_{n-1} of x^{n-1}, x^{n-2}y, ..., y^{n-1}.
void triangle_row(std::vector<RowTerm>& out, const std::string& x, const std::string& y,
                  int arity, const std::vector<long long>& coeffs) {
    int d = arity - 1;
    for (int i = 0; i <= d; ++i) {
        std::map<std::string, int> e;
        if (d - i > 0) e[x] = d - i;
        if (i > 0) e[y] = i;
        add_row(out, std::move(e), coeffs.at(static_cast<std::size_t>(i)));
    }
}

// Terms of H - t*prod_k (q q_k H + 1) == 0: one -1 term per nonempty subset
// of the letters, plus +H and -t.
std::vector<IdentityTerm> product_identity_terms(const std::vector<std::string>& names) {
    std::vector<IdentityTerm> terms;
    terms.push_back(it(1, 0, 0, {}, 1));
    terms.push_back(it(-1, 1, 0, {}, 0));
    int n = static_cast<int>(names.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::map<std::string, int> exps;
        int size = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                exps[names[static_cast<std::size_t>(i)]] = 1;
                ++size;
            }
        terms.push_back(it(-1, 1, size, std::move(exps), size));
    }
    return terms;
}

MonoidWord w(std::vector<int> xs) { return MonoidWord{std::move(xs)}; }

CatalogEntry make_2as() {
    GradedAlphabet G({{"a", 2}, {"b", 2}});
    CatalogEntry e("2as", "two binary letters, each associative", G);
    e.presentation = make_presentation(G, {
                                              rel(G, "a(a(*,*),*)", "a(*,a(*,*))"),
                                              rel(G, "b(b(*,*),*)", "b(*,b(*,*))"),
                                          });
    e.orientation.rules = {
        rule(G, "a(a(*,*),*)", "a(*,a(*,*))"),
        rule(G, "b(b(*,*),*)", "b(*,b(*,*))"),
    };
    e.patterns = lefts(e.orientation);
    e.expected_dims = {1, 2, 6, 22, 90, 394, 1806, 8558};
    e.rows_max_arity = 6;
    triangle_row(e.expected_rows, "a", "b", 2, {1, 1});
    triangle_row(e.expected_rows, "a", "b", 3, {1, 4, 1});
    triangle_row(e.expected_rows, "a", "b", 4, {1, 10, 10, 1});
    triangle_row(e.expected_rows, "a", "b", 5, {1, 20, 48, 20, 1});
    triangle_row(e.expected_rows, "a", "b", 6, {1, 35, 161, 161, 35, 1});
    e.identities = {AlgebraicIdentity{
        "rational-form",
        {
            it(1, 0, 0, {}, 1),
            it(-1, 1, 0, {}, 0),
            it(-1, 1, 1, {{"a", 1}}, 1),
            it(-1, 1, 1, {{"b", 1}}, 1),
            it(-1, 1, 2, {{"a", 1}, {"b", 1}}, 2),
            it(-1, 0, 2, {{"a", 1}, {"b", 1}}, 3),
        },
    }};
    return e;
}

CatalogEntry make_dipt() {
    GradedAlphabet G({{"a", 2}, {"b", 2}});
    CatalogEntry e("dipt", "two binary letters with one mixed-letter relation", G);
    e.presentation = make_presentation(G, {
                                              rel(G, "a(a(*,*),*)", "a(*,a(*,*))"),
                                              rel(G, "b(b(*,*),*)", "b(*,a(*,*))"),
                                          });
    e.orientation.rules = {
        rule(G, "a(a(*,*),*)", "a(*,a(*,*))"),
        rule(G, "b(*,a(*,*))", "b(b(*,*),*)"),
    };
    e.patterns = lefts(e.orientation);
    e.expected_dims = {1, 2, 6, 22, 90, 394, 1806, 8558};
    e.rows_max_arity = 6;
    triangle_row(e.expected_rows, "a", "b", 2, {1, 1});
    triangle_row(e.expected_rows, "a", "b", 3, {1, 3, 2});
    triangle_row(e.expected_rows, "a", "b", 4, {1, 6, 10, 5});
    triangle_row(e.expected_rows, "a", "b", 5, {1, 10, 30, 35, 14});
    triangle_row(e.expected_rows, "a", "b", 6, {1, 15, 70, 140, 126, 42});
    e.identities = {AlgebraicIdentity{
        "quadratic",
        {
            it(1, 0, 0, {}, 1),
            it(-1, 1, 0, {}, 0),
            it(-1, 1, 1, {{"a", 1}}, 1),
            it(-1, 0, 1, {{"b", 1}}, 2),
        },
    }};
    return e;
}

CatalogEntry make_dup() {
    GradedAlphabet G({{"a", 2}, {"b", 2}});
    CatalogEntry e("dup", "two binary letters; Catalan normal forms with Narayana rows", G);
    e.presentation = make_presentation(G, {
                                              rel(G, "a(a(*,*),*)", "a(*,a(*,*))"),
                                              rel(G, "b(a(*,*),*)", "a(*,b(*,*))"),
                                              rel(G, "b(b(*,*),*)", "b(*,b(*,*))"),
                                          });
    e.orientation.rules = {
        rule(G, "a(a(*,*),*)", "a(*,a(*,*))"),
        rule(G, "b(a(*,*),*)", "a(*,b(*,*))"),
        rule(G, "b(b(*,*),*)", "b(*,b(*,*))"),
    };
    e.patterns = lefts(e.orientation);
    e.expected_dims = {1, 2, 5, 14, 42, 132, 429, 1430};
    e.rows_max_arity = 6;
    triangle_row(e.expected_rows, "a", "b", 2, {1, 1});
    triangle_row(e.expected_rows, "a", "b", 3, {1, 3, 1});
    triangle_row(e.expected_rows, "a", "b", 4, {1, 6, 6, 1});
    triangle_row(e.expected_rows, "a", "b", 5, {1, 10, 20, 10, 1});
    triangle_row(e.expected_rows, "a", "b", 6, {1, 15, 50, 50, 15, 1});
    e.identities = {AlgebraicIdentity{"product-form", product_identity_terms({"a", "b"})}};
    return e;
}

CatalogEntry make_nct() {
    GradedAlphabet G({{"a", 2}, {"b", 2}});
    CatalogEntry e("nct", "two binary letters, one exchange relation; ternary-tree dimensions",
                   G);
    e.presentation = make_presentation(G, {
                                              rel(G, "b(a(*,*),*)", "a(b(*,*),*)"),
                                          });
    e.orientation.rules = {
        rule(G, "b(a(*,*),*)", "a(b(*,*),*)"),
    };
    e.patterns = lefts(e.orientation);
    e.expected_dims = {1, 2, 7, 30, 143, 728, 3876, 21318};
    e.rows_max_arity = 6;
    triangle_row(e.expected_rows, "a", "b", 2, {1, 1});
    triangle_row(e.expected_rows, "a", "b", 3, {2, 3, 2});
    triangle_row(e.expected_rows, "a", "b", 4, {5, 10, 10, 5});
    triangle_row(e.expected_rows, "a", "b", 5, {14, 35, 45, 35, 14});
    triangle_row(e.expected_rows, "a", "b", 6, {42, 126, 196, 196, 126, 42});
    e.identities = {AlgebraicIdentity{
        "cubic",
        {
            it(1, 0, 0, {}, 1),
            it(-1, 1, 0, {}, 0),
            it(-1, 0, 1, {{"a", 1}}, 2),
            it(-1, 0, 1, {{"b", 1}}, 2),
            it(1, 0, 2, {{"a", 1}, {"b", 1}}, 3),
        },
    }};
    return e;
}

// Shared skeleton for the fcat_m family: letters g00..g0m, relations
// g0k3 o_1 g0k1 == g0k1 o_2 g0k2 for k1 + k2 = k3 <= m.
CatalogEntry make_fcat(const std::string& id, const std::string& summary, int m,
                       bool special_orientation, std::vector<long long> dims) {
    std::vector<Letter> letters;
    std::vector<std::string> names;
    for (int k = 0; k <= m; ++k) {
        names.push_back("g0" + std::to_string(k));
        letters.push_back({names.back(), 2});
    }
    GradedAlphabet G(letters);
    CatalogEntry e(id, summary, G);
    std::vector<std::pair<SyntaxTree, SyntaxTree>> rels;
    for (int k3 = 0; k3 <= m; ++k3)
        for (int k1 = 0; k1 <= k3; ++k1) {
            const std::string& n3 = names[static_cast<std::size_t>(k3)];
            const std::string& n1 = names[static_cast<std::size_t>(k1)];
            const std::string& n2 = names[static_cast<std::size_t>(k3 - k1)];
            rels.push_back(rel(G, n3 + "(" + n1 + "(*,*),*)", n1 + "(*," + n2 + "(*,*))"));
        }
    e.presentation = make_presentation(G, rels);
    if (special_orientation) {
        e.orientation.rules = {
            rule(G, "g00(g00(*,*),*)", "g00(*,g00(*,*))"),
            rule(G, "g01(g00(*,*),*)", "g00(*,g01(*,*))"),
            rule(G, "g01(*,g00(*,*))", "g01(g01(*,*),*)"),
        };
    } else {
        for (const auto& [lhs, rhs] : rels) e.orientation.rules.push_back(make_rule(lhs, rhs));
    }
    e.patterns = lefts(e.orientation);
    e.expected_dims = std::move(dims);
    MonoidRealization real{Monoid::additive_naturals(), {}};
    for (int k = 0; k <= m; ++k) real.assignment[names[static_cast<std::size_t>(k)]] = w({0, k});
    e.realization = std::move(real);
    return e;
}

CatalogEntry make_fcat_1() {
    CatalogEntry e = make_fcat("fcat_1",
                               "two binary letters with composition-indexed relations, "
                               "level-respecting orientation",
                               1, true, {1, 2, 5, 14, 42, 132, 429, 1430});
    e.rows_max_arity = 6;
    triangle_row(e.expected_rows, "g00", "g01", 2, {1, 1});
    triangle_row(e.expected_rows, "g00", "g01", 3, {1, 2, 2});
    triangle_row(e.expected_rows, "g00", "g01", 4, {1, 3, 5, 5});
    triangle_row(e.expected_rows, "g00", "g01", 5, {1, 4, 9, 14, 14});
    triangle_row(e.expected_rows, "g00", "g01", 6, {1, 5, 14, 28, 42, 42});
    e.identities = {AlgebraicIdentity{
        "squared-closed-form",
        {
            it(1, 0, 0, {}, 1),
            it(1, 0, 1, {{"g00", 1}}, 2),
            it(-1, 1, 0, {}, 0),
            it(-2, 1, 1, {{"g00", 1}}, 1),
            it(-1, 1, 2, {{"g00", 2}}, 2),
            it(-1, 0, 1, {{"g01", 1}}, 2),
        },
    }};
    return e;
}

CatalogEntry make_fcat_1_lr() {
    CatalogEntry e = make_fcat("fcat_1_lr",
                               "two binary letters with composition-indexed relations, "
                               "all rules left-to-right",
                               1, false, {1, 2, 5, 14, 42, 132, 429, 1430});
    e.rows_max_arity = 6;
    triangle_row(e.expected_rows, "g00", "g01", 2, {1, 1});
    triangle_row(e.expected_rows, "g00", "g01", 3, {1, 3, 1});
    triangle_row(e.expected_rows, "g00", "g01", 4, {1, 6, 6, 1});
    triangle_row(e.expected_rows, "g00", "g01", 5, {1, 10, 20, 10, 1});
    triangle_row(e.expected_rows, "g00", "g01", 6, {1, 15, 50, 50, 15, 1});
    e.identities = {AlgebraicIdentity{"product-form", product_identity_terms({"g00", "g01"})}};
    return e;
}

CatalogEntry make_fcat_2() {
    CatalogEntry e = make_fcat("fcat_2", "three binary letters with composition-indexed relations",
                               2, false, {1, 3, 12, 55, 273, 1428, 7752, 43263});
    e.identities = {
        AlgebraicIdentity{"product-form", product_identity_terms({"g00", "g01", "g02"})}};
    return e;
}

CatalogEntry make_fcat_3() {
    CatalogEntry e = make_fcat("fcat_3", "four binary letters with composition-indexed relations",
                               3, false, {1, 4, 22, 140, 969, 7084, 53820, 420732});
    e.identities = {
        AlgebraicIdentity{"product-form", product_identity_terms({"g00", "g01", "g02", "g03"})}};
    return e;
}

CatalogEntry make_schr() {
    GradedAlphabet G({{"g00", 2}, {"g01", 2}, {"g10", 2}});
    CatalogEntry e("schr", "three binary letters; super-Catalan dimensions", G);
    e.presentation = make_presentation(G, {
                                              rel(G, "g00(g00(*,*),*)", "g00(*,g00(*,*))"),
                                              rel(G, "g01(g10(*,*),*)", "g10(*,g01(*,*))"),
                                              rel(G, "g00(g01(*,*),*)", "g00(*,g10(*,*))"),
                                              rel(G, "g01(g00(*,*),*)", "g00(*,g01(*,*))"),
                                              rel(G, "g00(g10(*,*),*)", "g10(*,g00(*,*))"),
                                              rel(G, "g01(g01(*,*),*)", "g01(*,g00(*,*))"),
                                              rel(G, "g10(g00(*,*),*)", "g10(*,g10(*,*))"),
                                          });
    e.orientation.rules = {
        rule(G, "g00(g00(*,*),*)", "g00(*,g00(*,*))"),
        rule(G, "g01(g10(*,*),*)", "g10(*,g01(*,*))"),
        rule(G, "g00(g01(*,*),*)", "g00(*,g10(*,*))"),
        rule(G, "g01(g00(*,*),*)", "g00(*,g01(*,*))"),
        rule(G, "g00(g10(*,*),*)", "g10(*,g00(*,*))"),
        rule(G, "g01(g01(*,*),*)", "g01(*,g00(*,*))"),
        rule(G, "g10(*,g10(*,*))", "g10(g00(*,*),*)"),
    };
    e.patterns = lefts(e.orientation);
    e.expected_dims = {1, 3, 11, 45, 197, 903, 4279, 20793};
    e.rows_max_arity = 4;
    add_row(e.expected_rows, {{"g00", 1}}, 1);
    add_row(e.expected_rows, {{"g01", 1}}, 1);
    add_row(e.expected_rows, {{"g10", 1}}, 1);
    add_row(e.expected_rows, {{"g00", 2}}, 1);
    add_row(e.expected_rows, {{"g00", 1}, {"g01", 1}}, 2);
    add_row(e.expected_rows, {{"g00", 1}, {"g10", 1}}, 3);
    add_row(e.expected_rows, {{"g01", 2}}, 1);
    add_row(e.expected_rows, {{"g01", 1}, {"g10", 1}}, 3);
    add_row(e.expected_rows, {{"g10", 2}}, 1);
    add_row(e.expected_rows, {{"g00", 3}}, 1);
    add_row(e.expected_rows, {{"g00", 2}, {"g01", 1}}, 3);
    add_row(e.expected_rows, {{"g00", 2}, {"g10", 1}}, 6);
    add_row(e.expected_rows, {{"g00", 1}, {"g01", 2}}, 3);
    add_row(e.expected_rows, {{"g00", 1}, {"g01", 1}, {"g10", 1}}, 12);
    add_row(e.expected_rows, {{"g00", 1}, {"g10", 2}}, 6);
    add_row(e.expected_rows, {{"g01", 3}}, 1);
    add_row(e.expected_rows, {{"g01", 2}, {"g10", 1}}, 6);
    add_row(e.expected_rows, {{"g01", 1}, {"g10", 2}}, 6);
    add_row(e.expected_rows, {{"g10", 3}}, 1);
    e.identities = {AlgebraicIdentity{
        "quadratic",
        {
            it(1, 1, 0, {}, 0),
            it(-1, 0, 0, {}, 1),
            it(1, 1, 1, {{"g00", 1}}, 1),
            it(1, 1, 1, {{"g01", 1}}, 1),
            it(1, 1, 1, {{"g10", 1}}, 1),
            it(1, 1, 2, {{"g00", 1}, {"g10", 1}}, 2),
            it(1, 1, 2, {{"g01", 1}, {"g10", 1}}, 2),
        },
    }};
    e.realization = MonoidRealization{
        Monoid::additive_naturals(),
        {{"g00", w({0, 0})}, {"g01", w({0, 1})}, {"g10", w({1, 0})}},
    };
    return e;
}

CatalogEntry make_motz() {
    GradedAlphabet G({{"g00", 2}, {"g010", 3}});
    CatalogEntry e("motz", "a binary and a ternary letter; Motzkin dimensions", G);
    e.presentation =
        make_presentation(G, {
                                 rel(G, "g00(g00(*,*),*)", "g00(*,g00(*,*))"),
                                 rel(G, "g010(g00(*,*),*,*)", "g00(*,g010(*,*,*))"),
                                 rel(G, "g00(g010(*,*,*),*)", "g010(*,*,g00(*,*))"),
                                 rel(G, "g010(g010(*,*,*),*,*)", "g010(*,*,g010(*,*,*))"),
                             });
    e.orientation.rules = {
        rule(G, "g00(g00(*,*),*)", "g00(*,g00(*,*))"),
        rule(G, "g010(g00(*,*),*,*)", "g00(*,g010(*,*,*))"),
        rule(G, "g00(g010(*,*,*),*)", "g010(*,*,g00(*,*))"),
        rule(G, "g010(g010(*,*,*),*,*)", "g010(*,*,g010(*,*,*))"),
    };
    e.patterns = lefts(e.orientation);
    e.expected_dims = {1, 1, 2, 4, 9, 21, 51, 127};
    e.rows_max_arity = 7;
    add_row(e.expected_rows, {{"g00", 1}}, 1);
    add_row(e.expected_rows, {{"g00", 2}}, 1);
    add_row(e.expected_rows, {{"g010", 1}}, 1);
    add_row(e.expected_rows, {{"g00", 3}}, 1);
    add_row(e.expected_rows, {{"g00", 1}, {"g010", 1}}, 3);
    add_row(e.expected_rows, {{"g00", 4}}, 1);
    add_row(e.expected_rows, {{"g00", 2}, {"g010", 1}}, 6);
    add_row(e.expected_rows, {{"g010", 2}}, 2);
    add_row(e.expected_rows, {{"g00", 5}}, 1);
    add_row(e.expected_rows, {{"g00", 3}, {"g010", 1}}, 10);
    add_row(e.expected_rows, {{"g00", 1}, {"g010", 2}}, 10);
    add_row(e.expected_rows, {{"g00", 6}}, 1);
    add_row(e.expected_rows, {{"g00", 4}, {"g010", 1}}, 15);
    add_row(e.expected_rows, {{"g00", 2}, {"g010", 2}}, 30);
    add_row(e.expected_rows, {{"g010", 3}}, 5);
    e.identities = {AlgebraicIdentity{
        "quadratic",
        {
            it(1, 0, 0, {}, 1),
            it(-1, 1, 0, {}, 0),
            it(-1, 1, 1, {{"g00", 1}}, 1),
            it(-1, 1, 1, {{"g010", 1}}, 2),
        },
    }};
    e.realization = MonoidRealization{
        Monoid::additive_naturals(),
        {{"g00", w({0, 0})}, {"g010", w({0, 1, 0})}},
    };
    return e;
}

CatalogEntry make_da() {
    GradedAlphabet G({{"g00", 2}, {"g01", 2}});
    CatalogEntry e("da", "two binary letters over the order-3 cyclic monoid; "
                         "directed-animal dimensions",
                   G);
    e.presentation =
        make_presentation(G, {
                                 rel(G, "g00(g00(*,*),*)", "g00(*,g00(*,*))"),
                                 rel(G, "g01(g00(*,*),*)", "g00(*,g01(*,*))"),
                                 rel(G, "g01(g01(*,*),*)", "g01(*,g00(*,*))"),
                                 rel(G, "g00(g01(*,g01(*,*)),*)", "g01(*,g01(*,g01(*,*)))"),
                             });
    e.orientation.rules = {
        rule(G, "g00(g00(*,*),*)", "g00(*,g00(*,*))"),
        rule(G, "g01(g00(*,*),*)", "g00(*,g01(*,*))"),
        rule(G, "g01(*,g00(*,*))", "g01(g01(*,*),*)"),
        rule(G, "g01(*,g01(*,g01(*,*)))", "g00(g01(*,g01(*,*)),*)"),
    };
    e.patterns = lefts(e.orientation);
    e.expected_dims = {1, 2, 5, 13, 35, 96, 267, 750};
    e.rows_max_arity = 6;
    triangle_row(e.expected_rows, "g00", "g01", 2, {1, 1});
    triangle_row(e.expected_rows, "g00", "g01", 3, {1, 2, 2});
    triangle_row(e.expected_rows, "g00", "g01", 4, {1, 3, 5, 4});
    triangle_row(e.expected_rows, "g00", "g01", 5, {1, 4, 9, 12, 9});
    triangle_row(e.expected_rows, "g00", "g01", 6, {1, 5, 14, 25, 30, 21});
    e.identities = {AlgebraicIdentity{
        "squared-closed-form",
        {
            // H^0 group
            it(-1, 1, 1, {{"g00", 1}}, 0),
            it(1, 2, 2, {{"g00", 2}}, 0),
            it(1, 2, 2, {{"g00", 1}, {"g01", 1}}, 0),
            it(1, 2, 2, {{"g01", 2}}, 0),
            // H^1 group
            it(1, 0, 1, {{"g00", 1}}, 1),
            it(-3, 1, 2, {{"g00", 2}}, 1),
            it(-2, 1, 2, {{"g00", 1}, {"g01", 1}}, 1),
            it(-1, 1, 2, {{"g01", 2}}, 1),
            it(2, 2, 3, {{"g00", 3}}, 1),
            it(3, 2, 3, {{"g00", 2}, {"g01", 1}}, 1),
            it(3, 2, 3, {{"g00", 1}, {"g01", 2}}, 1),
            it(1, 2, 3, {{"g01", 3}}, 1),
            // H^2 group
            it(1, 0, 2, {{"g00", 2}}, 2),
            it(-2, 1, 3, {{"g00", 3}}, 2),
            it(-2, 1, 3, {{"g00", 2}, {"g01", 1}}, 2),
            it(-2, 1, 3, {{"g00", 1}, {"g01", 2}}, 2),
            it(1, 2, 4, {{"g00", 4}}, 2),
            it(2, 2, 4, {{"g00", 3}, {"g01", 1}}, 2),
            it(3, 2, 4, {{"g00", 2}, {"g01", 2}}, 2),
            it(2, 2, 4, {{"g00", 1}, {"g01", 3}}, 2),
            it(1, 2, 4, {{"g01", 4}}, 2),
        },
    }};
    e.realization = MonoidRealization{
        Monoid::cyclic(3),
        {{"g00", w({0, 0})}, {"g01", w({0, 1})}},
    };
    return e;
}

CatalogEntry make_example_mixed() {
    GradedAlphabet G({{"a", 2}, {"b", 2}, {"c", 3}});
    CatalogEntry e("example_mixed", "mixed-arity avoidance instance with five patterns", G);
    e.patterns = PatternSet{
        parse_tree(G, "a(c(*,*,*),*)"),
        parse_tree(G, "c(a(*,*),*,*)"),
        parse_tree(G, "c(b(*,*),b(*,*),*)"),
        parse_tree(G, "c(b(*,*),*,a(*,*))"),
        parse_tree(G, "c(c(*,*,c(*,*,*)),*,a(*,*))"),
    };
    // Frozen from the exhaustive census at degree 6 (arities 1..7 complete).
    e.expected_dims = {1, 2, 9, 48, 286, 1824, 12178};
    return e;
}

CatalogEntry make_example_chains() {
    GradedAlphabet G({{"a", 1}, {"b", 1}});
    CatalogEntry e("example_chains",
                   "unary alphabet avoiding the chain family a b^j a; hand-encoded system", G);
    SystemVariable root{PatternSet{}, "root"};
    SystemVariable under_a{PatternSet{}, "Q"};
    const Letter& a = G.letter("a");
    const Letter& b = G.letter("b");
    std::vector<Equation> eqs{
        Equation{root, {Term{1, a, {under_a}}, Term{1, b, {root}}}},
        Equation{under_a, {Term{1, b, {under_a}}}},
    };
    e.system_given = true;
    e.given_system.emplace(G, root, std::move(eqs));
    e.truncated_patterns = [G](int d) {
        std::vector<SyntaxTree> pats;
        for (int j = 0; j + 2 <= d; ++j) {
            SyntaxTree t = SyntaxTree::node(G.letter("a"), {SyntaxTree::leaf()});
            for (int s = 0; s < j; ++s) t = SyntaxTree::node(G.letter("b"), {t});
            pats.push_back(SyntaxTree::node(G.letter("a"), {t}));
        }
        return PatternSet(std::move(pats));
    };
    e.dims_mode = SpecializeMode::Degree;
    e.expected_dims = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    return e;
}

CatalogEntry make_example_stringy() {
    GradedAlphabet G({{"a", 2}});
    CatalogEntry e("example_stringy", "a stringy pattern pair over one binary letter", G);
    e.patterns = PatternSet{
        parse_tree(G, "a(a(a(*,*),*),*)"),
        parse_tree(G, "a(*,a(*,a(a(*,*),*)))"),
    };
    e.check_stringy = true;
    // Frozen from the exhaustive census at degree 8 (arities 1..9 complete).
    e.expected_dims = {1, 1, 2, 4, 8, 15, 28, 51, 92};
    return e;
}

CatalogEntry make_example_corollas() {
    GradedAlphabet G({{"a1", 2}, {"a2", 2}});
    CatalogEntry e("example_corollas",
                   "all degree-3 corolla combinations rooted at the second letter", G);
    e.patterns = PatternSet{
        parse_tree(G, "a2(a1(*,*),a1(*,*))"),
        parse_tree(G, "a2(a1(*,*),a2(*,*))"),
        parse_tree(G, "a2(a2(*,*),a1(*,*))"),
        parse_tree(G, "a2(a2(*,*),a2(*,*))"),
    };
    // Frozen from the exhaustive census at degree 7 (arities 1..8 complete).
    e.expected_dims = {1, 2, 8, 36, 176, 912, 4928, 27472};
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;
    entries.push_back(make_2as());
    entries.push_back(make_dipt());
    entries.push_back(make_dup());
    entries.push_back(make_nct());
    entries.push_back(make_fcat_1());
    entries.push_back(make_fcat_1_lr());
    entries.push_back(make_fcat_2());
    entries.push_back(make_fcat_3());
    entries.push_back(make_schr());
    entries.push_back(make_motz());
    entries.push_back(make_da());
    entries.push_back(make_example_mixed());
    entries.push_back(make_example_chains());
    entries.push_back(make_example_stringy());
    entries.push_back(make_example_corollas());
    return entries;
}

Exponents to_exponents(const GradedAlphabet& G, const std::map<std::string, int>& by_name) {
    Exponents exps(G.size(), 0);
    for (const auto& [name, exp] : by_name) exps[G.index_of(name)] = exp;
    return exps;
}

std::string join_seq(const std::vector<long long>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ',';
        out << xs[i];
    }
    return out.str();
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const CatalogEntry& e : catalog())
        if (e.id == id) return e;
    throw InputError("unknown catalog entry: " + id);
}

EquationSystem catalog_system(const CatalogEntry& entry) {
    if (entry.system_given) return *entry.given_system;
    return build_system(entry.alphabet, entry.patterns, entry.prefix_patterns,
                        default_build_options());
}

TraceSeries catalog_series(const CatalogEntry& entry, int max_degree) {
    return solve_root(catalog_system(entry), max_degree);
}

bool EntryReport::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const EntryCheck& c) { return c.pass; });
}

namespace {

void check_relations(const CatalogEntry& e, EntryReport& report) {
    if (!e.realization || e.presentation.relations.empty()) return;
    const MonoidRealization& real = *e.realization;
    bool ok = true;
    std::string detail;
    for (const auto& [lhs, rhs] : e.presentation.relations) {
        MonoidWord wl = evaluate_tree(real.monoid, lhs, real.assignment);
        MonoidWord wr = evaluate_tree(real.monoid, rhs, real.assignment);
        if (!(wl == wr)) {
            ok = false;
            detail = print_tree(lhs) + " evaluates to '" + wl.text() + "' but " +
                     print_tree(rhs) + " to '" + wr.text() + "'";
            break;
        }
    }
    report.checks.push_back({"relations-in-monoid", ok, detail});
}

void check_orientation_matches_relations(const CatalogEntry& e, EntryReport& report) {
    if (e.orientation.rules.empty()) return;
    bool ok = true;
    std::string detail;
    for (const RewriteRule& r : e.orientation.rules) {
        bool found = false;
        for (const auto& [lhs, rhs] : e.presentation.relations)
            if ((r.lhs == lhs && r.rhs == rhs) || (r.lhs == rhs && r.rhs == lhs)) {
                found = true;
                break;
            }
        if (!found) {
            ok = false;
            detail = "rule " + print_tree(r.lhs) + " -> " + print_tree(r.rhs) +
                     " does not match any relation";
            break;
        }
    }
    report.checks.push_back({"orientation-from-relations", ok, detail});
}

void check_probe(const CatalogEntry& e, EntryReport& report, int max_degree) {
    if (e.orientation.rules.empty()) return;
    int bound = std::min(max_degree, 5);
    FaithfulnessReport probe = faithfulness_probe(e.presentation, e.orientation, bound);
    std::string detail;
    if (!probe.pass()) detail = render_report(probe);
    report.checks.push_back({"faithfulness-probe", probe.pass(), detail});
}

void check_dims(const CatalogEntry& e, EntryReport& report, const TraceSeries& solution) {
    if (e.expected_dims.empty()) return;
    std::vector<long long> got = specialize(solution, e.dims_mode);
    std::size_t n = std::min(got.size(), e.expected_dims.size());
    std::vector<long long> got_prefix(got.begin(), got.begin() + static_cast<long>(n));
    std::vector<long long> want_prefix(e.expected_dims.begin(),
                                       e.expected_dims.begin() + static_cast<long>(n));
    bool ok = got_prefix == want_prefix;
    std::string detail;
    if (!ok) detail = "expected " + join_seq(want_prefix) + " but computed " + join_seq(got_prefix);
    report.checks.push_back({"dimensions", ok, detail});
}

void check_rows(const CatalogEntry& e, EntryReport& report, const TraceSeries& solution,
                int max_degree) {
    if (e.rows_max_arity < 2) return;
    const GradedAlphabet& G = e.alphabet;
    int arity_cap = std::min(e.rows_max_arity, max_degree + 1);
    bool ok = true;
    std::string detail;
    std::map<Exponents, long long> expected;
    for (const RowTerm& row : e.expected_rows) {
        Exponents exps = to_exponents(G, row.exponents);
        if (monomial_arity(G, exps) <= arity_cap) expected[exps] = row.coeff;
    }
    for (const auto& [exps, want] : expected) {
        long long got = solution.coeff(exps);
        if (got != want) {
            ok = false;
            detail = "coefficient mismatch at a frozen monomial: expected " +
                     std::to_string(want) + ", computed " + std::to_string(got);
            break;
        }
    }
    if (ok) {
        for (const auto& [exps, coeff] : solution.terms()) {
            int arity = monomial_arity(G, exps);
            if (arity < 2 || arity > arity_cap) continue;
            if (!expected.count(exps)) {
                ok = false;
                detail = "computed series has a monomial (coefficient " + std::to_string(coeff) +
                         ") absent from the frozen rows";
                break;
            }
        }
    }
    if (ok && solution.coeff(Exponents(G.size(), 0)) != 1) {
        ok = false;
        detail = "leaf coefficient is not 1";
    }
    report.checks.push_back({"refined-rows", ok, detail});
}

void check_identities(const CatalogEntry& e, EntryReport& report, const TraceSeries& solution) {
    if (e.identities.empty()) return;
    for (const AlgebraicIdentity& identity : e.identities) {
        ResidualReport res = check_algebraic_equation(solution, identity);
        std::string detail;
        if (!res.pass)
            detail = std::to_string(res.nonzero.size()) + " nonzero residual coefficients";
        report.checks.push_back({"identity-" + identity.name, res.pass, detail});
    }
}

void check_oracle(const CatalogEntry& e, EntryReport& report, const TraceSeries& solution,
                  int max_degree) {
    int d = std::min(max_degree, 5);
    PatternSet patterns = e.system_given ? e.truncated_patterns(d) : e.patterns;
    RefinedCount census = count_avoiding(e.alphabet, patterns, e.prefix_patterns, d);
    TraceSeries expected = census.to_series();
    TraceSeries got(e.alphabet, d);
    for (const auto& [exps, coeff] : solution.terms())
        if (monomial_degree(exps) <= d) got.add_term(exps, coeff);
    bool ok = got == expected;
    std::string detail;
    if (!ok) detail = "solver and census disagree at degree <= " + std::to_string(d);
    report.checks.push_back({"census-agreement", ok, detail});
}

void check_stringy_route(const CatalogEntry& e, EntryReport& report) {
    if (!e.check_stringy) return;
    EquationSystem direct = build_system(e.alphabet, e.patterns, e.prefix_patterns);
    EquationSystem stringy = stringy_system(e.alphabet, e.patterns, e.prefix_patterns);
    bool ok = print_system(direct) == print_system(stringy);
    std::string detail;
    if (!ok) detail = "stringy route differs from the direct route";
    report.checks.push_back({"stringy-route", ok, detail});
}

void check_monoid_counts(const CatalogEntry& e, EntryReport& report, int max_degree) {
    if (!e.realization) return;
    if (e.dims_mode != SpecializeMode::Arity || e.expected_dims.empty()) return;
    int n = std::min<int>(max_degree + 1, static_cast<int>(e.expected_dims.size()));
    std::vector<MonoidWord> generators;
    for (const auto& [name, word] : e.realization->assignment) generators.push_back(word);
    std::vector<std::vector<MonoidWord>> elements =
        suboperad_elements(e.realization->monoid, generators, n);
    bool ok = true;
    std::string detail;
    for (int arity = 1; arity <= n; ++arity) {
        long long got = static_cast<long long>(elements[static_cast<std::size_t>(arity - 1)].size());
        long long want = e.expected_dims[static_cast<std::size_t>(arity - 1)];
        if (got != want) {
            ok = false;
            detail = "arity " + std::to_string(arity) + ": " + std::to_string(got) +
                     " suboperad elements, expected " + std::to_string(want);
            break;
        }
    }
    report.checks.push_back({"suboperad-counts", ok, detail});
}

}  // namespace

EntryReport verify_entry(const CatalogEntry& entry, int max_degree) {
    EntryReport report;
    report.id = entry.id;
    check_relations(entry, report);
    check_orientation_matches_relations(entry, report);
    check_probe(entry, report, max_degree);
    TraceSeries solution = catalog_series(entry, max_degree);
    check_dims(entry, report, solution);
    check_rows(entry, report, solution, max_degree);
    check_identities(entry, report, solution);
    check_oracle(entry, report, solution, max_degree);
    check_stringy_route(entry, report);
    check_monoid_counts(entry, report, max_degree);
    return report;
}

std::string render_report(const EntryReport& report) {
    std::ostringstream out;
    for (const EntryCheck& check : report.checks) {
        out << report.id << ": " << check.name << ' ' << (check.pass ? "PASS" : "FAIL");
        if (!check.pass && !check.detail.empty()) out << " (" << check.detail << ')';
        out << '\n';
    }
    return out.str();
}

}  // namespace treeavoid
