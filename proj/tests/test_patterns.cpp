#include "treeavoid/pattern.hpp"

#include "doctest.h"

#include <string>
#include <vector>

#include "treeavoid/error.hpp"

namespace {

using namespace treeavoid;

GradedAlphabet mixed_alphabet() {
    return GradedAlphabet{{{"a", 2}, {"b", 2}, {"c", 3}}};
}

SyntaxTree t(const GradedAlphabet& G, const std::string& text) {
    return parse_tree(G, text);
}

PatternSet worked_patterns(const GradedAlphabet& G) {
    return PatternSet{
        t(G, "a(c(*,*,*),*)"),
        t(G, "c(a(*,*),*,*)"),
        t(G, "c(b(*,*),b(*,*),*)"),
        t(G, "c(b(*,*),*,a(*,*))"),
        t(G, "c(c(*,*,c(*,*,*)),*,a(*,*))"),
    };
}

}  // namespace

TEST_CASE("pattern sets deduplicate and sort canonically") {
    GradedAlphabet G = mixed_alphabet();
    PatternSet P{t(G, "b(*,*)"), t(G, "a(*,*)"), t(G, "b(*,*)")};
    REQUIRE(P.size() == 2);
    CHECK(P.trees()[0] == t(G, "a(*,*)"));
    CHECK(P.trees()[1] == t(G, "b(*,*)"));
    CHECK(P.key() == "a(*,*),b(*,*)");
    CHECK(P.contains(t(G, "a(*,*)")));
    CHECK(!P.contains(t(G, "c(*,*,*)")));
    CHECK(PatternSet{}.empty());
    CHECK(PatternSet{}.key().empty());
}

TEST_CASE("the leaf is rejected as a pattern") {
    CHECK_THROWS_AS((PatternSet{SyntaxTree::leaf()}), InputError);
}

TEST_CASE("set operations return modified copies") {
    GradedAlphabet G = mixed_alphabet();
    PatternSet P{t(G, "a(*,*)")};
    PatternSet Q = P.inserted(t(G, "b(*,*)"));
    CHECK(P.size() == 1);
    CHECK(Q.size() == 2);
    CHECK(Q.removed(t(G, "a(*,*)")).key() == "b(*,*)");
    CHECK(Q.removed(t(G, "c(*,*,*)")) == Q);
    PatternSet R = P.union_with(Q);
    CHECK(R == Q);
    CHECK(P.inserted(t(G, "a(*,*)")) == P);
}

TEST_CASE("pattern set order is lexicographic on keys") {
    GradedAlphabet G = mixed_alphabet();
    PatternSetLess less;
    PatternSet empty;
    PatternSet A{t(G, "a(*,*)")};
    PatternSet AB{t(G, "a(*,*)"), t(G, "b(*,*)")};
    CHECK(less(empty, A));
    CHECK(less(A, AB));
    CHECK(!less(AB, A));
    CHECK(!less(A, A));
}

TEST_CASE("restrict_to_root keeps members with the given root letter") {
    GradedAlphabet G = mixed_alphabet();
    PatternSet P = worked_patterns(G);
    PatternSet Pa = restrict_to_root(P, G.letter("a"));
    REQUIRE(Pa.size() == 1);
    CHECK(Pa.trees()[0] == t(G, "a(c(*,*,*),*)"));
    CHECK(restrict_to_root(P, G.letter("b")).empty());
    CHECK(restrict_to_root(P, G.letter("c")).size() == 4);
}

TEST_CASE("truncate_patterns keeps members up to the degree bound") {
    GradedAlphabet G = mixed_alphabet();
    PatternSet P = worked_patterns(G);
    CHECK(truncate_patterns(P, 1).empty());
    CHECK(truncate_patterns(P, 2).size() == 2);
    CHECK(truncate_patterns(P, 3).size() == 4);
    CHECK(truncate_patterns(P, 4) == P);
    CHECK(truncate_patterns(P, 10) == P);
}

TEST_CASE("factor avoidance scans all positions") {
    GradedAlphabet G = mixed_alphabet();
    PatternSet P{t(G, "a(a(*,*),*)")};
    CHECK(factor_avoids(SyntaxTree::leaf(), P));
    CHECK(factor_avoids(t(G, "a(*,a(*,a(*,*)))"), P));
    CHECK(!factor_avoids(t(G, "a(a(*,*),*)"), P));
    CHECK(!factor_avoids(t(G, "b(*,a(a(*,*),*))"), P));
    CHECK(!factor_avoids(t(G, "a(a(b(*,*),*),*)"), P));
    CHECK(factor_avoids(t(G, "c(a(*,*),a(*,*),*)"), P));
    CHECK(factor_avoids(t(G, "b(*,*)"), PatternSet{}));
}

TEST_CASE("prefix avoidance looks at the root only") {
    GradedAlphabet G = mixed_alphabet();
    PatternSet Q{t(G, "a(a(*,*),*)")};
    CHECK(prefix_avoids(SyntaxTree::leaf(), Q));
    CHECK(prefix_avoids(t(G, "a(*,a(*,*))"), Q));
    CHECK(!prefix_avoids(t(G, "a(a(*,*),*)"), Q));
    CHECK(!prefix_avoids(t(G, "a(a(b(*,*),*),b(*,*))"), Q));
    // The pattern occurs as a factor below the root but not as a prefix.
    CHECK(prefix_avoids(t(G, "b(a(a(*,*),*),*)"), Q));
    CHECK(!factor_avoids(t(G, "b(a(a(*,*),*),*)"), Q));
}
