#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qvoa/linalg.hpp"

using namespace qvoa;

TEST_CASE("rref and rank") {
    RatMatrix m = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(m) == 2);
    RatMatrix id = identity_matrix(3);
    CHECK(rank(id) == 3);
}

TEST_CASE("nullspace is echelon and annihilates") {
    RatMatrix m = {{1, 2, 3, 4}, {0, 1, 1, 1}};
    RatMatrix ns = nullspace(m);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) {
        for (const auto& row : m) {
            Rat dot(0);
            for (std::size_t j = 0; j < v.size(); ++j) dot += row[j] * v[j];
            CHECK(dot == 0);
        }
    }
    // canonical: running nullspace twice gives identical output
    CHECK(nullspace(m) == ns);
}

TEST_CASE("row span membership") {
    RowSpan span({{1, 0, 1}, {0, 1, 1}});
    CHECK(span.dimension() == 2);
    CHECK(span.contains({2, 3, 5}));
    CHECK(!span.contains({0, 0, 1}));
}

TEST_CASE("inverse") {
    RatMatrix m = {{2, 1}, {1, 1}};
    RatMatrix inv = inverse(m);
    CHECK(mat_mul(m, inv) == identity_matrix(2));
    CHECK_THROWS_AS(inverse(RatMatrix{{1, 1}, {1, 1}}), invalid_parameter);
}

TEST_CASE("ldlt certifies positive definiteness") {
    RatMatrix pd = {{2, -1}, {-1, 2}};
    Ldlt f = ldlt(pd);
    CHECK(f.pivots[0] == 2);
    CHECK(f.pivots[1] == make_rat(3, 2));
    // reassemble L D L^T
    RatMatrix d = identity_matrix(2);
    d[0][0] = f.pivots[0];
    d[1][1] = f.pivots[1];
    CHECK(mat_mul(mat_mul(f.lower, d), transpose(f.lower)) == pd);

    CHECK_THROWS_AS(ldlt(RatMatrix{{0, 1}, {1, 0}}), invalid_parameter);
    CHECK_THROWS_AS(ldlt(RatMatrix{{1, 2}, {2, 1}}), invalid_parameter);  // indefinite
    CHECK_THROWS_AS(ldlt(RatMatrix{{1, 2}, {3, 1}}), invalid_parameter);  // asymmetric
}
