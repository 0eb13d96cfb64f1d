#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qvoa/macdonald.hpp"
#include "qvoa/nahm.hpp"

using namespace qvoa;

TEST_CASE("params") {
    LhsParams p = make_lhs_params(2, 1);
    CHECK(p.kappa == make_rat(7, 2));
    CHECK(p.odd_coeff == 7);
    CHECK(p.rho_tilde[0] == make_rat(1, 2));
    CHECK(p.rho_tilde[1] == make_rat(3, 2));
    CHECK_THROWS_AS(make_lhs_params(0, 1), invalid_parameter);
}

TEST_CASE("xi") {
    // u = 0 gives 1 for any n; n = 1 is the empty product
    for (int n : {1, 2, 3}) {
        LhsParams p = make_lhs_params(n, 1);
        CHECK(xi(std::vector<long>(n, 0), p) == 1);
    }
    LhsParams p1 = make_lhs_params(1, 1);
    CHECK(xi({5}, p1) == 1);
    CHECK(xi({-2}, p1) == 1);

    /* Direct evaluation of the defining formula for n=2, k=1, u=(1,0):
     * v = (1/2 + 7, 3/2), so (v_2^2 - v_1^2)/(rho_2^2 - rho_1^2)
     *   = (9/4 - 225/4)/(9/4 - 1/4) = -27. */
    LhsParams p21 = make_lhs_params(2, 1);
    const Rat v1 = make_rat(1, 2) + 7;
    const Rat v2 = make_rat(3, 2);
    const Rat direct = (v2 * v2 - v1 * v1) / (make_rat(9, 4) - make_rat(1, 4));
    CHECK(direct == -27);
    CHECK(xi({1, 0}, p21) == direct);
}

TEST_CASE("lhs_exponent") {
    LhsParams p = make_lhs_params(1, 1);
    CHECK(lhs_exponent({0}, p) == 0);
    CHECK(lhs_exponent({1}, p) == 3);   // 5/2 + 1/2
    CHECK(lhs_exponent({-1}, p) == 2);  // 5/2 - 1/2
    CHECK_THROWS_AS(lhs_exponent({0, 0}, p), invalid_parameter);
}

TEST_CASE("exponent zero only at the origin") {
    LhsParams p = make_lhs_params(3, 2);
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c) {
                const Int e = lhs_exponent({a, b, c}, p);
                CHECK(e >= 0);
                CHECK((e == 0) == (a == 0 && b == 0 && c == 0));
            }
}

TEST_CASE("lattice_range") {
    LhsParams p = make_lhs_params(1, 1);
    auto r0 = lattice_range(p, 0);
    CHECK(r0[0].first <= 0);
    CHECK(r0[0].second >= 0);
    // order 3: e(1)=3, e(-1)=2, e(+-2) >= 9
    auto r3 = lattice_range(p, 3);
    CHECK(r3[0] == std::pair<long, long>{-1, 1});
}

TEST_CASE("lattice_range complete against a box scan") {
    LhsParams p = make_lhs_params(2, 1);
    const auto range = lattice_range(p, 8);
    for (long a = -10; a <= 10; ++a)
        for (long b = -10; b <= 10; ++b) {
            if (lhs_exponent({a, b}, p) > 8) continue;
            CHECK(a >= range[0].first);
            CHECK(a <= range[0].second);
            CHECK(b >= range[1].first);
            CHECK(b <= range[1].second);
        }
}

TEST_CASE("lhs_series equals rhs_series (the main identity, small cells)") {
    for (auto [n, k, order] : {std::tuple{1, 1, 20}, {1, 2, 16}, {2, 1, 14}, {2, 2, 10}}) {
        CHECK(lhs_series(n, k, order) == rhs_series(n, k, order));
    }
}

TEST_CASE("Macdonald degeneration at k = 0") {
    CHECK(lhs_series(1, 0, 30) == QSeries::one(30));
    CHECK(lhs_series(2, 0, 20) == QSeries::one(20));
}

TEST_CASE("truncation monotonicity") {
    const QSeries big = lhs_series(2, 1, 18);
    const QSeries small = lhs_series(2, 1, 11);
    for (int d = 0; d <= 11; ++d) CHECK(big[d] == small[d]);
}

TEST_CASE("h_weight_crosscheck") {
    LhsParams p11 = make_lhs_params(1, 1);
    CHECK(h_weight_crosscheck({0}, p11));
    CHECK(h_weight_crosscheck({1}, p11));

    std::mt19937 rng(5);
    std::uniform_int_distribution<long> coord(-4, 4);
    LhsParams p21 = make_lhs_params(2, 1);
    for (int trial = 0; trial < 50; ++trial) {
        CHECK(h_weight_crosscheck({coord(rng), coord(rng)}, p21));
    }
}
