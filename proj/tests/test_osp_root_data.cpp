#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qvoa/macdonald.hpp"
#include "qvoa/osp_root_data.hpp"

using namespace qvoa;

TEST_CASE("root system counts and normalization") {
    OspRootSystem r1 = build_root_system(1);
    CHECK(r1.positive_even.size() == 1);  // {2 eps_1}
    CHECK(r1.positive_odd.size() == 1);   // {eps_1}
    CHECK(r1.short_even_positive.empty());

    OspRootSystem r2 = build_root_system(2);
    CHECK(r2.positive_even.size() == 4);
    CHECK(r2.short_even_positive.size() == 2);

    OspRootSystem r3 = build_root_system(3);
    CHECK(r3.positive_even.size() == 9);
    CHECK(r3.positive_odd.size() == 3);
    CHECK(r3.short_even_positive.size() == 6);
    // (alpha_i | alpha_{i+1}) = -1/2
    CHECK(bilinear(r3.simple[0], r3.simple[1]) == make_rat(-1, 2));
    CHECK(bilinear(r3.simple[1], r3.simple[2]) == make_rat(-1, 2));
    // (alpha_n | alpha_n) = 1/2, (alpha_i | alpha_i) = 1
    CHECK(bilinear(r3.simple[2], r3.simple[2]) == make_rat(1, 2));
    CHECK(bilinear(r3.simple[0], r3.simple[0]) == 1);
    CHECK(r3.dual_coxeter == make_rat(7, 2));

    CHECK_THROWS_AS(build_root_system(0), invalid_parameter);
}

TEST_CASE("weyl_dim") {
    for (int n : {1, 2, 3}) {
        OspRootSystem rs = build_root_system(n);
        CHECK(weyl_dim(rs, zero_weight(n)) == 1);
        CHECK(weyl_sdim(rs, zero_weight(n)) == 1);
    }
    // the adjoint representation of osp(1|2) is 5-dimensional
    OspRootSystem r1 = build_root_system(1);
    CHECK(weyl_dim(r1, basis_weight(1, 1, 2)) == 5);
}

TEST_CASE("superdimension is 1 for n = 1") {
    OspRootSystem r1 = build_root_system(1);
    for (int c = -6; c <= 6; ++c)
        CHECK(weyl_sdim(r1, basis_weight(1, 1, c)) == 1);
}

TEST_CASE("|sdim| <= dim on dominant integral lattice weights") {
    OspRootSystem r2 = build_root_system(2);
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= a; ++b) {  // a >= b >= 0 is dominant here
            Weight lam = zero_weight(2);
            lam.eps[0] = a;
            lam.eps[1] = b;
            const Rat dim = weyl_dim(r2, lam);
            const Rat sdim = weyl_sdim(r2, lam);
            CHECK(is_integer(dim));
            CHECK(is_integer(sdim));
            CHECK(dim > 0);
            CHECK(abs(sdim) <= dim);
        }
}

TEST_CASE("sdim at reversed lattice points reproduces xi") {
    // lambda(u) = 2 kappa sum_m u_m eps_{n+1-m}
    for (auto [n, k] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
        OspRootSystem rs = build_root_system(n);
        LhsParams p = make_lhs_params(n, k);
        std::vector<long> u(n, 0);
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b) {
                u[0] = a;
                u[n - 1] = b;
                Weight lam = zero_weight(n);
                for (int m = 1; m <= n; ++m)
                    lam.eps[n - m] = 2 * p.kappa * Rat(u[m - 1]);
                CHECK(weyl_sdim(rs, lam) == xi(u, p));
            }
    }
}

TEST_CASE("central charge and conformal weight") {
    CHECK(central_charge(1, 1) == make_rat(1, 5));
    OspRootSystem r1 = build_root_system(1);
    CHECK(conformal_weight(r1, zero_weight(1), 3) == 0);
    // mu = 2 kappa eps_1 = 5 eps_1 at n = k = 1 has h = 3 = exponent of u=(1)
    CHECK(conformal_weight(r1, basis_weight(1, 1, 5), 1) == 3);
}
