#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qvoa/qseries.hpp"
#include "oracles.hpp"

using namespace qvoa;

namespace {

QSeries random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    QSeries s(order);
    for (int d = 0; d <= order; ++d) s.at(d) = make_rat(num(rng), den(rng));
    return s;
}

} // namespace

TEST_CASE("addition basics") {
    // (1+q) + (1-q) = 2
    QSeries a = QSeries::one(4) + QSeries::monomial(1, 1, 4);
    QSeries b = QSeries::one(4) - QSeries::monomial(1, 1, 4);
    QSeries sum = a + b;
    CHECK(sum[0] == 2);
    for (int d = 1; d <= 4; ++d) CHECK(sum[d] == 0);

    CHECK(a + QSeries(4) == a);  // additive identity

    // disjoint support at order 2
    QSeries c = QSeries::one(2) + QSeries::monomial(2, 2, 2);
    QSeries d = QSeries::monomial(1, 3, 2);
    QSeries e = c + d;
    CHECK(e[0] == 1);
    CHECK(e[1] == 3);
    CHECK(e[2] == 2);
}

TEST_CASE("mixed-order arithmetic truncates down") {
    QSeries a = QSeries::one(10) + QSeries::monomial(7, 5, 10);
    QSeries b = QSeries::one(3);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
    CHECK((a - b).order() == 3);
}

TEST_CASE("multiplication basics") {
    QSeries one_plus_q = QSeries::one(2) + QSeries::monomial(1, 1, 2);
    QSeries one_minus_q = QSeries::one(2) - QSeries::monomial(1, 1, 2);
    QSeries prod = one_plus_q * one_minus_q;
    CHECK(prod[0] == 1);
    CHECK(prod[1] == 0);
    CHECK(prod[2] == -1);

    std::mt19937 rng(7);
    QSeries a = random_series(rng, 8);
    CHECK(a * QSeries::one(8) == a);

    // (1-q) * geometric series = 1 by direct convolution at any order
    for (int order : {1, 5, 17}) {
        QSeries geo(order);
        for (int d = 0; d <= order; ++d) geo.at(d) = 1;
        QSeries res = (QSeries::one(order) - QSeries::monomial(1, 1, order)) * geo;
        CHECK(res == QSeries::one(order));
    }
}

TEST_CASE("ring axioms on random small series") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        QSeries a = random_series(rng, 6);
        QSeries b = random_series(rng, 6);
        QSeries c = random_series(rng, 6);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(0, 5) == QSeries::one(5));  // empty product
    QSeries p1 = pochhammer(1, 5);
    CHECK(p1[0] == 1);
    CHECK(p1[1] == -1);
    // (1-q)(1-q^2) = 1 - q - q^2 + q^3
    QSeries p2 = pochhammer(2, 3);
    CHECK(p2[0] == 1);
    CHECK(p2[1] == -1);
    CHECK(p2[2] == -1);
    CHECK(p2[3] == 1);
    CHECK_THROWS_AS(pochhammer(-1, 3), invalid_parameter);
}

TEST_CASE("pochhammer inverse pairs") {
    for (int m : {0, 1, 2, 5, 9}) {
        CHECK(pochhammer(m, 14) * pochhammer_inverse(m, 14) == QSeries::one(14));
        CHECK(pochhammer_inverse(m, 14) == invert(pochhammer(m, 14)));
    }
}

TEST_CASE("invert") {
    CHECK(invert(QSeries::one(6)) == QSeries::one(6));
    QSeries geo = invert(QSeries::one(6) - QSeries::monomial(1, 1, 6));
    for (int d = 0; d <= 6; ++d) CHECK(geo[d] == 1);  // geometric series
    CHECK_THROWS_AS(invert(QSeries::monomial(1, 1, 4)), invalid_parameter);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        QSeries a = random_series(rng, 7);
        a.at(0) = make_rat(trial + 1, 2);
        CHECK(a * invert(a) == QSeries::one(7));
        CHECK(invert(a) * a == QSeries::one(7));  // two-sided
    }
}

TEST_CASE("euler_power") {
    CHECK(euler_power(0, 8) == QSeries::one(8));

    // exponent -1 has the partition numbers as coefficients
    QSeries p = euler_power(-1, 6);
    const long expected[] = {1, 1, 2, 3, 5, 7, 11};
    for (int d = 0; d <= 6; ++d) CHECK(p[d] == expected[d]);

    CHECK(euler_power(1, 12) * euler_power(-1, 12) == QSeries::one(12));
}

TEST_CASE("euler_power additivity and pentagonal oracle") {
    for (auto [a, b] : {std::pair{1, -1}, {2, 3}, {-2, 5}, {-3, -4}}) {
        CHECK(euler_power(a, 10) * euler_power(b, 10) == euler_power(a + b, 10));
    }
    const auto penta = oracle::pentagonal_euler(24);
    const QSeries e1 = euler_power(1, 24);
    for (int d = 0; d <= 24; ++d) CHECK(e1[d] == penta[d]);
}

TEST_CASE("euler_power(-1) against brute-force partition enumeration") {
    const QSeries p = euler_power(-1, 30);
    for (int d = 0; d <= 30; ++d) CHECK(p[d] == oracle::partition_count(d));
}

TEST_CASE("integrality assertions") {
    QSeries s = QSeries::one(3);
    CHECK(s.is_integral());
    CHECK(s.assert_integral().size() == 4);
    s.at(2) = make_rat(1, 2);
    CHECK(!s.is_integral());
    CHECK_THROWS_AS(s.assert_integral(), consistency_error);
}

TEST_CASE("truncation monotonicity") {
    QSeries big = euler_power(-3, 20);
    QSeries small = euler_power(-3, 9);
    for (int d = 0; d <= 9; ++d) CHECK(big[d] == small[d]);
}
