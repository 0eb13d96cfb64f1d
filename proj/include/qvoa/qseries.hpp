#pragma once

#include <vector>

#include "qvoa/rational.hpp"

namespace qvoa {

/* Truncated formal power series in q with exact rational coefficients.
 * `order` is the inclusive truncation degree, so there are order+1
 * coefficients. Arithmetic between series of different orders truncates
 * to the smaller order; truncation is a value attribute, never a global. */
class QSeries {
public:
    explicit QSeries(int order);

    static QSeries one(int order);
    static QSeries monomial(int degree, const Rat& coeff, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& operator[](int degree) const { return coeffs_[degree]; }
    Rat& at(int degree) { return coeffs_[degree]; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const Rat& c);

    QSeries truncated(int new_order) const;
    // Multiplication by q^d (degrees above the order fall off).
    QSeries shifted(int d) const;

    bool is_integral() const;
    // Integer view of the coefficients; throws consistency_error on any
    // nonunit denominator.
    std::vector<Int> assert_integral() const;

    bool operator==(const QSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Rat> coeffs_;  // index = degree, size = order+1
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);  // Cauchy product

// Multiplicative inverse to the common truncation order.
// Requires a nonzero constant term.
QSeries invert(const QSeries& a);

// (q)_m = prod_{j=1..m} (1 - q^j); (q)_0 = 1.
QSeries pochhammer(int m, int order);
QSeries pochhammer_inverse(int m, int order);

/* (q)_inf^exponent for any integer exponent, via the recurrence
 *   n f_n = -exponent * sum_{j=1..n} sigma_1(j) f_{n-j}
 * obtained from the logarithmic derivative of the Euler product.
 * exponent = -1 gives the partition numbers. */
QSeries euler_power(int exponent, int order);

// First degree where the two series differ (up to the smaller order),
// or -1 if they agree.
int first_mismatch(const QSeries& a, const QSeries& b);

} // namespace qvoa
