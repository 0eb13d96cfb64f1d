#include "qvoa/qseries.hpp"

#include <algorithm>

namespace qvoa {

QSeries::QSeries(int order) {
    require(order >= 0, "series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rat(0));
}

QSeries QSeries::one(int order) {
    QSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

QSeries QSeries::monomial(int degree, const Rat& coeff, int order) {
    require(degree >= 0, "monomial degree must be nonnegative");
    QSeries s(order);
    if (degree <= order) s.coeffs_[degree] = coeff;
    return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    if (o.order() < order()) coeffs_.resize(o.coeffs_.size());
    for (int d = 0; d <= order(); ++d) coeffs_[d] += o.coeffs_[d];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    if (o.order() < order()) coeffs_.resize(o.coeffs_.size());
    for (int d = 0; d <= order(); ++d) coeffs_[d] -= o.coeffs_[d];
    return *this;
}

QSeries& QSeries::operator*=(const Rat& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

QSeries QSeries::truncated(int new_order) const {
    require(new_order >= 0, "series order must be nonnegative");
    QSeries s(new_order);
    const int upto = std::min(new_order, order());
    for (int d = 0; d <= upto; ++d) s.coeffs_[d] = coeffs_[d];
    return s;
}

QSeries QSeries::shifted(int d) const {
    require(d >= 0, "shift must be nonnegative");
    QSeries s(order());
    for (int i = 0; i + d <= order(); ++i) s.coeffs_[i + d] = coeffs_[i];
    return s;
}

bool QSeries::is_integral() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

std::vector<Int> QSeries::assert_integral() const {
    std::vector<Int> out;
    out.reserve(coeffs_.size());
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        ensure(coeffs_[d].get_den() == 1,
               "integrality assertion failed at degree " + std::to_string(d) +
                   ": coefficient " + coeffs_[d].get_str());
        out.push_back(coeffs_[d].get_num());
    }
    return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r = a.truncated(std::min(a.order(), b.order()));
    r += b;
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries r = a.truncated(std::min(a.order(), b.order()));
    r -= b;
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const int order = std::min(a.order(), b.order());
    QSeries r(order);
    Rat tmp;
    for (int i = 0; i <= order; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b[j] == 0) continue;
            tmp = a[i];
            tmp *= b[j];
            r.at(i + j) += tmp;
        }
    }
    return r;
}

QSeries invert(const QSeries& a) {
    require(a[0] != 0, "non-invertible series: zero constant term");
    const int order = a.order();
    QSeries b(order);
    const Rat inv0 = 1 / a[0];
    b.at(0) = inv0;
    Rat acc, tmp;
    for (int n = 1; n <= order; ++n) {
        acc = 0;
        for (int j = 1; j <= n; ++j) {
            if (a[j] == 0) continue;
            tmp = a[j];
            tmp *= b[n - j];
            acc += tmp;
        }
        acc *= inv0;
        b.at(n) = -acc;
    }
    return b;
}

QSeries pochhammer(int m, int order) {
    require(m >= 0, "pochhammer index must be nonnegative");
    QSeries r = QSeries::one(order);
    for (int j = 1; j <= m && j <= order; ++j) {
        // multiply by (1 - q^j) in place, highest degree first
        for (int d = order; d >= j; --d) r.at(d) -= r[d - j];
    }
    return r;
}

QSeries pochhammer_inverse(int m, int order) {
    require(m >= 0, "pochhammer index must be nonnegative");
    QSeries r = QSeries::one(order);
    for (int j = 1; j <= m && j <= order; ++j) {
        // multiply by 1/(1 - q^j) = sum_i q^{ij}, lowest degree first
        for (int d = j; d <= order; ++d) r.at(d) += r[d - j];
    }
    return r;
}

QSeries euler_power(int exponent, int order) {
    std::vector<Int> sigma(static_cast<std::size_t>(order) + 1, Int(0));
    for (int d = 1; d <= order; ++d)
        for (int n = d; n <= order; n += d) sigma[n] += d;
    QSeries f = QSeries::one(order);
    Rat acc, tmp;
    for (int n = 1; n <= order; ++n) {
        acc = 0;
        for (int j = 1; j <= n; ++j) {
            tmp = sigma[j];
            tmp *= f[n - j];
            acc += tmp;
        }
        acc *= Rat(-exponent, n);
        acc.canonicalize();
        f.at(n) = acc;
    }
    return f;
}

int first_mismatch(const QSeries& a, const QSeries& b) {
    const int order = std::min(a.order(), b.order());
    for (int d = 0; d <= order; ++d)
        if (a[d] != b[d]) return d;
    return -1;
}

} // namespace qvoa
