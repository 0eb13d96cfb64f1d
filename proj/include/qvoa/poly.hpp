#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qvoa/rational.hpp"

namespace qvoa {

// Univariate polynomial over Q, dense coefficients, no trailing zeros
// (the zero polynomial has an empty coefficient vector).
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c);  // constant
    Poly(long c);
    static Poly x_power(int d, const Rat& coeff = Rat(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    const Rat& coeff(int d) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Rat eval(const Rat& x) const;
    // Order of vanishing at 0; nullopt for the zero polynomial.
    std::optional<int> x_order() const;
    Poly divided_by_x_power(int d) const;
    // Rewrite in the variable y = x - eps.
    Poly shifted_variable(const Rat& eps) const;

    std::string str() const;  // for diagnostics

private:
    void trim();
    std::vector<Rat> c_;
};

} // namespace qvoa
