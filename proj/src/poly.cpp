#include "qvoa/poly.hpp"

namespace qvoa {

Poly::Poly(const Rat& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(long c) {
    if (c != 0) c_.push_back(Rat(c));
}

Poly Poly::x_power(int d, const Rat& coeff) {
    Poly p;
    if (coeff != 0) {
        p.c_.assign(d + 1, Rat(0));
        p.c_[d] = coeff;
    }
    return p;
}

const Rat& Poly::coeff(int d) const {
    static const Rat zero(0);
    if (d < 0 || d >= static_cast<int>(c_.size())) return zero;
    return c_[d];
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    }
    p.trim();
    return p;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Rat Poly::eval(const Rat& x) const {
    Rat v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        v *= x;
        v += *it;
    }
    return v;
}

std::optional<int> Poly::x_order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return std::nullopt;
}

Poly Poly::divided_by_x_power(int d) const {
    const auto ord = x_order();
    ensure(!ord || *ord >= d, "polynomial is not divisible by x^" + std::to_string(d));
    Poly p;
    if (static_cast<int>(c_.size()) > d)
        p.c_.assign(c_.begin() + d, c_.end());
    return p;
}

Poly Poly::shifted_variable(const Rat& eps) const {
    // Horner: p(y + eps) built from the top coefficient down
    Poly out;
    const Poly lin = Poly::x_power(1) + Poly(eps);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        out = out * lin + Poly(*it);
    return out;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int d = 0; d < static_cast<int>(c_.size()); ++d) {
        if (c_[d] == 0) continue;
        if (!s.empty()) s += " + ";
        s += c_[d].get_str();
        if (d > 0) s += "*x^" + std::to_string(d);
    }
    return s;
}

} // namespace qvoa
