#include "qvoa/polymatrix.hpp"

namespace qvoa {

PolyMatrix::PolyMatrix(int even_dim, int odd_dim)
    : even_dim_(even_dim), odd_dim_(odd_dim),
      e_(static_cast<std::size_t>(dim()) * dim()) {}

Poly PolyMatrix::supertrace() const {
    Poly t;
    for (int i = 0; i < dim(); ++i) {
        if (is_even_row(i)) t += at(i, i);
        else t -= at(i, i);
    }
    return t;
}

bool PolyMatrix::is_homogeneous(Parity p) const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            if (at(i, j).is_zero()) continue;
            const bool diagonal_block = is_even_row(i) == is_even_row(j);
            if (diagonal_block != (p == Parity::even)) return false;
        }
    return true;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    ensure(dim() == o.dim() && even_dim_ == o.even_dim_, "block shape mismatch");
    PolyMatrix r(even_dim_, odd_dim_);
    for (int i = 0; i < dim(); ++i)
        for (int t = 0; t < dim(); ++t) {
            if (at(i, t).is_zero()) continue;
            for (int j = 0; j < dim(); ++j) {
                if (o.at(t, j).is_zero()) continue;
                r.at(i, j) += at(i, t) * o.at(t, j);
            }
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    ensure(dim() == o.dim() && even_dim_ == o.even_dim_, "block shape mismatch");
    PolyMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    ensure(dim() == o.dim() && even_dim_ == o.even_dim_, "block shape mismatch");
    PolyMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

PolyMatrix PolyMatrix::scaled(const Poly& c) const {
    PolyMatrix r = *this;
    for (auto& p : r.e_) p = p * c;
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return even_dim_ == o.even_dim_ && odd_dim_ == o.odd_dim_ && e_ == o.e_;
}

RatMatrix PolyMatrix::eval(const Rat& x) const {
    RatMatrix m(dim(), RatVector(dim()));
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) m[i][j] = at(i, j).eval(x);
    return m;
}

std::vector<Rat> PolyMatrix::eval_flat(const Rat& x) const {
    std::vector<Rat> v;
    v.reserve(e_.size());
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) v.push_back(at(i, j).eval(x));
    return v;
}

PolyMatrix superbracket(const PolyMatrix& a, Parity pa,
                        const PolyMatrix& b, Parity pb) {
    ensure(a.is_homogeneous(pa), "left bracket argument is not parity homogeneous");
    ensure(b.is_homogeneous(pb), "right bracket argument is not parity homogeneous");
    const PolyMatrix ab = a * b;
    const PolyMatrix ba = b * a;
    if (pa == Parity::odd && pb == Parity::odd) return ab + ba;
    return ab - ba;
}

} // namespace qvoa
