#pragma once

#include <vector>

#include "qvoa/linalg.hpp"
#include "qvoa/poly.hpp"

namespace qvoa {

enum class Parity { even, odd };

/* Square supermatrix over Q[x] on a space with homogeneous basis split as
 * (even_dim | odd_dim). Rows/columns 0..even_dim-1 are even, the rest odd.
 * Parity-homogeneous matrices have zero blocks in the complementary
 * positions; the superbracket is defined on homogeneous arguments. */
class PolyMatrix {
public:
    PolyMatrix(int even_dim, int odd_dim);

    int dim() const { return even_dim_ + odd_dim_; }
    int even_dim() const { return even_dim_; }
    int odd_dim() const { return odd_dim_; }

    Poly& at(int i, int j) { return e_[i * dim() + j]; }
    const Poly& at(int i, int j) const { return e_[i * dim() + j]; }

    bool is_even_row(int i) const { return i < even_dim_; }

    Poly supertrace() const;  // tr(even block) - tr(odd block)
    bool is_homogeneous(Parity p) const;
    bool is_zero() const;

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix scaled(const Poly& c) const;
    bool operator==(const PolyMatrix& o) const;

    RatMatrix eval(const Rat& x) const;
    std::vector<Rat> eval_flat(const Rat& x) const;  // row-major vector

private:
    int even_dim_;
    int odd_dim_;
    std::vector<Poly> e_;
};

// [a, b] = a b - (-1)^{p(a) p(b)} b a for homogeneous a, b.
PolyMatrix superbracket(const PolyMatrix& a, Parity pa,
                        const PolyMatrix& b, Parity pb);

} // namespace qvoa
