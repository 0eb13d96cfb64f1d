#pragma once

#include <optional>
#include <vector>

#include "qvoa/rational.hpp"

namespace qvoa {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;  // row-major, rectangular

RatMatrix identity_matrix(int n);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix transpose(const RatMatrix& a);

// Reduced row echelon form; returns the rank. Deterministic pivot choice
// (first nonzero entry scanning rows in order), so the result is canonical.
int rref_in_place(RatMatrix& m);

int rank(RatMatrix m);

// Basis of {v : m v = 0}, rows in reduced echelon form.
RatMatrix nullspace(const RatMatrix& m);

// Least structure needed for span tests: rows are rref'd once, then
// membership is a single elimination pass per query.
class RowSpan {
public:
    explicit RowSpan(RatMatrix rows);
    bool contains(RatVector v) const;
    int dimension() const;

private:
    RatMatrix rows_;
    std::vector<int> pivot_cols_;
};

// Inverse of a square nonsingular matrix; throws invalid_parameter if singular.
RatMatrix inverse(const RatMatrix& m);

/* Exact LDL^T factorization of a symmetric matrix: m = L D L^T with L unit
 * lower triangular and D diagonal. All pivots positive certifies positive
 * definiteness; a nonpositive pivot throws invalid_parameter. */
struct Ldlt {
    RatMatrix lower;   // unit lower triangular
    RatVector pivots;  // all > 0
};
Ldlt ldlt(const RatMatrix& sym);

} // namespace qvoa
