#pragma once

#include <functional>
#include <vector>

#include "qvoa/linalg.hpp"
#include "qvoa/qseries.hpp"

namespace qvoa {

using IntMatrix = std::vector<std::vector<Int>>;

/* A positive definite integer quadratic form Q(m) = (1/2) m^T G m with even
 * diagonal, so Q is integer valued on integer vectors. Positive definiteness
 * is certified at construction by the exact LDL^T pivots. */
struct QuadLattice {
    IntMatrix gram;
    Ldlt fact;
    int dim() const { return static_cast<int>(gram.size()); }
};

QuadLattice make_quad_lattice(IntMatrix gram);

// T_ij = min(i,j), the inverse Cartan matrix of the rank-k tadpole graph.
IntMatrix tadpole_matrix(int k);
// Tridiagonal Cartan matrix of type A_N.
IntMatrix cartan_matrix_a(int colors);
// Kronecker product T_k (x) A_N, indexed (i-1)*N + (a-1).
QuadLattice tadpole_cartan_lattice(int colors, int k);

/* The quadratic form of Eq-(1.1)'s right-hand side: k copies of the A_{2n-1}
 * Cartan matrix coupled through the tadpole matrix. k = 0 gives the empty
 * (dimension zero) form. */
struct NahmForm {
    int n = 0;
    int k = 0;
    int colors = 0;  // 2n-1
    IntMatrix tadpole;
    IntMatrix cartan;
    QuadLattice lattice;
    int dim() const { return lattice.dim(); }
};

NahmForm build_nahm_form(int n, int k);

Int quad_exponent(const QuadLattice& lattice, const std::vector<long>& m);
Int quad_exponent(const NahmForm& form, const std::vector<long>& m);

/* Visits every m in the nonnegative orthant with Q(m) <= bound exactly once,
 * in lexicographic order of (m_{d-1}, ..., m_0). Per-coordinate intervals come
 * from the exact LDL^T completion of squares (Fincke-Pohst restricted to
 * m >= 0), so no candidate outside the certified interval is ever touched. */
void enumerate_lattice(const QuadLattice& lattice, long bound,
                       const std::function<void(const std::vector<long>&, long)>& visit);

// Largest possible value of coordinate i on {Q <= bound}: floor(sqrt(2*bound*(G^-1)_ii)).
long coordinate_bound(const QuadLattice& lattice, int i, long bound);

// sum_{m >= 0, Q(m) <= order} q^{Q(m)} / prod_i (q)_{m_i}, an integral series.
QSeries nahm_sum(const QuadLattice& lattice, int order, int threads = 1);

// Right-hand side of the main identity; k = 0 yields the constant series 1.
QSeries rhs_series(int n, int k, int order, int threads = 1);

} // namespace qvoa
