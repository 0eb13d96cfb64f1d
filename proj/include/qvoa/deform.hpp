#pragma once

#include <vector>

#include "qvoa/polymatrix.hpp"

namespace qvoa {

enum class Family { sp, so, osp };

/* The quadratic tensors of the three deformation families, written on the
 * homogeneous basis z_1..z_m (even), theta_0..theta_2n (odd):
 *   sp : B = sum_{a<2n}  x^a        theta_a theta_{a+1}            (m = 0)
 *   so : C = (1/2) sum_r x^{2(r-1)} z_r^2                          (n = 0)
 *   osp: D = (1/2) sum_r x^{2(r-1)} z_r^2
 *        + x^{2m} sum_{a<2n} x^{2a} theta_a theta_{a+1}
 * "Preserving" the tensor means the derivation action of X kills it; for sp
 * and osp, X must also kill theta_0. Full-space indices put the z's first. */
struct QuadTensor {
    Family family = Family::sp;
    int m = 0;  // number of even basis vectors
    int n = 0;  // odd block has dimension 2n+1

    int even_dim() const { return m; }
    int odd_dim() const { return family == Family::so ? 0 : 2 * n + 1; }
    int dim() const { return even_dim() + odd_dim(); }
    int theta0() const { return m; }  // full-space index of theta_0
};

QuadTensor make_quad_tensor(Family family, int m, int n);

/* Residual of the constraint system on X: the coefficients of X.tensor in
 * canonical tensor coordinates, together with the entries of X theta_0
 * (where applicable). All zero iff X lies in the family subalgebra.
 * X must be in sl (zero supertrace) and of the matching block shape. */
std::vector<Poly> constraint_residual(const QuadTensor& tensor, const PolyMatrix& X);

/* Basis of the fiber g_eps = g (x)_{C[x]} C[x]/(x - eps) of the constrained
 * subalgebra, split by parity; entries are constant matrices. The fiber is
 * computed from the x-adically saturated constraint rows, so eps = 0 gives
 * the limit algebra rather than the (larger) kernel of the raw constraints
 * at x = 0; the saturation is certified against the generic rank. Bases are
 * in reduced echelon form over the row-major entry ordering. */
struct KernelBasis {
    std::vector<PolyMatrix> even;
    std::vector<PolyMatrix> odd;
    int dimension() const { return static_cast<int>(even.size() + odd.size()); }
};

KernelBasis kernel_at_epsilon(const QuadTensor& tensor, const Rat& eps);

// Every superbracket of basis elements lies back in the exact span.
bool check_closure(const KernelBasis& basis);

// The eps = 0 fiber is strictly upper triangular in the z-then-theta ordering.
bool check_nilpotent_limit(const QuadTensor& tensor);

/* Gram coefficients of the tensor rewritten in the localized basis
 * (theta_0, phi_1, ..., phi_2n) / (w_1, ..., w_m) at x = eps != 0; the
 * result should match standard_form_target exactly. */
RatMatrix standard_form_change(const QuadTensor& tensor, const Rat& eps);
RatMatrix standard_form_target(const QuadTensor& tensor);

/* The gl(1|1) embedding into sl(1|2n+1): N, E, psi^+, psi^- supermatrices,
 * the principal subalgebra p (upper triangulars of the odd block plus
 * psi_1..psi_2n), its decomposition under ad E, and the psi^+ cohomology. */
struct Gl11Report {
    int n = 0;
    bool relations_ok = false;  // [N,psi+-] = +-psi+-, [psi+,psi-] = E, E central
    int dim_p_even = 0;
    int dim_p_odd = 0;
    int dim_e_weight_zero = 0;
    int dim_cohomology = 0;
    int sdim_p() const { return dim_p_even - dim_p_odd; }
};

Gl11Report gl11_checks(int n);

struct CohomologyDims {
    int p_even = 0;
    int p_odd = 0;
    int e_weight_zero = 0;
    int cohomology = 0;
};

CohomologyDims e_weight_cohomology(int n);

} // namespace qvoa
