#pragma once

#include <utility>
#include <vector>

#include "qvoa/qseries.hpp"

namespace qvoa {

/* Parameters of the signed lattice sum on the left-hand side of the main
 * identity. kappa = k + n + 1/2; rho_tilde_m = m - 1/2; the coefficient
 * 2(n+k)+1 = 2*kappa enters the odd integers 2 v_m. */
struct LhsParams {
    int n = 0;
    int k = 0;
    Rat kappa;
    std::vector<Rat> rho_tilde;  // strictly increasing half-integers
    long odd_coeff = 0;          // 2(n+k)+1
};

LhsParams make_lhs_params(int n, int k);

/* xi(u) = prod_{l<m} (v_m^2 - v_l^2) / (rho_m^2 - rho_l^2) with
 * v_m = rho_m + (2(n+k)+1) u_m. Evaluated through the doubled odd integers
 * 2 v_m = (2m-1) + 2 odd_coeff u_m, so every intermediate is a big integer
 * and a single exact division happens at the end. */
Rat xi(const std::vector<long>& u, const LhsParams& params);

// kappa ||u||^2 + rho_tilde . u, always a nonnegative integer.
Int lhs_exponent(const std::vector<long>& u, const LhsParams& params);

/* Per-coordinate intervals [lo_m, hi_m] certified to contain every u with
 * exponent <= order: the exponent is separable, e(u) = sum_m e_m(u_m), and
 * each e_m has a nonnegative integer minimum. */
std::vector<std::pair<long, long>> lattice_range(const LhsParams& params, int order);

// The full left-hand side: signed xi-weighted theta-like sum divided by
// (q)_inf^{n(2n-1)}, asserted integral.
QSeries lhs_series(int n, int k, int order);

/* Consistency tie to the affine conformal weights: the exponent of u equals
 * h_lambda for lambda = 2 kappa sum_m u_m eps_{n+1-m} (the index reversal
 * matches rho_tilde against the Weyl vector written in the eps basis). */
bool h_weight_crosscheck(const std::vector<long>& u, const LhsParams& params);

} // namespace qvoa
