#pragma once

#include <vector>

#include "qvoa/rational.hpp"

namespace qvoa {

// A weight of osp(1|2n) written in the eps-basis with exact rational
// coefficients; half-integers are everywhere.
struct Weight {
    std::vector<Rat> eps;
    int n() const { return static_cast<int>(eps.size()); }
};

Weight zero_weight(int n);
Weight basis_weight(int n, int i, const Rat& coeff);  // coeff * eps_i, 1-based

/* Root data of osp(1|2n) with the normalization (theta|theta) = 2, realized
 * through (eps_i|eps_j) = delta_ij / 2. Simple roots are
 * alpha_i = eps_i - eps_{i+1} (i < n) and alpha_n = eps_n. */
struct OspRootSystem {
    int n = 0;
    std::vector<Weight> simple;              // alpha_1 .. alpha_n
    std::vector<Weight> positive_even;       // {eps_i +- eps_j : i<j} u {2 eps_i}
    std::vector<Weight> positive_odd;        // {eps_i}
    std::vector<Weight> short_even_positive; // {eps_i +- eps_j : i<j}
    Weight weyl_vector;                      // rho_i = (2(n-i)+1)/2
    Rat dual_coxeter;                        // n + 1/2
};

OspRootSystem build_root_system(int n);

Rat bilinear(const Weight& a, const Weight& b);

// prod_{alpha in pos even} (alpha | lambda + rho) / (alpha | rho).
// Valid for any lambda in Q (x) C; dominance is the caller's business.
Rat weyl_dim(const OspRootSystem& rs, const Weight& lambda);

// Same product restricted to the short even positive roots.
Rat weyl_sdim(const OspRootSystem& rs, const Weight& lambda);

// c_k = k n (2n-1) / (2 kappa) with kappa = k + n + 1/2.
Rat central_charge(int n, int k);

// h_mu = (mu | mu + 2 rho) / (2 kappa).
Rat conformal_weight(const OspRootSystem& rs, const Weight& mu, int k);

} // namespace qvoa
