#include "qvoa/osp_root_data.hpp"

namespace qvoa {

Weight zero_weight(int n) {
    Weight w;
    w.eps.assign(n, Rat(0));
    return w;
}

Weight basis_weight(int n, int i, const Rat& coeff) {
    require(i >= 1 && i <= n, "eps index out of range");
    Weight w = zero_weight(n);
    w.eps[i - 1] = coeff;
    return w;
}

Rat bilinear(const Weight& a, const Weight& b) {
    ensure(a.n() == b.n(), "weight rank mismatch");
    Rat s(0);
    for (int i = 0; i < a.n(); ++i) s += a.eps[i] * b.eps[i];
    return s / 2;
}

namespace {

Weight eps_sum(int n, int i, int j, int sign_j) {
    Weight w = zero_weight(n);
    w.eps[i - 1] += 1;
    w.eps[j - 1] += sign_j;
    return w;
}

} // namespace

OspRootSystem build_root_system(int n) {
    require(n >= 1, "invalid parameter: n must be >= 1");
    OspRootSystem rs;
    rs.n = n;
    for (int i = 1; i < n; ++i) rs.simple.push_back(eps_sum(n, i, i + 1, -1));
    rs.simple.push_back(basis_weight(n, n, 1));  // the non-isotropic odd simple root
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            rs.positive_even.push_back(eps_sum(n, i, j, +1));
            rs.positive_even.push_back(eps_sum(n, i, j, -1));
            rs.short_even_positive.push_back(eps_sum(n, i, j, +1));
            rs.short_even_positive.push_back(eps_sum(n, i, j, -1));
        }
    }
    for (int i = 1; i <= n; ++i) rs.positive_even.push_back(basis_weight(n, i, 2));
    for (int i = 1; i <= n; ++i) rs.positive_odd.push_back(basis_weight(n, i, 1));
    rs.weyl_vector = zero_weight(n);
    for (int i = 1; i <= n; ++i) rs.weyl_vector.eps[i - 1] = Rat(2 * (n - i) + 1, 2);
    rs.dual_coxeter = Rat(2 * n + 1, 2);

    ensure(static_cast<int>(rs.positive_even.size()) == n * n, "|pos even| != n^2");
    ensure(static_cast<int>(rs.positive_odd.size()) == n, "|pos odd| != n");
    ensure(static_cast<int>(rs.short_even_positive.size()) == n * (n - 1),
           "|short even pos| != n(n-1)");
    const Weight theta = basis_weight(n, 1, 2);  // highest root 2 eps_1
    ensure(bilinear(theta, theta) == 2, "(theta|theta) != 2");
    for (const Weight& alpha : rs.simple) {
        // (rho | alpha^vee) = 1 for every simple root
        const Rat norm = bilinear(alpha, alpha);
        ensure(bilinear(rs.weyl_vector, alpha) * 2 == norm, "(rho|alpha^vee) != 1");
    }
    return rs;
}

namespace {

Weight weight_sum(const Weight& a, const Weight& b, int mult_b = 1) {
    Weight w = a;
    for (int i = 0; i < w.n(); ++i) w.eps[i] += mult_b * b.eps[i];
    return w;
}

Rat product_over(const std::vector<Weight>& roots, const OspRootSystem& rs,
                 const Weight& lambda) {
    const Weight shifted = weight_sum(lambda, rs.weyl_vector);
    Rat p(1);
    for (const Weight& alpha : roots)
        p *= bilinear(alpha, shifted) / bilinear(alpha, rs.weyl_vector);
    return p;
}

} // namespace

Rat weyl_dim(const OspRootSystem& rs, const Weight& lambda) {
    return product_over(rs.positive_even, rs, lambda);
}

Rat weyl_sdim(const OspRootSystem& rs, const Weight& lambda) {
    return product_over(rs.short_even_positive, rs, lambda);
}

Rat central_charge(int n, int k) {
    require(n >= 1 && k >= 0, "need n >= 1 and k >= 0");
    const Rat kappa = Rat(2 * (k + n) + 1, 2);
    Rat c = Rat(k) * n * (2 * n - 1);
    return c / (2 * kappa);
}

Rat conformal_weight(const OspRootSystem& rs, const Weight& mu, int k) {
    require(k >= 0, "need k >= 0");
    const Rat kappa = Rat(2 * (k + rs.n) + 1, 2);
    Weight shifted = mu;
    for (int i = 0; i < shifted.n(); ++i) shifted.eps[i] += 2 * rs.weyl_vector.eps[i];
    return bilinear(mu, shifted) / (2 * kappa);
}

} // namespace qvoa
