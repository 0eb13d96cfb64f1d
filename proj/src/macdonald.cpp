#include "qvoa/macdonald.hpp"

#include "qvoa/osp_root_data.hpp"

namespace qvoa {

LhsParams make_lhs_params(int n, int k) {
    require(n >= 1, "invalid parameter: n must be >= 1");
    require(k >= 0, "invalid parameter: k must be >= 0");
    LhsParams p;
    p.n = n;
    p.k = k;
    p.kappa = Rat(2 * (k + n) + 1, 2);
    for (int m = 1; m <= n; ++m) p.rho_tilde.push_back(Rat(2 * m - 1, 2));
    p.odd_coeff = 2L * (n + k) + 1;
    ensure(p.kappa * 2 == Rat(p.odd_coeff), "odd_coeff != 2 kappa");
    return p;
}

Rat xi(const std::vector<long>& u, const LhsParams& params) {
    const int n = params.n;
    require(static_cast<int>(u.size()) == n, "u has wrong length");
    Int num(1), den(1);
    for (int l = 1; l <= n; ++l) {
        const Int two_vl = Int(2 * l - 1) + Int(2 * params.odd_coeff) * u[l - 1];
        for (int m = l + 1; m <= n; ++m) {
            const Int two_vm = Int(2 * m - 1) + Int(2 * params.odd_coeff) * u[m - 1];
            num *= two_vm * two_vm - two_vl * two_vl;
            den *= Int((2 * m - 1) * (2 * m - 1) - (2 * l - 1) * (2 * l - 1));
        }
    }
    Rat r(num);
    r /= Rat(den);
    return r;
}

Int lhs_exponent(const std::vector<long>& u, const LhsParams& params) {
    const int n = params.n;
    require(static_cast<int>(u.size()) == n, "u has wrong length");
    Rat e(0);
    for (int m = 1; m <= n; ++m) {
        const Rat t(u[m - 1]);
        e += params.kappa * t * t + params.rho_tilde[m - 1] * t;
    }
    ensure(is_integer(e) && e >= 0, "lhs exponent is not a nonnegative integer");
    return to_integer(e);
}

namespace {

Rat coord_energy(const LhsParams& p, int m, long t) {
    const Rat rt(t);
    return p.kappa * rt * rt + p.rho_tilde[m - 1] * rt;
}

// Integer minimum of e_m over Z; for k >= 0 this is 0 at t = 0, but the
// bound is computed honestly from the vertex.
Rat coord_min(const LhsParams& p, int m) {
    const Rat vertex = -p.rho_tilde[m - 1] / (2 * p.kappa);
    const long lo = static_cast<long>(floor_rat(vertex).get_si());
    const long hi = static_cast<long>(ceil_rat(vertex).get_si());
    return std::min(coord_energy(p, m, lo), coord_energy(p, m, hi));
}

} // namespace

std::vector<std::pair<long, long>> lattice_range(const LhsParams& params, int order) {
    require(order >= 0, "order must be nonnegative");
    const int n = params.n;
    Rat min_total(0);
    std::vector<Rat> mins(n);
    for (int m = 1; m <= n; ++m) {
        mins[m - 1] = coord_min(params, m);
        min_total += mins[m - 1];
    }
    std::vector<std::pair<long, long>> out;
    for (int m = 1; m <= n; ++m) {
        const Rat budget = Rat(order) - (min_total - mins[m - 1]);
        long lo = 0, hi = 0;
        while (coord_energy(params, m, lo - 1) <= budget) --lo;
        while (coord_energy(params, m, hi + 1) <= budget) ++hi;
        out.emplace_back(lo, hi);
    }
    return out;
}

QSeries lhs_series(int n, int k, int order) {
    require(order >= 0, "order must be nonnegative");
    const LhsParams params = make_lhs_params(n, k);
    const auto range = lattice_range(params, order);

    QSeries signed_sum(order);
    std::vector<long> u(n, 0);
    // odometer over the product of per-coordinate intervals
    const auto advance = [&]() {
        for (int i = 0; i < n; ++i) {
            if (u[i] < range[i].second) {
                ++u[i];
                return true;
            }
            u[i] = range[i].first;
        }
        return false;
    };
    for (int i = 0; i < n; ++i) u[i] = range[i].first;
    while (true) {
        const Int e = lhs_exponent(u, params);
        if (e <= order) {
            long parity = 0;
            for (long t : u) parity += t;
            Rat term = xi(u, params);
            if (parity % 2 != 0) term = -term;
            signed_sum.at(static_cast<int>(e.get_si())) += term;
        }
        if (!advance()) break;
    }

    QSeries result = signed_sum * euler_power(-n * (2 * n - 1), order);
    result.assert_integral();
    return result;
}

bool h_weight_crosscheck(const std::vector<long>& u, const LhsParams& params) {
    const int n = params.n;
    require(static_cast<int>(u.size()) == n, "u has wrong length");
    const OspRootSystem rs = build_root_system(n);
    // lambda = 2 kappa sum_m u_m eps_{n+1-m}
    Weight lambda = zero_weight(n);
    for (int m = 1; m <= n; ++m)
        lambda.eps[n - m] += 2 * params.kappa * Rat(u[m - 1]);
    const Rat h = conformal_weight(rs, lambda, params.k);
    return h == Rat(lhs_exponent(u, params));
}

} // namespace qvoa
