#include "qvoa/deform.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace qvoa {

QuadTensor make_quad_tensor(Family family, int m, int n) {
    switch (family) {
    case Family::sp:
        require(m == 0 && n >= 1, "sp family needs m = 0 and n >= 1");
        break;
    case Family::so:
        require(m >= 1 && n == 0, "so family needs m >= 1 and n = 0");
        break;
    case Family::osp:
        require(m >= 1 && n >= 1, "osp family needs m >= 1 and n >= 1");
        break;
    }
    return QuadTensor{family, m, n};
}

namespace {

// Terms c * e_i e_j of the tensor in full-space indices; even-even diagonal
// terms carry the displayed 1/2 so the derivation rule needs no cases.
struct TensorTerm {
    int i;
    int j;
    Poly coeff;
};

std::vector<TensorTerm> tensor_terms(const QuadTensor& t) {
    std::vector<TensorTerm> terms;
    if (t.family != Family::sp) {
        for (int r = 0; r < t.m; ++r)
            terms.push_back({r, r, Poly::x_power(2 * r, Rat(1, 2))});
    }
    if (t.family != Family::so) {
        for (int a = 0; a < 2 * t.n; ++a) {
            const int e = t.family == Family::sp ? a : 2 * (t.m + a);
            terms.push_back({t.theta0() + a, t.theta0() + a + 1, Poly::x_power(e)});
        }
    }
    return terms;
}

/* Derivation action of a parity-homogeneous X on the tensor, collected in
 * canonical coordinates: even-even pairs (i <= j) symmetric, odd-odd pairs
 * (i < j) antisymmetric, mixed pairs with the even index first. */
using PairKey = std::pair<int, int>;

void accumulate_pair(std::map<PairKey, Poly>& out, const QuadTensor& t,
                     int u, int v, const Poly& c) {
    const bool u_odd = u >= t.theta0() && t.odd_dim() > 0;
    const bool v_odd = v >= t.theta0() && t.odd_dim() > 0;
    if (u_odd && v_odd) {
        if (u == v) return;  // theta^2 = 0
        if (u < v) out[{u, v}] += c;
        else out[{v, u}] -= c;
    } else if (!u_odd && !v_odd) {
        out[{std::min(u, v), std::max(u, v)}] += c;
    } else {
        out[{std::min(u, v), std::max(u, v)}] += c;  // z and theta commute
    }
}

std::map<PairKey, Poly> tensor_derivative(const QuadTensor& t, const PolyMatrix& x,
                                          Parity px) {
    std::map<PairKey, Poly> out;
    const int d = t.dim();
    for (const TensorTerm& term : tensor_terms(t)) {
        const bool i_odd = term.i >= t.theta0() && t.odd_dim() > 0;
        // X.(c e_i e_j) = c (X e_i) e_j + (-1)^{|X||e_i|} c e_i (X e_j)
        for (int r = 0; r < d; ++r) {
            if (!x.at(r, term.i).is_zero())
                accumulate_pair(out, t, r, term.j, term.coeff * x.at(r, term.i));
            if (!x.at(r, term.j).is_zero()) {
                Poly c = term.coeff * x.at(r, term.j);
                if (px == Parity::odd && i_odd) c = -c;
                accumulate_pair(out, t, term.i, r, c);
            }
        }
    }
    return out;
}

PolyMatrix parity_part(const PolyMatrix& x, Parity p) {
    PolyMatrix out(x.even_dim(), x.odd_dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) {
            const bool diag = x.is_even_row(i) == x.is_even_row(j);
            if (diag == (p == Parity::even)) out.at(i, j) = x.at(i, j);
        }
    return out;
}

} // namespace

std::vector<Poly> constraint_residual(const QuadTensor& tensor, const PolyMatrix& X) {
    require(X.even_dim() == tensor.even_dim() && X.odd_dim() == tensor.odd_dim(),
            "matrix block shape does not match the tensor");
    require(X.supertrace().is_zero(), "X is not in sl: nonzero supertrace");
    std::vector<Poly> residual;
    for (Parity p : {Parity::even, Parity::odd}) {
        const PolyMatrix part = parity_part(X, p);
        if (part.is_zero()) continue;
        for (auto& [key, poly] : tensor_derivative(tensor, part, p))
            residual.push_back(poly);
    }
    if (tensor.family != Family::so) {
        for (int r = 0; r < tensor.dim(); ++r)  // X theta_0 = 0
            residual.push_back(X.at(r, tensor.theta0()));
    }
    return residual;
}

namespace {

/* Linear constraint system over Q[x] in the entries of a parity-homogeneous
 * matrix. Unknowns are positions (row, col) of that parity, row-major. */
struct ConstraintSystem {
    std::vector<std::pair<int, int>> unknowns;
    std::vector<std::vector<Poly>> rows;
};

ConstraintSystem build_system(const QuadTensor& t, Parity parity) {
    ConstraintSystem sys;
    const int d = t.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const bool even_i = i < t.even_dim();
            const bool even_j = j < t.even_dim();
            const bool diag = even_i == even_j;
            if (diag == (parity == Parity::even)) sys.unknowns.emplace_back(i, j);
        }
    const int nu = static_cast<int>(sys.unknowns.size());
    std::map<PairKey, int> row_of;
    // tensor-derivative rows, built columnwise from elementary matrices
    for (int u = 0; u < nu; ++u) {
        PolyMatrix e(t.even_dim(), t.odd_dim());
        e.at(sys.unknowns[u].first, sys.unknowns[u].second) = Poly(1L);
        for (auto& [key, poly] : tensor_derivative(t, e, parity)) {
            if (poly.is_zero()) continue;
            auto it = row_of.find(key);
            if (it == row_of.end()) {
                it = row_of.emplace(key, static_cast<int>(sys.rows.size())).first;
                sys.rows.emplace_back(nu);
            }
            sys.rows[it->second][u] += poly;
        }
    }
    // theta_0 preservation
    if (t.family != Family::so) {
        for (int u = 0; u < nu; ++u) {
            if (sys.unknowns[u].second != t.theta0()) continue;
            std::vector<Poly> row(nu);
            row[u] = Poly(1L);
            sys.rows.push_back(std::move(row));
        }
    }
    // supertrace (diagonal positions only occur in the even system)
    if (parity == Parity::even) {
        std::vector<Poly> row(nu);
        bool any = false;
        for (int u = 0; u < nu; ++u) {
            const auto [i, j] = sys.unknowns[u];
            if (i != j) continue;
            row[u] = Poly(i < t.even_dim() ? 1L : -1L);
            any = true;
        }
        if (any) sys.rows.push_back(std::move(row));
    }
    return sys;
}

void strip_row_content(std::vector<Poly>& row) {
    int min_order = -1;
    for (const Poly& p : row) {
        const auto o = p.x_order();
        if (!o) continue;
        if (min_order < 0 || *o < min_order) min_order = *o;
    }
    if (min_order > 0)
        for (Poly& p : row) p = p.divided_by_x_power(min_order);
}

// Rank of the system over the function field Q(x), by fraction-free
// elimination with content stripping.
int generic_rank(std::vector<std::vector<Poly>> rows) {
    const int nr = static_cast<int>(rows.size());
    const int nc = nr ? static_cast<int>(rows[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (!rows[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (int i = r + 1; i < nr; ++i) {
            if (rows[i][c].is_zero()) continue;
            const Poly a = rows[r][c];
            const Poly b = rows[i][c];
            for (int j = c; j < nc; ++j) rows[i][j] = rows[i][j] * a - rows[r][j] * b;
            strip_row_content(rows[i]);
        }
        ++r;
    }
    return r;
}

/* x-adic saturation at the point eps: rewrite the rows in y = x - eps and
 * repeat { eliminate over the constant terms, divide y-divisible rows by y }
 * until stable. At the fixpoint the rows evaluated at y = 0 have the generic
 * rank, so their kernel is the fiber of the solution module; that equality
 * is asserted by the caller. */
RatMatrix saturate_at(const ConstraintSystem& sys, const Rat& eps) {
    std::vector<std::vector<Poly>> rows;
    for (const auto& row : sys.rows) {
        std::vector<Poly> shifted;
        shifted.reserve(row.size());
        for (const Poly& p : row) shifted.push_back(p.shifted_variable(eps));
        rows.push_back(std::move(shifted));
    }
    const int nc = static_cast<int>(sys.unknowns.size());
    const int nr = static_cast<int>(rows.size());
    bool changed = true;
    while (changed) {
        changed = false;
        // eliminate constant terms by Gaussian elimination, mirrored on the rows
        int r = 0;
        for (int c = 0; c < nc && r < nr; ++c) {
            int piv = -1;
            for (int i = r; i < nr; ++i)
                if (rows[i][c].coeff(0) != 0) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(rows[r], rows[piv]);
            const Rat pv = rows[r][c].coeff(0);
            for (int i = 0; i < nr; ++i) {
                if (i == r || rows[i][c].coeff(0) == 0) continue;
                const Rat f = rows[i][c].coeff(0) / pv;
                for (int j = 0; j < nc; ++j) {
                    Poly sub = rows[r][j] * Poly(f);
                    rows[i][j] -= sub;
                }
            }
            ++r;
        }
        for (auto& row : rows) {
            bool all_divisible = true;
            bool any_nonzero = false;
            for (const Poly& p : row) {
                const auto o = p.x_order();
                if (!o) continue;
                any_nonzero = true;
                if (*o == 0) { all_divisible = false; break; }
            }
            if (any_nonzero && all_divisible) {
                for (Poly& p : row) p = p.divided_by_x_power(1);
                changed = true;
            }
        }
    }
    RatMatrix numeric(nr, RatVector(nc));
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) numeric[i][j] = rows[i][j].coeff(0);
    return numeric;
}

std::vector<PolyMatrix> kernel_basis_for(const QuadTensor& t, Parity parity,
                                         const Rat& eps) {
    const ConstraintSystem sys = build_system(t, parity);
    if (sys.unknowns.empty()) return {};
    const RatMatrix numeric = saturate_at(sys, eps);
    ensure(rank(numeric) == generic_rank(sys.rows),
           "saturation did not reach the generic rank; fiber not certified");
    const RatMatrix null = nullspace(numeric);
    std::vector<PolyMatrix> basis;
    for (const auto& vec : null) {
        PolyMatrix mat(t.even_dim(), t.odd_dim());
        for (std::size_t u = 0; u < sys.unknowns.size(); ++u)
            mat.at(sys.unknowns[u].first, sys.unknowns[u].second) = Poly(vec[u]);
        basis.push_back(std::move(mat));
    }
    return basis;
}

} // namespace

KernelBasis kernel_at_epsilon(const QuadTensor& tensor, const Rat& eps) {
    KernelBasis basis;
    basis.even = kernel_basis_for(tensor, Parity::even, eps);
    if (tensor.even_dim() > 0 && tensor.odd_dim() > 0)
        basis.odd = kernel_basis_for(tensor, Parity::odd, eps);
    return basis;
}

bool check_closure(const KernelBasis& basis) {
    std::vector<std::pair<const PolyMatrix*, Parity>> all;
    for (const auto& b : basis.even) all.emplace_back(&b, Parity::even);
    for (const auto& b : basis.odd) all.emplace_back(&b, Parity::odd);
    if (all.empty()) return true;

    RatMatrix even_rows, odd_rows;
    for (const auto& b : basis.even) even_rows.push_back(b.eval_flat(0));
    for (const auto& b : basis.odd) odd_rows.push_back(b.eval_flat(0));
    const RowSpan even_span(even_rows);
    const RowSpan odd_span(odd_rows);

    for (const auto& [a, pa] : all)
        for (const auto& [b, pb] : all) {
            const PolyMatrix br = superbracket(*a, pa, *b, pb);
            const bool even_result = pa == pb;
            const RowSpan& span = even_result ? even_span : odd_span;
            if (!span.contains(br.eval_flat(0))) return false;
        }
    return true;
}

bool check_nilpotent_limit(const QuadTensor& tensor) {
    const KernelBasis basis = kernel_at_epsilon(tensor, Rat(0));
    const auto strictly_upper = [&](const PolyMatrix& m) {
        for (int i = 0; i < m.dim(); ++i)
            for (int j = 0; j <= i; ++j)
                if (!m.at(i, j).is_zero()) return false;
        return true;
    };
    for (const auto& b : basis.even)
        if (!strictly_upper(b)) return false;
    for (const auto& b : basis.odd)
        if (!strictly_upper(b)) return false;
    return true;
}

namespace {

// Columns of the localized basis change: theta_0 first, then phi_1..phi_2n
// over the theta block; w_r = x^{r-1} z_r on the z block.
RatMatrix change_matrix(const QuadTensor& t, const Rat& eps) {
    const int d = t.dim();
    RatMatrix p(d, RatVector(d, Rat(0)));
    auto pw = [&](int e) {  // eps^e
        Rat r(1);
        for (int i = 0; i < e; ++i) r *= eps;
        return r;
    };
    for (int r = 0; r < t.m; ++r) p[r][r] = pw(r);  // w_{r+1} = x^r z_{r+1}
    if (t.odd_dim() > 0) {
        const int base = t.theta0();
        p[base][base] = 1;  // theta = theta_0
        for (int i = 1; i <= t.n; ++i) {
            // sp: phi_{2i-1} = x^{i-1} theta_{2i-1},
            //     phi_{2i}   = x^{i-1} (x theta_{2i} - theta_{2i-2});
            // osp doubles the x-powers and spreads x^m over each factor.
            const int s = t.family == Family::osp ? 2 : 1;
            const int off = t.family == Family::osp ? t.m : 0;
            p[base + 2 * i - 1][base + 2 * i - 1] = pw(off + s * (i - 1));
            p[base + 2 * i][base + 2 * i] = pw(off + s * (i - 1) + s);
            p[base + 2 * i - 2][base + 2 * i] = -pw(off + s * (i - 1));
        }
    }
    return p;
}

// Gram coefficients of the tensor in expression convention: symmetric
// diagonal d_r on the z block, antisymmetric +-c_a next to the theta
// diagonal.
RatMatrix gram_at(const QuadTensor& t, const Rat& eps) {
    const int d = t.dim();
    RatMatrix g(d, RatVector(d, Rat(0)));
    for (const TensorTerm& term : tensor_terms(t)) {
        const Rat c = term.coeff.eval(eps);
        if (term.i == term.j) {
            g[term.i][term.i] += 2 * c;  // (1/2) d_r z_r^2 stored with d_r
        } else {
            g[term.i][term.j] += c;
            g[term.j][term.i] -= c;
        }
    }
    return g;
}

} // namespace

RatMatrix standard_form_change(const QuadTensor& tensor, const Rat& eps) {
    require(eps != 0, "change of basis is singular at eps = 0");
    const RatMatrix p = change_matrix(tensor, eps);
    const RatMatrix pinv = inverse(p);
    return mat_mul(mat_mul(pinv, gram_at(tensor, eps)), transpose(pinv));
}

RatMatrix standard_form_target(const QuadTensor& tensor) {
    const int d = tensor.dim();
    RatMatrix g(d, RatVector(d, Rat(0)));
    for (int r = 0; r < tensor.m; ++r) g[r][r] = 1;
    if (tensor.odd_dim() > 0) {
        const int base = tensor.theta0();
        for (int i = 1; i <= tensor.n; ++i) {
            g[base + 2 * i - 1][base + 2 * i] = 1;
            g[base + 2 * i][base + 2 * i - 1] = -1;
        }
    }
    return g;
}

namespace {

PolyMatrix unit_matrix_entry(int even_dim, int odd_dim, int i, int j) {
    PolyMatrix m(even_dim, odd_dim);
    m.at(i, j) = Poly(1L);
    return m;
}

struct PrincipalData {
    std::vector<PolyMatrix> basis;   // even part first
    std::vector<Parity> parity;
    int dim_even = 0;
    int dim_odd = 0;
};

// p = span{E_{ij} : 1 <= i < j <= 2n+1} + span{psi_a = E_{0, a+1} : a = 1..2n}
// inside sl(1|2n+1), full-space index 0 = the even line.
PrincipalData principal_subalgebra(int n) {
    PrincipalData p;
    const int d = 2 * n + 2;
    for (int i = 1; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            p.basis.push_back(unit_matrix_entry(1, 2 * n + 1, i, j));
            p.parity.push_back(Parity::even);
            ++p.dim_even;
        }
    for (int a = 1; a <= 2 * n; ++a) {
        p.basis.push_back(unit_matrix_entry(1, 2 * n + 1, 0, a + 1));
        p.parity.push_back(Parity::odd);
        ++p.dim_odd;
    }
    return p;
}

} // namespace

CohomologyDims e_weight_cohomology(int n) {
    require(n >= 1, "invalid parameter: n must be >= 1");
    const PrincipalData p = principal_subalgebra(n);
    const int dp = static_cast<int>(p.basis.size());

    PolyMatrix e_mat(1, 2 * n + 1);
    e_mat.at(0, 0) = Poly(1L);
    e_mat.at(1, 1) = Poly(1L);
    PolyMatrix psi_plus = unit_matrix_entry(1, 2 * n + 1, 0, 1);

    // coordinates of a matrix in the p basis (unit entries, disjoint positions)
    const auto coords = [&](const PolyMatrix& m) {
        RatVector v(dp, Rat(0));
        PolyMatrix rest = m;
        for (int b = 0; b < dp; ++b) {
            // each basis element has a single unit entry
            for (int i = 0; i < m.dim(); ++i)
                for (int j = 0; j < m.dim(); ++j)
                    if (!p.basis[b].at(i, j).is_zero()) {
                        v[b] = rest.at(i, j).coeff(0);
                        rest.at(i, j) = Poly();
                    }
        }
        ensure(rest.is_zero(), "matrix does not lie in the principal subalgebra");
        return v;
    };

    int e_weight_zero = 0;
    RatMatrix differential(dp, RatVector(dp, Rat(0)));  // column b = d(basis_b)
    for (int b = 0; b < dp; ++b) {
        const PolyMatrix ad_e = superbracket(e_mat, Parity::even, p.basis[b], p.parity[b]);
        // ad E is diagonal on the basis; extract the weight
        const RatVector we = coords(ad_e);
        for (int c = 0; c < dp; ++c)
            ensure(c == b || we[c] == 0, "ad E is not diagonal on the chosen basis");
        if (we[b] == 0) ++e_weight_zero;

        const PolyMatrix ad_psi =
            superbracket(psi_plus, Parity::odd, p.basis[b], p.parity[b]);
        const RatVector image = coords(ad_psi);
        for (int r = 0; r < dp; ++r) differential[r][b] = image[r];
    }
    const int rk = rank(differential);
    CohomologyDims dims;
    dims.p_even = p.dim_even;
    dims.p_odd = p.dim_odd;
    dims.e_weight_zero = e_weight_zero;
    dims.cohomology = dp - 2 * rk;  // dim ker - dim im
    return dims;
}

Gl11Report gl11_checks(int n) {
    require(n >= 1, "invalid parameter: n must be >= 1");
    const int odd = 2 * n + 1;
    PolyMatrix nmat(1, odd), emat(1, odd), psip(1, odd), psim(1, odd);
    nmat.at(0, 0) = Poly(Rat(2 * n + 1, 2 * n));
    for (int i = 1; i <= odd; ++i) nmat.at(i, i) = Poly(Rat(1, 2 * n));
    emat.at(0, 0) = Poly(1L);
    emat.at(1, 1) = Poly(1L);
    psip.at(0, 1) = Poly(1L);
    psim.at(1, 0) = Poly(1L);

    bool ok = nmat.supertrace().is_zero() && emat.supertrace().is_zero();
    ok = ok && psip.is_homogeneous(Parity::odd) && psim.is_homogeneous(Parity::odd);
    ok = ok && nmat.is_homogeneous(Parity::even) && emat.is_homogeneous(Parity::even);
    ok = ok && superbracket(nmat, Parity::even, psip, Parity::odd) == psip;
    ok = ok && superbracket(nmat, Parity::even, psim, Parity::odd) == psim.scaled(Poly(-1L));
    ok = ok && superbracket(psip, Parity::odd, psim, Parity::odd) == emat;
    // E central within the span
    ok = ok && superbracket(emat, Parity::even, nmat, Parity::even).is_zero();
    ok = ok && superbracket(emat, Parity::even, psip, Parity::odd).is_zero();
    ok = ok && superbracket(emat, Parity::even, psim, Parity::odd).is_zero();

    const CohomologyDims dims = e_weight_cohomology(n);
    Gl11Report report;
    report.n = n;
    report.relations_ok = ok;
    report.dim_p_even = dims.p_even;
    report.dim_p_odd = dims.p_odd;
    report.dim_e_weight_zero = dims.e_weight_zero;
    report.dim_cohomology = dims.cohomology;
    return report;
}

} // namespace qvoa
