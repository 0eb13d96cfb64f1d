#include "qvoa/nahm.hpp"

#include <future>
#include <thread>

namespace qvoa {

namespace {

RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        out[i].assign(m[i].begin(), m[i].end());
    return out;
}

} // namespace

QuadLattice make_quad_lattice(IntMatrix gram) {
    const int d = static_cast<int>(gram.size());
    for (int i = 0; i < d; ++i) {
        require(static_cast<int>(gram[i].size()) == d, "gram matrix must be square");
        // even diagonal certifies integrality of (1/2) m^T G m
        ensure(gram[i][i] % 2 == 0, "gram diagonal entry is odd");
        for (int j = 0; j < i; ++j)
            require(gram[i][j] == gram[j][i], "gram matrix must be symmetric");
    }
    QuadLattice lat;
    lat.fact = ldlt(to_rat(gram));  // throws unless positive definite
    lat.gram = std::move(gram);
    return lat;
}

IntMatrix tadpole_matrix(int k) {
    require(k >= 0, "tadpole rank must be nonnegative");
    IntMatrix t(k, std::vector<Int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) t[i][j] = std::min(i, j) + 1;
    return t;
}

IntMatrix cartan_matrix_a(int colors) {
    require(colors >= 1, "A_N Cartan matrix needs N >= 1");
    IntMatrix a(colors, std::vector<Int>(colors, Int(0)));
    for (int i = 0; i < colors; ++i) {
        a[i][i] = 2;
        if (i + 1 < colors) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    return a;
}

QuadLattice tadpole_cartan_lattice(int colors, int k) {
    const IntMatrix t = tadpole_matrix(k);
    const IntMatrix a = cartan_matrix_a(colors);
    IntMatrix gram(k * colors, std::vector<Int>(k * colors));
    for (int i = 0; i < k; ++i)
        for (int x = 0; x < colors; ++x)
            for (int j = 0; j < k; ++j)
                for (int y = 0; y < colors; ++y)
                    gram[i * colors + x][j * colors + y] = t[i][j] * a[x][y];
    return make_quad_lattice(std::move(gram));
}

NahmForm build_nahm_form(int n, int k) {
    require(n >= 1, "invalid parameter: n must be >= 1");
    require(k >= 0, "invalid parameter: k must be >= 0");
    NahmForm form;
    form.n = n;
    form.k = k;
    form.colors = 2 * n - 1;
    form.tadpole = tadpole_matrix(k);
    form.cartan = cartan_matrix_a(form.colors);
    if (k == 0) {
        form.lattice = QuadLattice{};
    } else {
        form.lattice = tadpole_cartan_lattice(form.colors, k);
    }
    return form;
}

Int quad_exponent(const QuadLattice& lattice, const std::vector<long>& m) {
    const int d = lattice.dim();
    require(static_cast<int>(m.size()) == d, "tuple length does not match form dimension");
    Int s(0);
    for (int i = 0; i < d; ++i) {
        if (m[i] == 0) continue;
        for (int j = 0; j < d; ++j) s += lattice.gram[i][j] * m[i] * m[j];
    }
    ensure(s % 2 == 0, "quadratic exponent is not an even integer pair");
    return s / 2;
}

Int quad_exponent(const NahmForm& form, const std::vector<long>& m) {
    return quad_exponent(form.lattice, m);
}

namespace {

/* Feasible integer interval of coordinate i: {t >= 0 : d_i (t + c)^2 <= rem}.
 * The set is contiguous by convexity; locate it from the vertex -c and widen
 * with exact comparisons only. Returns false if empty. */
bool coordinate_interval(const Rat& pivot, const Rat& c, const Rat& rem,
                         long& lo, long& hi) {
    if (rem < 0) return false;
    const auto fits = [&](long t) {
        Rat s = Rat(t) + c;
        s *= s;
        s *= pivot;
        return s <= rem;
    };
    const Rat vertex = -c;
    long t0 = std::max(0L, static_cast<long>(floor_rat(vertex).get_si()));
    long t1 = std::max(0L, static_cast<long>(ceil_rat(vertex).get_si()));
    long start;
    if (fits(t0)) start = t0;
    else if (fits(t1)) start = t1;
    else return false;
    lo = start;
    while (lo > 0 && fits(lo - 1)) --lo;
    hi = start;
    while (fits(hi + 1)) ++hi;
    return true;
}

// c_i for the completed-square term at level i, given coordinates j > i.
Rat offset_at(const Ldlt& f, const std::vector<long>& m, int i) {
    Rat c(0);
    const int d = static_cast<int>(m.size());
    for (int j = i + 1; j < d; ++j)
        if (m[j] != 0) c += f.lower[j][i] * m[j];
    return c;
}

void enumerate_rec(const QuadLattice& lat, long bound,
                   const std::function<void(const std::vector<long>&, long)>& visit,
                   std::vector<long>& m, int level, const Rat& tail) {
    if (level < 0) {
        const Rat q = tail / 2;
        visit(m, static_cast<long>(to_integer(q).get_si()));
        return;
    }
    const Rat c = offset_at(lat.fact, m, level);
    const Rat rem = Rat(2 * bound) - tail;
    long lo, hi;
    if (!coordinate_interval(lat.fact.pivots[level], c, rem, lo, hi)) return;
    for (long t = lo; t <= hi; ++t) {
        m[level] = t;
        Rat s = Rat(t) + c;
        s *= s;
        s *= lat.fact.pivots[level];
        enumerate_rec(lat, bound, visit, m, level - 1, tail + s);
    }
    m[level] = 0;
}

} // namespace

void enumerate_lattice(const QuadLattice& lattice, long bound,
                       const std::function<void(const std::vector<long>&, long)>& visit) {
    require(bound >= 0, "bound must be nonnegative");
    std::vector<long> m(lattice.dim(), 0);
    enumerate_rec(lattice, bound, visit, m, lattice.dim() - 1, Rat(0));
}

long coordinate_bound(const QuadLattice& lattice, int i, long bound) {
    const RatMatrix inv = inverse(to_rat(lattice.gram));
    const Rat limit = Rat(2 * bound) * inv[i][i];
    Int root;
    mpz_sqrt(root.get_mpz_t(), floor_rat(limit).get_mpz_t());
    return static_cast<long>(root.get_si());
}

namespace {

struct SumContext {
    const QuadLattice& lat;
    int order;
    std::vector<QSeries> poch_inv;  // 1/(q)_t at full order, t = 0..tmax
};

// Degrees any completion of the current node can still reach start at
// ceil(tail/2); partial products are truncated there.
void sum_rec(const SumContext& ctx, std::vector<long>& m, int level,
             const Rat& tail, const QSeries& partial, QSeries& out) {
    if (level < 0) {
        const long q = static_cast<long>(to_integer(tail / 2).get_si());
        for (int t = 0; t + q <= ctx.order && t <= partial.order(); ++t)
            out.at(static_cast<int>(t + q)) += partial[t];
        return;
    }
    const Rat c = offset_at(ctx.lat.fact, m, level);
    const Rat rem = Rat(2 * ctx.order) - tail;
    long lo, hi;
    if (!coordinate_interval(ctx.lat.fact.pivots[level], c, rem, lo, hi)) return;
    for (long t = lo; t <= hi; ++t) {
        m[level] = t;
        Rat s = Rat(t) + c;
        s *= s;
        s *= ctx.lat.fact.pivots[level];
        const Rat child_tail = tail + s;
        const int child_order =
            ctx.order - static_cast<int>(ceil_rat(child_tail / 2).get_si());
        if (child_order < 0) continue;
        const QSeries child =
            partial.truncated(std::min(partial.order(), child_order)) *
            ctx.poch_inv[t].truncated(child_order);
        sum_rec(ctx, m, level - 1, child_tail, child, out);
    }
    m[level] = 0;
}

} // namespace

QSeries nahm_sum(const QuadLattice& lattice, int order, int threads) {
    require(order >= 0, "order must be nonnegative");
    require(threads >= 1, "thread count must be >= 1");
    const int d = lattice.dim();
    if (d == 0) return QSeries::one(order);

    long tmax = 0;
    for (int i = 0; i < d; ++i) tmax = std::max(tmax, coordinate_bound(lattice, i, order));
    SumContext ctx{lattice, order, {}};
    ctx.poch_inv.reserve(tmax + 1);
    for (long t = 0; t <= tmax; ++t)
        ctx.poch_inv.push_back(pochhammer_inverse(static_cast<int>(t), order));

    const int top = d - 1;
    long lo, hi;
    if (!coordinate_interval(lattice.fact.pivots[top], Rat(0), Rat(2 * order), lo, hi))
        return QSeries(order);

    // One task per top-coordinate value; exact summands commute, so the
    // result is identical for every thread count.
    auto run_stripe = [&](long t) {
        QSeries out(order);
        std::vector<long> m(d, 0);
        m[top] = t;
        Rat s = Rat(t);
        s *= s;
        s *= lattice.fact.pivots[top];
        const int child_order = order - static_cast<int>(ceil_rat(s / 2).get_si());
        if (child_order < 0) return out;
        const QSeries child = ctx.poch_inv[t].truncated(child_order);
        sum_rec(ctx, m, top - 1, s, child, out);
        return out;
    };

    QSeries total(order);
    if (threads == 1) {
        for (long t = lo; t <= hi; ++t) total += run_stripe(t);
    } else {
        // round-robin the stripes over a fixed pool; summands commute exactly
        auto run_chunk = [&](long first) {
            QSeries out(order);
            for (long t = first; t <= hi; t += threads) out += run_stripe(t);
            return out;
        };
        std::vector<std::future<QSeries>> futs;
        for (int w = 0; w < threads && lo + w <= hi; ++w)
            futs.push_back(std::async(std::launch::async, run_chunk, lo + w));
        for (auto& f : futs) total += f.get();
    }
    return total;
}

QSeries rhs_series(int n, int k, int order, int threads) {
    require(order >= 0, "order must be nonnegative");
    const NahmForm form = build_nahm_form(n, k);
    QSeries s = nahm_sum(form.lattice, order, threads);
    s.assert_integral();
    return s;
}

} // namespace qvoa
