#include "qvoa/quasiparticle.hpp"

#include <algorithm>

#include "qvoa/nahm.hpp"

namespace qvoa {

long QPMonomial::energy() const {
    long e = 0;
    for (const auto& color : colors)
        for (const auto& mode : color) e -= mode.index;
    return e;
}

bool QPMonomial::is_canonical() const {
    for (const auto& color : colors) {
        for (std::size_t a = 0; a + 1 < color.size(); ++a) {
            if (color[a].charge <= 0 || color[a + 1].charge > color[a].charge) return false;
            if (color[a + 1].charge == color[a].charge &&
                color[a + 1].index > color[a].index)
                return false;
        }
        if (!color.empty() && color.back().charge <= 0) return false;
    }
    return true;
}

namespace {

// Condition (2) bound for slot a (1-based) of charge n against the previous
// color's charge list.
long cond2_bound(int a, int n, const std::vector<int>& prev_charges) {
    long b = static_cast<long>(1 - 2 * a) * n;
    for (int nb : prev_charges) b += std::min(nb, n);
    return b;
}

} // namespace

bool is_admissible(const QPMonomial& mono, int k) {
    require(k >= 1, "level k must be >= 1");
    require(mono.is_canonical(), "monomial is not canonically ordered");
    std::vector<int> prev;
    for (const auto& color : mono.colors) {
        for (std::size_t a = 0; a < color.size(); ++a) {
            if (color[a].charge > k) return false;  // (3)
            if (a > 0 && color[a].charge == color[a - 1].charge &&
                color[a].index > color[a - 1].index - 2 * color[a - 1].charge)
                return false;  // (1)
            if (color[a].index > cond2_bound(static_cast<int>(a) + 1, color[a].charge, prev))
                return false;  // (2)
        }
        prev.clear();
        for (const auto& mode : color) prev.push_back(mode.charge);
    }
    return true;
}

std::string charge_type_key(const ChargeType& type) {
    std::string key;
    for (std::size_t i = 0; i < type.size(); ++i) {
        if (i) key += ';';
        for (std::size_t a = 0; a < type[i].size(); ++a) {
            if (a) key += ',';
            key += std::to_string(type[i][a]);
        }
    }
    return key;
}

namespace {

// Greedy maximal index assignment for one color; returns its (minimal)
// energy. Chains of equal charge step down by 2n each slot.
long color_min_energy(const std::vector<int>& charges, const std::vector<int>& prev) {
    long e = 0;
    long last_m = 0;
    int last_n = -1;
    for (std::size_t a = 0; a < charges.size(); ++a) {
        const int n = charges[a];
        long m = cond2_bound(static_cast<int>(a) + 1, n, prev);
        if (last_n == n) m = std::min(m, last_m - 2 * n);
        e -= m;
        last_m = m;
        last_n = n;
    }
    return e;
}

} // namespace

long charge_type_min_energy(const ChargeType& type) {
    long e = 0;
    std::vector<int> prev;
    for (const auto& charges : type) {
        e += color_min_energy(charges, prev);
        prev = charges;
    }
    return e;
}

namespace {

struct TypeEnumerator {
    const ChargeType& type;
    int order;
    std::vector<long> rest_min;  // rest_min[i] = min energy of colors > i
    QSeries* out;

    TypeEnumerator(const ChargeType& t, int ord, QSeries* o)
        : type(t), order(ord), out(o) {
        const int nc = static_cast<int>(t.size());
        rest_min.assign(nc + 1, 0);
        std::vector<int> prev;
        std::vector<long> own(nc, 0);
        for (int i = 0; i < nc; ++i) {
            own[i] = color_min_energy(t[i], prev);
            prev = t[i];
        }
        for (int i = nc - 1; i >= 0; --i) rest_min[i] = rest_min[i + 1] + own[i];
    }

    // Remaining greedy minimum within color ci after slot a, given the slot's
    // chosen index m.
    long tail_min(int ci, std::size_t a, long m) const {
        const auto& charges = type[ci];
        long e = 0;
        long last_m = m;
        int last_n = charges[a];
        for (std::size_t b = a + 1; b < charges.size(); ++b) {
            const int n = charges[b];
            long mb = cond2_bound(static_cast<int>(b) + 1, n,
                                  ci > 0 ? type[ci - 1] : std::vector<int>{});
            if (last_n == n) mb = std::min(mb, last_m - 2 * n);
            e -= mb;
            last_m = mb;
            last_n = n;
        }
        return e;
    }

    void run() { color(0, 0); }

    void color(int ci, long energy) {
        if (ci == static_cast<int>(type.size())) {
            ensure(energy <= order, "type enumeration exceeded the order");
            out->at(static_cast<int>(energy)) += 1;
            return;
        }
        slot(ci, 0, 0, -1, energy);
    }

    void slot(int ci, std::size_t a, long last_m, int last_n, long energy) {
        const auto& charges = type[ci];
        if (a == charges.size()) {
            color(ci + 1, energy);
            return;
        }
        const int n = charges[a];
        long m = cond2_bound(static_cast<int>(a) + 1, n,
                             ci > 0 ? type[ci - 1] : std::vector<int>{});
        if (last_n == n) m = std::min(m, last_m - 2 * n);
        // lowering m only raises the energy of this slot and of every
        // chained successor, so the first infeasible m ends the scan
        while (true) {
            const long e2 = energy - m;
            if (e2 + tail_min(ci, a, m) + rest_min[ci + 1] > order) break;
            slot(ci, a + 1, m, n, e2);
            --m;
        }
    }
};

void for_each_type(int colors, int k, int order,
                   const std::function<void(const ChargeType&, long)>& visit) {
    // Candidate types are lattice points of the tadpole (x) Cartan form:
    // mu[(i-1)*colors + (a-1)] = number of charge-i modes of color a.
    const QuadLattice lattice = tadpole_cartan_lattice(colors, k);
    enumerate_lattice(lattice, order, [&](const std::vector<long>& mu, long q) {
        ChargeType type(colors);
        for (int a = 0; a < colors; ++a)
            for (int i = k; i >= 1; --i) {
                const long count = mu[(i - 1) * colors + a];
                type[a].insert(type[a].end(), count, i);
            }
        // certifies that the lattice scan covers every admissible type
        ensure(charge_type_min_energy(type) == q,
               "type minimum energy disagrees with the quadratic form");
        visit(type, q);
    });
}

} // namespace

QSeries qp_character(int colors, int k, int order) {
    require(colors >= 1, "number of colors must be >= 1");
    require(k >= 1, "level k must be >= 1");
    require(order >= 0, "order must be nonnegative");
    QSeries out(order);
    for_each_type(colors, k, order, [&](const ChargeType& type, long) {
        TypeEnumerator(type, order, &out).run();
    });
    out.assert_integral();
    return out;
}

std::map<std::string, QSeries> charge_type_census(int colors, int k, int order) {
    require(colors >= 1, "number of colors must be >= 1");
    require(k >= 1, "level k must be >= 1");
    require(order >= 0, "order must be nonnegative");
    std::map<std::string, QSeries> census;
    for_each_type(colors, k, order, [&](const ChargeType& type, long) {
        QSeries s(order);
        TypeEnumerator(type, order, &s).run();
        census.emplace(charge_type_key(type), std::move(s));
    });
    return census;
}

} // namespace qvoa
