#pragma once

// Test-only oracles, independent of the library's computation paths:
// plain recursive enumeration and naive box scans only.

#include <functional>
#include <map>
#include <vector>

#include "qvoa/rational.hpp"

namespace oracle {

// Number of partitions of e with every part <= max_part.
inline qvoa::Int partition_count(int e, int max_part) {
    if (e == 0) return 1;
    if (e < 0 || max_part == 0) return 0;
    return partition_count(e - max_part, max_part) + partition_count(e, max_part - 1);
}

inline qvoa::Int partition_count(int e) { return partition_count(e, e); }

// Counts partitions of e whose multiplicity map passes `accept`.
inline long count_partitions_if(
    int e, const std::function<bool(const std::map<int, int>&)>& accept) {
    long count = 0;
    std::map<int, int> mult;
    const std::function<void(int, int)> rec = [&](int rem, int max_part) {
        if (rem == 0) {
            if (accept(mult)) ++count;
            return;
        }
        for (int p = std::min(rem, max_part); p >= 1; --p) {
            ++mult[p];
            rec(rem - p, p);
            if (--mult[p] == 0) mult.erase(p);
        }
    };
    rec(e, e);
    return count;
}

// Partitions with parts pairwise differing by at least 2 (Rogers-Ramanujan).
inline long difference_two_count(int e) {
    return count_partitions_if(e, [](const std::map<int, int>& f) {
        int prev = -10;
        for (const auto& [part, mult] : f) {
            if (mult > 1 || part - prev < 2) return false;
            prev = part;
        }
        return true;
    });
}

// Gordon condition at level k: f_j + f_{j+1} <= k for every j >= 1.
inline long gordon_count(int e, int k) {
    return count_partitions_if(e, [&](const std::map<int, int>& f) {
        for (const auto& [part, mult] : f) {
            const auto next = f.find(part + 1);
            const int pair = mult + (next == f.end() ? 0 : next->second);
            if (pair > k) return false;
        }
        return true;
    });
}

// All nonnegative tuples in the box [0, limit]^dim with
// (1/2) m^T gram m <= bound, by plain nested scanning.
inline std::vector<std::vector<long>> box_lattice_scan(
    const std::vector<std::vector<qvoa::Int>>& gram, long limit, long bound) {
    const int dim = static_cast<int>(gram.size());
    std::vector<std::vector<long>> found;
    std::vector<long> m(dim, 0);
    const std::function<void(int)> rec = [&](int i) {
        if (i == dim) {
            qvoa::Int q(0);
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b) q += gram[a][b] * m[a] * m[b];
            if (q <= 2 * bound) found.push_back(m);
            return;
        }
        for (long t = 0; t <= limit; ++t) {
            m[i] = t;
            rec(i + 1);
        }
        m[i] = 0;
    };
    rec(0);
    return found;
}

// (q)_inf by Euler's pentagonal number theorem, as plain integer coefficients.
inline std::vector<qvoa::Int> pentagonal_euler(int order) {
    std::vector<qvoa::Int> c(order + 1, qvoa::Int(0));
    for (long j = -order; j <= order; ++j) {
        const long e = j * (3 * j - 1) / 2;
        if (e < 0 || e > order) continue;
        c[e] += (j % 2 == 0) ? 1 : -1;
    }
    return c;
}

} // namespace oracle
