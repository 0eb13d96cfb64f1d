#include "qvoa/linalg.hpp"

#include <algorithm>

namespace qvoa {

RatMatrix identity_matrix(int n) {
    RatMatrix m(n, RatVector(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    const int r = static_cast<int>(a.size());
    const int inner = static_cast<int>(b.size());
    const int c = inner ? static_cast<int>(b[0].size()) : 0;
    RatMatrix out(r, RatVector(c, Rat(0)));
    Rat tmp;
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < inner; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < c; ++j) {
                if (b[t][j] == 0) continue;
                tmp = a[i][t];
                tmp *= b[t][j];
                out[i][j] += tmp;
            }
        }
    return out;
}

RatMatrix transpose(const RatMatrix& a) {
    if (a.empty()) return {};
    RatMatrix out(a[0].size(), RatVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
    return out;
}

int rref_in_place(RatMatrix& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        const Rat inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

int rank(RatMatrix m) { return rref_in_place(m); }

RatMatrix nullspace(const RatMatrix& m_in) {
    RatMatrix m = m_in;
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    const int r = rref_in_place(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (int i = 0; i < r; ++i) {
        int c = 0;
        while (c < cols && m[i][c] == 0) ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    RatMatrix basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        RatVector v(cols, Rat(0));
        v[c] = 1;
        for (int i = 0; i < r; ++i) v[pivot_col[i]] = -m[i][c];
        basis.push_back(std::move(v));
    }
    rref_in_place(basis);  // canonical form
    return basis;
}

RowSpan::RowSpan(RatMatrix rows) : rows_(std::move(rows)) {
    const int r = rref_in_place(rows_);
    rows_.resize(r);
    const int cols = rows_.empty() ? 0 : static_cast<int>(rows_[0].size());
    for (int i = 0; i < r; ++i) {
        int c = 0;
        while (c < cols && rows_[i][c] == 0) ++c;
        pivot_cols_.push_back(c);
    }
}

int RowSpan::dimension() const { return static_cast<int>(rows_.size()); }

bool RowSpan::contains(RatVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat f = v[pivot_cols_[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows_[i][j];
    }
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

RatMatrix inverse(const RatMatrix& m) {
    const int n = static_cast<int>(m.size());
    RatMatrix aug(n, RatVector(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    const int r = rref_in_place(aug);
    require(r == n, "matrix is singular");
    RatMatrix out(n, RatVector(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

Ldlt ldlt(const RatMatrix& sym) {
    const int n = static_cast<int>(sym.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            require(sym[i][j] == sym[j][i], "matrix is not symmetric");
    Ldlt f;
    f.lower = identity_matrix(n);
    f.pivots.assign(n, Rat(0));
    for (int j = 0; j < n; ++j) {
        Rat d = sym[j][j];
        for (int t = 0; t < j; ++t) d -= f.lower[j][t] * f.lower[j][t] * f.pivots[t];
        require(d > 0, "matrix is not positive definite (pivot " +
                           std::to_string(j) + " is " + d.get_str() + ")");
        f.pivots[j] = d;
        for (int i = j + 1; i < n; ++i) {
            Rat s = sym[i][j];
            for (int t = 0; t < j; ++t) s -= f.lower[i][t] * f.lower[j][t] * f.pivots[t];
            f.lower[i][j] = s / d;
        }
    }
    return f;
}

} // namespace qvoa
