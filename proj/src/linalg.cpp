#include "gcalpha/linalg.hpp"

#include <algorithm>

namespace gcalpha {

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), m = b[0].size();
    Mat r(n, Vec(m, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw DimensionMismatch("mat_mul: shape mismatch");
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    }
    return r;
}

Mat mat_transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat r(a[0].size(), Vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

Mat mat_identity(int n) {
    Mat r(n, zero_vec(n));
    for (int i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

Mat mat_inverse(const Mat& a) {
    const int n = static_cast<int>(a.size());
    Mat work = a;
    Mat inv = mat_identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (work[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw InternalConsistencyError("mat_inverse: singular matrix");
        std::swap(work[piv], work[col]);
        std::swap(inv[piv], inv[col]);
        const Rat d = work[col][col];
        for (int j = 0; j < n; ++j) { work[col][j] /= d; inv[col][j] /= d; }
        for (int r = 0; r < n; ++r) {
            if (r == col || work[r][col] == 0) continue;
            const Rat f = work[r][col];
            for (int j = 0; j < n; ++j) {
                work[r][j] -= f * work[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<int> rref_inplace(std::vector<Vec>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < ncols && lead < rows.size(); ++col) {
        std::size_t piv = lead;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[lead]);
        const Rat d = rows[lead][col];
        for (std::size_t j = col; j < ncols; ++j) rows[lead][j] /= d;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col] == 0) continue;
            const Rat f = rows[r][col];
            for (std::size_t j = col; j < ncols; ++j) rows[r][j] -= f * rows[lead][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++lead;
    }
    rows.resize(pivots.size()); // drop zero rows
    return pivots;
}

int mat_rank(Mat a) {
    return static_cast<int>(rref_inplace(a).size());
}

Vec primitive(const Vec& v) {
    // clear denominators, then divide by the gcd of the numerators
    BigInt l = 1;
    for (const auto& x : v) l = lcm(l, denominator(x));
    BigInt g = 0;
    std::vector<BigInt> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = numerator(v[i]) * (l / denominator(v[i]));
        g = gcd(g, ints[i]);
    }
    if (g == 0) return zero_vec(static_cast<int>(v.size()));
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(ints[i] / g);
    return r;
}

Vec primitive_signfree(const Vec& v) {
    Vec r = primitive(v);
    for (const auto& x : r) {
        if (x == 0) continue;
        if (x < 0) return neg(r);
        break;
    }
    return r;
}

Vec reduce_mod_span(Vec v, const std::vector<Vec>& rref_basis, const std::vector<int>& pivots) {
    for (std::size_t i = 0; i < rref_basis.size(); ++i) {
        const Rat c = v[pivots[i]];
        if (c != 0) axpy_inplace(-c, rref_basis[i], v);
    }
    return v;
}

std::vector<Vec> kernel_basis(int dim, const std::vector<Vec>& rows) {
    std::vector<Vec> work = rows;
    for (const auto& r : work)
        if (static_cast<int>(r.size()) != dim) throw DimensionMismatch("kernel_basis: row size");
    const std::vector<int> pivots = rref_inplace(work);
    std::vector<bool> is_pivot(dim, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(dim);
        v[free] = 1;
        for (std::size_t i = 0; i < work.size(); ++i) v[pivots[i]] = -work[i][free];
        basis.push_back(primitive_signfree(v));
    }
    std::sort(basis.begin(), basis.end(), lex_less);
    return basis;
}

} // namespace gcalpha
