#pragma once

#include <vector>

#include "gcalpha/rational.hpp"

namespace gcalpha {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>; // row major

inline Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("add: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("sub: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Rat& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Vec neg(const Vec& a) { return scale(Rat(-1), a); }

inline bool is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n)); }

// a*x + y, the workhorse of elimination loops.
inline void axpy_inplace(const Rat& a, const Vec& x, Vec& y) {
    if (x.size() != y.size()) throw DimensionMismatch("axpy: size mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

inline bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

inline Vec mat_apply(const Mat& m, const Vec& x) {
    Vec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& a);
Mat mat_identity(int n);
// Inverse via Gauss-Jordan; throws DegeneratePolytope-free InternalConsistencyError
// style error if singular (callers only invert known-invertible matrices).
Mat mat_inverse(const Mat& a);
int mat_rank(Mat a); // by value: destroyed by elimination

// Scale a rational vector to the unique primitive integer vector on the same
// ray (positive multiple; gcd of entries 1).  Zero vector is returned as is.
Vec primitive(const Vec& v);
// primitive() and additionally flip so the first nonzero entry is positive.
// Only valid for sign-free data (equations, lineality generators).
Vec primitive_signfree(const Vec& v);

// Basis of the null space {x : rows * x = 0}, via reduced row echelon form.
// Result vectors are primitive and lex-sorted.
std::vector<Vec> kernel_basis(int dim, const std::vector<Vec>& rows);

// Reduce v modulo span(basis): basis must be in reduced row echelon form with
// `pivots` the pivot column of each row.  Used to canonicalize rays modulo a
// lineality space.
Vec reduce_mod_span(Vec v, const std::vector<Vec>& rref_basis, const std::vector<int>& pivots);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref_inplace(std::vector<Vec>& rows);

} // namespace gcalpha
