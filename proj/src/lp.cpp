#include "gcalpha/lp.hpp"

#include <algorithm>

namespace gcalpha {
namespace {

// Tableau for:  minimize <cost, y>  s.t.  M y = d,  y >= 0,  d >= 0.
// Reduced costs are recomputed per iteration (simpler than maintaining the
// cost row, and our instances are small).
struct Tableau {
    Mat m;                  // rows x (nvars + 1), last column is the rhs
    std::vector<int> basis; // basic variable of each row
    int nvars;

    Rat& rhs(std::size_t row) { return m[row][nvars]; }

    void pivot(std::size_t row, int col) {
        const Rat piv = m[row][col];
        for (auto& x : m[row]) x /= piv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (int j = 0; j <= nvars; ++j) m[r][j] -= f * m[row][j];
        }
        basis[row] = col;
    }

    // Bland's rule; `allowed(j)` masks out columns that may not enter.
    // Returns false when optimal, throws marker when unbounded.
    struct UnboundedTag {};
    template <typename Allowed>
    bool step(const Vec& cost, Allowed allowed) {
        // reduced cost: c_j - sum_i c_basis(i) * m[i][j]
        int enter = -1;
        for (int j = 0; j < nvars; ++j) {
            if (!allowed(j)) continue;
            Rat red = cost[j];
            for (std::size_t i = 0; i < m.size(); ++i)
                if (cost[basis[i]] != 0) red -= cost[basis[i]] * m[i][j];
            if (red < 0) { enter = j; break; }
        }
        if (enter < 0) return false;
        int leave = -1;
        Rat best;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i][enter] <= 0) continue;
            const Rat ratio = rhs(i) / m[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = static_cast<int>(i);
                best = ratio;
            }
        }
        if (leave < 0) throw UnboundedTag{};
        pivot(static_cast<std::size_t>(leave), enter);
        return true;
    }

    Rat objective(const Vec& cost) const {
        Rat v = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (cost[basis[i]] != 0) v += cost[basis[i]] * m[i][nvars];
        return v;
    }
};

} // namespace

LPResult solve_lp_max(const Vec& c, const std::vector<Vec>& A, const Vec& b,
                      const std::vector<Vec>& E, const Vec& f) {
    const int n = static_cast<int>(c.size());
    if (A.size() != b.size() || E.size() != f.size())
        throw DimensionMismatch("solve_lp_max: row count mismatch");

    // Variables: x = u - w with u,w >= 0 (2n), slacks for A-rows, then one
    // artificial per row.  Internal sense is minimization of -<c,x>.
    const int n_rows = static_cast<int>(A.size() + E.size());
    const int n_slack = static_cast<int>(A.size());
    const int n_struct = 2 * n + n_slack;
    const int n_total = n_struct + n_rows;

    Tableau t;
    t.nvars = n_total;
    t.m.assign(n_rows, Vec(n_total + 1, Rat(0)));
    t.basis.assign(n_rows, -1);
    for (int r = 0; r < n_rows; ++r) {
        const bool ineq = r < static_cast<int>(A.size());
        const Vec& row = ineq ? A[r] : E[r - A.size()];
        const Rat rhs = ineq ? b[r] : f[r - A.size()];
        if (static_cast<int>(row.size()) != n)
            throw DimensionMismatch("solve_lp_max: column count mismatch");
        for (int j = 0; j < n; ++j) {
            t.m[r][j] = row[j];
            t.m[r][n + j] = -row[j];
        }
        if (ineq) t.m[r][2 * n + r] = 1;
        t.m[r][n_total] = rhs;
        if (t.m[r][n_total] < 0)
            for (auto& x : t.m[r]) x = -x;
        t.m[r][n_struct + r] = 1;
        t.basis[r] = n_struct + r;
    }

    // Phase 1: minimize the sum of artificials.
    Vec phase1(n_total, Rat(0));
    for (int j = n_struct; j < n_total; ++j) phase1[j] = 1;
    try {
        while (t.step(phase1, [](int) { return true; })) {}
    } catch (const Tableau::UnboundedTag&) {
        throw InternalConsistencyError("phase-1 LP unbounded");
    }
    if (t.objective(phase1) != 0)
        return {LPResult::Status::Infeasible, Rat(0), {}};

    // Drive leftover artificials out of the basis (or drop redundant rows).
    for (std::size_t r = 0; r < t.m.size();) {
        if (t.basis[r] < n_struct) { ++r; continue; }
        int col = -1;
        for (int j = 0; j < n_struct; ++j)
            if (t.m[r][j] != 0) { col = j; break; }
        if (col >= 0) {
            t.pivot(r, col);
            ++r;
        } else {
            t.m.erase(t.m.begin() + static_cast<std::ptrdiff_t>(r));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
        }
    }

    // Phase 2: artificials are locked out.
    Vec phase2(n_total, Rat(0));
    for (int j = 0; j < n; ++j) {
        phase2[j] = -c[j];
        phase2[n + j] = c[j];
    }
    try {
        while (t.step(phase2, [&](int j) { return j < n_struct; })) {}
    } catch (const Tableau::UnboundedTag&) {
        return {LPResult::Status::Unbounded, Rat(0), {}};
    }

    Vec y(n_total, Rat(0));
    for (std::size_t r = 0; r < t.m.size(); ++r) y[t.basis[r]] = t.m[r][n_total];
    Vec x(n);
    for (int j = 0; j < n; ++j) x[j] = y[j] - y[n + j];
    return {LPResult::Status::Optimal, -t.objective(phase2), std::move(x)};
}

} // namespace gcalpha
