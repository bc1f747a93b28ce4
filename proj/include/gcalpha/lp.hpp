#pragma once

#include "gcalpha/linalg.hpp"

namespace gcalpha {

struct LPResult {
    enum class Status { Optimal, Unbounded, Infeasible };
    Status status;
    Rat objective; // valid when Optimal
    Vec x;         // a maximizer, valid when Optimal
};

// maximize <c,x>  subject to  A x <= b,  E x = f,  x free.
// Exact two-phase dense simplex with Bland's rule (terminates on any input).
LPResult solve_lp_max(const Vec& c, const std::vector<Vec>& A, const Vec& b,
                      const std::vector<Vec>& E = {}, const Vec& f = {});

} // namespace gcalpha
