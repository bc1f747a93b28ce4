#pragma once

#include <cstdint>
#include <vector>

#include "gcalpha/newton.hpp"
#include "gcalpha/rootsys.hpp"

namespace gcalpha {

// Float-only numerical side; quarantined from the exact core.  Everything
// here is Monte-Carlo evidence, never an oracle.

// Density of the invariant-measure pushforward to the chamber:
// prod over positive roots of sinh(alpha(x))^2.  Throws OutsideChamber when
// some simple root is negative on x.
double kak_density(const RootSystem& rs, const Vec& x);

// Integrand exp(-l(x)) * J(x) over the chamber, truncated to sup-norm boxes
// of increasing radius.  Deterministic for a fixed seed: shell j draws from
// its own generator regardless of evaluation order.
struct IntegrandSpec {
    RootSystem rs;
    PLConvexFunction l;
    std::vector<double> truncation_radii{2.0, 4.0, 8.0, 16.0};
    int samples_per_cell = 100000;
    std::uint64_t seed = 12345;
};

enum class Verdict { Converging, Diverging, Inconclusive };

struct ConvergenceVerdict {
    std::vector<double> partial_integrals; // cumulative, one per radius
    std::vector<double> increments;        // per-shell estimates
    std::vector<double> ratio_trend;       // successive increment ratios
    double fitted_ratio = 0.0;             // geometric growth of increments
    Verdict verdict = Verdict::Inconclusive;
};

ConvergenceVerdict estimate_integral(const IntegrandSpec& spec);

// Exact test the numerics are compared against: 4*rho interior to the
// chamber Newton set of l.  When a cone decomposition of the chamber is
// supplied, the set is also computed as the intersection of the per-cone
// Newton sets and must agree with the direct computation.
bool exact_integrability(const RootSystem& rs, const PLConvexFunction& l,
                         const std::vector<Cone>& decomposition = {});

struct CriterionCheck {
    bool exact_integrable = false;
    ConvergenceVerdict numeric;
    enum class Outcome { Agree, Contradict, Inconclusive } outcome;
};

// Runs both sides of the integrability criterion.  Inconclusive numerics are
// not a disagreement.
CriterionCheck criterion_agreement(const IntegrandSpec& spec,
                                   const std::vector<Cone>& decomposition = {});

} // namespace gcalpha
