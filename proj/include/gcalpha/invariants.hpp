#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcalpha/newton.hpp"
#include "gcalpha/polytope.hpp"
#include "gcalpha/rootsys.hpp"

namespace gcalpha {

// Validated input bundle for the invariant formulas: root system, its Weyl
// group, the polarization polytope P, the anticanonical polytope Q (both
// full-dimensional and W-invariant), and the derived polytope
// H = orbit hull of 2*rho.  Construction enforces H inside the interior of Q
// (the Fano admissibility condition); everything downstream relies on it.
struct CompactificationData {
    RootSystem rs;
    WeylGroup w;
    Polytope p, q, h;

    static CompactificationData make(RootSystem rs, Polytope p, Polytope q,
                                     std::size_t weyl_cap = kDefaultWeylCap);
};

struct SymmetryGroup {
    std::vector<Mat> generators; // acting on the weight space
};

// Result + audit trail: the achieving direction and every constraint that is
// tight at the optimum.  For +infinity results the witness is empty.
struct InvariantReport {
    ExtRat value;
    Vec witness;                          // ray (lct) or facet normal (alpha)
    std::vector<Vec> active_constraints;  // all optimum-achieving directions
    int fixed_dim = 0;                    // dim of the fixed subspace (alpha)
};

// Largest c with 2H + 2cP inside cN + 2Q, where N is the Newton body of the
// metric spec; +infinity when no direction constrains c (e.g. N = 2P).
ExtRat lct(const CompactificationData& data, const MetricSpec& spec,
           InvariantReport* report = nullptr);

// Largest c with c(P + (-P^W)) inside Q erased by H.
ExtRat alpha(const CompactificationData& data, InvariantReport* report = nullptr);

// Same number through the inradius LP; valid only when the W-fixed subspace
// is {0}.  Asserts agreement with alpha().
ExtRat alpha_semisimple(const CompactificationData& data);

// Alpha with extra symmetries: the fixed space shrinks to that of <W, O>.
ExtRat alpha_with_symmetries(const CompactificationData& data, const SymmetryGroup& o,
                             InvariantReport* report = nullptr,
                             std::size_t closure_cap = kDefaultWeylCap);

struct FanoReport {
    bool ok;
    // per-facet (normal, slack b - support(H,a)); all slacks > 0 iff ok
    std::vector<std::pair<Vec, Rat>> slacks;
};

// The admissibility check H inside Int(Q), without constructing the full
// validated bundle.
FanoReport fano_check(const RootSystem& rs, const WeylGroup& w, const Polytope& q);

} // namespace gcalpha
