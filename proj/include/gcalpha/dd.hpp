#pragma once

#include <vector>

#include "gcalpha/linalg.hpp"

namespace gcalpha {

// One homogeneous linear condition: <normal, x> >= 0, or = 0 when equality.
struct LinCond {
    Vec normal;
    bool equality = false;
};

// A cone in V-form: cone(rays) + span(lineality).  Rays are primitive integer
// vectors, reduced modulo the lineality space and lex-sorted; the lineality
// basis is in reduced row echelon form (primitive, sign-normalized, sorted).
// This makes the representation canonical: two runs describing the same cone
// produce identical output.
struct DDResult {
    std::vector<Vec> lineality;
    std::vector<Vec> rays;
};

// Double description: convert an H-form cone {x : conds} to V-form.
//
// Incremental algorithm with explicit lineality handling.  Each intermediate
// ray carries the set of already-processed inequalities it satisfies with
// equality; adjacency of two rays is decided purely combinatorially (no third
// ray's tight set contains the intersection of theirs).  We deliberately do
// NOT use the rank-based adjacency prefilter: it is unsound when the input
// contains implicit equalities, which ours routinely does (erosions of
// degenerate polytopes, fixed-point subspaces).
DDResult double_description(int dim, const std::vector<LinCond>& conds);

} // namespace gcalpha
