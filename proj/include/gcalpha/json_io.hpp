#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcalpha/invariants.hpp"
#include "gcalpha/newton.hpp"
#include "gcalpha/numcheck.hpp"
#include "gcalpha/polytope.hpp"
#include "gcalpha/rootsys.hpp"

namespace gcalpha {

// All serialization goes through ordered_json so emitted documents have a
// deterministic key order.
using json = nlohmann::ordered_json;

// Rationals print as canonical "p/q" (plain "p" when q = 1); parsing accepts
// integer literals and "p/q" strings, nothing else (floats are inexact and
// rejected).
json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json vec_to_json(const Vec& v);       // list of rationals per rat_to_json
json int_vec_to_json(const Vec& v);   // list of JSON integers; requires integer entries
Vec vec_from_json(const json& j);

// {"dim": r, "vertices": [...]} with optional "rays"/"lineality" when
// unbounded; parses that form or {"dim": r, "facets": [{"a","b"},...]}
// (optionally with "equations").
json polytope_to_json(const Polyhedron& p);
Polyhedron polytope_from_json(const json& j);

json cone_to_json(const Cone& c);     // {"rays": [[ints]...]} (+ "lineality")
Cone cone_from_json(const json& j, int dim);

json fan_to_json(const Fan& f);

json pl_to_json(const PLConvexFunction& f);
PLConvexFunction pl_from_json(const json& j, int dim);

json metric_to_json(const MetricSpec& spec);
MetricSpec metric_from_json(const json& j);

json report_to_json(const InvariantReport& rep, bool with_fixed_dim);
json verdict_to_json(const ConvergenceVerdict& v);
std::string verdict_name(Verdict v);

// Parsed problem document.  P/Q stay unresolved when given as "wonderful";
// resolve_polytopes() builds them once the Weyl group is known.
struct ProblemFile {
    RootSystem rs;
    bool p_wonderful = false, q_wonderful = false;
    std::optional<Polytope> p, q;
    std::optional<MetricSpec> metric;
    std::vector<Mat> symmetries;
    // verify-only block
    std::optional<PLConvexFunction> exponent;
    std::vector<double> radii;
    int samples_per_cell = 0; // 0 = default
    std::vector<Cone> decomposition;
};

ProblemFile parse_problem(const json& j, std::size_t root_bound = kDefaultRootBound);

json error_to_json(const std::string& code, const std::string& message);

} // namespace gcalpha
