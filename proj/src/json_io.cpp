#include "gcalpha/json_io.hpp"

#include <limits>

#include "gcalpha/errors.hpp"

namespace gcalpha {

json rat_to_json(const Rat& r) { return json(rat_str(r)); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw ValidationError("expected an integer or a \"p/q\" string, got: " + j.dump());
}

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(rat_to_json(c));
    return a;
}

json int_vec_to_json(const Vec& v) {
    json a = json::array();
    for (const auto& c : v) {
        if (denominator(c) == 1 && numerator(c) <= std::numeric_limits<long long>::max() &&
            numerator(c) >= std::numeric_limits<long long>::min())
            a.push_back(static_cast<long long>(numerator(c)));
        else
            a.push_back(rat_str(c));
    }
    return a;
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("expected a coordinate list, got: " + j.dump());
    Vec v;
    for (const auto& e : j) v.push_back(rat_from_json(e));
    return v;
}

namespace {

std::vector<Vec> vec_list(const json& j) {
    if (!j.is_array()) throw ValidationError("expected a list of vectors, got: " + j.dump());
    std::vector<Vec> out;
    for (const auto& e : j) out.push_back(vec_from_json(e));
    return out;
}

int dim_field(const json& j) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ValidationError("missing integer \"dim\" field");
    int d = j["dim"].get<int>();
    if (d < 0) throw ValidationError("\"dim\" must be nonnegative");
    return d;
}

} // namespace

json polytope_to_json(const Polyhedron& p) {
    json j;
    j["dim"] = p.ambient_dim();
    json vs = json::array();
    for (const auto& v : p.vertices()) vs.push_back(vec_to_json(v));
    j["vertices"] = vs;
    if (!p.rays().empty()) {
        json rs = json::array();
        for (const auto& r : p.rays()) rs.push_back(int_vec_to_json(r));
        j["rays"] = rs;
    }
    if (!p.lineality().empty()) {
        json ls = json::array();
        for (const auto& l : p.lineality()) ls.push_back(int_vec_to_json(l));
        j["lineality"] = ls;
    }
    return j;
}

Polyhedron polytope_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("expected a polytope object, got: " + j.dump());
    int d = dim_field(j);
    if (j.contains("vertices")) {
        std::vector<Vec> pts = vec_list(j["vertices"]);
        std::vector<Vec> rays, lin;
        if (j.contains("rays")) rays = vec_list(j["rays"]);
        if (j.contains("lineality")) lin = vec_list(j["lineality"]);
        for (const auto& v : pts)
            if (static_cast<int>(v.size()) != d)
                throw DimensionMismatch("vertex length disagrees with \"dim\"");
        for (const auto& v : rays)
            if (static_cast<int>(v.size()) != d)
                throw DimensionMismatch("ray length disagrees with \"dim\"");
        for (const auto& v : lin)
            if (static_cast<int>(v.size()) != d)
                throw DimensionMismatch("lineality length disagrees with \"dim\"");
        return Polyhedron::from_generators(d, pts, rays, lin);
    }
    if (j.contains("facets")) {
        std::vector<Facet> facets;
        for (const auto& e : j["facets"]) {
            if (!e.is_object() || !e.contains("a") || !e.contains("b"))
                throw ValidationError("facet entries need \"a\" and \"b\"");
            Vec a = vec_from_json(e["a"]);
            if (static_cast<int>(a.size()) != d)
                throw DimensionMismatch("facet normal length disagrees with \"dim\"");
            facets.push_back({std::move(a), rat_from_json(e["b"])});
        }
        std::vector<AffEq> eqs;
        if (j.contains("equations")) {
            for (const auto& e : j["equations"]) {
                if (!e.is_object() || !e.contains("a") || !e.contains("b"))
                    throw ValidationError("equation entries need \"a\" and \"b\"");
                Vec a = vec_from_json(e["a"]);
                if (static_cast<int>(a.size()) != d)
                    throw DimensionMismatch("equation normal length disagrees with \"dim\"");
                eqs.push_back({std::move(a), rat_from_json(e["b"])});
            }
        }
        return Polyhedron::from_constraints(d, facets, eqs);
    }
    throw ValidationError("polytope object needs \"vertices\" or \"facets\"");
}

json cone_to_json(const Cone& c) {
    json j;
    json rs = json::array();
    for (const auto& r : c.rays()) rs.push_back(int_vec_to_json(r));
    j["rays"] = rs;
    if (!c.lineality().empty()) {
        json ls = json::array();
        for (const auto& l : c.lineality()) ls.push_back(int_vec_to_json(l));
        j["lineality"] = ls;
    }
    return j;
}

Cone cone_from_json(const json& j, int dim) {
    if (!j.is_object() || !j.contains("rays"))
        throw ValidationError("expected a cone object with \"rays\"");
    std::vector<Vec> rays = vec_list(j["rays"]);
    std::vector<Vec> lin;
    if (j.contains("lineality")) lin = vec_list(j["lineality"]);
    for (const auto& v : rays)
        if (static_cast<int>(v.size()) != dim) throw DimensionMismatch("cone ray length");
    for (const auto& v : lin)
        if (static_cast<int>(v.size()) != dim) throw DimensionMismatch("cone lineality length");
    return Cone::from_rays(dim, rays, lin);
}

json fan_to_json(const Fan& f) {
    json a = json::array();
    for (const auto& c : f.maximal) a.push_back(cone_to_json(c));
    return a;
}

json pl_to_json(const PLConvexFunction& f) {
    json pieces = json::array();
    for (const auto& pc : f.pieces())
        pieces.push_back(json{{"slope", vec_to_json(pc.slope)}, {"const", rat_to_json(pc.constant)}});
    return json{{"pieces", pieces}};
}

namespace {

std::vector<PLPiece> pieces_from_json(const json& arr) {
    if (!arr.is_array() || arr.empty())
        throw ValidationError("expected a nonempty list of {\"slope\",\"const\"} pieces");
    std::vector<PLPiece> pieces;
    for (const auto& e : arr) {
        if (!e.is_object() || !e.contains("slope") || !e.contains("const"))
            throw ValidationError("pieces need \"slope\" and \"const\"");
        pieces.push_back({vec_from_json(e["slope"]), rat_from_json(e["const"])});
    }
    return pieces;
}

} // namespace

PLConvexFunction pl_from_json(const json& j, int dim) {
    const json& arr = j.is_object() && j.contains("pieces") ? j["pieces"] : j;
    return PLConvexFunction::from_pieces(dim, pieces_from_json(arr));
}

json metric_to_json(const MetricSpec& spec) {
    switch (spec.kind) {
    case MetricSpec::Kind::Reference:
        return json{{"type", "reference"}};
    case MetricSpec::Kind::NewtonBodyExplicit:
        return json{{"type", "newton_body"}, {"polytope", polytope_to_json(*spec.body)}};
    case MetricSpec::Kind::PLPotential:
        return json{{"type", "pl_potential"}, {"pieces", pl_to_json(*spec.potential)["pieces"]}};
    case MetricSpec::Kind::Point:
        return json{{"type", "point"}, {"p", vec_to_json(*spec.point)}};
    }
    throw InternalConsistencyError("unhandled metric kind");
}

MetricSpec metric_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ValidationError("metric needs a \"type\" string");
    std::string type = j["type"].get<std::string>();
    if (type == "reference") return MetricSpec::reference();
    if (type == "newton_body") {
        if (!j.contains("polytope")) throw ValidationError("newton_body metric needs \"polytope\"");
        return MetricSpec::newton_body_explicit(polytope_from_json(j["polytope"]));
    }
    if (type == "pl_potential") {
        if (!j.contains("pieces")) throw ValidationError("pl_potential metric needs \"pieces\"");
        std::vector<PLPiece> pieces = pieces_from_json(j["pieces"]);
        int dim = static_cast<int>(pieces.front().slope.size());
        return MetricSpec::pl_potential(PLConvexFunction::from_pieces(dim, std::move(pieces)));
    }
    if (type == "point") {
        if (!j.contains("p")) throw ValidationError("point metric needs \"p\"");
        return MetricSpec::point_metric(vec_from_json(j["p"]));
    }
    throw ValidationError("unknown metric type: " + type);
}

json report_to_json(const InvariantReport& rep, bool with_fixed_dim) {
    json j;
    j["value"] = rep.value.str();
    if (with_fixed_dim) j["fixed_dim"] = rep.fixed_dim;
    j["witness_ray"] = int_vec_to_json(rep.witness);
    json act = json::array();
    for (const auto& a : rep.active_constraints) act.push_back(int_vec_to_json(a));
    j["active_constraints"] = act;
    return j;
}

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Converging: return "Converging";
    case Verdict::Diverging: return "Diverging";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

json verdict_to_json(const ConvergenceVerdict& v) {
    json j;
    j["verdict"] = verdict_name(v.verdict);
    j["fitted_ratio"] = v.fitted_ratio;
    j["partial_integrals"] = v.partial_integrals;
    j["increments"] = v.increments;
    j["ratio_trend"] = v.ratio_trend;
    return j;
}

ProblemFile parse_problem(const json& j, std::size_t root_bound) {
    if (!j.is_object()) throw ValidationError("problem file must be a JSON object");
    if (!j.contains("root_system")) throw ValidationError("problem file needs \"root_system\"");

    RootSystem rs;
    const json& rsj = j["root_system"];
    if (rsj.is_string()) {
        rs = build_root_system(rsj.get<std::string>(), root_bound);
    } else if (rsj.is_object()) {
        int d = dim_field(rsj);
        if (!rsj.contains("simple_roots") || !rsj.contains("simple_coroots"))
            throw ValidationError("custom root system needs \"simple_roots\" and \"simple_coroots\"");
        rs = build_custom_root_system(d, vec_list(rsj["simple_roots"]),
                                      vec_list(rsj["simple_coroots"]), root_bound);
    } else {
        throw ValidationError("\"root_system\" must be a preset label or a custom block");
    }

    ProblemFile pf{std::move(rs), false, false, std::nullopt, std::nullopt,
                   std::nullopt, {},    std::nullopt, {},           0,
                   {}};
    auto read_poly = [&](const char* key, bool& wonderful, std::optional<Polytope>& out) {
        if (!j.contains(key)) return;
        const json& e = j[key];
        if (e.is_string() && e.get<std::string>() == "wonderful") {
            if (!pf.rs.semisimple())
                throw NotSemisimple("the wonderful preset needs a semisimple root system");
            wonderful = true;
            return;
        }
        out = polytope_from_json(e);
    };
    read_poly("P", pf.p_wonderful, pf.p);
    read_poly("Q", pf.q_wonderful, pf.q);

    if (j.contains("metric")) pf.metric = metric_from_json(j["metric"]);

    if (j.contains("symmetries")) {
        if (!j["symmetries"].is_array()) throw ValidationError("\"symmetries\" must be a list");
        for (const auto& m : j["symmetries"]) pf.symmetries.push_back(vec_list(m));
    }

    if (j.contains("integrand")) {
        const json& ig = j["integrand"];
        if (!ig.is_object() || !ig.contains("exponent"))
            throw ValidationError("\"integrand\" needs an \"exponent\" piece list");
        pf.exponent = pl_from_json(ig["exponent"], pf.rs.dim);
        if (ig.contains("radii")) {
            for (const auto& r : ig["radii"]) pf.radii.push_back(to_double(rat_from_json(r)));
        }
        if (ig.contains("samples")) {
            if (!ig["samples"].is_number_integer())
                throw ValidationError("\"samples\" must be an integer");
            pf.samples_per_cell = ig["samples"].get<int>();
        }
        if (ig.contains("decomposition")) {
            for (const auto& c : ig["decomposition"])
                pf.decomposition.push_back(cone_from_json(c, pf.rs.dim));
        }
    }
    return pf;
}

json error_to_json(const std::string& code, const std::string& message) {
    return json{{"error", code}, {"message", message}};
}

} // namespace gcalpha
