#include "gcalpha/invariants.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "gcalpha/errors.hpp"
#include "gcalpha/fan.hpp"

namespace gcalpha {

namespace {

std::string vec_key(const Vec& v) {
    std::string k;
    for (const auto& c : v) {
        k += rat_str(c);
        k += ',';
    }
    return k;
}

std::string mat_key(const Mat& m) {
    std::string k;
    for (const auto& row : m) {
        k += vec_key(row);
        k += ';';
    }
    return k;
}

// P cut down to the common fixed space of the given weight-space matrices.
Polytope fixed_part(const Polytope& p, const std::vector<Mat>& gens) {
    std::vector<AffEq> eqs;
    const int n = p.ambient_dim();
    for (const auto& g : gens) {
        for (int r = 0; r < n; ++r) {
            Vec a = g[static_cast<std::size_t>(r)];
            a[static_cast<std::size_t>(r)] -= 1;
            if (!is_zero(a)) eqs.push_back({std::move(a), Rat(0)});
        }
    }
    Polyhedron fix = Polyhedron::from_constraints(n, {}, eqs);
    return p.intersect(fix);
}

struct AlphaPieces {
    Polytope pw, k, d;
};

// Shared setup for every alpha variant: PW = fixed part of P, K = P + (-PW),
// D = Q eroded by H.
AlphaPieces alpha_pieces(const CompactificationData& data, const std::vector<Mat>& gens) {
    AlphaPieces out{fixed_part(data.p, gens), Polyhedron::empty_set(data.rs.dim),
                    Polyhedron::empty_set(data.rs.dim)};
    if (out.pw.is_empty())
        throw InternalConsistencyError("an invariant polytope has no fixed point");
    out.k = minkowski_sum(data.p, out.pw.negated());
    auto d = minkowski_diff(data.q, data.h);
    if (!d) throw EmptyErosion("anticanonical polytope erodes to nothing");
    out.d = *d;
    return out;
}

// min over the facet family of D (equations counted as facet pairs) of
// b / support(K, a), restricted to support(K, a) > 0.
ExtRat alpha_min(const AlphaPieces& pieces, InvariantReport* report) {
    std::vector<std::pair<Vec, Rat>> halfspaces;
    for (const auto& f : pieces.d.facets()) halfspaces.emplace_back(f.a, f.b);
    for (const auto& e : pieces.d.equations()) {
        halfspaces.emplace_back(e.a, e.b);
        halfspaces.emplace_back(neg(e.a), -e.b);
    }
    ExtRat best;
    std::vector<Vec> active;
    for (const auto& [a, b] : halfspaces) {
        Rat s = pieces.k.support_val(a);
        if (s <= 0) continue;
        ExtRat ratio{b / s};
        if (ratio < best) {
            best = ratio;
            active.clear();
        }
        if (!(best < ratio)) active.push_back(a);
    }
    if (report) {
        report->value = best;
        report->witness = active.empty() ? Vec{} : active.front();
        report->active_constraints = active;
    }
    return best;
}

} // namespace

CompactificationData CompactificationData::make(RootSystem rs, Polytope p, Polytope q,
                                                std::size_t weyl_cap) {
    if (p.ambient_dim() != rs.dim || q.ambient_dim() != rs.dim)
        throw DimensionMismatch("polytope ambient dimension does not match the root datum");
    if (q.is_empty()) throw EmptyQ("anticanonical polytope is empty");
    if (!q.full_dimensional() || !q.is_bounded())
        throw DegeneratePolytope("anticanonical polytope must be full-dimensional and bounded");
    if (!p.full_dimensional() || !p.is_bounded())
        throw DegeneratePolytope("polarization polytope must be full-dimensional and bounded");
    WeylGroup w = weyl_group(rs, weyl_cap);
    if (!check_w_invariance(p, w))
        throw NotWInvariant("polarization polytope is not Weyl-invariant");
    if (!check_w_invariance(q, w))
        throw NotWInvariant("anticanonical polytope is not Weyl-invariant");
    Polytope h = orbit_hull(w, scale(Rat(2), rs.rho));
    if (!q.interior_contains(h))
        throw NotFano("orbit hull of 2*rho must lie in the interior of the anticanonical "
                      "polytope");
    CompactificationData data{std::move(rs), std::move(w), std::move(p), std::move(q),
                              std::move(h)};
    return data;
}

ExtRat lct(const CompactificationData& data, const MetricSpec& spec, InvariantReport* report) {
    Polytope n = newton_body(spec, data.p, data.w);
    Fan refined = common_refinement(normal_fan(n), normal_fan(data.q));
    ExtRat best;
    std::vector<Vec> active;
    for (const auto& y : fan_rays(refined)) {
        Rat den = 2 * data.p.support_val(y) - n.support_val(y);
        Rat num = 2 * data.q.support_val(y) - 2 * data.h.support_val(y);
        if (num <= 0)
            throw InternalConsistencyError("anticanonical support does not dominate; the "
                                           "admissibility invariant is broken");
        if (den <= 0) continue;
        ExtRat ratio{num / den};
        if (ratio < best) {
            best = ratio;
            active.clear();
        }
        if (!(best < ratio)) active.push_back(y);
    }
    if (report) {
        report->value = best;
        report->witness = active.empty() ? Vec{} : active.front();
        report->active_constraints = active;
        report->fixed_dim = 0;
    }
    return best;
}

ExtRat alpha(const CompactificationData& data, InvariantReport* report) {
    AlphaPieces pieces = alpha_pieces(data, data.w.gen_weights);
    ExtRat v = alpha_min(pieces, report);
    if (report)
        report->fixed_dim =
            static_cast<int>(fixed_subspace(data.rs.dim, data.w.gen_weights).size());
    return v;
}

ExtRat alpha_semisimple(const CompactificationData& data) {
    if (!data.rs.semisimple())
        throw NotSemisimple("inradius shortcut requires a trivial fixed subspace");
    auto d = minkowski_diff(data.q, data.h);
    if (!d) throw EmptyErosion("anticanonical polytope erodes to nothing");
    ExtRat inr = inradius(data.p, *d);
    ExtRat direct = alpha(data);
    if (!(inr == direct))
        throw InternalConsistencyError("inradius route and facet route disagree on alpha");
    return inr;
}

ExtRat alpha_with_symmetries(const CompactificationData& data, const SymmetryGroup& o,
                             InvariantReport* report, std::size_t closure_cap) {
    const int n = data.rs.dim;
    auto preserves = [&](const Mat& g, const Polytope& poly) {
        std::set<std::string> keys;
        for (const auto& v : poly.vertices()) keys.insert(vec_key(v));
        for (const auto& v : poly.vertices())
            if (!keys.count(vec_key(mat_apply(g, v)))) return false;
        return true;
    };
    for (const auto& g : o.generators) {
        if (static_cast<int>(g.size()) != n)
            throw DimensionMismatch("symmetry generator has the wrong shape");
        for (const auto& row : g)
            if (static_cast<int>(row.size()) != n)
                throw DimensionMismatch("symmetry generator has the wrong shape");
        if (!preserves(g, data.p))
            throw SymmetryViolation("a symmetry generator moves the polarization polytope");
        if (!preserves(g, data.q))
            throw SymmetryViolation("a symmetry generator moves the anticanonical polytope");
    }

    // The fixed space only needs the generators, but the formula is only
    // meaningful for a finite group, so close <W, O> and count.
    std::vector<Mat> gens = data.w.gen_weights;
    gens.insert(gens.end(), o.generators.begin(), o.generators.end());
    {
        std::set<std::string> seen;
        std::vector<Mat> frontier{mat_identity(n)};
        seen.insert(mat_key(frontier.front()));
        while (!frontier.empty()) {
            Mat m = std::move(frontier.back());
            frontier.pop_back();
            for (const auto& g : gens) {
                Mat prod = mat_mul(g, m);
                if (seen.insert(mat_key(prod)).second) {
                    if (seen.size() > closure_cap)
                        throw GroupTooLarge("symmetry closure exceeds the cap");
                    frontier.push_back(std::move(prod));
                }
            }
        }
    }

    AlphaPieces pieces = alpha_pieces(data, gens);
    ExtRat v = alpha_min(pieces, report);
    if (report) report->fixed_dim = static_cast<int>(fixed_subspace(n, gens).size());
    return v;
}

FanoReport fano_check(const RootSystem& rs, const WeylGroup& w, const Polytope& q) {
    Polytope h = orbit_hull(w, scale(Rat(2), rs.rho));
    FanoReport rep;
    rep.ok = q.interior_contains(h);
    for (const auto& f : q.facets()) rep.slacks.emplace_back(f.a, f.b - h.support_val(f.a));
    return rep;
}

} // namespace gcalpha
