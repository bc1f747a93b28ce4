#include "gcalpha/newton.hpp"

#include <algorithm>
#include <set>

#include "gcalpha/lp.hpp"

namespace gcalpha {
namespace {

bool piece_less(const PLPiece& a, const PLPiece& b) {
    if (a.slope != b.slope) return lex_less(a.slope, b.slope);
    return a.constant < b.constant;
}

// Is there a point where piece i beats every other piece strictly?  If not,
// f = max of the others, and dropping the piece changes nothing (its slope
// stays inside the hull of the active slopes).
bool strictly_active_somewhere(const std::vector<PLPiece>& pieces, std::size_t i, int dim) {
    std::vector<Vec> rows;
    Vec rhs;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
        if (j == i) continue;
        // (m_j - m_i) x + t <= c_i - c_j
        Vec row = sub(pieces[j].slope, pieces[i].slope);
        row.push_back(Rat(1));
        rows.push_back(std::move(row));
        rhs.push_back(pieces[i].constant - pieces[j].constant);
    }
    { // t <= 1 keeps the LP bounded; only the sign of the optimum matters
        Vec row = zero_vec(dim + 1);
        row[dim] = 1;
        rows.push_back(std::move(row));
        rhs.push_back(Rat(1));
    }
    Vec c = zero_vec(dim + 1);
    c[dim] = 1;
    const LPResult res = solve_lp_max(c, rows, rhs);
    if (res.status != LPResult::Status::Optimal)
        throw InternalConsistencyError("piece-activity LP must be solvable");
    return res.objective > 0;
}

} // namespace

PLConvexFunction PLConvexFunction::from_pieces(int dim, std::vector<PLPiece> pieces) {
    if (pieces.empty()) throw ValidationError("a PL function needs at least one piece");
    for (const auto& p : pieces)
        if (static_cast<int>(p.slope.size()) != dim)
            throw DimensionMismatch("PL piece slope of wrong dimension");
    std::sort(pieces.begin(), pieces.end(), piece_less);
    pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
    if (pieces.size() > 1) {
        std::vector<PLPiece> kept;
        for (std::size_t i = 0; i < pieces.size(); ++i)
            if (strictly_active_somewhere(pieces, i, dim)) kept.push_back(pieces[i]);
        if (kept.empty())
            throw InternalConsistencyError("piece pruning removed everything");
        pieces = std::move(kept);
    }
    return PLConvexFunction(dim, std::move(pieces));
}

Rat PLConvexFunction::value(const Vec& x) const {
    Rat best = dot(pieces_[0].slope, x) + pieces_[0].constant;
    for (std::size_t i = 1; i < pieces_.size(); ++i)
        best = std::max(best, dot(pieces_[i].slope, x) + pieces_[i].constant);
    return best;
}

std::vector<Vec> PLConvexFunction::slopes() const {
    std::vector<Vec> out;
    for (const auto& p : pieces_) out.push_back(p.slope);
    return out;
}

PLConvexFunction pl_sum(const PLConvexFunction& f, const PLConvexFunction& g) {
    if (f.ambient_dim() != g.ambient_dim()) throw DimensionMismatch("pl_sum");
    std::vector<PLPiece> pieces;
    for (const auto& a : f.pieces())
        for (const auto& b : g.pieces())
            pieces.push_back({add(a.slope, b.slope), a.constant + b.constant});
    return PLConvexFunction::from_pieces(f.ambient_dim(), std::move(pieces));
}

PLConvexFunction pl_support_function(const Polytope& p) {
    if (p.is_empty() || !p.is_bounded())
        throw InternalConsistencyError("pl_support_function: needs a nonempty polytope");
    std::vector<PLPiece> pieces;
    for (const auto& v : p.vertices()) pieces.push_back({v, Rat(0)});
    return PLConvexFunction::from_pieces(p.ambient_dim(), std::move(pieces));
}

NewtonSet newton_set_on_cone(const PLConvexFunction& f, const Cone& sigma) {
    if (f.ambient_dim() != sigma.ambient_dim())
        throw DimensionMismatch("newton_set_on_cone");
    const int dim = f.ambient_dim();
    NewtonSet n{Polyhedron::empty_set(dim), hull(dim, f.slopes()), sigma.dual().negated()};
    const Polyhedron rec_poly = Polyhedron::from_generators(
        dim, {zero_vec(dim)}, n.recession.rays(), n.recession.lineality());
    n.set = minkowski_sum(n.body, rec_poly);
    return n;
}

NewtonSet newton_sum(const PLConvexFunction& f, const PLConvexFunction& g, const Cone& sigma) {
    const NewtonSet nf = newton_set_on_cone(f, sigma);
    const NewtonSet ng = newton_set_on_cone(g, sigma);
    NewtonSet out{minkowski_sum(nf.set, ng.set), minkowski_sum(nf.body, ng.body), nf.recession};
    const NewtonSet direct = newton_set_on_cone(pl_sum(f, g), sigma);
    if (out.set != direct.set)
        throw InternalConsistencyError(
            "newton_sum: Minkowski route disagrees with the direct computation");
    return out;
}

bool check_w_invariance(const Polytope& b, const WeylGroup& w) {
    if (b.is_empty()) return true;
    // a linear bijection maps the vertex set onto the image's vertex set, so
    // invariance is a permutation test on canonical vertex lists
    std::set<std::vector<std::string>> verts;
    auto key = [](const Vec& v) {
        std::vector<std::string> k;
        for (const auto& x : v) k.push_back(rat_str(x));
        return k;
    };
    for (const auto& v : b.vertices()) verts.insert(key(v));
    for (const auto& g : w.gen_weights) {
        for (const auto& v : b.vertices())
            if (!verts.count(key(mat_apply(g, v)))) return false;
    }
    return true;
}

bool check_w_invariance(const PLConvexFunction& f, const WeylGroup& w) {
    std::set<std::pair<std::vector<std::string>, std::string>> pieces;
    auto key = [](const PLPiece& p) {
        std::vector<std::string> k;
        for (const auto& x : p.slope) k.push_back(rat_str(x));
        return std::make_pair(k, rat_str(p.constant));
    };
    for (const auto& p : f.pieces()) pieces.insert(key(p));
    for (const auto& g : w.gen_weights) {
        for (const auto& p : f.pieces())
            if (!pieces.count(key({mat_apply(g, p.slope), p.constant}))) return false;
    }
    return true;
}

Polytope newton_body(const MetricSpec& spec, const Polytope& p, const WeylGroup& w) {
    if (p.is_empty() || !p.is_bounded() || !p.full_dimensional())
        throw DegeneratePolytope("newton_body: polarization polytope must be a full-dim polytope");
    const int dim = p.ambient_dim();
    const Polytope twop = p.scaled(Rat(2));
    switch (spec.kind) {
    case MetricSpec::Kind::Reference:
        return twop;
    case MetricSpec::Kind::NewtonBodyExplicit: {
        const Polytope& b = *spec.body;
        if (b.ambient_dim() != dim) throw DimensionMismatch("newton_body: body dimension");
        if (b.is_empty() || !b.is_bounded())
            throw ValidationError("explicit Newton body must be a nonempty polytope");
        if (!twop.contains(b))
            throw NewtonBodyOutOfRange("Newton body is not contained in 2P");
        if (!check_w_invariance(b, w))
            throw NotWInvariant("explicit Newton body is not Weyl invariant");
        return b;
    }
    case MetricSpec::Kind::PLPotential: {
        const PLConvexFunction& f = *spec.potential;
        if (f.ambient_dim() != dim) throw DimensionMismatch("newton_body: potential dimension");
        if (!check_w_invariance(f, w))
            throw NotWInvariant("PL potential is not Weyl invariant");
        Polytope n = hull(dim, f.slopes());
        if (!twop.contains(n))
            throw NewtonBodyOutOfRange("potential slopes leave 2P");
        return n;
    }
    case MetricSpec::Kind::Point: {
        const Vec& pt = *spec.point;
        if (static_cast<int>(pt.size()) != dim)
            throw DimensionMismatch("newton_body: point dimension");
        if (!twop.contains_point(pt))
            throw NewtonBodyOutOfRange("point metric outside 2P");
        for (const auto& g : w.gen_weights)
            if (mat_apply(g, pt) != pt)
                throw NotWInvariant("point metric must be a Weyl-fixed point");
        return hull(dim, {pt});
    }
    }
    throw InternalConsistencyError("newton_body: unhandled spec kind");
}

} // namespace gcalpha
