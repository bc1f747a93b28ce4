#include "gcalpha/polytope.hpp"

#include <algorithm>

#include "gcalpha/lp.hpp"

namespace gcalpha {
namespace {

// generators -> (facets, equations), via DD on the dual cone
// D = {(s,y) : s + <y,v> >= 0 for vertices, <y,r> >= 0 for rays,
//              <y,l> = 0 for lineality}.
// Extreme rays of D with nonzero y-part are the facets (a,b) = (-y, s);
// the y == 0 ray is the vacuous "1 >= 0" and is skipped.  The lineality
// space of D gives the affine-hull equations <y,x> = -s.
void generators_to_constraints(int dim, const std::vector<Vec>& pts,
                               const std::vector<Vec>& rays, const std::vector<Vec>& lin,
                               std::vector<Facet>& facets_out, std::vector<AffEq>& eqs_out) {
    std::vector<LinCond> conds;
    auto lifted = [dim](const Rat& first, const Vec& rest) {
        Vec v(dim + 1);
        v[0] = first;
        for (int i = 0; i < dim; ++i) v[i + 1] = rest[i];
        return v;
    };
    for (const auto& v : pts) conds.push_back({lifted(Rat(1), v), false});
    for (const auto& r : rays) conds.push_back({lifted(Rat(0), r), false});
    for (const auto& l : lin) conds.push_back({lifted(Rat(0), l), true});

    const DDResult dual = double_description(dim + 1, conds);

    // equation rows (a | b) from dual lineality (s,y): <y,x> = -s
    std::vector<Vec> eq_rows;
    for (const auto& l : dual.lineality) {
        Vec row(dim + 1);
        for (int i = 0; i < dim; ++i) row[i] = l[i + 1];
        row[dim] = -l[0];
        eq_rows.push_back(std::move(row));
    }
    const std::vector<int> piv = rref_inplace(eq_rows);
    eqs_out.clear();
    for (std::size_t i = 0; i < eq_rows.size(); ++i) {
        if (piv[i] == dim)
            throw InternalConsistencyError("generators_to_constraints: inconsistent equations");
        const Vec row = primitive_signfree(eq_rows[i]);
        eqs_out.push_back({Vec(row.begin(), row.end() - 1), row.back()});
    }

    // The y-parts of the equations span the normal space of the affine hull.
    // A dual ray whose y-part lies in that span is the vacuous inequality
    // "const >= 0" (the lifted cone's trivial ray) and yields no facet.
    std::vector<Vec> eq_span;
    for (const auto& e : eqs_out) eq_span.push_back(e.a);
    const std::vector<int> eq_piv = rref_inplace(eq_span);

    facets_out.clear();
    for (const auto& ray : dual.rays) {
        Vec y(dim);
        for (int i = 0; i < dim; ++i) y[i] = ray[i + 1];
        if (is_zero(reduce_mod_span(y, eq_span, eq_piv))) continue; // trivial
        Vec a(dim);
        BigInt g = 0;
        for (int i = 0; i < dim; ++i) {
            a[i] = -ray[i + 1];
            g = gcd(g, numerator(a[i])); // integral: DD rays are primitive
        }
        for (auto& x : a) x /= Rat(g);
        facets_out.push_back({std::move(a), ray[0] / Rat(g)});
    }
    auto facet_less = [](const Facet& x, const Facet& y) {
        return x.a != y.a ? lex_less(x.a, y.a) : x.b < y.b;
    };
    auto eq_less = [](const AffEq& x, const AffEq& y) {
        return x.a != y.a ? lex_less(x.a, y.a) : x.b < y.b;
    };
    std::sort(facets_out.begin(), facets_out.end(), facet_less);
    std::sort(eqs_out.begin(), eqs_out.end(), eq_less);
}

// DD picks vertex/ray representatives only up to the lineality span, so two
// runs over different constraint lists can describe one polyhedron with
// different generators.  Reducing every generator modulo that span pins the
// unique V-form that operator== relies on.
void canonicalize_generators(std::vector<Vec>& verts, std::vector<Vec>& rays,
                             std::vector<Vec>& lin) {
    if (!lin.empty()) {
        std::vector<Vec> basis = lin;
        const std::vector<int> piv = rref_inplace(basis);
        for (auto& v : verts) v = reduce_mod_span(v, basis, piv);
        std::vector<Vec> kept;
        for (const auto& r : rays) {
            Vec red = reduce_mod_span(r, basis, piv);
            if (!is_zero(red)) kept.push_back(primitive(red));
        }
        rays = std::move(kept);
    }
    std::sort(verts.begin(), verts.end(), lex_less);
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::sort(rays.begin(), rays.end(), lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    std::sort(lin.begin(), lin.end(), lex_less);
}

// constraints -> (vertices, rays, lineality), via DD on the homogenization
// C = {(t,x) : t*b - <a,x> >= 0, t >= 0}.  t>0 rays are vertices, t=0 rays
// the recession cone, the lineality passes through with t = 0.
// Returns false when the constraint set is infeasible.
bool constraints_to_generators(int dim, const std::vector<Facet>& facets,
                               const std::vector<AffEq>& eqs, std::vector<Vec>& verts_out,
                               std::vector<Vec>& rays_out, std::vector<Vec>& lin_out) {
    std::vector<LinCond> conds;
    auto lifted = [dim](const Rat& b, const Vec& a) {
        Vec v(dim + 1);
        v[0] = b;
        for (int i = 0; i < dim; ++i) v[i + 1] = -a[i];
        return v;
    };
    for (const auto& f : facets) conds.push_back({lifted(f.b, f.a), false});
    for (const auto& e : eqs) conds.push_back({lifted(e.b, e.a), true});
    {
        Vec t_nonneg = zero_vec(dim + 1);
        t_nonneg[0] = 1;
        conds.push_back({std::move(t_nonneg), false});
    }

    const DDResult hom = double_description(dim + 1, conds);

    verts_out.clear();
    rays_out.clear();
    lin_out.clear();
    for (const auto& l : hom.lineality) {
        if (l[0] != 0)
            throw InternalConsistencyError("constraints_to_generators: lineality with t != 0");
        lin_out.emplace_back(l.begin() + 1, l.end());
    }
    for (const auto& r : hom.rays) {
        if (r[0] < 0) throw InternalConsistencyError("constraints_to_generators: t < 0 ray");
        if (r[0] == 0) {
            rays_out.emplace_back(r.begin() + 1, r.end());
        } else {
            Vec v(dim);
            for (int i = 0; i < dim; ++i) v[i] = r[i + 1] / r[0];
            verts_out.push_back(std::move(v));
        }
    }
    if (verts_out.empty()) return false; // infeasible (it contains no point)
    canonicalize_generators(verts_out, rays_out, lin_out);
    return true;
}

} // namespace

Polyhedron Polyhedron::from_points(int dim, const std::vector<Vec>& pts) {
    return from_generators(dim, pts, {}, {});
}

Polyhedron Polyhedron::from_generators(int dim, const std::vector<Vec>& pts,
                                       const std::vector<Vec>& rays,
                                       const std::vector<Vec>& lineality) {
    for (const auto* grp : {&pts, &rays, &lineality})
        for (const auto& v : *grp)
            if (static_cast<int>(v.size()) != dim)
                throw DimensionMismatch("from_generators: vector of wrong dimension");
    Polyhedron p(dim);
    if (pts.empty()) return p; // no points, no polyhedron
    generators_to_constraints(dim, pts, rays, lineality, p.facets_, p.eqs_);
    if (!constraints_to_generators(dim, p.facets_, p.eqs_, p.verts_, p.rays_, p.lin_))
        throw InternalConsistencyError("from_generators: round trip lost all points");
    p.empty_ = false;
    return p;
}

Polyhedron Polyhedron::from_constraints(int dim, const std::vector<Facet>& facets,
                                        const std::vector<AffEq>& eqs) {
    for (const auto& f : facets)
        if (static_cast<int>(f.a.size()) != dim)
            throw DimensionMismatch("from_constraints: facet of wrong dimension");
    for (const auto& e : eqs)
        if (static_cast<int>(e.a.size()) != dim)
            throw DimensionMismatch("from_constraints: equation of wrong dimension");
    Polyhedron p(dim);
    if (!constraints_to_generators(dim, facets, eqs, p.verts_, p.rays_, p.lin_)) return p;
    p.empty_ = false;
    // re-derive an irredundant, canonical H-form
    generators_to_constraints(dim, p.verts_, p.rays_, p.lin_, p.facets_, p.eqs_);
    return p;
}

Polyhedron Polyhedron::empty_set(int dim) { return Polyhedron(dim); }

ExtRat Polyhedron::support(const Vec& y) const {
    if (static_cast<int>(y.size()) != dim_) throw DimensionMismatch("support: dimension");
    if (empty_) throw InternalConsistencyError("support of empty polyhedron");
    for (const auto& l : lin_)
        if (dot(y, l) != 0) return ExtRat::infinity();
    for (const auto& r : rays_)
        if (dot(y, r) > 0) return ExtRat::infinity();
    Rat best = dot(y, verts_[0]);
    for (std::size_t i = 1; i < verts_.size(); ++i) best = std::max(best, dot(y, verts_[i]));
    return ExtRat(best);
}

bool Polyhedron::contains_point(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch("contains_point");
    if (empty_) return false;
    for (const auto& e : eqs_)
        if (dot(e.a, x) != e.b) return false;
    for (const auto& f : facets_)
        if (dot(f.a, x) > f.b) return false;
    return true;
}

bool Polyhedron::interior_contains_point(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch("interior_contains_point");
    if (empty_ || !eqs_.empty()) return false;
    for (const auto& f : facets_)
        if (dot(f.a, x) >= f.b) return false;
    return true;
}

bool Polyhedron::contains(const Polyhedron& other) const {
    if (other.dim_ != dim_) throw DimensionMismatch("contains");
    if (other.empty_) return true;
    if (empty_) return false;
    for (const auto& v : other.verts_)
        if (!contains_point(v)) return false;
    auto in_recession = [&](const Vec& d, bool both_signs) {
        for (const auto& e : eqs_)
            if (dot(e.a, d) != 0) return false;
        for (const auto& f : facets_) {
            const Rat s = dot(f.a, d);
            if (s > 0 || (both_signs && s != 0)) return false;
        }
        return true;
    };
    for (const auto& r : other.rays_)
        if (!in_recession(r, false)) return false;
    for (const auto& l : other.lin_)
        if (!in_recession(l, true)) return false;
    return true;
}

bool Polyhedron::interior_contains(const Polyhedron& other) const {
    if (other.dim_ != dim_) throw DimensionMismatch("interior_contains");
    if (!other.is_bounded())
        throw InternalConsistencyError("interior_contains: unbounded argument");
    if (other.empty_) return true;
    if (empty_ || !eqs_.empty()) return false;
    for (const auto& v : other.verts_)
        if (!interior_contains_point(v)) return false;
    return true;
}

namespace {
// equations are stored jointly primitive over (a | b); restore that after
// touching b
AffEq canon_eq(Vec a, Rat b) {
    a.push_back(std::move(b));
    const Vec row = primitive_signfree(a);
    return {Vec(row.begin(), row.end() - 1), row.back()};
}
} // namespace

Polyhedron Polyhedron::translate(const Vec& v) const {
    if (static_cast<int>(v.size()) != dim_) throw DimensionMismatch("translate");
    if (empty_) return *this;
    Polyhedron p(dim_);
    p.empty_ = false;
    p.rays_ = rays_;
    p.lin_ = lin_;
    for (const auto& w : verts_) p.verts_.push_back(add(w, v));
    canonicalize_generators(p.verts_, p.rays_, p.lin_);
    for (const auto& f : facets_) p.facets_.push_back({f.a, f.b + dot(f.a, v)});
    for (const auto& e : eqs_) p.eqs_.push_back(canon_eq(e.a, e.b + dot(e.a, v)));
    return p;
}

Polyhedron Polyhedron::scaled(const Rat& c) const {
    if (empty_) return *this;
    if (c == 0) return from_points(dim_, {zero_vec(dim_)});
    if (c > 0) {
        Polyhedron p(dim_);
        p.empty_ = false;
        p.rays_ = rays_;
        p.lin_ = lin_;
        for (const auto& w : verts_) p.verts_.push_back(scale(c, w));
        for (const auto& f : facets_) p.facets_.push_back({f.a, f.b * c});
        for (const auto& e : eqs_) p.eqs_.push_back(canon_eq(e.a, e.b * c));
        return p;
    }
    std::vector<Vec> vs, rs;
    for (const auto& w : verts_) vs.push_back(scale(c, w));
    for (const auto& r : rays_) rs.push_back(neg(r));
    return from_generators(dim_, vs, rs, lin_);
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
    if (other.dim_ != dim_) throw DimensionMismatch("intersect");
    if (empty_ || other.empty_) return empty_set(dim_);
    std::vector<Facet> fs = facets_;
    fs.insert(fs.end(), other.facets_.begin(), other.facets_.end());
    std::vector<AffEq> es = eqs_;
    es.insert(es.end(), other.eqs_.begin(), other.eqs_.end());
    return from_constraints(dim_, fs, es);
}

Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("minkowski_sum");
    if (a.is_empty() || b.is_empty()) return Polyhedron::empty_set(a.ambient_dim());
    std::vector<Vec> pts;
    for (const auto& u : a.vertices())
        for (const auto& v : b.vertices()) pts.push_back(add(u, v));
    std::vector<Vec> rays = a.rays();
    rays.insert(rays.end(), b.rays().begin(), b.rays().end());
    std::vector<Vec> lin = a.lineality();
    lin.insert(lin.end(), b.lineality().begin(), b.lineality().end());
    return Polyhedron::from_generators(a.ambient_dim(), pts, rays, lin);
}

std::optional<Polyhedron> minkowski_diff(const Polyhedron& q, const Polytope& p) {
    const int dim = q.ambient_dim();
    if (p.ambient_dim() != dim) throw DimensionMismatch("minkowski_diff");
    if (p.is_empty()) throw InternalConsistencyError("minkowski_diff: empty subtrahend");
    std::vector<Facet> eroded;
    auto erode = [&](const Vec& a, const Rat& b) -> bool {
        const ExtRat h = p.support(a);
        if (h.is_infinite()) return false;
        eroded.push_back({a, b - h.value()});
        return true;
    };
    if (q.is_empty()) return std::nullopt;
    for (const auto& f : q.facets())
        if (!erode(f.a, f.b)) return std::nullopt;
    for (const auto& e : q.equations())
        if (!erode(e.a, e.b) || !erode(neg(e.a), -e.b)) return std::nullopt;
    Polyhedron d = Polyhedron::from_constraints(dim, eroded, {});
    if (d.is_empty()) return std::nullopt;
    return d;
}

ExtRat inradius(const Polytope& p, const Polyhedron& q) {
    const int dim = q.ambient_dim();
    if (p.ambient_dim() != dim) throw DimensionMismatch("inradius");
    if (p.is_empty() || q.is_empty()) throw InternalConsistencyError("inradius: empty input");
    if (!p.is_bounded()) throw InternalConsistencyError("inradius: unbounded p");
    // maximize t subject to: x + t*p inside q, i.e.
    //   <a,x> + t * sup<a,p> <= b   per inequality of q,  t >= 0
    std::vector<Vec> rows;
    Vec rhs;
    auto add_row = [&](const Vec& a, const Rat& b) {
        Vec row(dim + 1);
        for (int i = 0; i < dim; ++i) row[i] = a[i];
        row[dim] = p.support_val(a);
        rows.push_back(std::move(row));
        rhs.push_back(b);
    };
    for (const auto& f : q.facets()) add_row(f.a, f.b);
    for (const auto& e : q.equations()) {
        add_row(e.a, e.b);
        add_row(neg(e.a), -e.b);
    }
    {
        Vec row = zero_vec(dim + 1);
        row[dim] = -1;
        rows.push_back(std::move(row));
        rhs.push_back(Rat(0));
    }
    Vec c = zero_vec(dim + 1);
    c[dim] = 1;
    const LPResult res = solve_lp_max(c, rows, rhs);
    switch (res.status) {
    case LPResult::Status::Optimal: return ExtRat(res.objective);
    case LPResult::Status::Unbounded: return ExtRat::infinity();
    default: throw InternalConsistencyError("inradius: infeasible LP on nonempty q");
    }
}

} // namespace gcalpha
