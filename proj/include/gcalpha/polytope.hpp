#pragma once

#include <optional>
#include <vector>

#include "gcalpha/dd.hpp"
#include "gcalpha/linalg.hpp"

namespace gcalpha {

// <a,x> <= b with a a primitive integer vector (content 1), b rational.
struct Facet {
    Vec a;
    Rat b;
    friend bool operator==(const Facet& x, const Facet& y) { return x.a == y.a && x.b == y.b; }
};

// <a,x> = b; rows jointly in reduced echelon form, primitive, sign-normalized.
struct AffEq {
    Vec a;
    Rat b;
    friend bool operator==(const AffEq& x, const AffEq& y) { return x.a == y.a && x.b == y.b; }
};

// A rational polyhedron, kept simultaneously in canonical V-form
// (vertices + recession rays + lineality basis) and canonical H-form
// (irredundant facets + affine-hull equations).  Both forms are produced by
// the double description engine, so equal polyhedra have identical
// representations and operator== is memberwise.
//
// When the lineality space is nontrivial there are no true vertices; the
// stored "vertices" are the canonical representatives of the minimal faces
// modulo lineality.  All bounded-polytope callers never see that case.
class Polyhedron {
public:
    static Polyhedron from_points(int dim, const std::vector<Vec>& pts);
    static Polyhedron from_generators(int dim, const std::vector<Vec>& pts,
                                      const std::vector<Vec>& rays,
                                      const std::vector<Vec>& lineality);
    static Polyhedron from_constraints(int dim, const std::vector<Facet>& facets,
                                       const std::vector<AffEq>& eqs);
    static Polyhedron empty_set(int dim);

    int ambient_dim() const { return dim_; }
    bool is_empty() const { return empty_; }
    bool is_bounded() const { return rays_.empty() && lin_.empty(); }
    bool full_dimensional() const { return !empty_ && eqs_.empty(); }
    int intrinsic_dim() const { return empty_ ? -1 : dim_ - static_cast<int>(eqs_.size()); }

    const std::vector<Vec>& vertices() const { return verts_; }
    const std::vector<Vec>& rays() const { return rays_; }
    const std::vector<Vec>& lineality() const { return lin_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<AffEq>& equations() const { return eqs_; }

    // sup <y,x> over the polyhedron; infinite() when unbounded along y.
    // Precondition: nonempty.
    ExtRat support(const Vec& y) const;
    // support() for callers that know the answer is finite.
    Rat support_val(const Vec& y) const { return support(y).value(); }

    bool contains_point(const Vec& x) const;
    // Topological-interior membership (false whenever *this is not
    // full-dimensional).
    bool interior_contains_point(const Vec& x) const;
    bool contains(const Polyhedron& other) const;
    bool interior_contains(const Polyhedron& other) const; // other must be bounded

    Polyhedron translate(const Vec& v) const;
    Polyhedron scaled(const Rat& c) const;
    Polyhedron negated() const { return scaled(Rat(-1)); }
    Polyhedron intersect(const Polyhedron& other) const;

    friend bool operator==(const Polyhedron& a, const Polyhedron& b) {
        return a.dim_ == b.dim_ && a.empty_ == b.empty_ && a.verts_ == b.verts_ &&
               a.rays_ == b.rays_ && a.lin_ == b.lin_;
    }
    friend bool operator!=(const Polyhedron& a, const Polyhedron& b) { return !(a == b); }

private:
    explicit Polyhedron(int dim) : dim_(dim) {}

    int dim_;
    bool empty_ = true;
    std::vector<Vec> verts_, rays_, lin_;
    std::vector<Facet> facets_;
    std::vector<AffEq> eqs_;
};

// In most of this code base a Polyhedron is in fact a polytope (bounded);
// the alias marks signatures where boundedness is expected.
using Polytope = Polyhedron;

inline Polytope hull(int dim, const std::vector<Vec>& pts) {
    return Polyhedron::from_points(dim, pts);
}

Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b);

// {x : x + p subset of q};  p must be bounded.  nullopt when empty.
std::optional<Polyhedron> minkowski_diff(const Polyhedron& q, const Polytope& p);

// sup { t >= 0 : some translate of t*p fits inside q }; +inf when p is a
// point (any translate fits at every scale).  p bounded, q nonempty.
ExtRat inradius(const Polytope& p, const Polyhedron& q);

} // namespace gcalpha
