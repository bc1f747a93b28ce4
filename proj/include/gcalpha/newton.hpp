#pragma once

#include <optional>
#include <vector>

#include "gcalpha/fan.hpp"
#include "gcalpha/polytope.hpp"
#include "gcalpha/rootsys.hpp"

namespace gcalpha {

struct PLPiece {
    Vec slope;
    Rat constant;
    friend bool operator==(const PLPiece& a, const PLPiece& b) {
        return a.slope == b.slope && a.constant == b.constant;
    }
};

// f(x) = max_i (<slope_i, x> + constant_i), finite on all of the space.
// Canonical on construction: duplicate pieces merged, pieces that are never
// strictly above all others pruned (they change neither the function values
// nor the Newton sets), remainder lex-sorted.
class PLConvexFunction {
public:
    static PLConvexFunction from_pieces(int dim, std::vector<PLPiece> pieces);

    int ambient_dim() const { return dim_; }
    const std::vector<PLPiece>& pieces() const { return pieces_; }
    Rat value(const Vec& x) const;
    std::vector<Vec> slopes() const;

    friend bool operator==(const PLConvexFunction& a, const PLConvexFunction& b) {
        return a.dim_ == b.dim_ && a.pieces_ == b.pieces_;
    }

private:
    PLConvexFunction(int dim, std::vector<PLPiece> pieces)
        : dim_(dim), pieces_(std::move(pieces)) {}
    int dim_;
    std::vector<PLPiece> pieces_;
};

// max-of-affine representation of f+g: all pairwise piece sums
PLConvexFunction pl_sum(const PLConvexFunction& f, const PLConvexFunction& g);
// the support function of a polytope as a PL function (pieces = vertices)
PLConvexFunction pl_support_function(const Polytope& p);

// The set of slopes m with f - m bounded below on the cone sigma, realized as
// conv(slopes of f) + (-sigma^dual).  `set` is the polyhedron itself; `body`
// and `recession` expose the two summands.
struct NewtonSet {
    Polyhedron set;
    Polytope body;
    Cone recession;

    bool contains(const Vec& m) const { return set.contains_point(m); }
    friend bool operator==(const NewtonSet& a, const NewtonSet& b) { return a.set == b.set; }
    friend bool operator!=(const NewtonSet& a, const NewtonSet& b) { return !(a == b); }
};

NewtonSet newton_set_on_cone(const PLConvexFunction& f, const Cone& sigma);

// N(f+g) computed as the Minkowski sum of N(f) and N(g), cross-checked
// against the direct computation from the pairwise-sum representation.
NewtonSet newton_sum(const PLConvexFunction& f, const PLConvexFunction& g, const Cone& sigma);

bool check_w_invariance(const Polytope& b, const WeylGroup& w);
bool check_w_invariance(const PLConvexFunction& f, const WeylGroup& w);

// How a metric is specified: the reference metric of the polarization, an
// explicit Newton body, a piecewise-linear convex potential, or the
// single-slope metric of a W-fixed point of 2P.
struct MetricSpec {
    enum class Kind { Reference, NewtonBodyExplicit, PLPotential, Point };
    Kind kind;
    std::optional<Polytope> body;
    std::optional<PLConvexFunction> potential;
    std::optional<Vec> point;

    static MetricSpec reference() { return {Kind::Reference, {}, {}, {}}; }
    static MetricSpec newton_body_explicit(Polytope b) {
        return {Kind::NewtonBodyExplicit, std::move(b), {}, {}};
    }
    static MetricSpec pl_potential(PLConvexFunction f) {
        return {Kind::PLPotential, {}, std::move(f), {}};
    }
    static MetricSpec point_metric(Vec p) { return {Kind::Point, {}, {}, std::move(p)}; }
};

// Newton body N(h) of the spec in the context of the polarization polytope p
// and Weyl group w.  Validates the containment N <= 2p and W-invariance.
Polytope newton_body(const MetricSpec& spec, const Polytope& p, const WeylGroup& w);

} // namespace gcalpha
