#pragma once

#include <vector>

#include "gcalpha/polytope.hpp"

namespace gcalpha {

// Closed rational polyhedral cone with apex 0, kept in canonical V-form
// (extreme rays modulo lineality + lineality basis) and canonical H-form
// (irredundant facet normals + span equations).  Duality is an exact swap of
// the two forms, so dual() costs nothing.
class Cone {
public:
    static Cone from_rays(int dim, const std::vector<Vec>& rays,
                          const std::vector<Vec>& lineality = {});
    static Cone from_inequalities(int dim, const std::vector<Vec>& normals,
                                  const std::vector<Vec>& equalities = {});
    static Cone full_space(int dim) { return from_inequalities(dim, {}); }
    static Cone zero_cone(int dim) { return from_rays(dim, {}); }

    int ambient_dim() const { return dim_; }
    const std::vector<Vec>& rays() const { return rays_; }
    const std::vector<Vec>& lineality() const { return lin_; }
    const std::vector<Vec>& facet_normals() const { return normals_; }
    const std::vector<Vec>& span_equations() const { return span_eqs_; }

    bool pointed() const { return lin_.empty(); }
    bool full_dimensional() const { return span_eqs_.empty(); }
    int intrinsic_dim() const;
    bool is_zero() const { return rays_.empty() && lin_.empty(); }

    bool contains(const Vec& x) const;
    bool relative_interior_contains(const Vec& x) const;
    bool interior_contains(const Vec& x) const; // topological interior

    Cone dual() const;
    Cone negated() const;
    Cone intersect(const Cone& other) const;

    friend bool operator==(const Cone& a, const Cone& b) {
        return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.lin_ == b.lin_;
    }
    friend bool operator!=(const Cone& a, const Cone& b) { return !(a == b); }

private:
    explicit Cone(int dim) : dim_(dim) {}
    int dim_;
    std::vector<Vec> rays_, lin_;        // V-form
    std::vector<Vec> normals_, span_eqs_; // H-form
};

// A complete fan, stored through its maximal cones (each full-dimensional,
// possibly with lineality).
struct Fan {
    int dim;
    std::vector<Cone> maximal;
};

// Normal fan of a nonempty bounded polytope.  Lower-dimensional polytopes are
// fine: every normal cone then carries the affine hull's normal space as
// lineality, and the fan is still complete.
Fan normal_fan(const Polytope& p);

Fan common_refinement(const Fan& a, const Fan& b);

// Union of the extreme rays of all maximal cones, deduplicated, lex-sorted.
std::vector<Vec> fan_rays(const Fan& f);

} // namespace gcalpha
