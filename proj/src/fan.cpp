#include "gcalpha/fan.hpp"

#include <algorithm>
#include <map>

namespace gcalpha {
namespace {

std::vector<LinCond> dual_conditions(const std::vector<Vec>& rays,
                                     const std::vector<Vec>& lineality) {
    std::vector<LinCond> conds;
    for (const auto& r : rays) conds.push_back({r, false});
    for (const auto& l : lineality) conds.push_back({l, true});
    return conds;
}

} // namespace

Cone Cone::from_rays(int dim, const std::vector<Vec>& rays, const std::vector<Vec>& lineality) {
    for (const auto* grp : {&rays, &lineality})
        for (const auto& v : *grp)
            if (static_cast<int>(v.size()) != dim)
                throw DimensionMismatch("Cone::from_rays: vector dimension");
    Cone c(dim);
    // dual cone first: its V-form is this cone's H-form ...
    DDResult dual = double_description(dim, dual_conditions(rays, lineality));
    c.normals_ = std::move(dual.rays);
    c.span_eqs_ = std::move(dual.lineality);
    // ... and dualizing again canonicalizes the generators we were given.
    DDResult primal = double_description(dim, dual_conditions(c.normals_, c.span_eqs_));
    c.rays_ = std::move(primal.rays);
    c.lin_ = std::move(primal.lineality);
    return c;
}

Cone Cone::from_inequalities(int dim, const std::vector<Vec>& normals,
                             const std::vector<Vec>& equalities) {
    for (const auto* grp : {&normals, &equalities})
        for (const auto& v : *grp)
            if (static_cast<int>(v.size()) != dim)
                throw DimensionMismatch("Cone::from_inequalities: vector dimension");
    std::vector<LinCond> conds;
    for (const auto& n : normals) conds.push_back({n, false});
    for (const auto& e : equalities) conds.push_back({e, true});
    Cone c(dim);
    DDResult primal = double_description(dim, conds);
    c.rays_ = std::move(primal.rays);
    c.lin_ = std::move(primal.lineality);
    // canonical H-form = V-form of the dual cone
    DDResult dual = double_description(dim, dual_conditions(c.rays_, c.lin_));
    c.normals_ = std::move(dual.rays);
    c.span_eqs_ = std::move(dual.lineality);
    return c;
}

int Cone::intrinsic_dim() const { return dim_ - static_cast<int>(span_eqs_.size()); }

bool Cone::contains(const Vec& x) const {
    for (const auto& e : span_eqs_)
        if (dot(e, x) != 0) return false;
    for (const auto& n : normals_)
        if (dot(n, x) < 0) return false;
    return true;
}

bool Cone::relative_interior_contains(const Vec& x) const {
    for (const auto& e : span_eqs_)
        if (dot(e, x) != 0) return false;
    for (const auto& n : normals_)
        if (dot(n, x) <= 0) return false;
    return true;
}

bool Cone::interior_contains(const Vec& x) const {
    return span_eqs_.empty() && relative_interior_contains(x);
}

Cone Cone::dual() const {
    Cone d(dim_);
    d.rays_ = normals_;
    d.lin_ = span_eqs_;
    d.normals_ = rays_;
    d.span_eqs_ = lin_;
    return d;
}

Cone Cone::negated() const {
    std::vector<Vec> r;
    for (const auto& v : rays_) r.push_back(neg(v));
    return from_rays(dim_, r, lin_);
}

Cone Cone::intersect(const Cone& other) const {
    if (other.dim_ != dim_) throw DimensionMismatch("Cone::intersect");
    std::vector<Vec> ns = normals_;
    ns.insert(ns.end(), other.normals_.begin(), other.normals_.end());
    std::vector<Vec> es = span_eqs_;
    es.insert(es.end(), other.span_eqs_.begin(), other.span_eqs_.end());
    return from_inequalities(dim_, ns, es);
}

Fan normal_fan(const Polytope& p) {
    if (p.is_empty() || !p.is_bounded())
        throw InternalConsistencyError("normal_fan: needs a nonempty bounded polytope");
    const int dim = p.ambient_dim();
    std::vector<Vec> eq_normals;
    for (const auto& e : p.equations()) eq_normals.push_back(e.a);
    Fan f{dim, {}};
    for (const auto& v : p.vertices()) {
        std::vector<Vec> tight;
        for (const auto& fc : p.facets())
            if (dot(fc.a, v) == fc.b) tight.push_back(fc.a);
        f.maximal.push_back(Cone::from_rays(dim, tight, eq_normals));
    }
    return f;
}

Fan common_refinement(const Fan& a, const Fan& b) {
    if (a.dim != b.dim) throw DimensionMismatch("common_refinement");
    Fan f{a.dim, {}};
    std::map<std::string, bool> seen;
    auto key_of = [](const Cone& c) {
        std::string k;
        for (const auto& r : c.rays()) {
            for (const auto& x : r) { k += rat_str(x); k += ','; }
            k += ';';
        }
        k += '|';
        for (const auto& l : c.lineality()) {
            for (const auto& x : l) { k += rat_str(x); k += ','; }
            k += ';';
        }
        return k;
    };
    for (const auto& ca : a.maximal) {
        for (const auto& cb : b.maximal) {
            Cone c = ca.intersect(cb);
            if (!c.full_dimensional()) continue;
            if (seen.emplace(key_of(c), true).second) f.maximal.push_back(std::move(c));
        }
    }
    return f;
}

std::vector<Vec> fan_rays(const Fan& f) {
    std::vector<Vec> out;
    for (const auto& c : f.maximal)
        for (const auto& r : c.rays()) out.push_back(r);
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace gcalpha
