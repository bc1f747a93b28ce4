#include "gcalpha/dd.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace gcalpha {
namespace {

// Tight-set bitmask over the inequalities processed so far.
struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(std::size_t nbits) : w((nbits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool subset_of(const Bits& o) const {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k] & ~o.w[k]) return false;
        return true;
    }
    static Bits intersect(const Bits& a, const Bits& b) {
        Bits r(0);
        r.w.resize(a.w.size());
        for (std::size_t k = 0; k < a.w.size(); ++k) r.w[k] = a.w[k] & b.w[k];
        return r;
    }
};

struct Ray {
    Vec v;
    Bits z;
};

} // namespace

DDResult double_description(int dim, const std::vector<LinCond>& conds_in) {
    // Clean up: primitive normals, drop trivial and exactly-duplicated
    // conditions, equalities first (they shrink the problem fastest).
    std::vector<LinCond> conds;
    {
        std::set<std::pair<std::vector<std::string>, bool>> seen;
        auto push = [&](const LinCond& c, bool want_eq) {
            if (c.equality != want_eq) return;
            if (static_cast<int>(c.normal.size()) != dim)
                throw DimensionMismatch("double_description: condition size");
            Vec n = c.equality ? primitive_signfree(c.normal) : primitive(c.normal);
            if (is_zero(n)) return;
            std::vector<std::string> key;
            key.reserve(n.size());
            for (const auto& x : n) key.push_back(rat_str(x));
            if (seen.insert({key, c.equality}).second) conds.push_back({std::move(n), c.equality});
        };
        for (const auto& c : conds_in) push(c, true);
        for (const auto& c : conds_in) push(c, false);
    }

    std::size_t n_ineq = 0;
    for (const auto& c : conds)
        if (!c.equality) ++n_ineq;

    std::vector<Vec> lin;
    for (int i = 0; i < dim; ++i) {
        Vec e = zero_vec(dim);
        e[i] = 1;
        lin.push_back(std::move(e));
    }
    std::vector<Ray> rays;

    std::size_t bit = 0;
    for (const auto& cond : conds) {
        const Vec& g = cond.normal;

        // Lineality branch: some basis vector is not orthogonal to g.
        int hit = -1;
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot(g, lin[i]) != 0) { hit = static_cast<int>(i); break; }

        if (hit >= 0) {
            Vec l0 = lin[hit];
            lin.erase(lin.begin() + hit);
            Rat d0 = dot(g, l0);
            if (d0 < 0) { l0 = neg(l0); d0 = -d0; }
            for (auto& l : lin) {
                const Rat c = dot(g, l);
                if (c != 0) axpy_inplace(-c / d0, l0, l);
                l = primitive_signfree(l);
            }
            for (auto& r : rays) {
                const Rat c = dot(g, r.v);
                if (c != 0) axpy_inplace(-c / d0, l0, r.v);
                r.v = primitive(r.v);
                if (!cond.equality) r.z.set(bit); // now tight at this one
            }
            if (!cond.equality) {
                // l0 itself survives on the positive side; it is tight at
                // every earlier condition (it was in the lineality space)
                // but not at this one.
                Ray nr{primitive(l0), Bits(n_ineq)};
                for (std::size_t j = 0; j < bit; ++j) nr.z.set(j);
                rays.push_back(std::move(nr));
                ++bit;
            }
            continue;
        }

        // Split branch: g vanishes on the lineality space; classify rays.
        std::vector<int> pos, zer, neg_;
        std::vector<Rat> val(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(g, rays[i].v);
            if (val[i] > 0) pos.push_back(static_cast<int>(i));
            else if (val[i] < 0) neg_.push_back(static_cast<int>(i));
            else zer.push_back(static_cast<int>(i));
        }

        if (neg_.empty()) { // nothing cut off
            if (!cond.equality) {
                for (int i : zer) rays[i].z.set(bit);
                ++bit;
            } else {
                // equality with everything on the >=0 side: positives die
                std::vector<Ray> kept;
                for (int i : zer) kept.push_back(std::move(rays[i]));
                rays = std::move(kept);
            }
            continue;
        }

        // p adjacent to q iff no third ray's tight set contains Z(p) & Z(q).
        auto adjacent = [&](int p, int q) {
            const Bits common = Bits::intersect(rays[p].z, rays[q].z);
            for (std::size_t w = 0; w < rays.size(); ++w) {
                if (static_cast<int>(w) == p || static_cast<int>(w) == q) continue;
                if (common.subset_of(rays[w].z)) return false;
            }
            return true;
        };

        std::vector<Ray> combos;
        for (int p : pos) {
            for (int n : neg_) {
                if (!adjacent(p, n)) continue;
                // val[p] * rays[n] - val[n] * rays[p]  lands on the hyperplane
                Vec w = scale(val[p], rays[n].v);
                axpy_inplace(-val[n], rays[p].v, w);
                Ray nr{primitive(std::move(w)), Bits::intersect(rays[p].z, rays[n].z)};
                if (!cond.equality) nr.z.set(bit);
                combos.push_back(std::move(nr));
            }
        }
        std::vector<Ray> next;
        if (!cond.equality) {
            for (int i : pos) next.push_back(std::move(rays[i]));
            for (int i : zer) {
                rays[i].z.set(bit);
                next.push_back(std::move(rays[i]));
            }
        } else {
            for (int i : zer) next.push_back(std::move(rays[i]));
        }
        for (auto& c : combos) next.push_back(std::move(c));
        rays = std::move(next);
        if (!cond.equality) ++bit;
    }

    // Canonical output: lineality in RREF, rays reduced modulo it.
    DDResult out;
    out.lineality = lin;
    const std::vector<int> pivots = rref_inplace(out.lineality);
    for (auto& l : out.lineality) l = primitive_signfree(l);
    // re-derive the rational RREF rows for reduction (primitive rows share pivots)
    std::vector<Vec> red = out.lineality;
    for (std::size_t i = 0; i < red.size(); ++i) {
        const Rat p = red[i][pivots[i]];
        for (auto& x : red[i]) x /= p;
    }
    for (auto& r : rays) {
        Vec v = reduce_mod_span(r.v, red, pivots);
        v = primitive(v);
        if (is_zero(v))
            throw InternalConsistencyError("double_description: ray inside lineality space");
        out.rays.push_back(std::move(v));
    }
    std::sort(out.lineality.begin(), out.lineality.end(), lex_less);
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    for (std::size_t i = 1; i < out.rays.size(); ++i)
        if (out.rays[i] == out.rays[i - 1])
            throw InternalConsistencyError("double_description: duplicate extreme ray");
    return out;
}

} // namespace gcalpha
