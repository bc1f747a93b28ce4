#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gcalpha/linalg.hpp"
#include "gcalpha/polytope.hpp"

namespace testutil {

using gcalpha::Rat;
using gcalpha::Vec;

inline Vec v(std::initializer_list<long> xs) {
    Vec r;
    for (long x : xs) r.push_back(Rat(x));
    return r;
}

inline Vec rv(std::initializer_list<const char*> xs) {
    Vec r;
    for (const char* x : xs) r.push_back(gcalpha::parse_rat(x));
    return r;
}

// Hand-rolled deterministic generator for property tests; keeps the suite
// reproducible independent of library distributions.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    // uniform integer in [lo, hi]
    long integer(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rat rat(long lo, long hi, long max_den = 4) {
        long den = integer(1, max_den);
        return Rat(integer(lo * den, hi * den)) / den;
    }
    Vec vec(int dim, long lo, long hi) {
        Vec r;
        for (int i = 0; i < dim; ++i) r.push_back(Rat(integer(lo, hi)));
        return r;
    }
    Vec rat_vec(int dim, long lo, long hi, long max_den = 4) {
        Vec r;
        for (int i = 0; i < dim; ++i) r.push_back(rat(lo, hi, max_den));
        return r;
    }
};

// Random full-dimensional polytope: hull of grid points, retried until
// full-dimensional.
inline gcalpha::Polytope random_polytope(Rng& rng, int dim, long box = 3, int npts = 0) {
    if (npts == 0) npts = dim + 3;
    for (;;) {
        std::vector<Vec> pts;
        for (int i = 0; i < npts; ++i) pts.push_back(rng.vec(dim, -box, box));
        gcalpha::Polytope p = gcalpha::hull(dim, pts);
        if (p.full_dimensional()) return p;
    }
}

// Random full-dimensional polytope with 0 interior (origin-star shape).
inline gcalpha::Polytope random_polytope_with_interior_origin(Rng& rng, int dim, long box = 3) {
    for (;;) {
        std::vector<Vec> pts;
        for (int i = 0; i < dim; ++i) {
            Vec e = gcalpha::zero_vec(dim);
            e[static_cast<std::size_t>(i)] = Rat(rng.integer(1, box));
            pts.push_back(e);
            e[static_cast<std::size_t>(i)] = Rat(-rng.integer(1, box));
            pts.push_back(e);
        }
        for (int i = 0; i < dim + 2; ++i) pts.push_back(rng.vec(dim, -box, box));
        gcalpha::Polytope p = gcalpha::hull(dim, pts);
        if (p.full_dimensional() && p.interior_contains_point(gcalpha::zero_vec(dim))) return p;
    }
}

} // namespace testutil
