#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gcalpha/fan.hpp"
#include "gcalpha/linalg.hpp"
#include "gcalpha/polytope.hpp"

namespace gcalpha {

// A reduced rational root datum in a fixed basis.  For presets the basis of
// the weight space is the simple roots themselves (each alpha_i = e_i),
// extended by standard basis vectors for torus factors, and the dual space
// carries the dual basis so that the pairing is the coordinate dot product.
// Coroots then have the Cartan integers as coordinates.
struct RootSystem {
    int dim = 0;       // ambient rank, torus factors included
    std::string label; // preset label or "custom"
    std::vector<Vec> simple_roots;   // in the weight space
    std::vector<Vec> simple_coroots; // in the dual space
    std::vector<Vec> positive_roots; // reflection closure, lex-sorted
    Vec rho;                         // half the sum of positive roots

    bool semisimple() const { return static_cast<int>(simple_roots.size()) == dim; }
    int rank() const { return static_cast<int>(simple_roots.size()); }

    // closed Weyl chamber {xi : alpha_i(xi) >= 0} in the dual space
    Cone weyl_chamber() const;
    // dominant cone {x : <x, coroot_i> >= 0} in the weight space
    Cone dominant_cone() const;
};

inline constexpr std::size_t kDefaultRootBound = 4096;
inline constexpr std::size_t kDefaultWeylCap = 100000;

// Preset grammar: "A<n>" (n>=1), "B<n>"/"C<n>" (n>=2), "D<n>" (n>=2), "G2",
// "T<n>" torus factors, products joined by "x", e.g. "A2xT1".
RootSystem build_root_system(const std::string& label,
                             std::size_t root_bound = kDefaultRootBound);
RootSystem build_custom_root_system(int dim, const std::vector<Vec>& simple_roots,
                                    const std::vector<Vec>& simple_coroots,
                                    std::size_t root_bound = kDefaultRootBound);

// The Weyl group as explicit matrices.  Element i acts on weights as
// x -> on_weights[i] * x and on the dual space as xi -> on_space[i] * xi;
// the two lists are index-aligned.  Element 0 is the identity.
struct WeylGroup {
    std::vector<Mat> on_weights;
    std::vector<Mat> on_space;
    std::vector<Mat> gen_weights; // simple reflections, acting on weights
    std::vector<Mat> gen_space;
    std::size_t size() const { return on_weights.size(); }
};

WeylGroup weyl_group(const RootSystem& rs, std::size_t cap = kDefaultWeylCap);

std::vector<Vec> orbit(const WeylGroup& w, const Vec& m);
Polytope orbit_hull(const WeylGroup& w, const Vec& m);

// Basis of the common fixed space {x : M x = x for all generator matrices}.
std::vector<Vec> fixed_subspace(int dim, const std::vector<Mat>& generators);

// Anticanonical polytope of the wonderful compactification:
// the W-orbit hull of 2*rho + sum of simple roots.  Semisimple systems only.
Polytope wonderful_polytope(const RootSystem& rs, const WeylGroup& w);
Polytope wonderful_polytope(const RootSystem& rs);

} // namespace gcalpha
