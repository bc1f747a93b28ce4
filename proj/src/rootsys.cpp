#include "gcalpha/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gcalpha {
namespace {

std::string vec_key(const Vec& v) {
    std::string k;
    for (const auto& x : v) { k += rat_str(x); k += ','; }
    return k;
}

std::string mat_key(const Mat& m) {
    std::string k;
    for (const auto& row : m) { k += vec_key(row); k += ';'; }
    return k;
}

// Cartan matrix of one irreducible (or torus) factor; empty for T<n>.
Mat cartan_block(char type, int n) {
    auto chain = [&](Mat& a) {
        for (int i = 0; i + 1 < n; ++i) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    Mat a(n, zero_vec(n));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    switch (type) {
    case 'A':
        if (n < 1) throw ValidationError("preset A needs rank >= 1");
        chain(a);
        return a;
    case 'B': // alpha_n short: its coroot pairs to -2 against alpha_{n-1}
        if (n < 2) throw ValidationError("preset B needs rank >= 2");
        chain(a);
        a[n - 1][n - 2] = -2;
        return a;
    case 'C': // alpha_n long
        if (n < 2) throw ValidationError("preset C needs rank >= 2");
        chain(a);
        a[n - 2][n - 1] = -2;
        return a;
    case 'D':
        if (n < 2) throw ValidationError("preset D needs rank >= 2");
        for (int i = 0; i + 2 < n; ++i) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
        if (n >= 3) {
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        return a;
    case 'G':
        if (n != 2) throw ValidationError("G exists only as G2");
        a[0][1] = -1;
        a[1][0] = -3;
        return a;
    default:
        throw ValidationError(std::string("unknown preset type '") + type + "'");
    }
}

struct Factor {
    char type;
    int n;
};

std::vector<Factor> parse_label(const std::string& label) {
    std::vector<Factor> out;
    std::size_t i = 0;
    while (i < label.size()) {
        const char t = label[i++];
        if (t != 'A' && t != 'B' && t != 'C' && t != 'D' && t != 'G' && t != 'T')
            throw ValidationError("bad preset label '" + label + "'");
        std::size_t j = i;
        while (j < label.size() && std::isdigit(static_cast<unsigned char>(label[j]))) ++j;
        if (j == i) throw ValidationError("missing rank in preset label '" + label + "'");
        const int n = std::stoi(label.substr(i, j - i));
        if (n < 1) throw ValidationError("rank must be >= 1 in '" + label + "'");
        out.push_back({t, n});
        i = j;
        if (i < label.size()) {
            if (label[i] != 'x')
                throw ValidationError("expected 'x' between factors in '" + label + "'");
            ++i;
            if (i == label.size())
                throw ValidationError("trailing 'x' in preset label '" + label + "'");
        }
    }
    if (out.empty()) throw ValidationError("empty preset label");
    return out;
}

// All roots by closing the simple roots under the simple reflections
// s_i(x) = x - <x, coroot_i> alpha_i.  Diverges (and trips the bound) on
// non-finite Cartan data.
std::vector<Vec> root_closure(const std::vector<Vec>& roots, const std::vector<Vec>& coroots,
                              std::size_t bound) {
    std::set<std::string> seen;
    std::vector<Vec> all;
    std::vector<Vec> queue = roots;
    for (const auto& r : roots)
        if (seen.insert(vec_key(r)).second) all.push_back(r);
    while (!queue.empty()) {
        const Vec r = queue.back();
        queue.pop_back();
        for (std::size_t i = 0; i < roots.size(); ++i) {
            Vec s = r;
            axpy_inplace(-dot(r, coroots[i]), roots[i], s);
            if (seen.insert(vec_key(s)).second) {
                if (seen.size() > bound)
                    throw RankOverflow("reflection closure exceeded " + std::to_string(bound) +
                                       " roots; data does not look finite type");
                all.push_back(s);
                queue.push_back(s);
            }
        }
    }
    return all;
}

} // namespace

RootSystem build_custom_root_system(int dim, const std::vector<Vec>& simple_roots,
                                    const std::vector<Vec>& simple_coroots,
                                    std::size_t root_bound) {
    if (dim < 1) throw ValidationError("ambient dimension must be >= 1");
    if (simple_roots.size() != simple_coroots.size())
        throw MalformedCartanData("differing numbers of simple roots and coroots");
    if (static_cast<int>(simple_roots.size()) > dim)
        throw MalformedCartanData("more simple roots than the ambient dimension");
    for (const auto* grp : {&simple_roots, &simple_coroots})
        for (const auto& v : *grp)
            if (static_cast<int>(v.size()) != dim)
                throw DimensionMismatch("root/coroot of wrong dimension");

    const std::size_t k = simple_roots.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const Rat a = dot(simple_roots[j], simple_coroots[i]);
            if (denominator(a) != 1)
                throw MalformedCartanData("pairing <alpha_j, coroot_i> is not an integer");
            if (i == j && a != 2)
                throw MalformedCartanData("<alpha_i, coroot_i> must equal 2");
            if (i != j && a > 0)
                throw MalformedCartanData("off-diagonal Cartan pairing must be <= 0");
        }
    }
    {
        // simple roots of a finite system are linearly independent
        std::vector<Vec> rows = simple_roots;
        if (static_cast<std::size_t>(mat_rank(rows)) != k)
            throw MalformedCartanData("simple roots are linearly dependent");
    }

    RootSystem rs;
    rs.dim = dim;
    rs.label = "custom";
    rs.simple_roots = simple_roots;
    rs.simple_coroots = simple_coroots;

    const std::vector<Vec> all = root_closure(simple_roots, simple_coroots, root_bound);

    // A root is positive iff its coefficients over the simple roots are all
    // nonnegative.  The simple roots are independent, so the coefficients are
    // recovered by inverting the k x k submatrix on the pivot coordinates of
    // their row space; a nonzero residual means the closure left the span
    // (impossible for valid data).
    std::vector<Vec> basis = simple_roots;
    const std::vector<int> piv = rref_inplace(basis);
    Mat a_cols(k, Vec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a_cols[i][j] = simple_roots[j][piv[i]];
    const Mat a_inv = mat_inverse(a_cols);
    for (const auto& r : all) {
        Vec rhs(k);
        for (std::size_t i = 0; i < k; ++i) rhs[i] = r[piv[i]];
        const Vec coef = mat_apply(a_inv, rhs);
        Vec rebuilt = zero_vec(dim);
        for (std::size_t j = 0; j < k; ++j) axpy_inplace(coef[j], simple_roots[j], rebuilt);
        if (rebuilt != r)
            throw MalformedCartanData("closure left the span of the simple roots");
        bool nonneg = true;
        for (const auto& c : coef)
            if (c < 0) { nonneg = false; break; }
        if (nonneg) rs.positive_roots.push_back(r);
    }
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), lex_less);

    rs.rho = zero_vec(dim);
    for (const auto& r : rs.positive_roots) axpy_inplace(Rat(1), r, rs.rho);
    rs.rho = scale(Rat(1, 2), rs.rho);
    for (std::size_t i = 0; i < k; ++i) {
        if (dot(rs.rho, simple_coroots[i]) != 1)
            throw InternalConsistencyError("<rho, coroot_i> != 1; root closure is broken");
    }
    return rs;
}

RootSystem build_root_system(const std::string& label, std::size_t root_bound) {
    const std::vector<Factor> factors = parse_label(label);
    int dim = 0;
    for (const auto& f : factors) dim += f.n;
    std::vector<Vec> roots, coroots;
    int off = 0;
    for (const auto& f : factors) {
        if (f.type == 'T') { off += f.n; continue; }
        const Mat cartan = cartan_block(f.type, f.n);
        for (int i = 0; i < f.n; ++i) {
            Vec root = zero_vec(dim);
            root[off + i] = 1;
            roots.push_back(std::move(root));
            Vec coroot = zero_vec(dim);
            for (int j = 0; j < f.n; ++j) coroot[off + j] = cartan[i][j];
            coroots.push_back(std::move(coroot));
        }
        off += f.n;
    }
    RootSystem rs;
    if (roots.empty()) {
        // pure torus: no roots, empty Weyl group data
        rs.dim = dim;
        rs.rho = zero_vec(dim);
    } else {
        rs = build_custom_root_system(dim, roots, coroots, root_bound);
    }
    rs.label = label;
    return rs;
}

Cone RootSystem::weyl_chamber() const { return Cone::from_inequalities(dim, simple_roots); }

Cone RootSystem::dominant_cone() const { return Cone::from_inequalities(dim, simple_coroots); }

WeylGroup weyl_group(const RootSystem& rs, std::size_t cap) {
    const int d = rs.dim;
    WeylGroup w;
    for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) {
        // on weights: x -> x - <x, coroot_i> alpha_i,  M = I - alpha_i coroot_i^T
        // on the dual space: xi -> xi - alpha_i(xi) coroot_i,  N = M^T
        Mat m = mat_identity(d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                m[r][c] -= rs.simple_roots[i][r] * rs.simple_coroots[i][c];
        w.gen_space.push_back(mat_transpose(m));
        w.gen_weights.push_back(std::move(m));
    }
    std::map<std::string, bool> seen;
    std::vector<std::size_t> queue;
    w.on_weights.push_back(mat_identity(d));
    w.on_space.push_back(mat_identity(d));
    seen.emplace(mat_key(w.on_weights[0]), true);
    queue.push_back(0);
    while (!queue.empty()) {
        const std::size_t at = queue.back();
        queue.pop_back();
        for (std::size_t g = 0; g < w.gen_weights.size(); ++g) {
            Mat next = mat_mul(w.on_weights[at], w.gen_weights[g]);
            if (!seen.emplace(mat_key(next), true).second) continue;
            if (w.on_weights.size() >= cap)
                throw GroupTooLarge("Weyl group exceeds cap of " + std::to_string(cap));
            w.on_space.push_back(mat_mul(w.on_space[at], w.gen_space[g]));
            w.on_weights.push_back(std::move(next));
            queue.push_back(w.on_weights.size() - 1);
        }
    }
    return w;
}

std::vector<Vec> orbit(const WeylGroup& w, const Vec& m) {
    std::set<std::string> seen;
    std::vector<Vec> out;
    for (const auto& g : w.on_weights) {
        Vec v = mat_apply(g, m);
        if (seen.insert(vec_key(v)).second) out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

Polytope orbit_hull(const WeylGroup& w, const Vec& m) {
    return hull(static_cast<int>(m.size()), orbit(w, m));
}

std::vector<Vec> fixed_subspace(int dim, const std::vector<Mat>& generators) {
    std::vector<Vec> rows;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != dim)
            throw DimensionMismatch("fixed_subspace: matrix dimension");
        for (int r = 0; r < dim; ++r) {
            Vec row = g[r];
            row[r] -= 1;
            if (!is_zero(row)) rows.push_back(std::move(row));
        }
    }
    return kernel_basis(dim, rows);
}

Polytope wonderful_polytope(const RootSystem& rs, const WeylGroup& w) {
    if (!rs.semisimple())
        throw NotSemisimple("wonderful polytope requires a semisimple system");
    Vec v = scale(Rat(2), rs.rho);
    for (const auto& a : rs.simple_roots) axpy_inplace(Rat(1), a, v);
    return orbit_hull(w, v);
}

Polytope wonderful_polytope(const RootSystem& rs) {
    const WeylGroup w = weyl_group(rs);
    return wonderful_polytope(rs, w);
}

} // namespace gcalpha
