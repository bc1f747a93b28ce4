#include "gcalpha/numcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "gcalpha/errors.hpp"

namespace gcalpha {

namespace {

std::vector<double> to_doubles(const Vec& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
    return out;
}

double ddot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// log(sinh(y)) for y > 0 without overflow; -inf at 0 is fine for exp().
double log_sinh(double y) {
    if (y <= 0) return -std::numeric_limits<double>::infinity();
    if (y > 30) return y - std::log(2.0) + std::log1p(-std::exp(-2 * y));
    return std::log(std::sinh(y));
}

struct FloatIntegrand {
    std::vector<std::vector<double>> simple_roots, positive_roots, piece_slopes;
    std::vector<double> piece_consts;

    explicit FloatIntegrand(const IntegrandSpec& spec) {
        for (const auto& a : spec.rs.simple_roots) simple_roots.push_back(to_doubles(a));
        for (const auto& a : spec.rs.positive_roots) positive_roots.push_back(to_doubles(a));
        for (const auto& pc : spec.l.pieces()) {
            piece_slopes.push_back(to_doubles(pc.slope));
            piece_consts.push_back(to_double(pc.constant));
        }
    }

    bool in_chamber(const std::vector<double>& x) const {
        for (const auto& a : simple_roots)
            if (ddot(a, x) < 0) return false;
        return true;
    }

    // exp(-l(x)) * J(x), evaluated in the log domain so that walls give an
    // exact 0 and genuine blowups give inf rather than NaN.
    double operator()(const std::vector<double>& x) const {
        double lx = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < piece_slopes.size(); ++i)
            lx = std::max(lx, ddot(piece_slopes[i], x) + piece_consts[i]);
        double lg = -lx;
        for (const auto& a : positive_roots) lg += 2 * log_sinh(ddot(a, x));
        return std::exp(lg);
    }
};

} // namespace

double kak_density(const RootSystem& rs, const Vec& x) {
    if (static_cast<int>(x.size()) != rs.dim)
        throw DimensionMismatch("point dimension does not match the root datum");
    for (const auto& a : rs.simple_roots)
        if (dot(a, x) < 0) throw OutsideChamber("point lies outside the closed chamber");
    double j = 1.0;
    for (const auto& a : rs.positive_roots) {
        double s = std::sinh(to_double(dot(a, x)));
        j *= s * s;
    }
    return j;
}

ConvergenceVerdict estimate_integral(const IntegrandSpec& spec) {
    const auto& radii = spec.truncation_radii;
    if (radii.empty()) throw ValidationError("at least one truncation radius is required");
    for (std::size_t j = 0; j < radii.size(); ++j)
        if (radii[j] <= (j ? radii[j - 1] : 0.0))
            throw ValidationError("truncation radii must be positive and strictly increasing");
    if (spec.samples_per_cell < 1) throw ValidationError("samples_per_cell must be >= 1");
    if (spec.l.ambient_dim() != spec.rs.dim)
        throw DimensionMismatch("exponent dimension does not match the root datum");

    const int n = spec.rs.dim;
    FloatIntegrand f(spec);

    // Coordinates that carry a standard-basis simple root stay nonnegative on
    // the chamber, so their box sides start at 0; the chamber indicator below
    // handles every other shape.
    std::vector<bool> nonneg(static_cast<std::size_t>(n), false);
    for (const auto& a : spec.rs.simple_roots) {
        int nz = -1;
        bool standard = true;
        for (int i = 0; i < n && standard; ++i) {
            if (a[static_cast<std::size_t>(i)] == 0) continue;
            if (nz >= 0 || a[static_cast<std::size_t>(i)] != 1) standard = false;
            else nz = i;
        }
        if (standard && nz >= 0) nonneg[static_cast<std::size_t>(nz)] = true;
    }

    auto in_box = [&](const std::vector<double>& x, double r) {
        for (int i = 0; i < n; ++i) {
            double lo = nonneg[static_cast<std::size_t>(i)] ? 0.0 : -r;
            if (x[static_cast<std::size_t>(i)] < lo || x[static_cast<std::size_t>(i)] > r)
                return false;
        }
        return true;
    };

    ConvergenceVerdict out;
    double total = 0;
    for (std::size_t j = 0; j < radii.size(); ++j) {
        const double r = radii[j];
        double volume = 1;
        for (int i = 0; i < n; ++i) volume *= nonneg[static_cast<std::size_t>(i)] ? r : 2 * r;

        std::mt19937_64 rng(spec.seed ^ (0x9E3779B97F4A7C15ULL * (j + 1)));
        auto uniform01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

        double acc = 0;
        for (int s = 0; s < spec.samples_per_cell; ++s) {
            std::vector<double> x(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                double lo = nonneg[static_cast<std::size_t>(i)] ? 0.0 : -r;
                x[static_cast<std::size_t>(i)] = lo + (r - lo) * uniform01();
            }
            if (j > 0 && in_box(x, radii[j - 1])) continue; // previous shell
            if (!f.in_chamber(x)) continue;
            acc += f(x);
        }
        double increment = volume * acc / spec.samples_per_cell;
        total += increment;
        out.increments.push_back(increment);
        out.partial_integrals.push_back(total);
    }

    for (std::size_t j = 1; j < out.increments.size(); ++j) {
        double prev = out.increments[j - 1], cur = out.increments[j];
        out.ratio_trend.push_back(prev > 0 ? cur / prev
                                           : (cur > 0 ? std::numeric_limits<double>::infinity()
                                                      : 0.0));
    }

    const std::size_t m = out.increments.size();
    if (m < 2) {
        out.verdict = Verdict::Inconclusive;
        return out;
    }
    double first = out.increments.front(), last = out.increments.back();
    if (std::isinf(last)) {
        out.fitted_ratio = std::numeric_limits<double>::infinity();
        out.verdict = Verdict::Diverging;
    } else if (last <= 0) {
        out.fitted_ratio = 0;
        out.verdict = Verdict::Converging; // tail vanished numerically
    } else if (first <= 0 || std::isinf(first)) {
        out.verdict = Verdict::Inconclusive;
    } else {
        out.fitted_ratio = std::pow(last / first, 1.0 / static_cast<double>(m - 1));
        out.verdict = out.fitted_ratio < 0.9   ? Verdict::Converging
                      : out.fitted_ratio > 1.1 ? Verdict::Diverging
                                               : Verdict::Inconclusive;
    }
    return out;
}

bool exact_integrability(const RootSystem& rs, const PLConvexFunction& l,
                         const std::vector<Cone>& decomposition) {
    Cone chamber = rs.weyl_chamber();
    NewtonSet direct = newton_set_on_cone(l, chamber);
    if (!decomposition.empty()) {
        Polyhedron meet = direct.set; // dims only; replaced below
        bool started = false;
        for (const auto& sigma : decomposition) {
            if (sigma.ambient_dim() != rs.dim)
                throw DimensionMismatch("decomposition cone dimension mismatch");
            for (const auto& ray : sigma.rays())
                if (!chamber.contains(ray))
                    throw ValidationError("decomposition cone leaves the chamber");
            for (const auto& line : sigma.lineality())
                if (!chamber.contains(line) || !chamber.contains(neg(line)))
                    throw ValidationError("decomposition cone leaves the chamber");
            NewtonSet piece = newton_set_on_cone(l, sigma);
            meet = started ? meet.intersect(piece.set) : piece.set;
            started = true;
        }
        if (meet != direct.set)
            throw ValidationError("cone decomposition does not reproduce the chamber "
                                  "Newton set; it likely fails to cover the chamber");
    }
    Vec four_rho = scale(Rat(4), rs.rho);
    return direct.set.interior_contains_point(four_rho);
}

CriterionCheck criterion_agreement(const IntegrandSpec& spec,
                                   const std::vector<Cone>& decomposition) {
    CriterionCheck out{exact_integrability(spec.rs, spec.l, decomposition),
                       estimate_integral(spec), CriterionCheck::Outcome::Inconclusive};
    if (out.numeric.verdict == Verdict::Inconclusive) return out;
    bool numeric_integrable = out.numeric.verdict == Verdict::Converging;
    out.outcome = numeric_integrable == out.exact_integrable
                      ? CriterionCheck::Outcome::Agree
                      : CriterionCheck::Outcome::Contradict;
    return out;
}

} // namespace gcalpha
