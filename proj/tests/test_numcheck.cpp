#include <doctest.h>

#include <cmath>

#include "gcalpha/numcheck.hpp"
#include "helpers.hpp"

using namespace gcalpha;
using testutil::Rng;
using testutil::v;

namespace {

PLConvexFunction abs_exponent(int dim, const Rat& t) {
    std::vector<PLPiece> pieces;
    for (int i = 0; i < dim; ++i) {
        Vec plus = zero_vec(dim), minus = zero_vec(dim);
        plus[static_cast<std::size_t>(i)] = t;
        minus[static_cast<std::size_t>(i)] = -t;
        pieces.push_back({plus, Rat(0)});
        pieces.push_back({minus, Rat(0)});
    }
    return PLConvexFunction::from_pieces(dim, std::move(pieces));
}

IntegrandSpec a1_spec(const Rat& t) {
    IntegrandSpec spec{build_root_system("A1"), abs_exponent(1, t), {2, 4, 8, 16}, 100000, 12345};
    return spec;
}

} // namespace

TEST_CASE("chamber density oracles") {
    RootSystem a1 = build_root_system("A1");
    CHECK(kak_density(a1, v({0})) == 0.0);
    CHECK(kak_density(a1, v({1})) == doctest::Approx(1.3810978455418157).epsilon(1e-12));
    RootSystem a2 = build_root_system("A2");
    double s1 = std::sinh(1.0), s2 = std::sinh(2.0);
    CHECK(kak_density(a2, v({1, 1})) == doctest::Approx(s1 * s1 * s1 * s1 * s2 * s2));
    CHECK(kak_density(a2, v({1, 0})) == 0.0); // on a wall
    RootSystem t2 = build_root_system("T2");
    CHECK(kak_density(t2, v({-5, 7})) == 1.0); // empty product, no chamber walls
    CHECK_THROWS_AS(kak_density(a1, v({-1})), OutsideChamber);
    CHECK_THROWS_AS(kak_density(a1, v({1, 2})), DimensionMismatch);
}

TEST_CASE("density sits between the exponential envelopes away from the walls") {
    // for alpha(x) >= 1 on every positive root:
    //   (e^t (1 - e^-2) / 2)^2 <= sinh(t)^2 <= (e^t / 2)^2  per factor
    Rng rng(101);
    for (const char* label : {"A2", "B2", "G2"}) {
        RootSystem rs = build_root_system(label);
        const double m = static_cast<double>(rs.positive_roots.size());
        for (int trial = 0; trial < 10; ++trial) {
            Vec x = rng.vec(rs.dim, 1, 4); // all simple-root values >= 1
            double j = kak_density(rs, x);
            double top = 4 * to_double(dot(rs.rho, x)); // 2 * sum of positive roots at x
            double upper = std::exp(top - m * std::log(4.0));
            double lower = upper * std::pow(1 - std::exp(-2.0), 2 * m);
            CHECK(j <= upper * (1 + 1e-9));
            CHECK(j >= lower * (1 - 1e-9));
        }
    }
}

TEST_CASE("exact integrability threshold on the half line") {
    RootSystem a1 = build_root_system("A1");
    // exp(-t|x|) sinh(x)^2 integrates iff t > 2; the boundary case stays out
    CHECK(!exact_integrability(a1, abs_exponent(1, Rat(1))));
    CHECK(!exact_integrability(a1, abs_exponent(1, Rat(2))));
    CHECK(exact_integrability(a1, abs_exponent(1, Rat(41) / 20)));
    CHECK(exact_integrability(a1, abs_exponent(1, Rat(3))));
}

TEST_CASE("exact integrability on the plane and without roots") {
    RootSystem a2 = build_root_system("A2");
    // along the diagonal the density grows like e^{8s}: threshold t = 8
    CHECK(!exact_integrability(a2, abs_exponent(2, Rat(8))));
    CHECK(exact_integrability(a2, abs_exponent(2, Rat(9))));

    RootSystem t2 = build_root_system("T2");
    CHECK(exact_integrability(t2, abs_exponent(2, Rat(1))));
    // a flat direction keeps the slope hull thin: not integrable
    auto half = PLConvexFunction::from_pieces(2, {{v({0, 0}), Rat(0)}, {v({1, 0}), Rat(0)}});
    CHECK(!exact_integrability(t2, half));
}

TEST_CASE("cone decompositions must reproduce the chamber newton set") {
    RootSystem a2 = build_root_system("A2");
    auto l = abs_exponent(2, Rat(9));
    Cone chamber = a2.weyl_chamber();
    // the trivial decomposition and a genuine fan split both work
    CHECK(exact_integrability(a2, l, {chamber}));
    std::vector<Cone> split{Cone::from_rays(2, {v({1, 0}), v({1, 1})}),
                            Cone::from_rays(2, {v({1, 1}), v({0, 1})})};
    CHECK(exact_integrability(a2, l, split));
    CHECK(exact_integrability(a2, abs_exponent(2, Rat(8)), split) == false);

    // a decomposition that misses part of the chamber is rejected
    std::vector<Cone> undercover{Cone::from_rays(2, {v({1, 0})})};
    CHECK_THROWS_AS(exact_integrability(a2, l, undercover), ValidationError);
    // cones may not leave the chamber
    std::vector<Cone> outside{Cone::from_rays(2, {v({1, 0}), v({-1, 2})})};
    CHECK_THROWS_AS(exact_integrability(a2, l, outside), ValidationError);
    std::vector<Cone> wrongdim{Cone::from_rays(3, {v({1, 0, 0})})};
    CHECK_THROWS_AS(exact_integrability(a2, l, wrongdim), DimensionMismatch);
}

TEST_CASE("integral estimates: input validation") {
    IntegrandSpec spec = a1_spec(Rat(4));
    spec.truncation_radii = {};
    CHECK_THROWS_AS(estimate_integral(spec), ValidationError);
    spec.truncation_radii = {4, 2};
    CHECK_THROWS_AS(estimate_integral(spec), ValidationError);
    spec.truncation_radii = {-1, 2};
    CHECK_THROWS_AS(estimate_integral(spec), ValidationError);
    spec.truncation_radii = {2, 2};
    CHECK_THROWS_AS(estimate_integral(spec), ValidationError);
    spec = a1_spec(Rat(4));
    spec.samples_per_cell = 0;
    CHECK_THROWS_AS(estimate_integral(spec), ValidationError);
    spec = a1_spec(Rat(4));
    spec.l = abs_exponent(2, Rat(4));
    CHECK_THROWS_AS(estimate_integral(spec), DimensionMismatch);
}

TEST_CASE("integral estimates are deterministic in the seed") {
    IntegrandSpec spec = a1_spec(Rat(4));
    spec.samples_per_cell = 20000;
    ConvergenceVerdict a = estimate_integral(spec);
    ConvergenceVerdict b = estimate_integral(spec);
    CHECK(a.partial_integrals == b.partial_integrals);
    CHECK(a.increments == b.increments);
    CHECK(a.fitted_ratio == b.fitted_ratio);
    spec.seed = 999;
    ConvergenceVerdict c = estimate_integral(spec);
    CHECK(a.partial_integrals != c.partial_integrals);
}

TEST_CASE("slope sweep on the half line matches the exact threshold") {
    auto run = [](const Rat& t) { return criterion_agreement(a1_spec(t)); };

    CriterionCheck c1 = run(Rat(1));
    CHECK(!c1.exact_integrable);
    CHECK(c1.numeric.verdict == Verdict::Diverging);
    CHECK(c1.outcome == CriterionCheck::Outcome::Agree);

    CriterionCheck c2 = run(Rat(2));
    CHECK(!c2.exact_integrable);
    CHECK(c2.numeric.verdict == Verdict::Diverging); // borderline mass doubles per shell
    CHECK(c2.outcome == CriterionCheck::Outcome::Agree);

    for (long t : {3, 4, 6}) {
        CriterionCheck c = run(Rat(t));
        CHECK(c.exact_integrable);
        CHECK(c.numeric.verdict == Verdict::Converging);
        CHECK(c.outcome == CriterionCheck::Outcome::Agree);
    }
}

TEST_CASE("the t = 4 estimate lands within five percent of the closed form") {
    // integral of exp(-4x) sinh(x)^2 over [0, inf) = 1/24
    ConvergenceVerdict res = estimate_integral(a1_spec(Rat(4)));
    double total = res.partial_integrals.back();
    CHECK(std::abs(total * 24.0 - 1.0) < 0.05);
}

TEST_CASE("a steep exponent underflows to an exactly vanishing tail") {
    ConvergenceVerdict res = estimate_integral(a1_spec(Rat(100)));
    CHECK(res.increments.back() == 0.0);
    CHECK(res.fitted_ratio == 0.0);
    CHECK(res.verdict == Verdict::Converging);
}

TEST_CASE("numerics near the threshold can contradict the exact criterion") {
    // t = 41/20 is integrable, but the e^{-x/20} tail decays far too slowly
    // for the default radii: shell mass keeps growing, the verdict disagrees
    CriterionCheck c = criterion_agreement(a1_spec(Rat(41) / 20));
    CHECK(c.exact_integrable);
    CHECK(c.numeric.verdict == Verdict::Diverging);
    CHECK(c.outcome == CriterionCheck::Outcome::Contradict);
}

TEST_CASE("criterion agreement over a cone decomposition") {
    RootSystem a1 = build_root_system("A1");
    IntegrandSpec spec = a1_spec(Rat(4));
    spec.samples_per_cell = 20000;
    std::vector<Cone> decomposition{a1.weyl_chamber()};
    CriterionCheck c = criterion_agreement(spec, decomposition);
    CHECK(c.exact_integrable);
    CHECK(c.outcome == CriterionCheck::Outcome::Agree);
}
