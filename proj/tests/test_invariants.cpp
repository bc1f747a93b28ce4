#include <doctest.h>

#include <algorithm>

#include "gcalpha/invariants.hpp"
#include "helpers.hpp"

using namespace gcalpha;
using testutil::Rng;
using testutil::v;

namespace {

CompactificationData wonderful_data(const std::string& label) {
    RootSystem rs = build_root_system(label);
    Polytope q = wonderful_polytope(rs);
    return CompactificationData::make(std::move(rs), q, q);
}

Polytope diamond(long r) { return hull(2, {v({r, 0}), v({-r, 0}), v({0, r}), v({0, -r})}); }
Polytope square(long r) { return hull(2, {v({r, r}), v({r, -r}), v({-r, r}), v({-r, -r})}); }

} // namespace

TEST_CASE("alpha of the wonderful compactifications of A_n") {
    CHECK(alpha(wonderful_data("A1")) == ExtRat(Rat(1) / 2));
    CHECK(alpha(wonderful_data("A2")) == ExtRat(Rat(1) / 3));
    CHECK(alpha(wonderful_data("A3")) == ExtRat(Rat(1) / 5));
    CHECK(alpha(wonderful_data("A4")) == ExtRat(Rat(1) / 7));
}

TEST_CASE("alpha of a wonderful product is the min over the factors") {
    CHECK(alpha(wonderful_data("A1xA1")) == ExtRat(Rat(1) / 2));
    CHECK(alpha(wonderful_data("A1xA2")) == ExtRat(Rat(1) / 3));
}

TEST_CASE("alpha report carries witness and active facet normals") {
    CompactificationData data = wonderful_data("A1");
    InvariantReport rep;
    CHECK(alpha(data, &rep) == ExtRat(Rat(1) / 2));
    CHECK(rep.value == ExtRat(Rat(1) / 2));
    CHECK(rep.fixed_dim == 0);
    CHECK(rep.active_constraints.size() == 2); // both unit normals achieve it
    CHECK(std::find(rep.active_constraints.begin(), rep.active_constraints.end(), rep.witness) !=
          rep.active_constraints.end());
}

TEST_CASE("semisimple inradius route agrees with the eroded-body route") {
    for (const char* label : {"A1", "A2", "B2", "G2", "A1xA1"}) {
        CompactificationData data = wonderful_data(label);
        CHECK(alpha_semisimple(data) == alpha(data));
    }
    // not defined once a torus factor fixes a line
    RootSystem rs = build_root_system("A1xT1");
    Polytope d = diamond(2);
    CompactificationData data = CompactificationData::make(rs, d, d);
    CHECK_THROWS_AS(alpha_semisimple(data), NotSemisimple);
}

TEST_CASE("toric case: alpha is the classical polytope ratio") {
    RootSystem rs = build_root_system("T2");
    Polytope sq = square(1);
    CompactificationData data = CompactificationData::make(rs, sq, sq);
    InvariantReport rep;
    CHECK(alpha(data, &rep) == ExtRat(Rat(1) / 2));
    CHECK(rep.fixed_dim == 2);
    CHECK(rep.active_constraints.size() == 4);
    // P scaled up shrinks alpha reciprocally; Q is untouched
    CompactificationData big = CompactificationData::make(rs, sq.scaled(Rat(3)), sq);
    CHECK(alpha(big) == ExtRat(Rat(1) / 6));
}

TEST_CASE("mixed factor with a torus direction") {
    RootSystem rs = build_root_system("A1xT1");
    Polytope d = diamond(2);
    CompactificationData data = CompactificationData::make(rs, d, d);
    InvariantReport rep;
    CHECK(alpha(data, &rep) == ExtRat(Rat(1) / 4));
    CHECK(rep.fixed_dim == 1);

    // adding the sign flip on the torus coordinate kills the fixed line
    SymmetryGroup o{{Mat{v({1, 0}), v({0, -1})}}};
    InvariantReport rep2;
    CHECK(alpha_with_symmetries(data, o, &rep2) == ExtRat(Rat(1) / 2));
    CHECK(rep2.fixed_dim == 0);

    // a generator that does not preserve the polytopes is rejected
    SymmetryGroup bad{{Mat{v({1, 1}), v({0, 1})}}};
    CHECK_THROWS_AS(alpha_with_symmetries(data, bad), SymmetryViolation);
    // an exploding closure trips the cap
    SymmetryGroup fine{{Mat{v({0, -1}), v({1, 0})}}}; // rotation by 90 degrees
    Polytope sq = square(2);
    RootSystem t2 = build_root_system("T2");
    CompactificationData tdata = CompactificationData::make(t2, sq, sq);
    // the fixed space collapses to {0}: K shrinks from P + (-P) to P itself
    CHECK(alpha(tdata) == ExtRat(Rat(1) / 2));
    CHECK(alpha_with_symmetries(tdata, fine) == ExtRat(Rat(1)));
    CHECK_THROWS_AS(alpha_with_symmetries(tdata, fine, nullptr, 2), GroupTooLarge);
}

TEST_CASE("lct of the reference metric is unbounded") {
    for (const char* label : {"A1", "A2", "G2"}) {
        CompactificationData data = wonderful_data(label);
        InvariantReport rep;
        CHECK(lct(data, MetricSpec::reference(), &rep) == ExtRat());
        CHECK(rep.witness.empty());
        CHECK(rep.active_constraints.empty());
    }
}

TEST_CASE("lct of explicit bodies against hand-computed values") {
    // interval data: P = Q = [-2,2], H = [-1,1]
    RootSystem rs = build_root_system("A1");
    Polytope seg = hull(1, {v({-2}), v({2})});
    CompactificationData data = CompactificationData::make(rs, seg, seg);

    // N = [-1,1]: each direction gives (2*2 - 2*1) / (2*2 - 1) = 2/3
    InvariantReport rep;
    CHECK(lct(data, MetricSpec::newton_body_explicit(hull(1, {v({-1}), v({1})})), &rep) ==
          ExtRat(Rat(2) / 3));
    CHECK(rep.active_constraints.size() == 2);
    CHECK(!rep.witness.empty());

    // N = {0} via the point metric: 2(h_Q - h_H) / 2h_P = 1/2
    CHECK(lct(data, MetricSpec::point_metric(v({0}))) == ExtRat(Rat(1) / 2));

    // N = [-3,3] from a PL potential: (4 - 2) / (4 - 3) = 2
    auto pot = PLConvexFunction::from_pieces(1, {{v({3}), Rat(0)}, {v({-3}), Rat(0)}});
    CHECK(lct(data, MetricSpec::pl_potential(pot)) == ExtRat(Rat(2)));
}

TEST_CASE("toric lct: point metric at a scaled vertex reproduces alpha") {
    RootSystem rs = build_root_system("T2");
    Polytope sq = square(1);
    CompactificationData data = CompactificationData::make(rs, sq, sq);
    // the polytope of fixed points is all of P; its vertices v give metrics
    // whose lct minimum equals alpha
    ExtRat a = alpha(data);
    ExtRat best;
    for (const auto& vert : data.p.vertices()) {
        ExtRat c = lct(data, MetricSpec::point_metric(scale(Rat(2), vert)));
        best.min_with(c);
        CHECK(!(c < a));
    }
    CHECK(best == a);
    // centre point: N = {0}, both ratios collapse to h_Q/h_P = 1
    CHECK(lct(data, MetricSpec::point_metric(v({0, 0}))) == ExtRat(Rat(1)));
}

TEST_CASE("alpha equals the minimum of point-metric lcts over fixed vertices") {
    Rng rng(91);
    RootSystem rs = build_root_system("T2");
    for (int trial = 0; trial < 12; ++trial) {
        Polytope p = testutil::random_polytope_with_interior_origin(rng, 2);
        Polytope q = testutil::random_polytope_with_interior_origin(rng, 2);
        CompactificationData data = CompactificationData::make(rs, p, q);
        ExtRat a = alpha(data);
        ExtRat best;
        for (const auto& vert : data.p.vertices()) {
            ExtRat c = lct(data, MetricSpec::point_metric(scale(Rat(2), vert)));
            best.min_with(c);
        }
        CHECK(best == a);
    }
}

TEST_CASE("lct scales reciprocally in the polarization") {
    RootSystem rs = build_root_system("A2");
    Polytope q = wonderful_polytope(rs);
    CompactificationData d1 = CompactificationData::make(rs, q, q);
    CompactificationData d2 = CompactificationData::make(rs, q.scaled(Rat(2)), q);
    // with the point metric at the origin the denominator is 2 h_P
    ExtRat c1 = lct(d1, MetricSpec::point_metric(v({0, 0})));
    ExtRat c2 = lct(d2, MetricSpec::point_metric(v({0, 0})));
    CHECK(c1.value() == c2.value() * 2);
    // alpha too
    CHECK(alpha(d1).value() == alpha(d2).value() * 2);
}

TEST_CASE("relabeled root data yields identical invariants") {
    RootSystem a2 = build_root_system("A2");
    RootSystem swapped = build_custom_root_system(
        2, {v({0, 1}), v({1, 0})}, {v({-1, 2}), v({2, -1})});
    Polytope q = wonderful_polytope(a2);
    CompactificationData d1 = CompactificationData::make(a2, q, q);
    CompactificationData d2 = CompactificationData::make(swapped, q, q);
    CHECK(alpha(d1) == alpha(d2));
    CHECK(lct(d1, MetricSpec::point_metric(v({0, 0}))) ==
          lct(d2, MetricSpec::point_metric(v({0, 0}))));
}

TEST_CASE("input validation walks the error chain in order") {
    RootSystem a1 = build_root_system("A1");
    Polytope seg = hull(1, {v({-2}), v({2})});
    Polytope sq = square(2);

    CHECK_THROWS_AS(CompactificationData::make(a1, sq, sq), DimensionMismatch);
    CHECK_THROWS_AS(CompactificationData::make(a1, seg, Polytope::empty_set(1)), EmptyQ);
    CHECK_THROWS_AS(CompactificationData::make(a1, seg, hull(1, {v({1})})), DegeneratePolytope);
    CHECK_THROWS_AS(CompactificationData::make(a1, hull(1, {v({1})}), seg), DegeneratePolytope);
    Polytope off = hull(1, {v({-1}), v({3})});
    CHECK_THROWS_AS(CompactificationData::make(a1, off, seg), NotWInvariant);
    CHECK_THROWS_AS(CompactificationData::make(a1, seg, off), NotWInvariant);
    // H = [-1,1] must sit strictly inside Q
    Polytope tight = hull(1, {v({-1}), v({1})});
    CHECK_THROWS_AS(CompactificationData::make(a1, seg, tight), NotFano);
}

TEST_CASE("fano admissibility check reports per-facet slack") {
    RootSystem rs = build_root_system("A1");
    WeylGroup w = weyl_group(rs);
    FanoReport ok = fano_check(rs, w, hull(1, {v({-2}), v({2})}));
    CHECK(ok.ok);
    REQUIRE(ok.slacks.size() == 2);
    CHECK(ok.slacks[0].second == 1);
    CHECK(ok.slacks[1].second == 1);

    // Q equal to the orbit hull of 2 rho: slack zero, not strictly Fano
    FanoReport boundary = fano_check(rs, w, hull(1, {v({-1}), v({1})}));
    CHECK(!boundary.ok);
    for (const auto& s : boundary.slacks) CHECK(s.second == 0);

    FanoReport inside = fano_check(rs, w, hull(1, {testutil::rv({"-1/2"}), testutil::rv({"1/2"})}));
    CHECK(!inside.ok);
    for (const auto& s : inside.slacks) CHECK(s.second < 0);
}

TEST_CASE("wonderful data of every small semisimple system is admissible") {
    for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "D3", "G2", "A1xG2"}) {
        RootSystem rs = build_root_system(label);
        WeylGroup w = weyl_group(rs);
        Polytope q = wonderful_polytope(rs, w);
        FanoReport rep = fano_check(rs, w, q);
        CHECK(rep.ok);
        for (const auto& s : rep.slacks) CHECK(s.second > 0);
    }
}

TEST_CASE("lct soundness on random toric data: inclusion holds at the optimum") {
    // independent certificate: at c = lct the scaled bodies nest exactly,
    // and just above they do not
    Rng rng(92);
    RootSystem rs = build_root_system("T2");
    int tight = 0;
    for (int trial = 0; trial < 10; ++trial) {
        Polytope p = testutil::random_polytope_with_interior_origin(rng, 2);
        Polytope q = testutil::random_polytope_with_interior_origin(rng, 2);
        CompactificationData data = CompactificationData::make(rs, p, q);
        MetricSpec spec = MetricSpec::newton_body_explicit(hull(2, {v({0, 0})}));
        ExtRat c = lct(data, spec);
        REQUIRE(!c.is_infinite());
        const Rat cs = c.value();
        // the defining inclusion 2H + 2cP inside cN + 2Q, here with H = N = {0}
        Polytope lhs = data.p.scaled(2 * cs);
        Polytope rhs = data.q.scaled(Rat(2));
        CHECK(rhs.contains(lhs));
        Polytope above = data.p.scaled(2 * (cs + Rat(1) / 1000));
        if (!rhs.contains(above)) ++tight;
    }
    CHECK(tight == 10);
}
