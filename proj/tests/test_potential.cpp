#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tropcurves/potential.hpp"
#include "tropcurves/scenario.hpp"

using namespace tropcurves;

TEST_CASE("slopes for x = t(t-p) on the four-punctured line") {
    auto skel = fixtures::example1_skeleton();
    PLFunction f = solve_slope(skel, fixtures::example1_divisor_x());
    CHECK(f.edge_slope(0) == 2); // base vertex toward the deep vertex
    CHECK(f.ray_slope("0") == 1);
    CHECK(f.ray_slope("p") == 1);
    CHECK(f.ray_slope("inf") == -2);
    CHECK(f.ray_slope("1") == 0);
    CHECK(f.evaluate(skel->base_vertex()) == 0);
    CHECK(f.evaluate(1) == 2);
}

TEST_CASE("zero divisor gives the zero function") {
    auto skel = fixtures::example1_skeleton();
    PLFunction f = solve_slope(skel, Divisor{});
    CHECK(f.edge_slope(0) == 0);
    CHECK(f.evaluate(1) == 0);
}

TEST_CASE("degree-3 divisor on the third-points circle") {
    Rat ell(1);
    auto skel = fixtures::good_embedding_skeleton(ell);
    PLFunction f = solve_slope(skel, Divisor{{{"alpha", 2}, {"beta", -1}, {"zero", -1}}});
    // Arcs are stored (zero,alpha), (alpha,beta), (beta,zero).
    CHECK(f.edge_slope(0) == 1);
    CHECK(f.edge_slope(1) == -1);
    CHECK(f.edge_slope(2) == 0);
    CHECK(f.ray_slope("alpha") == 2);
    CHECK(f.ray_slope("beta") == -1);
    CHECK(f.ray_slope("zero") == -1);
}

TEST_CASE("degree-3 divisor on the quarter-points circle") {
    auto skel = fixtures::bad_embedding_skeleton(Rat(1), 2);
    PLFunction f = solve_slope(skel, Divisor{{{"beta", 3}, {"gamma", -2}, {"zero", -1}}});
    CHECK(f.edge_slope(0) == 1);
    CHECK(f.edge_slope(1) == 1);
    CHECK(f.edge_slope(2) == -2);
    CHECK(f.edge_slope(3) == 0);
}

TEST_CASE("divisor errors") {
    auto skel = fixtures::example1_skeleton();
    CHECK_THROWS_AS(solve_slope(skel, Divisor{{{"0", 1}}}), DegreeNonZero);
    CHECK_THROWS_AS(solve_slope(skel, Divisor{{{"nowhere", 1}, {"0", -1}}}), UnknownPuncture);
}

TEST_CASE("nontrivial divisor class on the loop is rejected") {
    Rat ell(1);
    Skeleton s = build_tate_skeleton(ell, {{"zero", 0}, {"alpha", ell / 3}});
    auto skel = std::make_shared<const Skeleton>(std::move(s));
    CHECK_THROWS_AS(solve_slope(skel, Divisor{{{"alpha", 1}, {"zero", -1}}}), NonPrincipalOnTate);
    // Three times the same divisor is trivial on the loop.
    PLFunction f = solve_slope(skel, Divisor{{{"alpha", 3}, {"zero", -3}}});
    CHECK(f.slope_from(0, 0) == 2); // short arc toward the zeros
    CHECK(f.slope_from(1, 0) == 1); // long arc toward the zeros
}

TEST_CASE("evaluation is path independent on circles") {
    testutil::Rng rng(17);
    for (int iter = 0; iter < 40; ++iter) {
        auto [skel, div] = testutil::random_tate_principal(rng, 4);
        PLFunction f = solve_slope(skel, div);
        auto values = f.vertex_values();
        for (std::size_t e = 0; e < skel->edges().size(); ++e) {
            const auto& ed = skel->edges()[e];
            CHECK(values[ed.v] - values[ed.u] == Rat(f.edge_slope(static_cast<int>(e))) * ed.length);
        }
        for (int v = 0; v < skel->vertex_count(); ++v) CHECK(f.harmonic_defect(v) == 0);
    }
}

TEST_CASE("change of slope vanishes at skeletal vertices") {
    auto skel = fixtures::example1_skeleton();
    PLFunction fx = solve_slope(skel, fixtures::example1_divisor_x());
    CHECK(change_of_slope(fx, 0) == 0); // outgoing -2, 0, +2
    CHECK(change_of_slope(fx, 1) == 0);

    auto tate = fixtures::weierstrass_tate_skeleton();
    PLFunction gx = solve_slope(tate, Divisor{{{"Q1", 1}, {"Q2", 1}, {"inf", -2}}});
    CHECK(change_of_slope(gx, 1) == 0); // outgoing +1, +1, -1, -1

    // Interior degree-2 vertex with no divisor after subdivision.
    auto sub = std::make_shared<const Skeleton>(skel->subdivided(0, Rat(1, 2)));
    PLFunction fs = solve_slope(sub, fixtures::example1_divisor_x());
    CHECK(change_of_slope(fs, 2) == 0);
}

TEST_CASE("superposition of divisors") {
    testutil::Rng rng(29);
    for (int iter = 0; iter < 30; ++iter) {
        auto [skel, d1] = testutil::random_tate_principal(rng, 3);
        Divisor d2 = d1; // trivially principal as well
        for (auto& [p, o] : d2.orders) o *= 2;
        PLFunction f1 = solve_slope(skel, d1);
        PLFunction f2 = solve_slope(skel, d2);
        PLFunction f12 = solve_slope(skel, d1 + d2);
        for (std::size_t e = 0; e < skel->edges().size(); ++e)
            CHECK(f12.edge_slope(static_cast<int>(e)) ==
                  f1.edge_slope(static_cast<int>(e)) + f2.edge_slope(static_cast<int>(e)));
    }
}

TEST_CASE("solving commutes with subdivision") {
    auto skel = fixtures::example1_skeleton();
    PLFunction f = solve_slope(skel, fixtures::example1_divisor_x());
    auto sub = std::make_shared<const Skeleton>(skel->subdivided(0, Rat(1, 3)));
    PLFunction g = solve_slope(sub, fixtures::example1_divisor_x());
    CHECK(g.evaluate(0) == f.evaluate(0));
    CHECK(g.evaluate(1) == f.evaluate(1));
    CHECK(g.edge_slope(0) == f.edge_slope(0));
    CHECK(g.edge_slope(1) == f.edge_slope(0));
}

TEST_CASE("tree slopes equal the far-side degree") {
    testutil::Rng rng(31);
    for (int iter = 0; iter < 60; ++iter) {
        auto skel = testutil::random_tree(rng, 3 + iter % 8, 4 + iter % 3);
        Divisor d = testutil::random_divisor(rng, *skel);
        PLFunction f = solve_slope(skel, d);
        for (std::size_t e = 0; e < skel->edges().size(); ++e)
            CHECK(f.edge_slope(static_cast<int>(e)) ==
                  testutil::far_side_degree(*skel, d, static_cast<int>(e)));
        for (int v = 0; v < skel->vertex_count(); ++v) CHECK(f.harmonic_defect(v) == 0);
    }
}

TEST_CASE("base value offsets translate every value") {
    auto skel = fixtures::example1_skeleton();
    PLFunction f = solve_slope(skel, fixtures::example1_divisor_x()).with_base_value(Rat(-7, 2));
    CHECK(f.evaluate(0) == Rat(-7, 2));
    CHECK(f.evaluate(1) == Rat(-3, 2));
}
