#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tropcurves/elimination.hpp"
#include "tropcurves/newton.hpp"
#include "tropcurves/scenario.hpp"

using namespace tropcurves;

namespace {

TropicalComplex tropical_line() {
    return corner_locus(tropicalize_polynomial(parse_polynomial("x + y + 1")));
}

} // namespace

TEST_CASE("identity pushforward returns the input") {
    TropicalComplex cl = corner_locus(fixtures::square_cycle_poly());
    LatticeMap identity{{{Int(1), Int(0)}, {Int(0), Int(1)}}, 1};
    CHECK(pushforward(cl, identity) == canonical_form(cl));
}

TEST_CASE("sum map doubles the line") {
    LatticeMap sum{{{Int(1), Int(1)}}, 1};
    TropicalComplex image = pushforward(tropical_line(), sum);
    REQUIRE(image.rays.size() == 2);
    CHECK(image.rays[0].mult == 2);
    CHECK(image.rays[1].mult == 2);
    CHECK(check_balancing(image).pass);
}

TEST_CASE("collapsed cells are reported, not errors") {
    LatticeMap first{{{Int(1), Int(0)}}, 1};
    PushforwardReport report;
    TropicalComplex image = pushforward(tropical_line(), first, &report);
    // The (0,1) ray maps to a point.
    CHECK(report.collapsed.size() == 1);
    CHECK(check_balancing(image).pass);
}

TEST_CASE("degree must divide the image multiplicities") {
    LatticeMap sum{{{Int(1), Int(1)}}, 3};
    CHECK_THROWS_AS(pushforward(tropical_line(), sum), NonIntegralMultiplicity);
    LatticeMap sum2{{{Int(1), Int(1)}}, 2};
    TropicalComplex image = pushforward(tropical_line(), sum2);
    CHECK(image.rays[0].mult == 1);
}

TEST_CASE("pushforward composes") {
    testutil::Rng rng(47);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int iter = 0; iter < 20; ++iter) {
        TropicalComplex cl = corner_locus(testutil::random_tropical_polynomial(rng, 6));
        LatticeMap a{{{Int(entry(rng)), Int(entry(rng))}, {Int(entry(rng)), Int(entry(rng))}}, 1};
        LatticeMap b{{{Int(entry(rng)), Int(entry(rng))}, {Int(entry(rng)), Int(entry(rng))}}, 1};
        TropicalComplex two_step = pushforward(pushforward(cl, b), a);
        TropicalComplex one_step = pushforward(cl, compose(a, b));
        CHECK(canonical_form(two_step) == canonical_form(one_step));
    }
}

TEST_CASE("pushforward composes across nontrivial degrees") {
    TropicalComplex line = tropical_line();
    LatticeMap doubling{{{Int(2), Int(0)}, {Int(0), Int(2)}}, 1};
    LatticeMap sum{{{Int(1), Int(1)}}, 2};
    TropicalComplex two_step = pushforward(pushforward(line, doubling), sum);
    TropicalComplex one_step = pushforward(line, compose(sum, doubling));
    CHECK(compose(sum, doubling).degree == 2);
    CHECK(canonical_form(two_step) == canonical_form(one_step));
    REQUIRE(two_step.rays.size() == 2);
    CHECK(two_step.rays[0].mult == 2);
}

TEST_CASE("pushforward preserves balancing") {
    testutil::Rng rng(53);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int iter = 0; iter < 25; ++iter) {
        TropicalComplex cl = corner_locus(testutil::random_tropical_polynomial(rng));
        LatticeMap m{{{Int(entry(rng)), Int(entry(rng))}, {Int(entry(rng)), Int(entry(rng))}}, 1};
        TropicalComplex image = pushforward(cl, m);
        CHECK(check_balancing(image).pass);
    }
}

TEST_CASE("newton polygon of the two-to-one plane curve") {
    TropicalComplex cl = corner_locus(fixtures::example1_implicit());
    CHECK(newton_polygon_from_curve(cl, 1) == canonical_polygon({{0, 0}, {1, 0}, {0, 2}}));
}

TEST_CASE("newton polygon of the line is the unit triangle") {
    CHECK(newton_polygon_from_curve(tropical_line(), 1) ==
          canonical_polygon({{0, 0}, {1, 0}, {0, 1}}));
}

TEST_CASE("newton polygon of the square-cycle curve") {
    TropicalComplex cl = corner_locus(fixtures::square_cycle_poly());
    CHECK(newton_polygon_from_curve(cl, 1) ==
          canonical_polygon({{1, 0}, {2, 1}, {1, 2}, {0, 1}}));
}

TEST_CASE("unbalanced rays do not close up") {
    ComplexBuilder b(2);
    b.add_ray(Point{Rat(0), Rat(0)}, {1, 0}, 1);
    b.add_ray(Point{Rat(0), Rat(0)}, {0, 1}, 1);
    CHECK_THROWS_AS(newton_polygon_from_curve(b.build(), 1), NotClosed);
}

TEST_CASE("degenerate curves give two-vertex polygons") {
    TropicalComplex cl = corner_locus(tropicalize_polynomial(parse_polynomial("x + y")));
    LatticePolygon poly = newton_polygon_from_curve(cl, 1);
    CHECK(poly == canonical_polygon(convex_hull({{1, 0}, {0, 1}})));
}

TEST_CASE("corner locus followed by recovery round-trips the hull") {
    testutil::Rng rng(59);
    for (int iter = 0; iter < 30; ++iter) {
        TropicalPolynomial tp = testutil::random_tropical_polynomial(rng);
        std::vector<LatticePoint2> exps;
        for (const auto& [u, v] : tp.terms) exps.push_back(u);
        CHECK(newton_polygon_from_curve(corner_locus(tp), 1) ==
              canonical_polygon(convex_hull(exps)));
    }
}
