#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tropcurves/json_io.hpp"
#include "tropcurves/scenario.hpp"
#include "tropcurves/svg.hpp"

using namespace tropcurves;

TEST_CASE("skeleton json round trip") {
    for (auto skel : {fixtures::example1_skeleton(), fixtures::cartwright_skeleton(),
                      fixtures::weierstrass_tate_skeleton()}) {
        json j = skeleton_to_json(*skel);
        Skeleton back = skeleton_from_json(j);
        CHECK(skeleton_to_json(back) == j);
        CHECK(back.betti() == skel->betti());
    }
    Skeleton loop = build_tate_skeleton(Rat(7, 2), {});
    CHECK(skeleton_to_json(skeleton_from_json(skeleton_to_json(loop))) == skeleton_to_json(loop));
}

TEST_CASE("divisor json round trip") {
    Divisor d{{{"0", 1}, {"p", 1}, {"inf", -2}}};
    CHECK(divisor_to_json(divisor_from_json(divisor_to_json(d))) == divisor_to_json(d));
}

TEST_CASE("plfunction json round trip") {
    auto skel = fixtures::example1_skeleton();
    PLFunction f = solve_slope(skel, fixtures::example1_divisor_x()).with_base_value(Rat(5, 3));
    json j = plfunction_to_json(f);
    PLFunction back = plfunction_from_json(j, skel);
    CHECK(plfunction_to_json(back) == j);
    CHECK(back.evaluate(1) == f.evaluate(1));

    auto other = fixtures::cartwright_skeleton();
    CHECK_THROWS_AS(plfunction_from_json(j, other), ParseError);
}

TEST_CASE("complex json round trip") {
    TropicalComplex cl = corner_locus(fixtures::square_cycle_poly());
    json j = complex_to_json(cl);
    CHECK(complex_from_json(j) == cl);

    auto skel = fixtures::cartwright_skeleton();
    auto [tc, rep] = trop_map(skel, fixtures::cartwright_coords(skel));
    CHECK(complex_from_json(complex_to_json(tc)) == tc);
}

TEST_CASE("tropical polynomial json round trip") {
    TropicalPolynomial tp = fixtures::square_cycle_poly();
    json j = troppoly_to_json(tp);
    TropicalPolynomial back = troppoly_from_json(j);
    CHECK(troppoly_to_json(back) == j);
    CHECK(corner_locus(back) == corner_locus(tp));
}

TEST_CASE("puncture set json round trip") {
    PunctureSet ps;
    ps.finite = {{"0", PuiseuxElement::zero()},
                 {"q", parse_puiseux("1 - t^2 + 3*t^(5/2)")},
                 {"r", parse_puiseux("t + O(t^4)")}};
    ps.include_infinity = true;
    json j = punctures_to_json(ps);
    PunctureSet back = punctures_from_json(j);
    CHECK(punctures_to_json(back) == j);
    CHECK(back.include_infinity);
    Skeleton s = build_p1_skeleton(back.finite, back.include_infinity);
    CHECK(s.betti() == 0);
}

TEST_CASE("empty complexes survive the json round trip") {
    TropicalComplex empty;
    empty.dim = 2;
    json j = complex_to_json(empty);
    TropicalComplex back = complex_from_json(j);
    CHECK(back.empty());
    CHECK(back.dim == 2);
}

TEST_CASE("schema mismatches are rejected") {
    json j = divisor_to_json(Divisor{});
    CHECK_THROWS_AS(skeleton_from_json(j), ParseError);
    CHECK_THROWS_AS(complex_from_json(json::object()), ParseError);
}

TEST_CASE("certificate and polygon serialization") {
    TropicalComplex cl = corner_locus(fixtures::square_cycle_poly());
    json j = certificate_to_json(kmm_check(cl, Rat(-8)));
    CHECK(j["verdict"] == "CERTIFIED");
    CHECK(j["schema"] == "certificate.v1");
    json p = polygon_to_json(newton_polygon_from_curve(cl, 1));
    CHECK(p["vertices"].size() == 4);
}

TEST_CASE("svg output is byte stable") {
    TropicalComplex cl = corner_locus(fixtures::square_cycle_poly());
    std::string a = render_complex_svg(cl);
    std::string b = render_complex_svg(cl);
    CHECK(a == b);
    CHECK(a.find("<svg") == 0);
    // The square's sides have lattice length 2: annotated in the figure.
    CHECK(a.find(">2</text>") != std::string::npos);
    // Multiplicity labels appear on the two-to-one curve.
    TropicalComplex two = corner_locus(fixtures::example1_implicit());
    std::string svg2 = render_complex_svg(two);
    CHECK(svg2.find(">2</text>") != std::string::npos);
}

TEST_CASE("empty complexes render to a valid empty figure") {
    TropicalComplex empty;
    empty.dim = 2;
    std::string svg = render_complex_svg(empty);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("complexes in other dimensions are not rendered") {
    auto skel = fixtures::cartwright_skeleton();
    auto [tc, rep] = trop_map(skel, fixtures::cartwright_coords(skel));
    CHECK_THROWS_AS(render_complex_svg(tc), UnsupportedDimension);
}

TEST_CASE("skeleton figures are deterministic") {
    for (auto skel : {fixtures::example1_skeleton(), fixtures::weierstrass_tate_skeleton()}) {
        std::string a = render_skeleton_svg(*skel);
        CHECK(a == render_skeleton_svg(*skel));
        CHECK(a.find("<svg") == 0);
    }
}

TEST_CASE("expansion report serialization") {
    auto skel = fixtures::example1_skeleton();
    auto [tc, report] = trop_map(skel, fixtures::example1_coords(skel));
    (void)tc;
    json j = expansion_report_to_json(report);
    CHECK(j["edges"].size() == 1);
    CHECK(j["edges"][0]["expansion"] == "2");
    CHECK(j["rays"].size() == 4);
}

TEST_CASE("balance report serialization") {
    ComplexBuilder b(2);
    b.add_segment(Point{Rat(0), Rat(0)}, Point{Rat(1), Rat(0)}, 1);
    TropicalComplex tc = b.build();
    json j = balance_report_to_json(tc, check_balancing(tc));
    CHECK(j["pass"] == false);
    CHECK(j["residuals"].size() == 2);
}
