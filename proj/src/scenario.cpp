#include "tropcurves/scenario.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "tropcurves/certify.hpp"
#include "tropcurves/elimination.hpp"

namespace tropcurves {

namespace fixtures {

std::shared_ptr<const Skeleton> example1_skeleton() {
    std::vector<std::pair<std::string, PuiseuxElement>> punctures{
        {"0", PuiseuxElement::zero()},
        {"1", PuiseuxElement::constant(1)},
        {"p", PuiseuxElement::monomial(1, 1)},
    };
    return std::make_shared<Skeleton>(build_p1_skeleton(punctures, true));
}

Divisor example1_divisor_x() { return Divisor{{{"0", 1}, {"p", 1}, {"inf", -2}}}; }
Divisor example1_divisor_y() { return Divisor{{{"1", 1}, {"inf", -1}}}; }

std::vector<PLFunction> example1_coords(const std::shared_ptr<const Skeleton>& skel) {
    return {solve_slope(skel, example1_divisor_x()), solve_slope(skel, example1_divisor_y())};
}

TropicalPolynomial example1_implicit() {
    return tropicalize_polynomial(parse_polynomial("y^2 + (2 - t)*y - x + (1 - t)"));
}

std::shared_ptr<const Skeleton> cartwright_skeleton() {
    std::vector<std::pair<std::string, PuiseuxElement>> punctures{
        {"-1", PuiseuxElement::constant(-1)},
        {"Q1", PuiseuxElement::monomial(1, Rat(1, 3))},
        {"Q2", PuiseuxElement::monomial(2, Rat(1, 3))},
        {"Q3", PuiseuxElement::monomial(3, Rat(1, 3))},
        {"P1", PuiseuxElement::monomial(1, Rat(1, 2))},
        {"P2", PuiseuxElement::monomial(2, Rat(1, 2))},
    };
    return std::make_shared<Skeleton>(build_p1_skeleton(punctures, true));
}

std::vector<PLFunction> cartwright_coords(const std::shared_ptr<const Skeleton>& skel) {
    Divisor dx{{{"Q1", 1}, {"Q2", 1}, {"Q3", 1}, {"inf", -3}}};
    Divisor dy{{{"P1", 1}, {"P2", 1}, {"inf", -2}}};
    Divisor dz{{{"-1", 1}, {"inf", -1}}};
    // Values at the base vertex of the coordinate functions themselves.
    return {solve_slope(skel, dx).with_base_value(-1), solve_slope(skel, dy).with_base_value(-1),
            solve_slope(skel, dz).with_base_value(0)};
}

std::shared_ptr<const Skeleton> weierstrass_tate_skeleton() {
    return std::make_shared<Skeleton>(build_tate_skeleton(
        4, {{"inf", 0}, {"P3", 0}, {"Q1", 2}, {"Q2", 2}, {"P1", 2}, {"P2", 2}}));
}

std::vector<PLFunction> weierstrass_tate_coords(const std::shared_ptr<const Skeleton>& skel) {
    Divisor dx{{{"Q1", 1}, {"Q2", 1}, {"inf", -2}}};
    Divisor dy{{{"P1", 1}, {"P2", 1}, {"P3", 1}, {"inf", -3}}};
    return {solve_slope(skel, dx), solve_slope(skel, dy)};
}

TropicalPolynomial square_cycle_poly() {
    return tropicalize_polynomial(parse_polynomial("x^2*y + x*y^2 + t^-1*x*y + x + y"));
}

TropicalPolynomial genus3_poly() {
    return tropicalize_polynomial(
        parse_polynomial("t^5*x^4 + t^5*y^4 + t^5*z^4"
                         " + t^2*x^3*y + t^2*x^3*z + t^2*x*y^3 + t^2*x*z^3 + t^2*y^3*z + t^2*y*z^3"
                         " + t*x^2*y^2 + t*x^2*z^2 + t*y^2*z^2"
                         " + x^2*y*z + x*y^2*z + x*y*z^2"),
        /*dehomogenize=*/true);
}

TropicalPolynomial collapsing_quartic_poly() {
    return tropicalize_polynomial(
        parse_polynomial("x^3*y - x^2*y^2 - 2*x*y^3 - 3*x^2*y + 2*x*y - t"));
}

TropicalPolynomial crushed_loop_poly() {
    // (y-1)^2 - (x-1)^2 (y+1) - t x y, expanded.
    return tropicalize_polynomial(
        parse_polynomial("- x^2*y - x^2 + y^2 + (2 - t)*x*y - 3*y + 2*x"));
}

std::shared_ptr<const Skeleton> good_embedding_skeleton(const Rat& ell) {
    return std::make_shared<Skeleton>(build_tate_skeleton(
        ell, {{"zero", 0}, {"alpha", ell / 3}, {"beta", 2 * ell / 3}}));
}

std::vector<PLFunction> good_embedding_coords(const std::shared_ptr<const Skeleton>& s) {
    Divisor df{{{"alpha", 2}, {"beta", -1}, {"zero", -1}}};
    Divisor dg{{{"beta", 2}, {"alpha", -1}, {"zero", -1}}};
    return {solve_slope(s, df), solve_slope(s, dg)};
}

std::shared_ptr<const Skeleton> bad_embedding_skeleton(const Rat& ell, int which) {
    std::vector<std::pair<std::string, Rat>> punctures{{"zero", 0}};
    if (which != 2) {
        punctures.push_back({"P", 0});
        punctures.push_back({"Q", 0});
    }
    if (which != 1) {
        punctures.push_back({"alpha", ell / 4});
        punctures.push_back({"beta", ell / 2});
        punctures.push_back({"gamma", 3 * ell / 4});
    }
    return std::make_shared<Skeleton>(build_tate_skeleton(ell, punctures));
}

std::vector<PLFunction> bad_embedding_coords(const std::shared_ptr<const Skeleton>& s, int which) {
    Divisor dx{{{"P", 2}, {"zero", -2}}};
    Divisor dy{{{"Q", 3}, {"zero", -3}}};
    Divisor d1{{{"alpha", 1}, {"beta", 1}, {"gamma", -1}, {"zero", -1}}};
    Divisor d2{{{"beta", 3}, {"gamma", -2}, {"zero", -1}}};
    Divisor d3{{{"beta", 3}, {"gamma", 1}, {"alpha", -1}, {"zero", -3}}};
    Divisor d4{{{"beta", 7}, {"alpha", -2}, {"gamma", -4}, {"zero", -1}}};
    switch (which) {
    case 1: return {solve_slope(s, dx), solve_slope(s, dy)};
    case 2: return {solve_slope(s, d1), solve_slope(s, d2)};
    case 3:
        return {solve_slope(s, dx), solve_slope(s, dy), solve_slope(s, d2), solve_slope(s, d3)};
    case 4:
        return {solve_slope(s, dx), solve_slope(s, dy), solve_slope(s, d2), solve_slope(s, d4)};
    }
    throw std::invalid_argument("embedding index must be 1..4");
}

std::shared_ptr<const Skeleton> fake_homology_skeleton() {
    std::vector<std::pair<std::string, PuiseuxElement>> punctures{
        {"0", PuiseuxElement::zero()},
        {"1", PuiseuxElement::constant(1)},
        {"p", PuiseuxElement::monomial(1, 1)},
        {"p2", PuiseuxElement::monomial(1, 2)},
    };
    return std::make_shared<Skeleton>(build_p1_skeleton(punctures, true));
}

std::vector<PLFunction> fake_homology_coords(const std::shared_ptr<const Skeleton>& skel) {
    Divisor dx{{{"0", 2}, {"1", 2}, {"p2", 1}, {"inf", -5}}};
    Divisor dy{{{"0", 1}, {"1", 1}, {"p", 1}, {"inf", -3}}};
    return {solve_slope(skel, dx), solve_slope(skel, dy)};
}

} // namespace fixtures

namespace {

using fixtures::bad_embedding_coords;
using fixtures::bad_embedding_skeleton;

struct Check {
    std::vector<std::string>* lines;
    bool* ok;
    void operator()(bool cond, const std::string& what) const {
        lines->push_back(std::string(cond ? "PASS " : "FAIL ") + what);
        if (!cond) *ok = false;
    }
};

Point pt(std::initializer_list<Rat> xs) { return Point(xs); }

LatticeVec dir(std::initializer_list<int> xs) {
    LatticeVec v;
    for (int x : xs) v.push_back(x);
    return v;
}

std::string mults_of_rays(const TropicalComplex& tc) {
    std::vector<std::string> ms;
    for (const auto& r : tc.rays) ms.push_back(r.mult.str());
    std::sort(ms.begin(), ms.end());
    std::string out;
    for (const auto& m : ms) out += (out.empty() ? "" : ",") + m;
    return out;
}

Rat cycle_length_of(const TropicalComplex& tc) {
    // Sum of lattice lengths over segments lying on the unique cycle.
    TropicalComplex c = canonical_form(tc);
    Rat total(0);
    for (std::size_t s = 0; s < c.segments.size(); ++s) {
        // A segment is on a cycle iff removing it keeps its ends connected.
        std::vector<int> parent(c.vertices.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t t = 0; t < c.segments.size(); ++t)
            if (t != s) parent[find(c.segments[t].u)] = find(c.segments[t].v);
        if (find(c.segments[s].u) == find(c.segments[s].v))
            total += c.segment_length(static_cast<int>(s));
    }
    return total;
}

// ---- individual scenarios ----

void scenario_example1_parametric(Check check) {
    auto skel = fixtures::example1_skeleton();
    auto coords = fixtures::example1_coords(skel);
    auto [tc, report] = trop_map(skel, coords);

    ComplexBuilder expected(2);
    expected.add_segment(pt({0, 0}), pt({2, 0}), 2);
    expected.add_ray(pt({0, 0}), dir({0, 1}), 1);
    expected.add_ray(pt({0, 0}), dir({-2, -1}), 1);
    expected.add_ray(pt({2, 0}), dir({1, 0}), 2);
    check(tc == expected.build(), "image with subdivision at vertex images: segment (0,0)-(2,0) "
                                  "mult 2 plus rays");

    ComplexBuilder minimal(2);
    minimal.add_ray(pt({0, 0}), dir({1, 0}), 2);
    minimal.add_ray(pt({0, 0}), dir({0, 1}), 1);
    minimal.add_ray(pt({0, 0}), dir({-2, -1}), 1);
    check(merge_collinear(tc) == minimal.build(),
          "minimal form: three rays from the origin with multiplicities 2, 1, 1");

    check(report.edges.size() == 1 && report.edges[0].expansion == 2,
          "expansion factor 2 on the bounded edge");
    check(check_balancing(tc).pass, "balancing residual zero at every vertex");
    check(betti_one(tc) == 0, "first Betti number 0");
}

void scenario_example1_implicit(Check check) {
    TropicalPolynomial tp = fixtures::example1_implicit();
    DualSubdivision ds = dual_subdivision(tp);
    check(ds.cells.size() == 1, "all valuations zero: one cell");
    check(ds.hull == std::vector<LatticePoint2>{{0, 0}, {1, 0}, {0, 2}},
          "newton polygon is the triangle (0,0),(1,0),(0,2)");
    TropicalComplex cl = corner_locus(tp);
    ComplexBuilder expected(2);
    expected.add_ray(pt({0, 0}), dir({1, 0}), 2);
    expected.add_ray(pt({0, 0}), dir({0, 1}), 1);
    expected.add_ray(pt({0, 0}), dir({-2, -1}), 1);
    check(cl == expected.build(), "corner locus: rays (1,0) mult 2, (0,1), (-2,-1)");
    check(check_balancing(cl).pass, "corner locus balanced");
}

void scenario_example1_crosscheck(Check check) {
    auto skel1 = fixtures::example1_skeleton();
    auto [tc, report] = trop_map(skel1, fixtures::example1_coords(skel1));
    TropicalComplex cl = corner_locus(fixtures::example1_implicit());
    CrossCheck cc = crosscheck_parametric(tc, cl);
    check(cc.equal, "parametric image equals implicit corner locus");
    LatticePolygon recovered = newton_polygon_from_curve(cl, 1);
    check(recovered == canonical_polygon({{0, 0}, {1, 0}, {0, 2}}),
          "newton polygon recovered from the rays");
}

void scenario_dustineg(Check check) {
    auto skel = fixtures::cartwright_skeleton();
    check(skel->vertex_count() == 3 && skel->edges().size() == 2,
          "skeleton: two bounded segments");
    check(skel->edges()[0].length == Rat(1, 3) && skel->edges()[1].length == Rat(1, 6),
          "segment lengths 1/3 and 1/6");
    auto [tc, report] = trop_map(skel, fixtures::cartwright_coords(skel));

    TropicalComplex minimal = merge_collinear(tc);
    ComplexBuilder expected(3);
    expected.add_segment(pt({-1, -1, 0}), pt({0, Rat(-1, 3), 0}), 1);
    expected.add_ray(pt({-1, -1, 0}), dir({0, 0, 1}), 1);
    expected.add_ray(pt({-1, -1, 0}), dir({-3, -2, -1}), 1);
    expected.add_ray(pt({0, Rat(-1, 3), 0}), dir({0, 1, 0}), 2);
    expected.add_ray(pt({0, Rat(-1, 3), 0}), dir({1, 0, 0}), 3);
    check(minimal == expected.build(),
          "vertices (-1,-1,0), (0,-1/3,0); segment mult 1; ray mults 1,1,2,3");
    check(report.edges[0].expansion == 1 && report.edges[1].expansion == 2,
          "expansion factors 1 and 2 on the bounded segments");
    check(check_balancing(minimal).pass, "balancing residual zero at both vertices");
    Certificate cert = vertex_mult_one(minimal, 1);
    check(cert.certified(), "multiplicity-one certificate at (0,-1/3,0)");
}

void scenario_example2b(Check check) {
    auto skel = fixtures::weierstrass_tate_skeleton();
    auto [tc, report] = trop_map(skel, fixtures::weierstrass_tate_coords(skel));
    ComplexBuilder expected(2);
    expected.add_segment(pt({0, 0}), pt({2, 2}), 2);
    expected.add_ray(pt({0, 0}), dir({-2, -3}), 1);
    expected.add_ray(pt({0, 0}), dir({0, 1}), 1);
    expected.add_ray(pt({2, 2}), dir({1, 0}), 2);
    expected.add_ray(pt({2, 2}), dir({0, 1}), 2);
    check(tc == expected.build(), "segment (0,0)-(2,2) of multiplicity 2 plus four rays");
    check(tc.segment_length(0) == 2, "image segment has lattice length 2");
    check(mults_of_rays(tc) == "1,1,2,2", "ray multiplicities 1,1,2,2");
    bool arcs_isometric = report.edges.size() == 2 && report.edges[0].expansion == 1 &&
                          report.edges[1].expansion == 1;
    check(arcs_isometric, "both halves of the circle map isometrically");
    check(betti_one(tc) == 0, "cycle collapses: first Betti number 0");
}

void scenario_example2a(Check check) {
    TropicalPolynomial tp = fixtures::square_cycle_poly();
    DualSubdivision ds = dual_subdivision(tp);
    check(ds.cells.size() == 4, "four cells around the interior exponent (1,1)");
    check(verify_dual_certificates(tp, ds), "cell certificates tight and exclusive");
    TropicalComplex cl = corner_locus(tp);
    ComplexBuilder expected(2);
    expected.add_segment(pt({-1, -1}), pt({-1, 1}), 1);
    expected.add_segment(pt({-1, -1}), pt({1, -1}), 1);
    expected.add_segment(pt({-1, 1}), pt({1, 1}), 1);
    expected.add_segment(pt({1, -1}), pt({1, 1}), 1);
    expected.add_ray(pt({1, 1}), dir({1, 1}), 1);
    expected.add_ray(pt({-1, 1}), dir({-1, 1}), 1);
    expected.add_ray(pt({-1, -1}), dir({-1, -1}), 1);
    expected.add_ray(pt({1, -1}), dir({1, -1}), 1);
    check(cl == expected.build(), "square with corners (+-1,+-1) and one diagonal ray per corner");
    check(cycle_length_of(cl) == 8, "cycle lattice length 8: each side has lattice length 2");
    check(kmm_check(cl, Rat(-8)).certified(), "cycle length matches -val(j) = 8");
    check(certify_faithful(cl, 1).certified(), "faithful for genus 1");
    LatticePolygon recovered = newton_polygon_from_curve(cl, 1);
    check(recovered == canonical_polygon({{1, 0}, {2, 1}, {1, 2}, {0, 1}}),
          "newton polygon recovered from the rays");
}

void scenario_example3_newton(Check check) {
    TropicalPolynomial tp = fixtures::collapsing_quartic_poly();
    DualSubdivision ds = dual_subdivision(tp);
    check(ds.cells.size() == 3, "three cells");
    check(verify_dual_certificates(tp, ds), "cell certificates tight and exclusive");
    TropicalComplex cl = corner_locus(tp);
    ComplexBuilder expected(2);
    expected.add_segment(pt({0, 0}), pt({1, 0}), 2);
    expected.add_segment(pt({0, 0}), pt({0, 1}), 2);
    expected.add_segment(pt({1, 0}), pt({0, 1}), 1);
    expected.add_ray(pt({0, 0}), dir({-1, -1}), 2);
    expected.add_ray(pt({1, 0}), dir({3, -1}), 1);
    expected.add_ray(pt({0, 1}), dir({-1, 3}), 1);
    check(cl == expected.build(),
          "triangle (0,0),(1,0),(0,1) with rays (-1,-1),(3,-1),(-1,3); multiplicity 2 on the "
          "three pieces at (0,0)");
    check(check_balancing(cl).pass, "balanced");
    check(!vertex_mult_one(cl, 0).certified(),
          "multiplicity-one certificate does not apply at (0,0): common factor 2");
    check(vertex_mult_one(cl, 1).certified() && vertex_mult_one(cl, 2).certified(),
          "multiplicity-one certified at (1,0) and (0,1)");
}

void scenario_genus3_faithful(Check check) {
    TropicalPolynomial tp = fixtures::genus3_poly();
    DualSubdivision ds = dual_subdivision(tp);
    check(ds.cells.size() == 16, "unimodular triangulation: sixteen cells");
    bool unimodular = true;
    for (const auto& cell : ds.cells) {
        if (cell.polygon.size() != 3) unimodular = false;
        else {
            Int area2 = cross2(cell.polygon[0], cell.polygon[1], cell.polygon[2]);
            if (area2 != 1 && area2 != -1) unimodular = false;
        }
    }
    check(unimodular, "every cell is a unimodular triangle");
    TropicalComplex cl = corner_locus(tp);
    check(cl.vertices.size() == 16 && cl.segments.size() == 18 && cl.rays.size() == 12,
          "16 vertices, 18 bounded segments, 12 rays");
    check(betti_one(cl) == 3, "first Betti number 3");
    check(check_balancing(cl).pass, "balanced");
    check(certify_faithful(cl, 3).certified(), "faithful for genus 3");
}

void scenario_faithful_countereg(Check check) {
    TropicalPolynomial tp = fixtures::crushed_loop_poly();
    TropicalComplex cl = corner_locus(tp);
    bool all_one = true;
    for (const auto& s : cl.segments) all_one = all_one && s.mult == 1;
    for (const auto& r : cl.rays) all_one = all_one && r.mult == 1;
    check(all_one, "every multiplicity is 1");
    check(betti_one(cl) == 0, "tropicalization is contractible: the loop is crushed");
    Certificate cert = certify_faithful(cl, 1);
    check(!cert.certified(), "not certified faithful for genus 1");
    bool reason_is_betti = !cert.witness.empty() &&
                           cert.witness.front().find("Betti") != std::string::npos;
    check(reason_is_betti, "failure reason: no bridgeless subgraph of first Betti number 1");
}

void scenario_good_embedding(Check check) {
    const Rat ell(4, 5);
    auto skel = fixtures::good_embedding_skeleton(ell);
    auto coords = fixtures::good_embedding_coords(skel);
    auto [tc, report] = trop_map(skel, coords);
    ComplexBuilder expected(2);
    expected.add_segment(pt({0, 0}), pt({ell / 3, 0}), 1);
    expected.add_segment(pt({0, 0}), pt({0, ell / 3}), 1);
    expected.add_segment(pt({ell / 3, 0}), pt({0, ell / 3}), 1);
    expected.add_ray(pt({0, 0}), dir({-1, -1}), 1);
    expected.add_ray(pt({ell / 3, 0}), dir({2, -1}), 1);
    expected.add_ray(pt({0, ell / 3}), dir({-1, 2}), 1);
    check(tc == expected.build(), "triangle with a ray at each corner, all multiplicities 1");
    check(cycle_length_of(tc) == ell, "cycle length equals the loop length");
    bool sides = true;
    for (int s = 0; s < 3; ++s) sides = sides && tc.segment_length(s) == ell / 3;
    check(sides, "three sides of lattice length ell/3");
    check(certify_faithful(tc, 1).certified(), "certified faithful");
    check(kmm_check(tc, Rat(-ell)).certified(), "cycle length equals -val(j)");
}

void scenario_bad_embedding(Check check, int which) {
    const Rat ell(1);
    auto skel = bad_embedding_skeleton(ell, which);
    auto coords = bad_embedding_coords(skel, which);
    auto [tc, report] = trop_map(skel, coords);
    check(check_balancing(tc).pass, "balanced");

    auto arc_expansions = [&]() {
        std::vector<Int> exps;
        for (const auto& e : report.edges) exps.push_back(e.expansion);
        return exps;
    };

    switch (which) {
    case 1: {
        check(tc.segments.empty(), "the circle collapses to a point");
        check(arc_expansions() == std::vector<Int>{0}, "loop expansion factor 0");
        check(mults_of_rays(tc) == "1,2,3", "ray multiplicities 1, 2, 3");
        break;
    }
    case 2: {
        check(arc_expansions() == std::vector<Int>{1, 1, 1, 0},
              "arc expansion factors 1,1,1,0: the quarter before the base collapses");
        check(cycle_length_of(tc) == 3 * ell / 4, "cycle image has lattice length (3/4) ell");
        Certificate cert = kmm_check(tc, Rat(-ell));
        check(cert.verdict == Verdict::REFUTED, "cycle length does not match -val(j): refuted");
        bool reports_valence = false;
        for (const auto& w : cert.witness)
            reports_valence = reports_valence || w.find("valence 4") != std::string::npos;
        check(reports_valence, "hypothesis failure at the four-valent vertex reported");
        break;
    }
    case 3: {
        check(arc_expansions() == std::vector<Int>{1, 1, 1, 2},
              "arc expansion factors 1,1,1,2: the quarter before the base doubles");
        check(cycle_length_of(tc) == 5 * ell / 4, "cycle image has lattice length (5/4) ell");
        break;
    }
    case 4: {
        check(arc_expansions() == std::vector<Int>{1, 1, 2, 0},
              "arc expansion factors 1,1,2,0");
        check(cycle_length_of(tc) == ell, "cycle image has lattice length ell");
        TropicalComplex minimal = canonical_form(tc);
        std::vector<std::pair<Rat, Int>> sides;
        for (std::size_t s = 0; s < minimal.segments.size(); ++s)
            sides.push_back({minimal.segment_length(static_cast<int>(s)), minimal.segments[s].mult});
        std::sort(sides.begin(), sides.end());
        std::vector<std::pair<Rat, Int>> expected_sides{
            {ell / 4, 1}, {ell / 4, 1}, {ell / 2, 2}};
        check(sides == expected_sides,
              "one side of length ell/2 and multiplicity 2, two sides of length ell/4");
        break;
    }
    }
}

void scenario_fake_homology(Check check) {
    auto skel = fixtures::fake_homology_skeleton();
    check(skel->betti() == 0, "the skeleton is a tree");
    auto [tc, report] = trop_map(skel, fixtures::fake_homology_coords(skel));
    ComplexBuilder expected(2);
    expected.add_segment(pt({0, 0}), pt({3, 2}), 1);
    expected.add_segment(pt({3, 2}), pt({6, 3}), 1);
    expected.add_segment(pt({0, 0}), pt({6, 3}), 1);
    expected.add_ray(pt({0, 0}), dir({-5, -3}), 1);
    expected.add_ray(pt({3, 2}), dir({0, 1}), 1);
    expected.add_ray(pt({6, 3}), dir({1, 0}), 1);
    expected.add_ray(pt({6, 3}), dir({2, 1}), 2);
    check(tc == expected.build(), "ray toward 1 overlays the path: spurious triangle appears");
    check(betti_one(tc) == 1, "image has first Betti number 1 though the skeleton is a tree");
    check(check_balancing(tc).pass, "balanced");
}

void scenario_pushforward_line(Check check) {
    TropicalComplex line = corner_locus(tropicalize_polynomial(parse_polynomial("x + y + 1")));
    LatticeMap sum{{{dir({1, 1})}}, 1};
    TropicalComplex image = pushforward(line, sum);
    ComplexBuilder expected(1);
    expected.add_ray(pt({0}), dir({1}), 2);
    expected.add_ray(pt({0}), dir({-1}), 2);
    check(image == expected.build(), "sum map: both half-lines carry multiplicity 2");
    check(check_balancing(image).pass, "image balanced");

    LatticeMap identity{{dir({1, 0}), dir({0, 1})}, 1};
    check(pushforward(line, identity) == canonical_form(line), "identity map returns the input");
}

void scenario_pushforward_cartwright(Check check) {
    auto cskel = fixtures::cartwright_skeleton();
    auto [tc, report] = trop_map(cskel, fixtures::cartwright_coords(cskel));
    LatticeMap proj{{dir({1, 0, 0}), dir({0, 1, 0})}, 1};
    PushforwardReport preport;
    TropicalComplex image = pushforward(canonical_form(tc), proj, &preport);
    ComplexBuilder expected(2);
    expected.add_segment(pt({-1, -1}), pt({0, Rat(-1, 3)}), 1);
    expected.add_ray(pt({-1, -1}), dir({-3, -2}), 1);
    expected.add_ray(pt({0, Rat(-1, 3)}), dir({0, 1}), 2);
    expected.add_ray(pt({0, Rat(-1, 3)}), dir({1, 0}), 3);
    check(image == expected.build(), "projection to the first two coordinates");
    check(preport.collapsed.size() == 1, "the vertical ray collapses to (-1,-1)");
    check(check_balancing(image).pass, "image balanced");
    LatticePolygon poly = newton_polygon_from_curve(image, 1);
    check(poly == canonical_polygon({{0, 0}, {2, 0}, {0, 3}}),
          "newton polygon of the image curve: triangle (0,0),(2,0),(0,3)");
}

struct ScenarioEntry {
    std::string name;
    std::function<void(Check)> run;
};

const std::vector<ScenarioEntry>& registry() {
    static const std::vector<ScenarioEntry> entries = {
        {"example1-parametric", scenario_example1_parametric},
        {"example1-implicit", scenario_example1_implicit},
        {"example1-crosscheck", scenario_example1_crosscheck},
        {"dustineg", scenario_dustineg},
        {"example2b", scenario_example2b},
        {"example2a", scenario_example2a},
        {"example3-newton", scenario_example3_newton},
        {"genus3-faithful", scenario_genus3_faithful},
        {"faithful-countereg", scenario_faithful_countereg},
        {"goodgenus1trop", scenario_good_embedding},
        {"badgenus1-case1", [](Check c) { scenario_bad_embedding(c, 1); }},
        {"badgenus1-case2", [](Check c) { scenario_bad_embedding(c, 2); }},
        {"badgenus1-case3", [](Check c) { scenario_bad_embedding(c, 3); }},
        {"badgenus1-case4", [](Check c) { scenario_bad_embedding(c, 4); }},
        {"fakehomology", scenario_fake_homology},
        {"pushforward-line", scenario_pushforward_line},
        {"pushforward-cartwright", scenario_pushforward_cartwright},
    };
    return entries;
}

} // namespace

std::vector<std::string> scenario_names() {
    std::vector<std::string> names;
    for (const auto& e : registry()) names.push_back(e.name);
    return names;
}

ScenarioResult run_scenario(const std::string& name) {
    for (const auto& e : registry()) {
        if (e.name != name) continue;
        ScenarioResult result;
        result.name = name;
        auto start = std::chrono::steady_clock::now();
        try {
            e.run(Check{&result.lines, &result.pass});
        } catch (const std::exception& ex) {
            result.pass = false;
            result.lines.push_back(std::string("FAIL exception: ") + ex.what());
        }
        auto stop = std::chrono::steady_clock::now();
        result.millis = std::chrono::duration<double, std::milli>(stop - start).count();
        return result;
    }
    throw UnknownScenario("no scenario named '" + name + "'");
}

std::vector<ScenarioResult> run_all_scenarios() {
    std::vector<ScenarioResult> results;
    for (const auto& e : registry()) results.push_back(run_scenario(e.name));
    return results;
}

} // namespace tropcurves
