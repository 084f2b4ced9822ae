// Acceptance suite: each numbered check prints one PASS/FAIL line and the
// process exits nonzero when anything fails.  All comparisons are exact.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <vector>

#include "test_util.hpp"
#include "tropcurves/certify.hpp"
#include "tropcurves/elimination.hpp"
#include "tropcurves/newton.hpp"
#include "tropcurves/scenario.hpp"

using namespace tropcurves;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what << "\n";
    if (!ok) ++failures;
}

Point pt(std::initializer_list<Rat> xs) { return Point(xs); }

bool criterion1() {
    auto skel = fixtures::example1_skeleton();
    auto [tc, rep] = trop_map(skel, fixtures::example1_coords(skel));
    ComplexBuilder expected(2);
    expected.add_ray(pt({0, 0}), {1, 0}, 2);
    expected.add_ray(pt({0, 0}), {0, 1}, 1);
    expected.add_ray(pt({0, 0}), {-2, -1}, 1);
    bool rays_ok = merge_collinear(tc) == expected.build();
    bool expansion_ok = rep.edges.size() == 1 && rep.edges[0].expansion == 2;
    bool implicit_ok = crosscheck_parametric(tc, corner_locus(fixtures::example1_implicit())).equal;
    return rays_ok && expansion_ok && implicit_ok;
}

bool criterion2() {
    auto skel = fixtures::cartwright_skeleton();
    auto [raw, rep] = trop_map(skel, fixtures::cartwright_coords(skel));
    (void)rep;
    TropicalComplex tc = merge_collinear(raw);
    ComplexBuilder expected(3);
    expected.add_segment(pt({-1, -1, 0}), pt({0, Rat(-1, 3), 0}), 1);
    expected.add_ray(pt({-1, -1, 0}), {0, 0, 1}, 1);
    expected.add_ray(pt({-1, -1, 0}), {-3, -2, -1}, 1);
    expected.add_ray(pt({0, Rat(-1, 3), 0}), {0, 1, 0}, 2);
    expected.add_ray(pt({0, Rat(-1, 3), 0}), {1, 0, 0}, 3);
    return tc == expected.build() && check_balancing(tc).pass;
}

bool criterion3() {
    auto skel = fixtures::weierstrass_tate_skeleton();
    auto [tc, rep] = trop_map(skel, fixtures::weierstrass_tate_coords(skel));
    (void)rep;
    bool segment_ok = tc.segments.size() == 1 && tc.segments[0].mult == 2 &&
                      tc.segment_length(0) == 2;
    std::vector<Int> mults;
    for (const auto& r : tc.rays) mults.push_back(r.mult);
    std::sort(mults.begin(), mults.end());
    return segment_ok && mults == std::vector<Int>{1, 1, 2, 2};
}

bool criterion4() {
    testutil::Rng rng(61);
    std::vector<Rat> lengths{Rat(4), Rat(1), Rat(7, 3), Rat(22, 7)};
    for (int i = 0; i < 3; ++i) lengths.push_back(testutil::random_positive_rat(rng, 30, 11));
    for (const Rat& ell : lengths) {
        auto skel = fixtures::good_embedding_skeleton(ell);
        auto [tc, rep] = trop_map(skel, fixtures::good_embedding_coords(skel));
        (void)rep;
        if (tc.segments.size() != 3 || tc.rays.size() != 3) return false;
        for (int s = 0; s < 3; ++s)
            if (tc.segment_length(s) != ell / 3 || tc.segments[s].mult != 1) return false;
        for (const auto& r : tc.rays)
            if (r.mult != 1) return false;
        if (!certify_faithful(tc, 1).certified()) return false;
        if (!kmm_check(tc, Rat(-ell)).certified()) return false;
    }
    return true;
}

bool criterion5() {
    const Rat ell(1);
    // Case 1: total collapse.
    {
        auto skel = fixtures::bad_embedding_skeleton(ell, 1);
        auto [tc, rep] = trop_map(skel, fixtures::bad_embedding_coords(skel, 1));
        if (!tc.segments.empty() || rep.edges[0].expansion != 0) return false;
    }
    auto cycle_length = [](const TropicalComplex& tc) {
        TropicalComplex c = canonical_form(tc);
        Rat total(0);
        for (std::size_t s = 0; s < c.segments.size(); ++s) {
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
    };
    // Case 2: cycle shrinks to (3/4) ell; the arc into the base collapses.
    {
        auto skel = fixtures::bad_embedding_skeleton(ell, 2);
        auto [tc, rep] = trop_map(skel, fixtures::bad_embedding_coords(skel, 2));
        std::vector<Int> exps;
        for (const auto& e : rep.edges) exps.push_back(e.expansion);
        if (exps != std::vector<Int>{1, 1, 1, 0}) return false;
        if (cycle_length(tc) != 3 * ell / 4) return false;
    }
    // Case 3: cycle grows to (5/4) ell; the arc into the base doubles.
    {
        auto skel = fixtures::bad_embedding_skeleton(ell, 3);
        auto [tc, rep] = trop_map(skel, fixtures::bad_embedding_coords(skel, 3));
        std::vector<Int> exps;
        for (const auto& e : rep.edges) exps.push_back(e.expansion);
        if (exps != std::vector<Int>{1, 1, 1, 2}) return false;
        if (cycle_length(tc) != 5 * ell / 4) return false;
    }
    // Case 4: length ell by accident, with a doubled half-length side.
    {
        auto skel = fixtures::bad_embedding_skeleton(ell, 4);
        auto [tc, rep] = trop_map(skel, fixtures::bad_embedding_coords(skel, 4));
        std::vector<Int> exps;
        for (const auto& e : rep.edges) exps.push_back(e.expansion);
        if (exps != std::vector<Int>{1, 1, 2, 0}) return false;
        if (cycle_length(tc) != ell) return false;
        TropicalComplex c = canonical_form(tc);
        std::vector<std::pair<Rat, Int>> sides;
        for (std::size_t s = 0; s < c.segments.size(); ++s)
            sides.push_back({c.segment_length(static_cast<int>(s)), c.segments[s].mult});
        std::sort(sides.begin(), sides.end());
        std::vector<std::pair<Rat, Int>> want{{ell / 4, Int(1)}, {ell / 4, Int(1)}, {ell / 2, Int(2)}};
        if (sides != want) return false;
    }
    return true;
}

bool criterion6() {
    TropicalComplex square = corner_locus(fixtures::square_cycle_poly());
    bool square_ok = true;
    for (const auto& s : square.segments)
        square_ok = square_ok && square.segment_length(&s - square.segments.data()) == 2;
    square_ok = square_ok && square.segments.size() == 4 &&
                kmm_check(square, Rat(-8)).certified();

    TropicalComplex quartic = corner_locus(fixtures::collapsing_quartic_poly());
    ComplexBuilder expected(2);
    expected.add_segment(pt({0, 0}), pt({1, 0}), 2);
    expected.add_segment(pt({0, 0}), pt({0, 1}), 2);
    expected.add_segment(pt({1, 0}), pt({0, 1}), 1);
    expected.add_ray(pt({0, 0}), {-1, -1}, 2);
    expected.add_ray(pt({1, 0}), {3, -1}, 1);
    expected.add_ray(pt({0, 1}), {-1, 3}, 1);
    return square_ok && quartic == expected.build();
}

bool criterion7() {
    TropicalComplex tc = corner_locus(fixtures::crushed_loop_poly());
    bool all_one = true;
    for (const auto& s : tc.segments) all_one = all_one && s.mult == 1;
    for (const auto& r : tc.rays) all_one = all_one && r.mult == 1;
    return all_one && !certify_faithful(tc, 1).certified();
}

bool criterion8a() {
    testutil::Rng rng(101);
    for (int iter = 0; iter < 200; ++iter) {
        auto skel = testutil::random_tree(rng, 3 + iter % 10, 4 + iter % 4);
        Divisor d = testutil::random_divisor(rng, *skel);
        PLFunction f = solve_slope(skel, d);
        for (std::size_t e = 0; e < skel->edges().size(); ++e)
            if (f.edge_slope(static_cast<int>(e)) !=
                testutil::far_side_degree(*skel, d, static_cast<int>(e)))
                return false;
    }
    return true;
}

bool criterion8b() {
    testutil::Rng rng(103);
    for (int iter = 0; iter < 100; ++iter) {
        auto [skel, d1] = testutil::random_tate_principal(rng, 2 + iter % 4);
        PLFunction f1 = solve_slope(skel, d1);
        auto values = f1.vertex_values();
        for (int v = 0; v < skel->vertex_count(); ++v)
            if (f1.harmonic_defect(v) != 0) return false;
        for (std::size_t e = 0; e < skel->edges().size(); ++e) {
            const auto& ed = skel->edges()[e];
            if (values[ed.v] - values[ed.u] != Rat(f1.edge_slope(static_cast<int>(e))) * ed.length)
                return false;
        }
        Divisor d2 = d1;
        for (auto& [p, o] : d2.orders) o *= 3;
        PLFunction f2 = solve_slope(skel, d2);
        PLFunction f12 = solve_slope(skel, d1 + d2);
        for (std::size_t e = 0; e < skel->edges().size(); ++e)
            if (f12.edge_slope(static_cast<int>(e)) !=
                f1.edge_slope(static_cast<int>(e)) + f2.edge_slope(static_cast<int>(e)))
                return false;
    }
    return true;
}

bool criterion8c() {
    testutil::Rng rng(107);
    for (int iter = 0; iter < 100; ++iter) {
        TropicalPolynomial tp = testutil::random_tropical_polynomial(rng);
        DualSubdivision ds = dual_subdivision(tp);
        if (!verify_dual_certificates(tp, ds)) return false;
        TropicalComplex cl = corner_locus(tp);
        if (!check_balancing(cl).pass) return false;
        std::vector<LatticePoint2> exps;
        for (const auto& [u, v] : tp.terms) exps.push_back(u);
        if (!(newton_polygon_from_curve(cl, 1) == canonical_polygon(convex_hull(exps))))
            return false;
    }
    return true;
}

bool criterion8d() {
    testutil::Rng rng(109);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int iter = 0; iter < 50; ++iter) {
        TropicalComplex cl = corner_locus(testutil::random_tropical_polynomial(rng));
        LatticeMap m{{{Int(entry(rng)), Int(entry(rng))}, {Int(entry(rng)), Int(entry(rng))}}, 1};
        if (!check_balancing(pushforward(cl, m)).pass) return false;
    }
    return true;
}

bool criterion9() {
#ifndef TROPCURVES_CLI_PATH
    return false;
#else
    auto start = std::chrono::steady_clock::now();
    int rc = std::system(TROPCURVES_CLI_PATH " scenario --all > /dev/null");
    auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (rc != 0) return false;
    if (seconds >= 10.0) return false;
    return scenario_names().size() >= 13;
#endif
}

} // namespace

int main() {
    report(1, "two-to-one plane curve: rays, expansion factor, implicit cross-check", criterion1());
    report(2, "space rational curve: vertices, segment, ray multiplicities 1,1,2,3, balanced",
           criterion2());
    report(3, "weierstrass tate curve: segment of lattice length 2 and multiplicity 2, rays 1,1,2,2",
           criterion3());
    report(4, "good genus-1 embedding for arbitrary rational loop length", criterion4());
    report(5, "lossy genus-1 embeddings: collapse, 3/4, 5/4, and accidental full length",
           criterion5());
    report(6, "corner loci: square of side 2 with cycle length 8; quartic triangle with "
              "multiplicity-2 pieces",
           criterion6());
    report(7, "contractible multiplicity-one curve is not certified faithful for genus 1",
           criterion7());
    report(8, "property suite a: 200 random tree divisors match the far-side oracle",
           criterion8a());
    report(8, "property suite b: 100 random principal loop divisors solve harmonically",
           criterion8b());
    report(8, "property suite c: 100 random polynomials balance, certify, and round-trip",
           criterion8c());
    report(8, "property suite d: 50 random pushforwards stay balanced", criterion8d());
    report(9, "scenario registry: >= 13 scenarios pass via the command line in under 10 seconds",
           criterion9());
    if (failures == 0) {
        std::cout << "acceptance: all criteria pass\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion check(s) failed\n";
    return 1;
}
