#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "tropcurves/scenario.hpp"
#include "tropcurves/skeleton.hpp"

using namespace tropcurves;

namespace {

std::set<std::string> punctures_at(const Skeleton& s, int v) {
    std::set<std::string> names;
    for (int r : s.incident_rays(v)) names.insert(s.rays()[r].puncture);
    return names;
}

} // namespace

TEST_CASE("line punctured at {0, 1, p, inf}") {
    auto s = fixtures::example1_skeleton();
    REQUIRE(s->vertex_count() == 2);
    REQUIRE(s->edges().size() == 1);
    CHECK(s->edges()[0].length == 1);
    CHECK(s->betti() == 0);
    CHECK(s->base_vertex() == 0);
    CHECK(punctures_at(*s, 0) == std::set<std::string>{"1", "inf"});
    CHECK(punctures_at(*s, 1) == std::set<std::string>{"0", "p"});
}

TEST_CASE("line punctured at {0, inf}") {
    Skeleton s = build_p1_skeleton({{"0", PuiseuxElement::zero()}}, true);
    CHECK(s.vertex_count() == 1);
    CHECK(s.edges().empty());
    CHECK(punctures_at(s, 0) == std::set<std::string>{"0", "inf"});
}

TEST_CASE("line punctured at {0, 1, p, p^2, inf}") {
    auto s = fixtures::fake_homology_skeleton();
    REQUIRE(s->vertex_count() == 3);
    REQUIRE(s->edges().size() == 2);
    CHECK(s->edges()[0].length == 1);
    CHECK(s->edges()[1].length == 1);
    CHECK(punctures_at(*s, 0) == std::set<std::string>{"1", "inf"});
    CHECK(punctures_at(*s, 1) == std::set<std::string>{"p"});
    CHECK(punctures_at(*s, 2) == std::set<std::string>{"0", "p2"});
    auto depths = p1_vertex_depths(*s, 0);
    CHECK(depths == std::vector<Rat>{0, 1, 2});
}

TEST_CASE("too few punctures") {
    CHECK_THROWS_AS(build_p1_skeleton({{"0", PuiseuxElement::zero()}}, false), TooFewPunctures);
    CHECK_THROWS_AS(build_p1_skeleton({}, true), TooFewPunctures);
}

TEST_CASE("meet depths recomputed from the tree match the valuation matrix") {
    testutil::Rng rng(5);
    for (int iter = 0; iter < 25; ++iter) {
        // Random monomial punctures with occasional collisions in valuation.
        std::vector<std::pair<std::string, PuiseuxElement>> punctures;
        std::uniform_int_distribution<int> coeff(1, 5), expnum(0, 6), expden(1, 3);
        int n = 3 + iter % 4;
        for (int i = 0; i < n; ++i)
            punctures.push_back({"a" + std::to_string(i),
                                 PuiseuxElement::monomial(coeff(rng), Rat(expnum(rng), expden(rng)))});
        std::vector<PuiseuxElement> pts;
        for (auto& [nm, el] : punctures) pts.push_back(el);
        std::vector<std::vector<ExtRat>> matrix;
        try {
            matrix = pairwise_valuations(pts);
        } catch (const DuplicatePoint&) {
            continue;
        }
        Skeleton s = build_p1_skeleton(punctures, true);
        CHECK(s.edges().size() + 1 == static_cast<std::size_t>(s.vertex_count())); // tree
        auto depths = p1_vertex_depths(s, [&] {
            // base depth = the smallest pairwise valuation
            ExtRat lo = matrix[0][1];
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j = i + 1; j < pts.size(); ++j) lo = min(lo, matrix[i][j]);
            return lo.value();
        }());
        // Meet of two leaves: deepest vertex on the path between their rays.
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                int vi = s.vertex_with_ray(punctures[i].first);
                int vj = s.vertex_with_ray(punctures[j].first);
                // Path meets at depth = depth(vi) + depth(vj) - dist(vi, vj)) / 2.
                Rat meet = (depths[vi] + depths[vj] - vertex_distance(s, vi, vj)) / 2;
                CHECK(meet == matrix[i][j].value());
            }
        }
    }
}

TEST_CASE("tate circle with three equally spaced punctures") {
    Rat ell(6, 5);
    Skeleton s = build_tate_skeleton(ell, {{"zero", 0}, {"alpha", ell / 3}, {"beta", 2 * ell / 3}});
    CHECK(s.vertex_count() == 3);
    CHECK(s.edges().size() == 3);
    CHECK(s.betti() == 1);
    for (const auto& e : s.edges()) CHECK(e.length == ell / 3);
    CHECK(punctures_at(s, 0) == std::set<std::string>{"zero"});
}

TEST_CASE("tate circle with stacked punctures") {
    auto s = fixtures::weierstrass_tate_skeleton();
    CHECK(s->vertex_count() == 2);
    CHECK(s->edges().size() == 2);
    CHECK(s->edges()[0].length == 2);
    CHECK(s->edges()[1].length == 2);
    CHECK(punctures_at(*s, 0) == std::set<std::string>{"P3", "inf"});
    CHECK(punctures_at(*s, 1) == std::set<std::string>{"P1", "P2", "Q1", "Q2"});
}

TEST_CASE("bare circle") {
    Skeleton s = build_tate_skeleton(1, {});
    CHECK(s.vertex_count() == 1);
    CHECK(s.edges().size() == 1);
    CHECK(s.edges()[0].u == s.edges()[0].v);
    CHECK(s.betti() == 1);
}

TEST_CASE("positions are canonicalized modulo the loop length") {
    Skeleton s = build_tate_skeleton(4, {{"a", Rat(9, 2)}, {"b", Rat(-7, 2)}});
    // 9/2 = 1/2 and -7/2 = 1/2 modulo 4: one shared vertex.
    CHECK(s.vertex_count() == 1);
    CHECK(punctures_at(s, 0) == std::set<std::string>{"a", "b"});
}

TEST_CASE("subdivision splits one edge and preserves the metric") {
    auto s = fixtures::example1_skeleton();
    Skeleton t = s->subdivided(0, Rat(1, 2));
    CHECK(t.vertex_count() == 3);
    CHECK(t.edges().size() == 2);
    CHECK(t.edges()[0].length == Rat(1, 2));
    CHECK(t.edges()[1].length == Rat(1, 2));
    CHECK(t.betti() == 0);
    CHECK(vertex_distance(t, 0, 1) == vertex_distance(*s, 0, 1));
    CHECK_THROWS_AS(s->subdivided(0, Rat(0)), PositionOutOfRange);
    CHECK_THROWS_AS(s->subdivided(0, Rat(3, 2)), PositionOutOfRange);
}

TEST_CASE("subdividing a circle arc keeps the betti number") {
    Skeleton s = build_tate_skeleton(4, {{"a", 0}, {"b", 2}});
    Skeleton t = s.subdivided(0, 1);
    CHECK(t.betti() == 1);
    CHECK(t.edges().size() == 3);
    CHECK(vertex_distance(t, 0, 1) == vertex_distance(s, 0, 1));
}

TEST_CASE("random subdivision preserves pairwise distances") {
    testutil::Rng rng(13);
    for (int iter = 0; iter < 20; ++iter) {
        auto s = testutil::random_tree(rng, 6, 4);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(s->edges().size()) - 1);
        int e = pick(rng);
        Rat pos = s->edges()[e].length / 2;
        Skeleton t = s->subdivided(e, pos);
        for (int u = 0; u < s->vertex_count(); ++u)
            for (int v = u + 1; v < s->vertex_count(); ++v)
                CHECK(vertex_distance(t, u, v) == vertex_distance(*s, u, v));
    }
}

TEST_CASE("skeleton construction validates its input") {
    CHECK_THROWS(Skeleton({"a", "b"}, {{0, 1, Rat(0)}}, {}, 0));          // zero length
    CHECK_THROWS(Skeleton({"a", "b"}, {}, {}, 0));                        // disconnected
    CHECK_THROWS(Skeleton({"a"}, {}, {{0, "p"}, {0, "p"}}, 0));           // duplicate puncture
    CHECK_THROWS(Skeleton({"a"}, {}, {}, 3));                            // bad base
}

TEST_CASE("vertex ids are deterministic") {
    auto a = fixtures::cartwright_skeleton();
    auto b = fixtures::cartwright_skeleton();
    CHECK(a->vertex_labels() == b->vertex_labels());
    REQUIRE(a->edges().size() == b->edges().size());
    for (std::size_t e = 0; e < a->edges().size(); ++e) {
        CHECK(a->edges()[e].u == b->edges()[e].u);
        CHECK(a->edges()[e].v == b->edges()[e].v);
        CHECK(a->edges()[e].length == b->edges()[e].length);
    }
}
