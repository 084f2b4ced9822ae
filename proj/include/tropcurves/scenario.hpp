#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tropcurves/newton.hpp"
#include "tropcurves/potential.hpp"
#include "tropcurves/skeleton.hpp"
#include "tropcurves/tropicalize.hpp"

namespace tropcurves {

struct ScenarioResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> lines;
    double millis = 0.0;
};

std::vector<std::string> scenario_names();

/// Runs one registered end-to-end reproduction and diffs every computed
/// quantity against its expected value.  Throws UnknownScenario.
ScenarioResult run_scenario(const std::string& name);

std::vector<ScenarioResult> run_all_scenarios();

// Reusable input fixtures for the worked examples; the scenario runners and
// the test suites build on these.
namespace fixtures {

// Rational curve x = t(t-p), y = t-1 on the line punctured at {0, 1, p, oo}.
std::shared_ptr<const Skeleton> example1_skeleton();
Divisor example1_divisor_x();
Divisor example1_divisor_y();
std::vector<PLFunction> example1_coords(const std::shared_ptr<const Skeleton>& s);
TropicalPolynomial example1_implicit();

// Space rational curve (u^3/t + 1, u^2/t + 1, u + 1).
std::shared_ptr<const Skeleton> cartwright_skeleton();
std::vector<PLFunction> cartwright_coords(const std::shared_ptr<const Skeleton>& s);

// Weierstrass curve y^2 = x^3 + x^2 + t^4 punctured at the supports of x, y.
std::shared_ptr<const Skeleton> weierstrass_tate_skeleton();
std::vector<PLFunction> weierstrass_tate_coords(const std::shared_ptr<const Skeleton>& s);

// Plane curve x^2 y + x y^2 + (1/t) x y + x + y.
TropicalPolynomial square_cycle_poly();

// Genus 3 plane quartic whose dual subdivision is a unimodular triangulation.
TropicalPolynomial genus3_poly();

// Plane quartic degenerating to four lines; one skeleton edge collapses.
TropicalPolynomial collapsing_quartic_poly();

// Nodal cubic whose tropicalization crushes the loop: all multiplicities
// one, yet no cycle survives.
TropicalPolynomial crushed_loop_poly();

// Degree-3 embedding of a Tate curve with loop length ell: faithful.
std::shared_ptr<const Skeleton> good_embedding_skeleton(const Rat& ell);
std::vector<PLFunction> good_embedding_coords(const std::shared_ptr<const Skeleton>& s);

// The four lossy embeddings of the same Tate curve (which = 1..4).
std::shared_ptr<const Skeleton> bad_embedding_skeleton(const Rat& ell, int which);
std::vector<PLFunction> bad_embedding_coords(const std::shared_ptr<const Skeleton>& s, int which);

// Map to the quadric (t^2(t-1)^2(t-p^2), t(t-1)(t-p)) with a spurious cycle.
std::shared_ptr<const Skeleton> fake_homology_skeleton();
std::vector<PLFunction> fake_homology_coords(const std::shared_ptr<const Skeleton>& s);

} // namespace fixtures

} // namespace tropcurves
