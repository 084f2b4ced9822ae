#pragma once

#include <string>
#include <vector>

#include "tropcurves/rational.hpp"
#include "tropcurves/tropicalize.hpp"

namespace tropcurves {

enum class Verdict { CERTIFIED, NOT_CERTIFIED, REFUTED };

std::string verdict_string(Verdict v);

/// Outcome of a combinatorial certificate: the rule applied, the verdict,
/// and human-readable witness lines (vertices, edges, residuals, lengths).
struct Certificate {
    Verdict verdict = Verdict::NOT_CERTIFIED;
    std::string rule;
    std::vector<std::string> witness;

    bool certified() const { return verdict == Verdict::CERTIFIED; }
};

/**
 * Multiplicity-one test at a vertex: certifies when the vertex is balanced
 * and either trivalent with some incident multiplicity one, or r-valent
 * with edge directions spanning a space of dimension r-1 and incident
 * multiplicities with trivial common factor.  One-directional: never
 * REFUTED.
 */
Certificate vertex_mult_one(const TropicalComplex& tc, int vertex);

/**
 * Faithfulness certificate: all multiplicities one, every vertex trivalent,
 * and the bridgeless core has first Betti number equal to the curve genus.
 * The core is returned as witness.  Input is canonicalized first, so
 * subdivision points do not spoil trivalence.
 */
Certificate certify_faithful(const TropicalComplex& tc, int curve_genus);

/**
 * Cycle-length test: with a unique cycle, all multiplicities one and all
 * vertices trivalent, the cycle's total lattice length must equal -val_j.
 * REFUTED when the lengths differ; NOT_CERTIFIED when the lengths agree but
 * a hypothesis fails.  Throws NoCycle / MultipleCycles.
 */
Certificate kmm_check(const TropicalComplex& tc, const Rat& val_j);

struct Hyperplane {
    LatticeVec normal;
    Rat level;
};

/**
 * Well-spacedness of a genus-1 complex relative to a hyperplane containing
 * its unique cycle: the minimum lattice distance from the closure of the
 * off-hyperplane part to the cycle must be attained at two or more distinct
 * attachment points, or at a point with at least three off-hyperplane
 * tangent directions.  Throws CycleNotInHyperplane.
 */
Certificate well_spaced_check(const TropicalComplex& tc, const Hyperplane& h);

} // namespace tropcurves
