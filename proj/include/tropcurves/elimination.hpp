#pragma once

#include <vector>

#include "tropcurves/geometry.hpp"
#include "tropcurves/tropicalize.hpp"

namespace tropcurves {

/// An integer linear map between lattices together with the generic degree
/// of the algebraic map it tropicalizes.
struct LatticeMap {
    std::vector<LatticeVec> rows; // m rows of length n
    Int degree = 1;               // delta

    int target_dim() const { return static_cast<int>(rows.size()); }
    int source_dim() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }

    Point apply(const Point& p) const;
    LatticeVec apply(const LatticeVec& v) const;
};

/// Composition a after b.
LatticeMap compose(const LatticeMap& a, const LatticeMap& b);

struct PushforwardReport {
    std::vector<std::string> collapsed; // descriptions of cells killed by the map
};

/**
 * Pushforward of a balanced weighted curve complex: each cell maps to its
 * image with multiplicity scaled by the lattice index of the direction
 * image, images are refined to a common complex with multiplicities added,
 * and the total is divided by the generic degree.  Collapsed cells are
 * reported.  Throws NonIntegralMultiplicity when the degree does not divide
 * a resulting multiplicity.
 */
TropicalComplex pushforward(const TropicalComplex& tc, const LatticeMap& map,
                            PushforwardReport* report = nullptr);

/// A convex lattice polygon up to translation, canonicalized so that the
/// lexicographically smallest vertex is the origin; vertices are listed
/// counterclockwise starting there.  Degenerate (two-vertex) polygons are
/// allowed and describe segments.
struct LatticePolygon {
    std::vector<LatticePoint2> vertices;
    friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;
};

LatticePolygon canonical_polygon(std::vector<LatticePoint2> vertices);

/**
 * Newton polygon of a defining equation, recovered from the rays of a
 * balanced plane tropical curve: a ray of primitive direction v and
 * multiplicity m contributes the edge vector (m/delta) * rotate_cw(v); the
 * edge vectors are sorted by angle and chained.  Throws NotClosed when the
 * edge vectors do not sum to zero and NonIntegralMultiplicity when delta
 * does not divide a ray multiplicity.
 */
LatticePolygon newton_polygon_from_curve(const TropicalComplex& tc, const Int& delta);

} // namespace tropcurves
