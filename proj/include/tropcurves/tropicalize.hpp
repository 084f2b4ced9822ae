#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tropcurves/geometry.hpp"
#include "tropcurves/potential.hpp"

namespace tropcurves {

/**
 * A weighted one-dimensional polyhedral complex in Q^n: rational vertices,
 * bounded segments and rays with primitive integer directions, each
 * carrying a positive integer multiplicity.  Vertices are kept sorted
 * lexicographically and pieces sorted, so equal complexes compare equal
 * structurally.  Coincident pieces are merged with multiplicities added.
 */
struct TropicalComplex {
    struct Segment {
        int u;
        int v; // u < v
        Int mult;
        friend bool operator==(const Segment&, const Segment&) = default;
    };
    struct Ray {
        int base;
        LatticeVec dir; // primitive
        Int mult;
        friend bool operator==(const Ray&, const Ray&) = default;
    };

    int dim = 0;
    std::vector<Point> vertices;
    std::vector<Segment> segments;
    std::vector<Ray> rays;

    friend bool operator==(const TropicalComplex&, const TropicalComplex&) = default;

    bool empty() const { return vertices.empty(); }
    /// Lattice length of segment s.
    Rat segment_length(int s) const;
    /// Primitive direction of segment s leaving the endpoint `from`.
    LatticeVec segment_dir_from(int s, int from) const;
    /// Number of incident segments plus rays.
    int valence(int vertex) const;
};

/// Accumulates raw weighted pieces, then refines every piece at each point
/// that is an endpoint of some piece, and merges coincident pieces with
/// multiplicities added.  Interior crossings of two pieces are not cut.
class ComplexBuilder {
public:
    explicit ComplexBuilder(int dim) : dim_(dim) {}

    void add_point(const Point& p); // isolated vertex (image of a collapsed part)
    void add_segment(const Point& a, const Point& b, const Int& mult);
    void add_ray(const Point& base, const LatticeVec& dir, const Int& mult);

    TropicalComplex build() const;

private:
    struct RawSegment {
        Point a, b;
        Int mult;
    };
    struct RawRay {
        Point base;
        LatticeVec dir;
        Int mult;
    };
    int dim_;
    std::vector<Point> points_;
    std::vector<RawSegment> segments_;
    std::vector<RawRay> rays_;
};

/// Re-merges adjacent collinear pieces of equal multiplicity across
/// two-valent vertices, yielding the minimal presentation of the complex.
TropicalComplex merge_collinear(const TropicalComplex& tc);

/// Canonical minimal form: rebuild (refine + merge coincident) and then
/// merge collinear two-valent joints to a fixpoint.
TropicalComplex canonical_form(const TropicalComplex& tc);

struct BalanceReport {
    bool pass = true;
    std::vector<LatticeVec> residuals; // one per vertex
};

/// Residual of the balancing condition at each vertex: the sum of
/// multiplicity times primitive outgoing direction over incident pieces.
BalanceReport check_balancing(const TropicalComplex& tc);

/// First Betti number of the underlying graph; rays contribute nothing.
/// Throws DisconnectedComplex when the complex is not connected.
int betti_one(const TropicalComplex& tc);

/// Per-edge data of a tropicalization: slope vector, expansion factor
/// (gcd of the absolute slopes; zero means the edge collapses), and image.
struct ExpansionReport {
    struct EdgeImage {
        int edge = -1;            // skeleton edge id, or -1 for a ray entry
        std::string puncture;     // set for ray entries
        LatticeVec slopes;        // along u -> v for edges; outward for rays
        Int expansion;            // gcd of absolute slopes
        bool collapsed = false;
        Point image_a;            // image of u / ray base
        Point image_b;            // image of v (edges only)
    };
    std::vector<EdgeImage> edges;
    std::vector<EdgeImage> rays;
};

/**
 * Tropicalization of the skeleton under an n-tuple of potentials: each
 * vertex maps to its value tuple, each edge to a segment with multiplicity
 * its expansion factor, each skeleton ray to a ray in the direction of its
 * slope vector.  Collapsed pieces are reported, not errors.  All potentials
 * must live on the same skeleton.
 */
std::pair<TropicalComplex, ExpansionReport> trop_map(const std::shared_ptr<const Skeleton>& skeleton,
                                                     const std::vector<PLFunction>& coords);

std::string complex_summary(const TropicalComplex& tc);

} // namespace tropcurves
