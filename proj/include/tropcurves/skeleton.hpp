#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropcurves/puiseux.hpp"
#include "tropcurves/rational.hpp"

namespace tropcurves {

/**
 * A finite connected metric graph with infinite rays labeled by punctures
 * and a distinguished base vertex.  Edges carry strictly positive rational
 * lengths; parallel edges and self-loops are allowed (a bare circle is a
 * single self-loop).  Rays have infinite length and one ray per puncture.
 */
class Skeleton {
public:
    struct Edge {
        int u;
        int v;
        Rat length;
    };
    struct Ray {
        int base;
        std::string puncture;
    };

    Skeleton(std::vector<std::string> vertex_labels, std::vector<Edge> edges,
             std::vector<Ray> rays, int base_vertex);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Ray>& rays() const { return rays_; }
    int base_vertex() const { return base_; }

    /// First Betti number of the underlying graph (rays do not contribute).
    int betti() const { return betti_; }
    bool has_cycle() const { return betti_ > 0; }

    /// Edge ids incident to v; self-loops appear once.
    const std::vector<int>& incident_edges(int v) const { return incident_[v]; }
    /// Ray ids based at v.
    const std::vector<int>& incident_rays(int v) const { return rays_at_[v]; }

    /// Index of the ray labeled by the puncture, or -1.
    int ray_of_puncture(const std::string& puncture) const;
    /// Base vertex of the ray toward the puncture; throws UnknownPuncture.
    int vertex_with_ray(const std::string& puncture) const;

    /// Splits edge `edge` at distance `position` from its u endpoint.  The
    /// new vertex is appended; the metric space is unchanged.
    Skeleton subdivided(int edge, const Rat& position) const;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<Ray> rays_;
    int base_;
    int betti_;
    std::vector<std::vector<int>> incident_;
    std::vector<std::vector<int>> rays_at_;
};

/**
 * Minimal skeleton of the projective line punctured at the given points
 * (and at infinity when `include_infinity` is set): the ultrametric tree
 * whose branch point separating punctures i and j sits at depth
 * val(a_i - a_j) below the root.  Vertices are ordered by depth, then by
 * the smallest puncture label below them; the base vertex is the root.
 */
Skeleton build_p1_skeleton(const std::vector<std::pair<std::string, PuiseuxElement>>& finite_punctures,
                           bool include_infinity,
                           const std::string& infinity_label = "inf");

/// Depth of each vertex of a skeleton produced by build_p1_skeleton,
/// recomputed from the metric: distance from the base, plus the base depth.
std::vector<Rat> p1_vertex_depths(const Skeleton& s, const Rat& base_depth);

/**
 * Skeleton of a Tate curve punctured at points with the given positions on
 * a circle of circumference `loop_length`.  Positions are canonicalized to
 * [0, loop_length); punctures sharing a position share a vertex.  With no
 * punctures the circle gets a single auxiliary vertex.
 */
Skeleton build_tate_skeleton(const Rat& loop_length,
                             const std::vector<std::pair<std::string, Rat>>& punctures);

/// Position of each vertex along the circle of a Tate skeleton, walking
/// from the base vertex; the walk direction is the stored edge orientation.
std::vector<Rat> tate_vertex_positions(const Skeleton& s);

/// Metric distance between two vertices (shortest path over finite edges).
Rat vertex_distance(const Skeleton& s, int u, int v);

} // namespace tropcurves
