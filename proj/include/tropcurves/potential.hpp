#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tropcurves/rational.hpp"
#include "tropcurves/skeleton.hpp"

namespace tropcurves {

/// A degree-zero divisor supported on punctures: puncture -> order.
struct Divisor {
    std::map<std::string, Int> orders;

    Int degree() const;
    /// Drops zero entries.
    void normalize();
};

Divisor operator+(const Divisor& a, const Divisor& b);

/**
 * A piecewise linear function on a skeleton with integer slopes: the model
 * of val(f) = -log|f| for a rational function f.  Determined by one value
 * at the base vertex and a slope per oriented edge and per ray; harmonic at
 * every vertex, with slope toward puncture x equal to the divisor order of
 * f at x.  Values at all other vertices follow by integrating slopes; the
 * cycle condition makes this path independent.
 */
class PLFunction {
public:
    PLFunction(std::shared_ptr<const Skeleton> skeleton, std::vector<Int> edge_slopes,
               std::map<std::string, Int> ray_slopes, Rat base_value);

    const std::shared_ptr<const Skeleton>& skeleton() const { return skel_; }
    const Rat& base_value() const { return base_value_; }

    /// Slope along edge e in the stored u -> v orientation.
    const Int& edge_slope(int e) const { return edge_slopes_[e]; }
    /// Slope along edge e walking away from vertex `from`.
    Int slope_from(int e, int from) const;
    const std::map<std::string, Int>& ray_slopes() const { return ray_slopes_; }
    Int ray_slope(const std::string& puncture) const;

    /// Value at a vertex: base value plus the slope integral along any path.
    Rat evaluate(int vertex) const;
    std::vector<Rat> vertex_values() const;

    /// Sum of outgoing slopes over every tangent direction at the vertex
    /// (finite edges and rays); zero exactly when the function is harmonic
    /// there.  Self-loops contribute nothing: a linear function on a loop
    /// is constant.
    Int harmonic_defect(int vertex) const;

    /// Same function with a different normalization constant.
    PLFunction with_base_value(const Rat& value) const;

private:
    std::shared_ptr<const Skeleton> skel_;
    std::vector<Int> edge_slopes_;
    std::map<std::string, Int> ray_slopes_;
    Rat base_value_;
};

/**
 * Solves the boundary value problem for F = -log|f| on the skeleton: ray
 * slopes equal the divisor orders, F is harmonic at every vertex, and F is
 * single valued around cycles.  The solution is computed exactly over the
 * rationals, normalized to F(base) = 0, and every edge slope is verified to
 * be an integer.  A non-integral slope on a skeleton with a cycle means the
 * divisor class on the loop is nontrivial: NonPrincipalOnTate.
 */
PLFunction solve_slope(std::shared_ptr<const Skeleton> skeleton, const Divisor& divisor);

/// Diagnostic per-vertex change of slope; equals the number of poles minus
/// zeros retracting to the vertex, which is zero at every skeletal vertex
/// of a fully punctured curve.
Int change_of_slope(const PLFunction& f, int vertex);

} // namespace tropcurves
