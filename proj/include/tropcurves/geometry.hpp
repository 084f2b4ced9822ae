#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tropcurves/rational.hpp"

namespace tropcurves {

using Point = std::vector<Rat>;          // point of Q^n
using LatticeVec = std::vector<Int>;     // vector of Z^n

/// gcd of absolute values of the entries; 0 for the zero vector.
Int content(const LatticeVec& v);

bool is_zero(const LatticeVec& v);

/// v divided by its content (the zero vector stays zero).
LatticeVec primitive(const LatticeVec& v);

LatticeVec negated(const LatticeVec& v);

/**
 * Writes q - p as length * dir with dir a primitive integer vector and
 * length a positive rational (the lattice length of the segment).
 * Requires p != q.
 */
struct SegmentShape {
    LatticeVec dir;
    Rat lattice_length;
};
SegmentShape segment_shape(const Point& p, const Point& q);

/// Parameter s >= 0 with q = base + s * dir, if the point lies on the ray.
std::optional<Rat> ray_parameter(const Point& base, const LatticeVec& dir, const Point& q);

Point point_along(const Point& base, const LatticeVec& dir, const Rat& s);

// ---- 2D lattice geometry for Newton polygons ----

using LatticePoint2 = std::array<Int, 2>;

/// Cross product of (b - a) and (c - a): positive for a left turn.
Int cross2(const LatticePoint2& a, const LatticePoint2& b, const LatticePoint2& c);

/// Convex hull in counterclockwise order, corner vertices only.
/// Collinear input yields the two extreme points; a single point, itself.
std::vector<LatticePoint2> convex_hull(std::vector<LatticePoint2> pts);

/// Number of lattice points on [a, b] minus one.
Int lattice_length(const LatticePoint2& a, const LatticePoint2& b);

/// Clockwise quarter turn (x, y) -> (y, -x).
LatticePoint2 rotate_cw(const LatticePoint2& v);

} // namespace tropcurves
