#pragma once

#include <string>

#include "tropcurves/skeleton.hpp"
#include "tropcurves/tropicalize.hpp"

namespace tropcurves {

/// Deterministic SVG figure of a plane complex: the viewport is fitted to
/// the bounded part plus one lattice step of every ray; multiplicities
/// greater than one are printed as edge labels.  Throws
/// UnsupportedDimension unless dim == 2.
std::string render_complex_svg(const TropicalComplex& tc);

/// Deterministic figure of an abstract skeleton: trees are drawn layered by
/// distance from the base, circles by arc position, with labeled ray stubs
/// and edge length annotations.
std::string render_skeleton_svg(const Skeleton& s);

} // namespace tropcurves
