#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tropcurves/geometry.hpp"
#include "tropcurves/puiseux.hpp"
#include "tropcurves/tropicalize.hpp"

namespace tropcurves {

/// Min-plus polynomial in two variables: exponent -> coefficient valuation.
struct TropicalPolynomial {
    std::map<LatticePoint2, Rat> terms;
};

/// A bivariate polynomial with truncated power series coefficients; the
/// optional third exponent supports homogeneous input which is
/// dehomogenized by substituting 1 for the last variable.
struct PuiseuxPolynomial {
    std::map<std::array<Int, 3>, PuiseuxElement> terms;
};

/**
 * Parses "c*x^a*y^b" terms joined by + and -, where c is a Puiseux literal
 * factor (a number, "t^e", or a parenthesized series).  Examples:
 *
 *     "x^2*y + x*y^2 + t^-1*x*y + x + y"
 *     "(y-1)^... "   (not supported: no series-by-series products)
 *     "x^3*y - x^2*y^2 - 2*x*y^3 - 3*x^2*y + 2*x*y - t"
 */
PuiseuxPolynomial parse_polynomial(std::string_view text);

/// Coefficientwise valuation.  With `dehomogenize` set, z is substituted by
/// 1 and coefficients of equal (a, b) are added first.
TropicalPolynomial tropicalize_polynomial(const PuiseuxPolynomial& p, bool dehomogenize = false);

/**
 * One cell of the regular subdivision of the Newton polygon induced by the
 * coefficient valuations: the set of exponents where a single affine
 * function touches the lifted points from below.  `dual_point` is the point
 * of the tropical curve where the monomials of the cell simultaneously
 * attain the minimum `value`.
 *
 * When the exponents are collinear the "cells" are the edges of the convex
 * minorant along the line and the dual locus of each cell is a full line;
 * `dual_point` is then the point of that line nearest the origin.
 */
struct SubdivCell {
    std::vector<LatticePoint2> members;  // all tight exponents
    std::vector<LatticePoint2> polygon;  // counterclockwise corner vertices (2 points if collinear)
    std::array<Rat, 2> dual_point;
    Rat value;
};

struct DualSubdivision {
    bool collinear = false;
    std::vector<LatticePoint2> hull; // Newton polygon, counterclockwise
    std::vector<SubdivCell> cells;
};

DualSubdivision dual_subdivision(const TropicalPolynomial& tp);

/// Exact support check: every cell's affine certificate touches exactly its
/// members and lies strictly below the lift elsewhere, and the cells tile
/// the Newton polygon.
bool verify_dual_certificates(const TropicalPolynomial& tp, const DualSubdivision& ds);

/**
 * The tropical plane curve of the polynomial: one vertex per cell of the
 * dual subdivision, a bounded segment per interior edge with multiplicity
 * the lattice length of that edge, and a ray per hull boundary edge whose
 * direction is the clockwise quarter turn of the boundary edge traversed
 * clockwise.  The output passes check_balancing.
 */
TropicalComplex corner_locus(const TropicalPolynomial& tp);

struct CrossCheck {
    bool equal = true;
    std::vector<std::string> diff; // pieces present on one side only
};

/// Equality of two plane complexes as weighted point sets, compared in
/// canonical minimal form.
CrossCheck crosscheck_parametric(const TropicalComplex& a, const TropicalComplex& b);

} // namespace tropcurves
