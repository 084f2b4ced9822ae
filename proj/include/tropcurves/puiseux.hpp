#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tropcurves/rational.hpp"

namespace tropcurves {

/// One monomial c * t^e.
struct PuiseuxTerm {
    Rat exponent;
    Rat coefficient;
};

/**
 * A truncated generalized power series over the rationals: a finite list of
 * terms with strictly increasing rational exponents, plus a truncation
 * order.  Terms at or beyond the truncation order are unknown.  The exact
 * zero element has no terms and infinite truncation order.
 *
 * Only enough structure is provided to read off valuations of differences;
 * there is no general series multiplication or division.
 */
class PuiseuxElement {
public:
    PuiseuxElement() : truncation_(ExtRat::infinity()) {}
    PuiseuxElement(std::vector<PuiseuxTerm> terms, ExtRat truncation = ExtRat::infinity());

    static PuiseuxElement zero() { return PuiseuxElement(); }
    static PuiseuxElement constant(const Rat& c);
    static PuiseuxElement monomial(const Rat& coefficient, const Rat& exponent);

    const std::vector<PuiseuxTerm>& terms() const { return terms_; }
    const ExtRat& truncation() const { return truncation_; }

    bool is_zero() const { return terms_.empty() && truncation_.is_infinite(); }

    /// Smallest exponent; +infinity for zero.  Throws PrecisionLoss when the
    /// element has no visible terms but only finite precision.
    ExtRat val() const;

    /// Multiplication by the monomial c * t^e (c nonzero).
    PuiseuxElement scaled_by_monomial(const Rat& coefficient, const Rat& exponent) const;

    friend bool operator==(const PuiseuxElement& a, const PuiseuxElement& b);

private:
    std::vector<PuiseuxTerm> terms_;   // strictly increasing exponents, nonzero coefficients
    ExtRat truncation_;                // every term exponent < truncation_
};

ExtRat val(const PuiseuxElement& x);

PuiseuxElement add(const PuiseuxElement& x, const PuiseuxElement& y);

/// Term-wise difference; truncation order is the finer of the two inputs'.
/// Throws PrecisionLoss when the result vanishes up to a finite truncation.
PuiseuxElement sub(const PuiseuxElement& x, const PuiseuxElement& y);

/// Matrix of val(points[i] - points[j]); +infinity on the diagonal.  Throws
/// DuplicatePoint when two inputs are exactly equal and PrecisionLoss when a
/// difference is undetermined.  The result is verified to satisfy the
/// nonarchimedean inequality v(i,j) >= min(v(i,k), v(k,j)).
std::vector<std::vector<ExtRat>> pairwise_valuations(const std::vector<PuiseuxElement>& points);

/**
 * Parses a series literal: a sum of terms "c", "t^e", "c*t^e" with rational
 * c and integer or parenthesized rational e, optionally ending in a
 * truncation marker "+ O(t^k)".  Examples:
 *
 *     "1 - t^2 + 3*t^(5/2)"
 *     "t^(1/3)"
 *     "2 - t + O(t^4)"
 *     "t^-1"
 */
PuiseuxElement parse_puiseux(std::string_view text);

std::string puiseux_string(const PuiseuxElement& x);

} // namespace tropcurves
