#pragma once

#include <stdexcept>
#include <string>

namespace tropcurves {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Valuation of a difference is undetermined because both operands agree up
// to a finite truncation order.
struct PrecisionLoss : std::runtime_error {
    explicit PrecisionLoss(const std::string& what) : std::runtime_error(what) {}
};

struct DuplicatePoint : std::runtime_error {
    explicit DuplicatePoint(const std::string& what) : std::runtime_error(what) {}
};

struct TooFewPunctures : std::runtime_error {
    explicit TooFewPunctures(const std::string& what) : std::runtime_error(what) {}
};

struct PositionOutOfRange : std::runtime_error {
    explicit PositionOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeNonZero : std::runtime_error {
    explicit DegreeNonZero(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownPuncture : std::runtime_error {
    explicit UnknownPuncture(const std::string& what) : std::runtime_error(what) {}
};

// The harmonic problem has no solution with integer slopes: the divisor
// class on the loop is nontrivial.
struct NonPrincipalOnTate : std::runtime_error {
    explicit NonPrincipalOnTate(const std::string& what) : std::runtime_error(what) {}
};

struct DisconnectedComplex : std::runtime_error {
    explicit DisconnectedComplex(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateCell : std::runtime_error {
    explicit DegenerateCell(const std::string& what) : std::runtime_error(what) {}
};

struct NoCycle : std::runtime_error {
    explicit NoCycle(const std::string& what) : std::runtime_error(what) {}
};

struct MultipleCycles : std::runtime_error {
    explicit MultipleCycles(const std::string& what) : std::runtime_error(what) {}
};

struct CycleNotInHyperplane : std::runtime_error {
    explicit CycleNotInHyperplane(const std::string& what) : std::runtime_error(what) {}
};

struct NonIntegralMultiplicity : std::runtime_error {
    explicit NonIntegralMultiplicity(const std::string& what) : std::runtime_error(what) {}
};

struct NotClosed : std::runtime_error {
    explicit NotClosed(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownScenario : std::runtime_error {
    explicit UnknownScenario(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedDimension : std::runtime_error {
    explicit UnsupportedDimension(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tropcurves
