#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "tropcurves/errors.hpp"

namespace tropcurves {

// All arithmetic in this library is exact.  Rationals are arbitrary
// precision and always kept in lowest terms with positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

std::string int_string(const Int& n);

// Canonical "num/den" form, e.g. "-3/4", "2/1".
std::string rat_string(const Rat& r);

Int parse_integer(std::string_view s);

// Accepts "num" or "num/den".
Rat parse_rational(std::string_view s);

bool is_integer(const Rat& r);

// Throws ParseError-adjacent logic error when r is not integral.
Int to_integer(const Rat& r);

/// A rational extended by +infinity; the codomain of valuations.
class ExtRat {
public:
    ExtRat() : finite_(true), value_(0) {}
    ExtRat(Rat v) : finite_(true), value_(std::move(v)) {}
    ExtRat(int v) : finite_(true), value_(v) {}

    static ExtRat infinity() {
        ExtRat e;
        e.finite_ = false;
        return e;
    }

    bool is_finite() const { return finite_; }
    bool is_infinite() const { return !finite_; }

    const Rat& value() const;

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (!a.finite_) return false;            // +inf < x never
        if (!b.finite_) return true;             // finite < +inf
        return a.value_ < b.value_;
    }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

private:
    bool finite_;
    Rat value_;
};

ExtRat min(const ExtRat& a, const ExtRat& b);

std::string extrat_string(const ExtRat& v);

} // namespace tropcurves
