#include "tropcurves/rational.hpp"

#include <cctype>

namespace tropcurves {

std::string int_string(const Int& n) { return n.str(); }

std::string rat_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Int parse_integer(std::string_view s) {
    if (s.empty()) throw ParseError("empty integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        i = 1;
    }
    if (i == s.size()) throw ParseError("sign without digits in integer literal");
    Int v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("bad integer literal: '" + std::string(s) + "'");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? Int(-v) : v;
}

Rat parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_integer(s));
    Int num = parse_integer(s.substr(0, slash));
    Int den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rat(num, den);
}

bool is_integer(const Rat& r) { return denominator(r) == 1; }

Int to_integer(const Rat& r) {
    if (!is_integer(r))
        throw std::logic_error("expected integer, got " + rat_string(r));
    return numerator(r);
}

const Rat& ExtRat::value() const {
    if (!finite_) throw std::logic_error("value() on +infinity");
    return value_;
}

ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }

std::string extrat_string(const ExtRat& v) {
    return v.is_finite() ? rat_string(v.value()) : std::string("inf");
}

} // namespace tropcurves
