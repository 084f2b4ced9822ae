#include "tropcurves/puiseux.hpp"

#include <algorithm>
#include <cctype>

namespace tropcurves {

namespace {

// Merge two sorted term lists, combining coefficients with the given sign on y.
std::vector<PuiseuxTerm> merge_terms(const std::vector<PuiseuxTerm>& x,
                                     const std::vector<PuiseuxTerm>& y, int sign) {
    std::vector<PuiseuxTerm> out;
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].exponent < y[j].exponent)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].exponent < x[i].exponent) {
            out.push_back({y[j].exponent, sign * y[j].coefficient});
            ++j;
        } else {
            Rat c = x[i].coefficient + sign * y[j].coefficient;
            if (c != 0) out.push_back({x[i].exponent, c});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

PuiseuxElement::PuiseuxElement(std::vector<PuiseuxTerm> terms, ExtRat truncation)
    : truncation_(truncation) {
    std::sort(terms.begin(), terms.end(),
              [](const PuiseuxTerm& a, const PuiseuxTerm& b) { return a.exponent < b.exponent; });
    for (std::size_t i = 0; i < terms.size();) {
        Rat c = terms[i].coefficient;
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j].exponent == terms[i].exponent) {
            c += terms[j].coefficient;
            ++j;
        }
        if (c != 0 && ExtRat(terms[i].exponent) < truncation_)
            terms_.push_back({terms[i].exponent, c});
        i = j;
    }
}

PuiseuxElement PuiseuxElement::constant(const Rat& c) {
    return PuiseuxElement(std::vector<PuiseuxTerm>{{Rat(0), c}});
}

PuiseuxElement PuiseuxElement::monomial(const Rat& coefficient, const Rat& exponent) {
    return PuiseuxElement(std::vector<PuiseuxTerm>{{exponent, coefficient}});
}

ExtRat PuiseuxElement::val() const {
    if (!terms_.empty()) return ExtRat(terms_.front().exponent);
    if (truncation_.is_infinite()) return ExtRat::infinity();
    throw PrecisionLoss("valuation undetermined: element vanishes up to O(t^" +
                        rat_string(truncation_.value()) + ")");
}

PuiseuxElement PuiseuxElement::scaled_by_monomial(const Rat& coefficient, const Rat& exponent) const {
    if (coefficient == 0) throw std::logic_error("monomial scaling by zero");
    std::vector<PuiseuxTerm> t;
    t.reserve(terms_.size());
    for (const auto& term : terms_) t.push_back({term.exponent + exponent, term.coefficient * coefficient});
    ExtRat trunc = truncation_.is_infinite() ? ExtRat::infinity()
                                             : ExtRat(truncation_.value() + exponent);
    return PuiseuxElement(std::move(t), trunc);
}

bool operator==(const PuiseuxElement& a, const PuiseuxElement& b) {
    if (a.truncation_ != b.truncation_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exponent != b.terms_[i].exponent ||
            a.terms_[i].coefficient != b.terms_[i].coefficient)
            return false;
    return true;
}

ExtRat val(const PuiseuxElement& x) { return x.val(); }

PuiseuxElement add(const PuiseuxElement& x, const PuiseuxElement& y) {
    ExtRat trunc = min(x.truncation(), y.truncation());
    return PuiseuxElement(merge_terms(x.terms(), y.terms(), +1), trunc);
}

PuiseuxElement sub(const PuiseuxElement& x, const PuiseuxElement& y) {
    ExtRat trunc = min(x.truncation(), y.truncation());
    PuiseuxElement d(merge_terms(x.terms(), y.terms(), -1), trunc);
    if (d.terms().empty() && trunc.is_finite())
        throw PrecisionLoss("difference vanishes up to O(t^" + rat_string(trunc.value()) + ")");
    return d;
}

std::vector<std::vector<ExtRat>> pairwise_valuations(const std::vector<PuiseuxElement>& points) {
    const std::size_t n = points.size();
    std::vector<std::vector<ExtRat>> m(n, std::vector<ExtRat>(n, ExtRat::infinity()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            PuiseuxElement d = sub(points[i], points[j]);
            if (d.is_zero())
                throw DuplicatePoint("points " + std::to_string(i) + " and " + std::to_string(j) +
                                     " coincide");
            m[i][j] = m[j][i] = d.val();
        }
    }
    // The strong triangle inequality must hold for every triple.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (i != j && m[i][j] < min(m[i][k], m[k][j]))
                    throw std::logic_error("ultrametric inequality violated at (" +
                                           std::to_string(i) + "," + std::to_string(j) + "," +
                                           std::to_string(k) + ")");
    return m;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i == s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at position " + std::to_string(i) + " in '" + std::string(s) + "'");
    }

    Rat number() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
        if (digits == 0) fail("expected number");
        if (i < s.size() && s[i] == '/') {
            ++i;
            std::size_t d2 = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++d2;
            if (d2 == 0) fail("expected denominator");
        }
        return parse_rational(s.substr(start, i - start));
    }

    // "t" possibly followed by ^int or ^(rat); returns the exponent.
    Rat t_power() {
        if (!eat('t')) fail("expected 't'");
        if (!eat('^')) return Rat(1);
        if (eat('(')) {
            Rat e = number();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        return number();
    }
};

} // namespace

PuiseuxElement parse_puiseux(std::string_view text) {
    Cursor c{text};
    std::vector<PuiseuxTerm> terms;
    ExtRat trunc = ExtRat::infinity();
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        if (c.eat('+')) {
            sign = 1;
        } else if (c.eat('-')) {
            sign = -1;
        } else if (!first) {
            c.fail("expected '+' or '-'");
        }
        first = false;
        if (c.peek() == 'O') {
            c.eat('O');
            if (!c.eat('(')) c.fail("expected '(' after O");
            Rat e = c.t_power();
            if (!c.eat(')')) c.fail("expected ')'");
            if (!c.done()) c.fail("trailing input after truncation marker");
            trunc = ExtRat(e);
            break;
        }
        Rat coeff(1);
        Rat expo(0);
        if (c.peek() == 't') {
            expo = c.t_power();
        } else {
            coeff = c.number();
            if (c.eat('*')) {
                expo = c.t_power();
            } else if (c.peek() == 't') {
                expo = c.t_power();
            }
        }
        terms.push_back({expo, sign * coeff});
    }
    return PuiseuxElement(std::move(terms), trunc);
}

std::string puiseux_string(const PuiseuxElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : x.terms()) {
        Rat c = t.coefficient;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        Rat a = c < 0 ? Rat(-c) : c;
        if (t.exponent == 0) {
            out += rat_string(a);
        } else {
            if (a != 1) out += rat_string(a) + "*";
            out += "t";
            if (t.exponent != 1) {
                if (is_integer(t.exponent))
                    out += "^" + numerator(t.exponent).str();
                else
                    out += "^(" + rat_string(t.exponent) + ")";
            }
        }
    }
    if (x.truncation().is_finite()) {
        if (first)
            out += "O(t^(" + rat_string(x.truncation().value()) + "))";
        else
            out += " + O(t^(" + rat_string(x.truncation().value()) + "))";
    }
    return out;
}

} // namespace tropcurves
