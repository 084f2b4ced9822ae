#include "tropcurves/newton.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace tropcurves {

namespace {

struct PolyCursor {
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

    std::string_view number_token() {
        skip_ws();
        std::size_t start = i;
        std::size_t digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
        if (digits == 0) fail("expected number");
        if (i < s.size() && s[i] == '/') {
            ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        }
        return s.substr(start, i - start);
    }

    Int exponent() {
        if (!eat('^')) return Int(1);
        bool neg = eat('-');
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected exponent");
        Int e = parse_integer(s.substr(start, i - start));
        return neg ? Int(-e) : e;
    }

    // A parenthesized series literal: scan to the matching ')'.
    PuiseuxElement paren_series() {
        skip_ws();
        std::size_t start = i; // at '('
        int depth = 0;
        std::size_t j = i;
        for (; j < s.size(); ++j) {
            if (s[j] == '(') ++depth;
            if (s[j] == ')') {
                --depth;
                if (depth == 0) break;
            }
        }
        if (j == s.size()) fail("unbalanced parenthesis");
        std::string_view inner = s.substr(start + 1, j - start - 1);
        i = j + 1;
        return parse_puiseux(inner);
    }
};

} // namespace

PuiseuxPolynomial parse_polynomial(std::string_view text) {
    PolyCursor c{text};
    PuiseuxPolynomial poly;
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

        Rat mono_coeff(1);
        Rat mono_exp(0); // power of t
        PuiseuxElement series; // optional general factor
        bool have_series = false;
        std::array<Int, 3> exps{0, 0, 0};

        bool expect_factor = true;
        while (expect_factor) {
            char ch = c.peek();
            if (ch == 'x') {
                c.eat('x');
                exps[0] += c.exponent();
            } else if (ch == 'y') {
                c.eat('y');
                exps[1] += c.exponent();
            } else if (ch == 'z') {
                c.eat('z');
                exps[2] += c.exponent();
            } else if (ch == 't') {
                c.eat('t');
                if (c.peek() == '^') {
                    if (!c.eat('^')) c.fail("expected '^'");
                    if (c.eat('(')) {
                        // rational exponent
                        bool neg = c.eat('-');
                        Rat e = parse_rational(c.number_token());
                        if (!c.eat(')')) c.fail("expected ')'");
                        mono_exp += neg ? Rat(-e) : e;
                    } else {
                        bool neg = c.eat('-');
                        Rat e = parse_rational(c.number_token());
                        mono_exp += neg ? Rat(-e) : e;
                    }
                } else {
                    mono_exp += 1;
                }
            } else if (ch == '(') {
                if (have_series) c.fail("products of two series factors are not supported");
                series = c.paren_series();
                have_series = true;
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                mono_coeff *= parse_rational(c.number_token());
            } else {
                c.fail("expected a factor");
            }
            expect_factor = c.eat('*');
        }

        if (mono_coeff == 0) continue; // the term vanishes
        PuiseuxElement coeff = have_series ? series : PuiseuxElement::constant(Rat(1));
        coeff = coeff.scaled_by_monomial(sign * mono_coeff, mono_exp);
        auto it = poly.terms.find(exps);
        if (it == poly.terms.end())
            poly.terms.emplace(exps, coeff);
        else
            it->second = add(it->second, coeff);
    }
    // Drop exact zeros produced by cancellation.
    for (auto it = poly.terms.begin(); it != poly.terms.end();)
        it = it->second.is_zero() ? poly.terms.erase(it) : std::next(it);
    return poly;
}

TropicalPolynomial tropicalize_polynomial(const PuiseuxPolynomial& p, bool dehomogenize) {
    std::map<LatticePoint2, PuiseuxElement> flat;
    for (const auto& [exps, coeff] : p.terms) {
        if (exps[2] != 0 && !dehomogenize)
            throw std::invalid_argument("term involves z; pass dehomogenize to substitute z = 1");
        LatticePoint2 key{exps[0], exps[1]};
        auto it = flat.find(key);
        if (it == flat.end())
            flat.emplace(key, coeff);
        else
            it->second = add(it->second, coeff);
    }
    TropicalPolynomial tp;
    for (const auto& [key, coeff] : flat) {
        if (coeff.is_zero()) continue;
        tp.terms[key] = coeff.val().value(); // PrecisionLoss propagates
    }
    if (tp.terms.size() < 2)
        throw std::invalid_argument("tropical polynomial needs at least two terms");
    return tp;
}

namespace {

bool all_collinear(const std::vector<LatticePoint2>& pts) {
    if (pts.size() <= 2) return true;
    for (std::size_t k = 2; k < pts.size(); ++k)
        if (cross2(pts[0], pts[1], pts[k]) != 0) return false;
    return true;
}

DualSubdivision collinear_subdivision(const std::vector<LatticePoint2>& pts,
                                      const std::vector<Rat>& lift) {
    // Parametrize the points by lattice steps along the common line.
    LatticePoint2 lo = *std::min_element(pts.begin(), pts.end());
    LatticePoint2 hi = *std::max_element(pts.begin(), pts.end());
    LatticeVec g2 = primitive({hi[0] - lo[0], hi[1] - lo[1]});
    LatticePoint2 g{g2[0], g2[1]};
    auto param = [&](const LatticePoint2& u) {
        if (g[0] != 0) return Int((u[0] - lo[0]) / g[0]);
        return Int((u[1] - lo[1]) / g[1]);
    };

    std::vector<std::pair<Int, std::size_t>> order;
    for (std::size_t i = 0; i < pts.size(); ++i) order.push_back({param(pts[i]), i});
    std::sort(order.begin(), order.end());

    // Convex minorant of (s, lift).
    std::vector<std::size_t> hull;
    for (const auto& [sparam, idx] : order) {
        while (hull.size() >= 2) {
            std::size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            // Keep strictly convex breaks: drop b when it is on or above chord a..idx.
            Rat lhs = (lift[b] - lift[a]) * Rat(param(pts[idx]) - param(pts[a]));
            Rat rhs = (lift[idx] - lift[a]) * Rat(param(pts[b]) - param(pts[a]));
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(idx);
    }

    DualSubdivision ds;
    ds.collinear = true;
    ds.hull = {pts[hull.front()], pts[hull.back()]};
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        const LatticePoint2& a = pts[hull[i]];
        const LatticePoint2& b = pts[hull[i + 1]];
        Rat slope = (lift[hull[i + 1]] - lift[hull[i]]) / Rat(param(b) - param(a));
        SubdivCell cell;
        cell.polygon = {a, b};
        for (std::size_t k = 0; k < pts.size(); ++k) {
            Rat chord = lift[hull[i]] + slope * Rat(param(pts[k]) - param(a));
            Int pk = param(pts[k]);
            if (pk >= param(a) && pk <= param(b) && lift[k] == chord) cell.members.push_back(pts[k]);
        }
        std::sort(cell.members.begin(), cell.members.end());
        // Dual line {w : <g, w> = -slope}; anchor at the point nearest the origin.
        Rat norm2 = Rat(g[0] * g[0] + g[1] * g[1]);
        cell.dual_point = {Rat(-slope) * Rat(g[0]) / norm2, Rat(-slope) * Rat(g[1]) / norm2};
        cell.value = lift[hull[i]] + Rat(a[0]) * cell.dual_point[0] + Rat(a[1]) * cell.dual_point[1];
        ds.cells.push_back(std::move(cell));
    }
    return ds;
}

} // namespace

DualSubdivision dual_subdivision(const TropicalPolynomial& tp) {
    if (tp.terms.size() < 2) throw std::invalid_argument("need at least two terms");
    std::vector<LatticePoint2> pts;
    std::vector<Rat> lift;
    for (const auto& [u, v] : tp.terms) {
        pts.push_back(u);
        lift.push_back(v);
    }
    if (all_collinear(pts)) return collinear_subdivision(pts, lift);

    const std::size_t n = pts.size();
    DualSubdivision ds;
    ds.hull = convex_hull(pts);

    std::set<std::vector<LatticePoint2>> seen;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (cross2(pts[i], pts[j], pts[k]) == 0) continue;
                // Affine l(u) = alpha*u0 + beta*u1 + gamma through the three lifts.
                // Solve the 3x3 system by Cramer's rule.
                Rat x1(pts[i][0]), y1(pts[i][1]), z1 = lift[i];
                Rat x2(pts[j][0]), y2(pts[j][1]), z2 = lift[j];
                Rat x3(pts[k][0]), y3(pts[k][1]), z3 = lift[k];
                Rat det = (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1);
                Rat alpha = ((z2 - z1) * (y3 - y1) - (z3 - z1) * (y2 - y1)) / det;
                Rat beta = ((x2 - x1) * (z3 - z1) - (x3 - x1) * (z2 - z1)) / det;
                Rat gamma = z1 - alpha * x1 - beta * y1;

                bool lower = true;
                for (std::size_t m = 0; m < n && lower; ++m)
                    if (alpha * Rat(pts[m][0]) + beta * Rat(pts[m][1]) + gamma > lift[m])
                        lower = false;
                if (!lower) continue;

                SubdivCell cell;
                for (std::size_t m = 0; m < n; ++m)
                    if (alpha * Rat(pts[m][0]) + beta * Rat(pts[m][1]) + gamma == lift[m])
                        cell.members.push_back(pts[m]);
                std::sort(cell.members.begin(), cell.members.end());
                if (!seen.insert(cell.members).second) continue;
                cell.polygon = convex_hull(cell.members);
                cell.dual_point = {-alpha, -beta};
                cell.value = gamma;
                ds.cells.push_back(std::move(cell));
            }
        }
    }
    std::sort(ds.cells.begin(), ds.cells.end(), [](const SubdivCell& a, const SubdivCell& b) {
        return a.dual_point < b.dual_point;
    });
    return ds;
}

bool verify_dual_certificates(const TropicalPolynomial& tp, const DualSubdivision& ds) {
    for (const auto& cell : ds.cells) {
        std::set<LatticePoint2> members(cell.members.begin(), cell.members.end());
        for (const auto& [u, v] : tp.terms) {
            Rat value = v + Rat(u[0]) * cell.dual_point[0] + Rat(u[1]) * cell.dual_point[1];
            bool tight = members.count(u) > 0;
            if (tight && value != cell.value) return false;
            if (!tight && value <= cell.value) return false;
        }
    }
    if (ds.collinear) {
        Int total = 0;
        for (const auto& cell : ds.cells) total += lattice_length(cell.polygon[0], cell.polygon[1]);
        return total == lattice_length(ds.hull[0], ds.hull[1]);
    }
    // Cells tile the hull: twice-areas add up.
    auto twice_area = [](const std::vector<LatticePoint2>& poly) {
        Int a = 0;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const auto& p = poly[i];
            const auto& q = poly[(i + 1) % poly.size()];
            a += p[0] * q[1] - q[0] * p[1];
        }
        return a;
    };
    Int total = 0;
    for (const auto& cell : ds.cells) total += twice_area(cell.polygon);
    return total == twice_area(ds.hull);
}

TropicalComplex corner_locus(const TropicalPolynomial& tp) {
    DualSubdivision ds = dual_subdivision(tp);
    ComplexBuilder builder(2);

    if (ds.collinear) {
        for (const auto& cell : ds.cells) {
            const LatticePoint2& a = cell.polygon[0];
            const LatticePoint2& b = cell.polygon[1];
            Int len = lattice_length(a, b);
            if (len == 0) throw DegenerateCell("zero-length dual edge");
            Point anchor{cell.dual_point[0], cell.dual_point[1]};
            LatticePoint2 fwd = rotate_cw({b[0] - a[0], b[1] - a[1]});
            builder.add_ray(anchor, {fwd[0], fwd[1]}, len);
            builder.add_ray(anchor, {-fwd[0], -fwd[1]}, len);
        }
        return builder.build();
    }

    // Edges of cell polygons, keyed without orientation.
    std::map<std::pair<LatticePoint2, LatticePoint2>, std::vector<std::size_t>> edge_cells;
    for (std::size_t c = 0; c < ds.cells.size(); ++c) {
        const auto& poly = ds.cells[c].polygon;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            LatticePoint2 a = poly[i];
            LatticePoint2 b = poly[(i + 1) % poly.size()];
            auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
            edge_cells[key].push_back(c);
        }
    }

    auto dual_of = [&](std::size_t c) {
        return Point{ds.cells[c].dual_point[0], ds.cells[c].dual_point[1]};
    };

    for (const auto& [edge, cells] : edge_cells) {
        Int len = lattice_length(edge.first, edge.second);
        if (len == 0) throw DegenerateCell("zero-length dual edge");
        if (cells.size() == 2) {
            Point p = dual_of(cells[0]);
            Point q = dual_of(cells[1]);
            if (p == q) throw DegenerateCell("adjacent cells share a dual vertex");
            builder.add_segment(p, q, len);
        } else if (cells.size() == 1) {
            // Boundary edge: find its orientation in the cell's ccw polygon
            // and take the clockwise quarter turn of the reversed edge.
            const auto& poly = ds.cells[cells[0]].polygon;
            LatticePoint2 a{}, b{};
            bool found = false;
            for (std::size_t i = 0; i < poly.size() && !found; ++i) {
                LatticePoint2 s = poly[i];
                LatticePoint2 t = poly[(i + 1) % poly.size()];
                auto key = s < t ? std::make_pair(s, t) : std::make_pair(t, s);
                if (key == edge) {
                    a = s;
                    b = t;
                    found = true;
                }
            }
            LatticePoint2 dir = rotate_cw({a[0] - b[0], a[1] - b[1]});
            builder.add_ray(dual_of(cells[0]), {dir[0], dir[1]}, len);
        } else {
            throw std::logic_error("subdivision edge shared by more than two cells");
        }
    }
    return builder.build();
}

namespace {

std::string point_string(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += rat_string(p[i]);
    }
    return out + ")";
}

std::string dir_string(const LatticeVec& d) {
    std::string out = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ", ";
        out += d[i].str();
    }
    return out + ")";
}

void describe_difference(const TropicalComplex& a, const TropicalComplex& b, const std::string& tag,
                         std::vector<std::string>& out) {
    for (const auto& s : a.segments) {
        bool found = false;
        for (const auto& t : b.segments)
            found = found || (a.vertices[s.u] == b.vertices[t.u] && a.vertices[s.v] == b.vertices[t.v] &&
                              s.mult == t.mult);
        if (!found)
            out.push_back(tag + ": segment " + point_string(a.vertices[s.u]) + " - " +
                          point_string(a.vertices[s.v]) + " mult " + s.mult.str());
    }
    for (const auto& r : a.rays) {
        bool found = false;
        for (const auto& t : b.rays)
            found = found ||
                    (a.vertices[r.base] == b.vertices[t.base] && r.dir == t.dir && r.mult == t.mult);
        if (!found)
            out.push_back(tag + ": ray at " + point_string(a.vertices[r.base]) + " dir " +
                          dir_string(r.dir) + " mult " + r.mult.str());
    }
}

} // namespace

CrossCheck crosscheck_parametric(const TropicalComplex& a, const TropicalComplex& b) {
    if (a.dim != b.dim) throw std::invalid_argument("ambient dimensions differ");
    TropicalComplex ca = canonical_form(a);
    TropicalComplex cb = canonical_form(b);
    CrossCheck result;
    result.equal = ca == cb;
    if (!result.equal) {
        describe_difference(ca, cb, "only in first", result.diff);
        describe_difference(cb, ca, "only in second", result.diff);
        if (result.diff.empty()) result.diff.push_back("complexes differ in vertex lists");
    }
    return result;
}

} // namespace tropcurves
