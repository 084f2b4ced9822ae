#include "tropcurves/geometry.hpp"

#include <algorithm>

namespace tropcurves {

Int content(const LatticeVec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g < 0 ? Int(-g) : g;
}

bool is_zero(const LatticeVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

LatticeVec primitive(const LatticeVec& v) {
    Int g = content(v);
    if (g == 0) return v;
    LatticeVec out = v;
    for (Int& x : out) x /= g;
    return out;
}

LatticeVec negated(const LatticeVec& v) {
    LatticeVec out = v;
    for (Int& x : out) x = -x;
    return out;
}

SegmentShape segment_shape(const Point& p, const Point& q) {
    if (p.size() != q.size()) throw std::invalid_argument("dimension mismatch");
    Int denom_lcm = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rat d = q[i] - p[i];
        denom_lcm = boost::multiprecision::lcm(denom_lcm, denominator(d));
    }
    LatticeVec w(p.size());
    bool zero = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rat scaled = (q[i] - p[i]) * Rat(denom_lcm);
        w[i] = numerator(scaled);
        if (w[i] != 0) zero = false;
    }
    if (zero) throw std::invalid_argument("degenerate segment");
    Int g = content(w);
    SegmentShape s;
    s.dir = primitive(w);
    s.lattice_length = Rat(g, denom_lcm);
    return s;
}

std::optional<Rat> ray_parameter(const Point& base, const LatticeVec& dir, const Point& q) {
    Rat s(0);
    bool have_s = false;
    for (std::size_t i = 0; i < base.size(); ++i) {
        Rat delta = q[i] - base[i];
        if (dir[i] == 0) {
            if (delta != 0) return std::nullopt;
        } else if (!have_s) {
            s = delta / Rat(dir[i]);
            have_s = true;
        } else if (delta != s * Rat(dir[i])) {
            return std::nullopt;
        }
    }
    if (!have_s) return Rat(0); // zero direction handled by callers
    if (s < 0) return std::nullopt;
    return s;
}

Point point_along(const Point& base, const LatticeVec& dir, const Rat& s) {
    Point p = base;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += s * Rat(dir[i]);
    return p;
}

Int cross2(const LatticePoint2& a, const LatticePoint2& b, const LatticePoint2& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

std::vector<LatticePoint2> convex_hull(std::vector<LatticePoint2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<LatticePoint2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) { // lower
        while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) { // upper
        while (k >= lower && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

Int lattice_length(const LatticePoint2& a, const LatticePoint2& b) {
    Int g = boost::multiprecision::gcd(Int(b[0] - a[0]), Int(b[1] - a[1]));
    return g < 0 ? Int(-g) : g;
}

LatticePoint2 rotate_cw(const LatticePoint2& v) { return {v[1], -v[0]}; }

} // namespace tropcurves
