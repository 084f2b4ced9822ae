#include "tropcurves/elimination.hpp"

#include <algorithm>

namespace tropcurves {

Point LatticeMap::apply(const Point& p) const {
    if (static_cast<int>(p.size()) != source_dim()) throw std::invalid_argument("dimension mismatch");
    Point out(rows.size(), Rat(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) out[i] += Rat(rows[i][j]) * p[j];
    return out;
}

LatticeVec LatticeMap::apply(const LatticeVec& v) const {
    if (static_cast<int>(v.size()) != source_dim()) throw std::invalid_argument("dimension mismatch");
    LatticeVec out(rows.size(), Int(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += rows[i][j] * v[j];
    return out;
}

LatticeMap compose(const LatticeMap& a, const LatticeMap& b) {
    if (a.source_dim() != b.target_dim()) throw std::invalid_argument("composition shape mismatch");
    LatticeMap c;
    c.degree = a.degree * b.degree;
    c.rows.assign(a.target_dim(), LatticeVec(b.source_dim(), Int(0)));
    for (int i = 0; i < a.target_dim(); ++i)
        for (int j = 0; j < b.source_dim(); ++j)
            for (int k = 0; k < a.source_dim(); ++k) c.rows[i][j] += a.rows[i][k] * b.rows[k][j];
    return c;
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

} // namespace

TropicalComplex pushforward(const TropicalComplex& tc, const LatticeMap& map,
                            PushforwardReport* report) {
    if (map.source_dim() != tc.dim) throw std::invalid_argument("map source dimension mismatch");
    ComplexBuilder builder(map.target_dim());

    for (const auto& s : tc.segments) {
        const Point& a = tc.vertices[s.u];
        const Point& b = tc.vertices[s.v];
        Point ia = map.apply(a), ib = map.apply(b);
        if (ia == ib) {
            if (report)
                report->collapsed.push_back("segment " + point_string(a) + " - " + point_string(b) +
                                            " collapses to " + point_string(ia));
            continue;
        }
        // Index of the direction lattice in its saturation: content of A*v.
        LatticeVec v = segment_shape(a, b).dir;
        Int index = content(map.apply(v));
        builder.add_segment(ia, ib, s.mult * index);
    }
    for (const auto& r : tc.rays) {
        const Point& base = tc.vertices[r.base];
        LatticeVec image_dir = map.apply(r.dir);
        if (is_zero(image_dir)) {
            if (report)
                report->collapsed.push_back("ray at " + point_string(base) + " collapses to " +
                                            point_string(map.apply(base)));
            continue;
        }
        Int index = content(image_dir);
        builder.add_ray(map.apply(base), image_dir, r.mult * index);
    }

    TropicalComplex image = builder.build();
    if (map.degree != 1) {
        for (auto& s : image.segments) {
            if (s.mult % map.degree != 0)
                throw NonIntegralMultiplicity("degree " + map.degree.str() +
                                              " does not divide multiplicity " + s.mult.str());
            s.mult /= map.degree;
        }
        for (auto& r : image.rays) {
            if (r.mult % map.degree != 0)
                throw NonIntegralMultiplicity("degree " + map.degree.str() +
                                              " does not divide multiplicity " + r.mult.str());
            r.mult /= map.degree;
        }
    }
    return image;
}

LatticePolygon canonical_polygon(std::vector<LatticePoint2> vertices) {
    if (vertices.empty()) throw std::invalid_argument("empty polygon");
    LatticePoint2 lo = *std::min_element(vertices.begin(), vertices.end());
    for (auto& v : vertices) v = {v[0] - lo[0], v[1] - lo[1]};
    std::rotate(vertices.begin(), std::min_element(vertices.begin(), vertices.end()),
                vertices.end());
    return LatticePolygon{std::move(vertices)};
}

LatticePolygon newton_polygon_from_curve(const TropicalComplex& tc, const Int& delta) {
    if (tc.dim != 2) throw UnsupportedDimension("newton polygon recovery needs a plane curve");
    if (delta <= 0) throw std::invalid_argument("degree must be positive");
    if (tc.rays.empty()) throw std::invalid_argument("complex has no rays");

    // Edge vector per ray direction; parallel rays accumulate.
    std::map<LatticePoint2, Int> edge_vectors; // primitive dir -> total lattice length
    for (const auto& r : tc.rays) {
        if (r.mult % delta != 0)
            throw NonIntegralMultiplicity("degree " + delta.str() +
                                          " does not divide ray multiplicity " + r.mult.str());
        LatticePoint2 e = rotate_cw({r.dir[0], r.dir[1]});
        edge_vectors[e] += r.mult / delta;
    }

    std::vector<std::pair<LatticePoint2, Int>> edges(edge_vectors.begin(), edge_vectors.end());
    // Counterclockwise angular order starting in the closed upper half plane
    // at direction (1, 0).
    auto half = [](const LatticePoint2& v) {
        return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
    };
    std::sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
        int ha = half(a.first), hb = half(b.first);
        if (ha != hb) return ha < hb;
        Int cr = a.first[0] * b.first[1] - a.first[1] * b.first[0];
        return cr > 0;
    });

    Int sx = 0, sy = 0;
    for (const auto& [dir, len] : edges) {
        sx += dir[0] * len;
        sy += dir[1] * len;
    }
    if (sx != 0 || sy != 0)
        throw NotClosed("ray contributions sum to (" + sx.str() + ", " + sy.str() + ")");

    std::vector<LatticePoint2> verts;
    LatticePoint2 cur{0, 0};
    for (const auto& [dir, len] : edges) {
        verts.push_back(cur);
        cur = {cur[0] + dir[0] * len, cur[1] + dir[1] * len};
    }
    return canonical_polygon(std::move(verts));
}

} // namespace tropcurves
