#include "tropcurves/tropicalize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tropcurves {

Rat TropicalComplex::segment_length(int s) const {
    return segment_shape(vertices[segments[s].u], vertices[segments[s].v]).lattice_length;
}

LatticeVec TropicalComplex::segment_dir_from(int s, int from) const {
    const Segment& seg = segments[s];
    int other = seg.u == from ? seg.v : seg.u;
    return segment_shape(vertices[from], vertices[other]).dir;
}

int TropicalComplex::valence(int vertex) const {
    int count = 0;
    for (const Segment& s : segments)
        if (s.u == vertex || s.v == vertex) ++count;
    for (const Ray& r : rays)
        if (r.base == vertex) ++count;
    return count;
}

void ComplexBuilder::add_point(const Point& p) {
    if (static_cast<int>(p.size()) != dim_) throw std::invalid_argument("dimension mismatch");
    points_.push_back(p);
}

void ComplexBuilder::add_segment(const Point& a, const Point& b, const Int& mult) {
    if (static_cast<int>(a.size()) != dim_ || static_cast<int>(b.size()) != dim_)
        throw std::invalid_argument("dimension mismatch");
    if (a == b) throw std::invalid_argument("segment endpoints coincide");
    if (mult <= 0) throw std::invalid_argument("multiplicity must be positive");
    segments_.push_back({a, b, mult});
}

void ComplexBuilder::add_ray(const Point& base, const LatticeVec& dir, const Int& mult) {
    if (static_cast<int>(base.size()) != dim_ || static_cast<int>(dir.size()) != dim_)
        throw std::invalid_argument("dimension mismatch");
    if (is_zero(dir)) throw std::invalid_argument("ray direction is zero");
    if (mult <= 0) throw std::invalid_argument("multiplicity must be positive");
    rays_.push_back({base, primitive(dir), mult});
}

TropicalComplex ComplexBuilder::build() const {
    // Cut points: every endpoint of every piece.
    std::set<Point> events(points_.begin(), points_.end());
    for (const auto& s : segments_) {
        events.insert(s.a);
        events.insert(s.b);
    }
    for (const auto& r : rays_) events.insert(r.base);

    std::map<std::pair<Point, Point>, Int> seg_mult;
    auto add_seg = [&](const Point& a, const Point& b, const Int& m) {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        seg_mult[key] += m;
    };
    std::map<std::pair<Point, LatticeVec>, Int> ray_mult;

    for (const auto& s : segments_) {
        SegmentShape shape = segment_shape(s.a, s.b);
        // Events interior to the segment, ordered by parameter.
        std::vector<std::pair<Rat, Point>> cuts;
        for (const Point& q : events) {
            auto t = ray_parameter(s.a, shape.dir, q);
            if (t && *t > 0 && *t < shape.lattice_length) cuts.push_back({*t, q});
        }
        std::sort(cuts.begin(), cuts.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        Point prev = s.a;
        for (const auto& [t, q] : cuts) {
            add_seg(prev, q, s.mult);
            prev = q;
        }
        add_seg(prev, s.b, s.mult);
    }
    for (const auto& r : rays_) {
        std::vector<std::pair<Rat, Point>> cuts;
        for (const Point& q : events) {
            auto t = ray_parameter(r.base, r.dir, q);
            if (t && *t > 0) cuts.push_back({*t, q});
        }
        std::sort(cuts.begin(), cuts.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        Point prev = r.base;
        for (const auto& [t, q] : cuts) {
            add_seg(prev, q, r.mult);
            prev = q;
        }
        ray_mult[{prev, r.dir}] += r.mult;
    }

    TropicalComplex tc;
    tc.dim = dim_;
    std::set<Point> vertex_set(points_.begin(), points_.end());
    for (const auto& [key, m] : seg_mult) {
        vertex_set.insert(key.first);
        vertex_set.insert(key.second);
    }
    for (const auto& [key, m] : ray_mult) vertex_set.insert(key.first);
    tc.vertices.assign(vertex_set.begin(), vertex_set.end());
    auto index_of = [&](const Point& p) {
        return static_cast<int>(std::lower_bound(tc.vertices.begin(), tc.vertices.end(), p) -
                                tc.vertices.begin());
    };
    for (const auto& [key, m] : seg_mult)
        tc.segments.push_back({index_of(key.first), index_of(key.second), m});
    for (const auto& [key, m] : ray_mult) tc.rays.push_back({index_of(key.first), key.second, m});
    std::sort(tc.segments.begin(), tc.segments.end(), [](const auto& a, const auto& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    std::sort(tc.rays.begin(), tc.rays.end(), [](const auto& a, const auto& b) {
        return std::tie(a.base, a.dir) < std::tie(b.base, b.dir);
    });
    return tc;
}

TropicalComplex merge_collinear(const TropicalComplex& tc) {
    // Work on mutable piece lists; endpoints by coordinates.
    struct Seg {
        Point a, b;
        Int mult;
        bool dead = false;
    };
    struct Ray {
        Point base;
        LatticeVec dir;
        Int mult;
        bool dead = false;
    };
    std::vector<Seg> segs;
    std::vector<Ray> rays;
    for (const auto& s : tc.segments) segs.push_back({tc.vertices[s.u], tc.vertices[s.v], s.mult});
    for (const auto& r : tc.rays) rays.push_back({tc.vertices[r.base], r.dir, r.mult});

    bool changed = true;
    while (changed) {
        changed = false;
        std::map<Point, std::vector<std::pair<char, int>>> at; // 's'/'r'
        for (std::size_t i = 0; i < segs.size(); ++i)
            if (!segs[i].dead) {
                at[segs[i].a].push_back({'s', static_cast<int>(i)});
                at[segs[i].b].push_back({'s', static_cast<int>(i)});
            }
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (!rays[i].dead) at[rays[i].base].push_back({'r', static_cast<int>(i)});

        for (const auto& [p, pieces] : at) {
            if (pieces.size() != 2) continue;
            auto [k1, i1] = pieces[0];
            auto [k2, i2] = pieces[1];
            if (k1 == 's' && k2 == 's') {
                if (i1 == i2) continue; // same segment twice cannot happen after merging
                Seg& s1 = segs[i1];
                Seg& s2 = segs[i2];
                if (s1.mult != s2.mult) continue;
                Point far1 = s1.a == p ? s1.b : s1.a;
                Point far2 = s2.a == p ? s2.b : s2.a;
                // Collinear through p: direction in equals direction out.
                if (segment_shape(far1, p).dir != segment_shape(p, far2).dir) continue;
                s1.a = far1;
                s1.b = far2;
                s2.dead = true;
                changed = true;
                break;
            }
            if (k1 == 's' || k2 == 's') {
                int si = k1 == 's' ? i1 : i2;
                int ri = k1 == 's' ? i2 : i1;
                Seg& s = segs[si];
                Ray& r = rays[ri];
                if (s.mult != r.mult) continue;
                Point far = s.a == p ? s.b : s.a;
                if (segment_shape(far, p).dir != r.dir) continue;
                r.base = far;
                s.dead = true;
                changed = true;
                break;
            }
            // Two opposite rays form a line; keep the anchor vertex.
        }
    }

    ComplexBuilder builder(tc.dim);
    for (const auto& s : segs)
        if (!s.dead) builder.add_segment(s.a, s.b, s.mult);
    for (const auto& r : rays)
        if (!r.dead) builder.add_ray(r.base, r.dir, r.mult);
    return builder.build();
}

TropicalComplex canonical_form(const TropicalComplex& tc) {
    ComplexBuilder builder(tc.dim);
    for (const auto& s : tc.segments)
        builder.add_segment(tc.vertices[s.u], tc.vertices[s.v], s.mult);
    for (const auto& r : tc.rays) builder.add_ray(tc.vertices[r.base], r.dir, r.mult);
    return merge_collinear(builder.build());
}

BalanceReport check_balancing(const TropicalComplex& tc) {
    BalanceReport report;
    report.residuals.assign(tc.vertices.size(), LatticeVec(tc.dim, Int(0)));
    for (const auto& s : tc.segments) {
        LatticeVec d = segment_shape(tc.vertices[s.u], tc.vertices[s.v]).dir;
        for (int i = 0; i < tc.dim; ++i) {
            report.residuals[s.u][i] += s.mult * d[i];
            report.residuals[s.v][i] -= s.mult * d[i];
        }
    }
    for (const auto& r : tc.rays)
        for (int i = 0; i < tc.dim; ++i) report.residuals[r.base][i] += r.mult * r.dir[i];
    for (const auto& res : report.residuals)
        if (!is_zero(res)) report.pass = false;
    return report;
}

int betti_one(const TropicalComplex& tc) {
    const int n = static_cast<int>(tc.vertices.size());
    if (n == 0) return 0;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int merges = 0;
    for (const auto& s : tc.segments) {
        int a = find(s.u), b = find(s.v);
        if (a != b) {
            parent[a] = b;
            ++merges;
        }
    }
    if (merges != n - 1) throw DisconnectedComplex("complex has more than one component");
    return static_cast<int>(tc.segments.size()) - merges;
}

std::pair<TropicalComplex, ExpansionReport> trop_map(const std::shared_ptr<const Skeleton>& skeleton,
                                                     const std::vector<PLFunction>& coords) {
    if (coords.empty()) throw std::invalid_argument("need at least one coordinate");
    for (const auto& f : coords)
        if (f.skeleton() != skeleton)
            throw std::invalid_argument("all coordinates must live on the given skeleton");
    const Skeleton& s = *skeleton;
    const int n = static_cast<int>(coords.size());

    std::vector<std::vector<Rat>> values;
    values.reserve(coords.size());
    for (const auto& f : coords) values.push_back(f.vertex_values());
    auto image = [&](int v) {
        Point p(n);
        for (int i = 0; i < n; ++i) p[i] = values[i][v];
        return p;
    };

    ComplexBuilder builder(n);
    ExpansionReport report;

    for (std::size_t e = 0; e < s.edges().size(); ++e) {
        const auto& ed = s.edges()[e];
        ExpansionReport::EdgeImage entry;
        entry.edge = static_cast<int>(e);
        entry.slopes.resize(n);
        for (int i = 0; i < n; ++i) entry.slopes[i] = coords[i].edge_slope(static_cast<int>(e));
        entry.expansion = content(entry.slopes);
        entry.image_a = image(ed.u);
        entry.image_b = image(ed.v);
        entry.collapsed = entry.expansion == 0;
        if (!entry.collapsed) builder.add_segment(entry.image_a, entry.image_b, entry.expansion);
        report.edges.push_back(std::move(entry));
    }
    for (const auto& ray : s.rays()) {
        ExpansionReport::EdgeImage entry;
        entry.puncture = ray.puncture;
        entry.slopes.resize(n);
        for (int i = 0; i < n; ++i) entry.slopes[i] = coords[i].ray_slope(ray.puncture);
        entry.expansion = content(entry.slopes);
        entry.image_a = image(ray.base);
        entry.collapsed = entry.expansion == 0;
        if (!entry.collapsed) builder.add_ray(entry.image_a, primitive(entry.slopes), entry.expansion);
        report.rays.push_back(std::move(entry));
    }
    return {builder.build(), std::move(report)};
}

std::string complex_summary(const TropicalComplex& tc) {
    std::string out = std::to_string(tc.vertices.size()) + " vertices, " +
                      std::to_string(tc.segments.size()) + " segments, " +
                      std::to_string(tc.rays.size()) + " rays";
    return out;
}

} // namespace tropcurves
