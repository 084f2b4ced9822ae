#include "tropcurves/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>

namespace tropcurves {

namespace {

// Pixels are the only place floating point appears; rationals are converted
// at the final step with a fixed scale and fixed formatting.
std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
}

struct Canvas {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool any = false;
    double scale = 60.0;
    double margin = 30.0;

    void include(double x, double y) {
        if (!any) {
            min_x = max_x = x;
            min_y = max_y = y;
            any = true;
        } else {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    }
    double tx(double x) const { return (x - min_x) * scale + margin; }
    // Flip: mathematical y grows upward.
    double ty(double y) const { return (max_y - y) * scale + margin; }
    double width() const { return (max_x - min_x) * scale + 2 * margin; }
    double height() const { return (max_y - min_y) * scale + 2 * margin; }
};

std::string svg_header(const Canvas& c) {
    double w = c.any ? c.width() : 100.0;
    double h = c.any ? c.height() : 100.0;
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(w) + "\" height=\"" + px(h) +
           "\" viewBox=\"0 0 " + px(w) + " " + px(h) + "\">\n";
}

std::string line(const Canvas& c, double x1, double y1, double x2, double y2,
                 const std::string& style) {
    return "  <line x1=\"" + px(c.tx(x1)) + "\" y1=\"" + px(c.ty(y1)) + "\" x2=\"" + px(c.tx(x2)) +
           "\" y2=\"" + px(c.ty(y2)) + "\" " + style + "/>\n";
}

std::string dot(const Canvas& c, double x, double y) {
    return "  <circle cx=\"" + px(c.tx(x)) + "\" cy=\"" + px(c.ty(y)) + "\" r=\"3\" fill=\"black\"/>\n";
}

std::string text(const Canvas& c, double x, double y, const std::string& s) {
    return "  <text x=\"" + px(c.tx(x)) + "\" y=\"" + px(c.ty(y)) +
           "\" font-size=\"12\" font-family=\"monospace\">" + s + "</text>\n";
}

double approx(const Rat& r) {
    return static_cast<double>(numerator(r).convert_to<double>() /
                               denominator(r).convert_to<double>());
}

} // namespace

std::string render_complex_svg(const TropicalComplex& tc) {
    if (!tc.empty() && tc.dim != 2)
        throw UnsupportedDimension("svg rendering needs a plane complex");

    Canvas canvas;
    auto xy = [&](int v) {
        return std::pair<double, double>(approx(tc.vertices[v][0]), approx(tc.vertices[v][1]));
    };
    for (std::size_t v = 0; v < tc.vertices.size(); ++v) {
        auto [x, y] = xy(static_cast<int>(v));
        canvas.include(x, y);
    }
    // One lattice step per ray.
    for (const auto& r : tc.rays) {
        auto [x, y] = xy(r.base);
        canvas.include(x + static_cast<double>(r.dir[0].convert_to<double>()),
                       y + static_cast<double>(r.dir[1].convert_to<double>()));
    }

    std::string out = svg_header(canvas);
    const std::string seg_style = "stroke=\"black\" stroke-width=\"2\"";
    const std::string ray_style = "stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"6 3\"";
    for (std::size_t i = 0; i < tc.segments.size(); ++i) {
        const auto& s = tc.segments[i];
        auto [x1, y1] = xy(s.u);
        auto [x2, y2] = xy(s.v);
        out += line(canvas, x1, y1, x2, y2, seg_style);
        if (s.mult > 1)
            out += text(canvas, (x1 + x2) / 2, (y1 + y2) / 2, s.mult.str());
        // Lattice length annotation, as in the figures.
        Rat len = tc.segment_length(static_cast<int>(i));
        if (len != 1) {
            std::string label = is_integer(len) ? numerator(len).str() : rat_string(len);
            out += "  <text x=\"" + px(canvas.tx((x1 + x2) / 2) + 6) + "\" y=\"" +
                   px(canvas.ty((y1 + y2) / 2) + 14) +
                   "\" font-size=\"10\" font-family=\"monospace\" fill=\"gray\">" + label +
                   "</text>\n";
        }
    }
    for (const auto& r : tc.rays) {
        auto [x, y] = xy(r.base);
        double dx = r.dir[0].convert_to<double>();
        double dy = r.dir[1].convert_to<double>();
        out += line(canvas, x, y, x + dx, y + dy, ray_style);
        if (r.mult > 1) out += text(canvas, x + dx / 2, y + dy / 2, r.mult.str());
    }
    for (std::size_t v = 0; v < tc.vertices.size(); ++v) {
        auto [x, y] = xy(static_cast<int>(v));
        out += dot(canvas, x, y);
    }
    out += "</svg>\n";
    return out;
}

namespace {

// Layered tree layout: depth is metric distance from the base, leaves get
// consecutive horizontal slots, inner vertices average their children.
void tree_positions(const Skeleton& s, std::vector<double>& x, std::vector<double>& y) {
    const int n = s.vertex_count();
    x.assign(n, 0.0);
    y.assign(n, 0.0);
    std::vector<int> order; // DFS from the base, deterministic by edge id
    std::vector<bool> seen(n, false);
    double next_slot = 0.0;
    std::function<double(int, double)> place = [&](int v, double depth) {
        seen[v] = true;
        y[v] = -depth;
        std::vector<double> kids;
        for (int e : s.incident_edges(v)) {
            const auto& ed = s.edges()[e];
            int w = ed.u == v ? ed.v : ed.u;
            if (!seen[w]) kids.push_back(place(w, depth + approx(ed.length)));
        }
        if (kids.empty()) {
            x[v] = next_slot;
            next_slot += 1.5;
        } else {
            x[v] = std::accumulate(kids.begin(), kids.end(), 0.0) / kids.size();
        }
        return x[v];
    };
    place(s.base_vertex(), 0.0);
}

} // namespace

std::string render_skeleton_svg(const Skeleton& s) {
    const int n = s.vertex_count();
    std::vector<double> x(n), y(n);
    if (s.has_cycle()) {
        // Vertices around a circle of matching circumference.
        Rat total(0);
        for (const auto& e : s.edges()) total += e.length;
        std::vector<Rat> pos = tate_vertex_positions(s);
        double radius = std::max(1.0, approx(total) / (2 * 3.14159265358979));
        for (int v = 0; v < n; ++v) {
            double angle = 2 * 3.14159265358979 * approx(pos[v]) / approx(total);
            x[v] = radius * std::cos(angle);
            y[v] = radius * std::sin(angle);
        }
    } else {
        tree_positions(s, x, y);
    }

    Canvas canvas;
    for (int v = 0; v < n; ++v) canvas.include(x[v], y[v]);
    // Room for ray stubs.
    for (const auto& r : s.rays()) canvas.include(x[r.base] + 1.0, y[r.base] + 1.0);
    for (const auto& r : s.rays()) canvas.include(x[r.base] - 1.0, y[r.base] - 1.0);

    std::string out = svg_header(canvas);
    const std::string edge_style = "stroke=\"black\" stroke-width=\"2\"";
    const std::string ray_style = "stroke=\"gray\" stroke-width=\"1.5\" stroke-dasharray=\"4 3\"";

    for (const auto& e : s.edges()) {
        if (e.u == e.v) {
            // Self-loop: full circle rendered as such.
            double r = std::hypot(x[e.u], y[e.u]);
            out += "  <circle cx=\"" + px(canvas.tx(0)) + "\" cy=\"" + px(canvas.ty(0)) + "\" r=\"" +
                   px(r * canvas.scale) + "\" fill=\"none\" " + edge_style + "/>\n";
        } else if (s.has_cycle()) {
            out += line(canvas, x[e.u], y[e.u], x[e.v], y[e.v], edge_style);
        } else {
            out += line(canvas, x[e.u], y[e.u], x[e.v], y[e.v], edge_style);
        }
        double mx = (x[e.u] + x[e.v]) / 2, my = (y[e.u] + y[e.v]) / 2;
        if (e.u == e.v) {
            mx = x[e.u];
            my = -y[e.u];
        }
        out += text(canvas, mx, my, rat_string(e.length));
    }

    // Deterministic angular spread of ray stubs per vertex.
    std::map<int, int> stub_count;
    for (const auto& r : s.rays()) {
        int k = stub_count[r.base]++;
        double angle = 0.5 + 0.8 * k;
        double dx = std::cos(angle), dy = std::sin(angle);
        if (s.has_cycle()) {
            // outward
            double len = std::hypot(x[r.base], y[r.base]);
            if (len > 1e-9) {
                dx = x[r.base] / len;
                dy = y[r.base] / len;
                double rot = 0.35 * (k - (stub_count[r.base] - 1) * 0.0);
                double cx = dx * std::cos(rot) - dy * std::sin(rot);
                double cy = dx * std::sin(rot) + dy * std::cos(rot);
                dx = cx;
                dy = cy;
            }
        }
        out += line(canvas, x[r.base], y[r.base], x[r.base] + dx, y[r.base] + dy, ray_style);
        out += text(canvas, x[r.base] + dx, y[r.base] + dy, r.puncture);
    }
    for (int v = 0; v < n; ++v) out += dot(canvas, x[v], y[v]);
    out += "</svg>\n";
    return out;
}

} // namespace tropcurves
