#include "tropcurves/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace tropcurves {

namespace {

void expect_schema(const json& j, const std::string& name) {
    if (!j.is_object() || j.value("schema", "") != name)
        throw ParseError("expected schema '" + name + "'");
}

json point_to_json(const Point& p) {
    json a = json::array();
    for (const Rat& x : p) a.push_back(rat_string(x));
    return a;
}

Point point_from_json(const json& j) {
    Point p;
    for (const auto& x : j) p.push_back(parse_rational(x.get<std::string>()));
    return p;
}

json dir_to_json(const LatticeVec& d) {
    json a = json::array();
    for (const Int& x : d) a.push_back(x.str());
    return a;
}

LatticeVec dir_from_json(const json& j) {
    LatticeVec d;
    for (const auto& x : j) d.push_back(parse_integer(x.get<std::string>()));
    return d;
}

} // namespace

json skeleton_to_json(const Skeleton& s) {
    json j;
    j["schema"] = "skeleton.v1";
    j["base"] = s.base_vertex();
    json verts = json::array();
    for (int v = 0; v < s.vertex_count(); ++v)
        verts.push_back({{"id", v}, {"label", s.vertex_labels()[v]}});
    j["vertices"] = verts;
    json edges = json::array();
    for (const auto& e : s.edges())
        edges.push_back({{"u", e.u}, {"v", e.v}, {"len", rat_string(e.length)}});
    j["edges"] = edges;
    json rays = json::array();
    for (const auto& r : s.rays()) rays.push_back({{"base", r.base}, {"puncture", r.puncture}});
    j["rays"] = rays;
    return j;
}

Skeleton skeleton_from_json(const json& j) {
    expect_schema(j, "skeleton.v1");
    std::vector<std::string> labels(j.at("vertices").size());
    for (const auto& v : j.at("vertices")) labels.at(v.at("id").get<int>()) = v.value("label", "");
    std::vector<Skeleton::Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(),
                         parse_rational(e.at("len").get<std::string>())});
    std::vector<Skeleton::Ray> rays;
    for (const auto& r : j.at("rays"))
        rays.push_back({r.at("base").get<int>(), r.at("puncture").get<std::string>()});
    return Skeleton(std::move(labels), std::move(edges), std::move(rays), j.at("base").get<int>());
}

json divisor_to_json(const Divisor& d) {
    json j;
    j["schema"] = "divisor.v1";
    json orders = json::object();
    for (const auto& [p, o] : d.orders) orders[p] = o.str();
    j["orders"] = orders;
    return j;
}

Divisor divisor_from_json(const json& j) {
    expect_schema(j, "divisor.v1");
    Divisor d;
    for (const auto& [p, o] : j.at("orders").items())
        d.orders[p] = parse_integer(o.get<std::string>());
    d.normalize();
    return d;
}

PunctureSet punctures_from_json(const json& j) {
    expect_schema(j, "punctures.v1");
    PunctureSet ps;
    for (const auto& [name, literal] : j.at("punctures").items())
        ps.finite.push_back({name, parse_puiseux(literal.get<std::string>())});
    ps.include_infinity = j.value("infinity", false);
    return ps;
}

json punctures_to_json(const PunctureSet& ps) {
    json j;
    j["schema"] = "punctures.v1";
    json p = json::object();
    for (const auto& [name, elt] : ps.finite) p[name] = puiseux_string(elt);
    j["punctures"] = p;
    j["infinity"] = ps.include_infinity;
    return j;
}

json plfunction_to_json(const PLFunction& f) {
    const Skeleton& s = *f.skeleton();
    json j;
    j["schema"] = "plfunction.v1";
    j["vertices"] = s.vertex_count();
    j["edges"] = s.edges().size();
    j["base_value"] = rat_string(f.base_value());
    json slopes = json::object();
    for (std::size_t e = 0; e < s.edges().size(); ++e)
        slopes[std::to_string(e)] = f.edge_slope(static_cast<int>(e)).str();
    j["edge_slopes"] = slopes;
    json rays = json::object();
    for (const auto& [p, o] : f.ray_slopes()) rays[p] = o.str();
    j["ray_slopes"] = rays;
    return j;
}

PLFunction plfunction_from_json(const json& j, std::shared_ptr<const Skeleton> skeleton) {
    expect_schema(j, "plfunction.v1");
    if (j.at("vertices").get<int>() != skeleton->vertex_count() ||
        j.at("edges").get<std::size_t>() != skeleton->edges().size())
        throw ParseError("piecewise linear function does not fit the skeleton");
    std::vector<Int> slopes(skeleton->edges().size(), Int(0));
    for (const auto& [k, v] : j.at("edge_slopes").items())
        slopes.at(std::stoul(k)) = parse_integer(v.get<std::string>());
    std::map<std::string, Int> ray_slopes;
    for (const auto& [k, v] : j.at("ray_slopes").items())
        ray_slopes[k] = parse_integer(v.get<std::string>());
    return PLFunction(std::move(skeleton), std::move(slopes), std::move(ray_slopes),
                      parse_rational(j.at("base_value").get<std::string>()));
}

json complex_to_json(const TropicalComplex& tc) {
    json j;
    j["schema"] = "tropcomplex.v1";
    j["dim"] = tc.dim;
    json verts = json::array();
    for (const auto& p : tc.vertices) verts.push_back(point_to_json(p));
    j["vertices"] = verts;
    json segs = json::array();
    for (const auto& s : tc.segments)
        segs.push_back({{"u", s.u}, {"v", s.v}, {"mult", s.mult.str()}});
    j["segments"] = segs;
    json rays = json::array();
    for (const auto& r : tc.rays)
        rays.push_back({{"base", r.base}, {"dir", dir_to_json(r.dir)}, {"mult", r.mult.str()}});
    j["rays"] = rays;
    return j;
}

TropicalComplex complex_from_json(const json& j) {
    expect_schema(j, "tropcomplex.v1");
    // Rebuild through the canonical machinery so invariants hold even for
    // hand-written files.
    int dim = j.at("dim").get<int>();
    std::vector<Point> verts;
    for (const auto& p : j.at("vertices")) verts.push_back(point_from_json(p));
    ComplexBuilder builder(dim);
    for (const auto& s : j.at("segments"))
        builder.add_segment(verts.at(s.at("u").get<int>()), verts.at(s.at("v").get<int>()),
                            parse_integer(s.at("mult").get<std::string>()));
    for (const auto& r : j.at("rays"))
        builder.add_ray(verts.at(r.at("base").get<int>()), dir_from_json(r.at("dir")),
                        parse_integer(r.at("mult").get<std::string>()));
    TropicalComplex tc = builder.build();
    if (tc.empty()) tc.dim = dim;
    return tc;
}

json troppoly_to_json(const TropicalPolynomial& tp) {
    json j;
    j["schema"] = "troppoly.v1";
    json terms = json::array();
    for (const auto& [u, v] : tp.terms)
        terms.push_back({{"exp", {u[0].str(), u[1].str()}}, {"val", rat_string(v)}});
    j["terms"] = terms;
    return j;
}

TropicalPolynomial troppoly_from_json(const json& j) {
    expect_schema(j, "troppoly.v1");
    TropicalPolynomial tp;
    for (const auto& t : j.at("terms")) {
        LatticePoint2 u{parse_integer(t.at("exp")[0].get<std::string>()),
                        parse_integer(t.at("exp")[1].get<std::string>())};
        tp.terms[u] = parse_rational(t.at("val").get<std::string>());
    }
    return tp;
}

json certificate_to_json(const Certificate& c) {
    json j;
    j["schema"] = "certificate.v1";
    j["rule"] = c.rule;
    j["verdict"] = verdict_string(c.verdict);
    j["witness"] = c.witness;
    return j;
}

json polygon_to_json(const LatticePolygon& p) {
    json j;
    j["schema"] = "polygon.v1";
    json verts = json::array();
    for (const auto& v : p.vertices) verts.push_back({v[0].str(), v[1].str()});
    j["vertices"] = verts;
    return j;
}

json expansion_report_to_json(const ExpansionReport& r) {
    auto entry_json = [](const ExpansionReport::EdgeImage& e) {
        json j;
        if (e.edge >= 0)
            j["edge"] = e.edge;
        else
            j["puncture"] = e.puncture;
        j["slopes"] = dir_to_json(e.slopes);
        j["expansion"] = e.expansion.str();
        j["collapsed"] = e.collapsed;
        j["image"] = json::array();
        j["image"].push_back(point_to_json(e.image_a));
        if (e.edge >= 0) j["image"].push_back(point_to_json(e.image_b));
        return j;
    };
    json j;
    j["edges"] = json::array();
    for (const auto& e : r.edges) j["edges"].push_back(entry_json(e));
    j["rays"] = json::array();
    for (const auto& e : r.rays) j["rays"].push_back(entry_json(e));
    return j;
}

json balance_report_to_json(const TropicalComplex& tc, const BalanceReport& r) {
    json j;
    j["pass"] = r.pass;
    json rows = json::array();
    for (std::size_t v = 0; v < r.residuals.size(); ++v)
        rows.push_back({{"vertex", point_to_json(tc.vertices[v])},
                        {"residual", dir_to_json(r.residuals[v])}});
    j["residuals"] = rows;
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

std::string resolve_output_path(const std::string& path) {
    if (std::filesystem::path(path).is_absolute()) return path;
    const char* outdir = std::getenv("TROPCURVES_OUTDIR");
    if (!outdir || !*outdir) return path;
    return (std::filesystem::path(outdir) / path).string();
}

void save_text_file(const std::string& path, const std::string& text) {
    std::string full = resolve_output_path(path);
    std::ofstream out(full);
    if (!out) throw std::runtime_error("cannot write '" + full + "'");
    out << text;
}

void save_json_file(const std::string& path, const json& j) {
    save_text_file(path, j.dump(2) + "\n");
}

} // namespace tropcurves
