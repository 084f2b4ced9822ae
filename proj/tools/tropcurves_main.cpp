// Command line front end: every subcommand reads and writes the versioned
// JSON schemas, so the pipeline stages can be scripted independently.

#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropcurves/certify.hpp"
#include "tropcurves/elimination.hpp"
#include "tropcurves/json_io.hpp"
#include "tropcurves/newton.hpp"
#include "tropcurves/potential.hpp"
#include "tropcurves/scenario.hpp"
#include "tropcurves/skeleton.hpp"
#include "tropcurves/svg.hpp"
#include "tropcurves/tropicalize.hpp"

namespace {

using namespace tropcurves;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        save_json_file(out_path, j);
}

std::pair<std::string, std::string> split_once(const std::string& s, char sep) {
    auto pos = s.find(sep);
    if (pos == std::string::npos)
        throw ParseError("expected '" + std::string(1, sep) + "' in '" + s + "'");
    return {s.substr(0, pos), s.substr(pos + 1)};
}

LatticeMap parse_matrix(const std::string& text, const Int& degree) {
    LatticeMap m;
    m.degree = degree;
    std::string row;
    std::vector<std::string> rows;
    for (char c : text + ";") {
        if (c == ';') {
            if (!row.empty()) rows.push_back(row);
            row.clear();
        } else {
            row += c;
        }
    }
    for (const auto& r : rows) {
        LatticeVec v;
        std::string cell;
        for (char c : r + ",") {
            if (c == ',') {
                if (!cell.empty()) v.push_back(parse_integer(cell));
                cell.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cell += c;
            }
        }
        m.rows.push_back(std::move(v));
    }
    for (const auto& r : m.rows)
        if (r.size() != m.rows.front().size()) throw ParseError("ragged matrix");
    return m;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tropicalization toolkit for curve skeleta"};
    app.require_subcommand(1);

    // ---- skeleton ----
    auto* sk = app.add_subcommand("skeleton", "build a skeleton and write skeleton.v1 JSON");
    std::vector<std::string> sk_punctures;
    bool sk_infinity = false;
    Rat sk_length;
    std::string sk_kind, sk_out, sk_length_str, sk_punctures_file;
    sk->add_option("kind", sk_kind, "p1 | tate")->required();
    sk->add_option("--puncture", sk_punctures,
                   "NAME=SERIES for p1 (series literal), NAME=POS for tate (rational)");
    sk->add_option("--punctures-file", sk_punctures_file, "punctures.v1 file (p1)");
    sk->add_flag("--infinity", sk_infinity, "puncture the line at infinity as well (p1)");
    sk->add_option("--length", sk_length_str, "loop length (tate)");
    sk->add_option("-o,--out", sk_out, "output file");

    // ---- potential ----
    auto* po = app.add_subcommand("potential", "solve for -log|f| given a divisor");
    std::string po_skeleton, po_divisor, po_out, po_base_value = "0";
    po->add_option("--skeleton", po_skeleton, "skeleton.v1 file")->required();
    po->add_option("--divisor", po_divisor, "divisor.v1 file")->required();
    po->add_option("--base-value", po_base_value, "value at the base vertex (default 0)");
    po->add_option("-o,--out", po_out, "output file");

    // ---- trop ----
    auto* tr = app.add_subcommand("trop", "tropicalize a skeleton along solved potentials");
    std::string tr_skeleton, tr_out, tr_report;
    std::vector<std::string> tr_potentials, tr_divisors;
    bool tr_merge = false;
    tr->add_option("--skeleton", tr_skeleton, "skeleton.v1 file")->required();
    tr->add_option("--potential", tr_potentials, "plfunction.v1 file (repeat per coordinate)");
    tr->add_option("--divisor", tr_divisors, "divisor.v1 file (repeat; solved on the fly)");
    tr->add_flag("--merge-collinear", tr_merge, "re-merge collinear pieces of equal multiplicity");
    tr->add_option("--report", tr_report, "write the expansion report here");
    tr->add_option("-o,--out", tr_out, "output file");

    // ---- newton ----
    auto* ne = app.add_subcommand("newton", "dual subdivision and corner locus of a polynomial");
    std::string ne_poly, ne_file, ne_out, ne_subdiv, ne_recover;
    bool ne_dehom = false;
    std::string ne_delta = "1";
    ne->add_option("--poly", ne_poly, "polynomial literal, e.g. 'x^2*y + x*y^2 + t^-1*x*y + x + y'");
    ne->add_option("--poly-file", ne_file, "troppoly.v1 file");
    ne->add_flag("--dehomogenize", ne_dehom, "substitute z = 1 first");
    ne->add_option("--subdivision", ne_subdiv, "also write the dual subdivision summary here");
    ne->add_option("--recover-from", ne_recover,
                   "tropcomplex.v1 file: recover the newton polygon from a curve instead");
    ne->add_option("--delta", ne_delta, "generic degree for recovery (default 1)");
    ne->add_option("-o,--out", ne_out, "output file");

    // ---- certify ----
    auto* ce = app.add_subcommand("certify", "combinatorial certificates on a complex");
    std::string ce_rule, ce_complex, ce_out, ce_valj = "0", ce_level = "0", ce_normal;
    int ce_vertex = 0, ce_genus = 0;
    ce->add_option("rule", ce_rule, "multone | faithful | kmm | wellspaced")->required();
    ce->add_option("--complex", ce_complex, "tropcomplex.v1 file")->required();
    ce->add_option("--vertex", ce_vertex, "vertex index (multone)");
    ce->add_option("--genus", ce_genus, "curve genus (faithful)");
    ce->add_option("--val-j", ce_valj, "valuation of j (kmm)");
    ce->add_option("--normal", ce_normal, "hyperplane normal, comma separated (wellspaced)");
    ce->add_option("--level", ce_level, "hyperplane level (wellspaced)");
    ce->add_option("-o,--out", ce_out, "output file");

    // ---- pushforward ----
    auto* pu = app.add_subcommand("pushforward", "image of a complex under an integer linear map");
    std::string pu_complex, pu_matrix, pu_out;
    std::string pu_delta = "1";
    pu->add_option("--complex", pu_complex, "tropcomplex.v1 file")->required();
    pu->add_option("--matrix", pu_matrix, "rows separated by ';', entries by ','")->required();
    pu->add_option("--delta", pu_delta, "generic degree (default 1)");
    pu->add_option("-o,--out", pu_out, "output file");

    // ---- scenario ----
    auto* sc = app.add_subcommand("scenario", "run the registered end-to-end reproductions");
    bool sc_all = false, sc_list = false;
    std::string sc_name;
    sc->add_flag("--all", sc_all, "run every scenario");
    sc->add_flag("--list", sc_list, "list scenario names");
    sc->add_option("--name", sc_name, "run one scenario");

    // ---- render ----
    auto* re = app.add_subcommand("render", "draw a complex or skeleton as SVG");
    std::string re_complex, re_skeleton, re_out;
    re->add_option("--complex", re_complex, "tropcomplex.v1 file");
    re->add_option("--skeleton", re_skeleton, "skeleton.v1 file");
    re->add_option("-o,--out", re_out, "output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sk->parsed()) {
            if (sk_kind == "p1") {
                std::vector<std::pair<std::string, PuiseuxElement>> punctures;
                bool infinity = sk_infinity;
                if (!sk_punctures_file.empty()) {
                    PunctureSet ps = punctures_from_json(load_json_file(sk_punctures_file));
                    punctures = std::move(ps.finite);
                    infinity = infinity || ps.include_infinity;
                }
                for (const auto& p : sk_punctures) {
                    auto [name, series] = split_once(p, '=');
                    punctures.push_back({name, parse_puiseux(series)});
                }
                Skeleton s = build_p1_skeleton(punctures, infinity);
                emit(skeleton_to_json(s), sk_out);
            } else if (sk_kind == "tate") {
                if (sk_length_str.empty()) throw ParseError("tate skeleton needs --length");
                sk_length = parse_rational(sk_length_str);
                std::vector<std::pair<std::string, Rat>> punctures;
                for (const auto& p : sk_punctures) {
                    auto [name, pos] = split_once(p, '=');
                    punctures.push_back({name, parse_rational(pos)});
                }
                Skeleton s = build_tate_skeleton(sk_length, punctures);
                emit(skeleton_to_json(s), sk_out);
            } else {
                throw ParseError("unknown skeleton kind '" + sk_kind + "'");
            }
            return kExitPass;
        }

        if (po->parsed()) {
            auto skel = std::make_shared<const Skeleton>(skeleton_from_json(load_json_file(po_skeleton)));
            Divisor d = divisor_from_json(load_json_file(po_divisor));
            PLFunction f = solve_slope(skel, d).with_base_value(parse_rational(po_base_value));
            emit(plfunction_to_json(f), po_out);
            return kExitPass;
        }

        if (tr->parsed()) {
            auto skel = std::make_shared<const Skeleton>(skeleton_from_json(load_json_file(tr_skeleton)));
            std::vector<PLFunction> coords;
            for (const auto& path : tr_potentials)
                coords.push_back(plfunction_from_json(load_json_file(path), skel));
            for (const auto& path : tr_divisors)
                coords.push_back(solve_slope(skel, divisor_from_json(load_json_file(path))));
            auto [tc, report] = trop_map(skel, coords);
            if (tr_merge) tc = merge_collinear(tc);
            emit(complex_to_json(tc), tr_out);
            if (!tr_report.empty()) {
                json j = expansion_report_to_json(report);
                j["balancing"] = balance_report_to_json(tc, check_balancing(tc));
                save_json_file(tr_report, j);
            }
            return kExitPass;
        }

        if (ne->parsed()) {
            if (!ne_recover.empty()) {
                TropicalComplex tc = complex_from_json(load_json_file(ne_recover));
                LatticePolygon poly = newton_polygon_from_curve(tc, parse_integer(ne_delta));
                emit(polygon_to_json(poly), ne_out);
                return kExitPass;
            }
            TropicalPolynomial tp;
            if (!ne_poly.empty())
                tp = tropicalize_polynomial(parse_polynomial(ne_poly), ne_dehom);
            else if (!ne_file.empty())
                tp = troppoly_from_json(load_json_file(ne_file));
            else
                throw ParseError("pass --poly, --poly-file, or --recover-from");
            if (!ne_subdiv.empty()) {
                DualSubdivision ds = dual_subdivision(tp);
                json j;
                j["cells"] = json::array();
                for (const auto& cell : ds.cells) {
                    json c;
                    c["dual_point"] = {rat_string(cell.dual_point[0]), rat_string(cell.dual_point[1])};
                    c["members"] = json::array();
                    for (const auto& m : cell.members) c["members"].push_back({m[0].str(), m[1].str()});
                    j["cells"].push_back(c);
                }
                save_json_file(ne_subdiv, j);
            }
            emit(complex_to_json(corner_locus(tp)), ne_out);
            return kExitPass;
        }

        if (ce->parsed()) {
            TropicalComplex tc = complex_from_json(load_json_file(ce_complex));
            Certificate cert;
            if (ce_rule == "multone") {
                cert = vertex_mult_one(tc, ce_vertex);
            } else if (ce_rule == "faithful") {
                cert = certify_faithful(tc, ce_genus);
            } else if (ce_rule == "kmm") {
                cert = kmm_check(tc, parse_rational(ce_valj));
            } else if (ce_rule == "wellspaced") {
                Hyperplane h;
                std::string cell;
                for (char c : ce_normal + ",") {
                    if (c == ',') {
                        if (!cell.empty()) h.normal.push_back(parse_integer(cell));
                        cell.clear();
                    } else {
                        cell += c;
                    }
                }
                h.level = parse_rational(ce_level);
                cert = well_spaced_check(tc, h);
            } else {
                throw ParseError("unknown certificate rule '" + ce_rule + "'");
            }
            emit(certificate_to_json(cert), ce_out);
            return cert.certified() ? kExitPass : kExitFail;
        }

        if (pu->parsed()) {
            TropicalComplex tc = complex_from_json(load_json_file(pu_complex));
            LatticeMap m = parse_matrix(pu_matrix, parse_integer(pu_delta));
            PushforwardReport report;
            TropicalComplex image = pushforward(tc, m, &report);
            json j = complex_to_json(image);
            j["collapsed"] = report.collapsed;
            emit(j, pu_out);
            return kExitPass;
        }

        if (sc->parsed()) {
            if (sc_list) {
                for (const auto& name : scenario_names()) std::cout << name << "\n";
                return kExitPass;
            }
            std::vector<ScenarioResult> results;
            if (sc_all)
                results = run_all_scenarios();
            else if (!sc_name.empty())
                results.push_back(run_scenario(sc_name));
            else
                throw ParseError("pass --all, --list, or --name");
            bool all_pass = true;
            for (const auto& r : results) {
                std::cout << "=== " << r.name << (r.pass ? "  [PASS]" : "  [FAIL]") << "  ("
                          << static_cast<int>(r.millis) << " ms)\n";
                for (const auto& line : r.lines) std::cout << "    " << line << "\n";
                all_pass = all_pass && r.pass;
            }
            std::cout << (all_pass ? "all scenarios pass" : "scenario failures above") << "\n";
            return all_pass ? kExitPass : kExitFail;
        }

        if (re->parsed()) {
            std::string svg;
            if (!re_complex.empty())
                svg = render_complex_svg(complex_from_json(load_json_file(re_complex)));
            else if (!re_skeleton.empty())
                svg = render_skeleton_svg(skeleton_from_json(load_json_file(re_skeleton)));
            else
                throw ParseError("pass --complex or --skeleton");
            save_text_file(re_out, svg);
            return kExitPass;
        }
    } catch (const UnknownScenario& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
