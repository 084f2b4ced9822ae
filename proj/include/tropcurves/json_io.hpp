#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "tropcurves/certify.hpp"
#include "tropcurves/elimination.hpp"
#include "tropcurves/newton.hpp"
#include "tropcurves/potential.hpp"
#include "tropcurves/skeleton.hpp"
#include "tropcurves/tropicalize.hpp"

namespace tropcurves {

using nlohmann::json;

// Schemas are versioned; rationals are serialized as "num/den" strings and
// integers as decimal strings.

json skeleton_to_json(const Skeleton& s);                    // "skeleton.v1"
Skeleton skeleton_from_json(const json& j);

json divisor_to_json(const Divisor& d);                      // "divisor.v1"
Divisor divisor_from_json(const json& j);

/// "punctures.v1": series literals keyed by puncture name, plus an
/// "infinity" flag; input format for building line skeleta.
struct PunctureSet {
    std::vector<std::pair<std::string, PuiseuxElement>> finite;
    bool include_infinity = false;
};
PunctureSet punctures_from_json(const json& j);
json punctures_to_json(const PunctureSet& ps);

json plfunction_to_json(const PLFunction& f);                // "plfunction.v1"
PLFunction plfunction_from_json(const json& j, std::shared_ptr<const Skeleton> skeleton);

json complex_to_json(const TropicalComplex& tc);             // "tropcomplex.v1"
TropicalComplex complex_from_json(const json& j);

json troppoly_to_json(const TropicalPolynomial& tp);         // "troppoly.v1"
TropicalPolynomial troppoly_from_json(const json& j);

json certificate_to_json(const Certificate& c);              // "certificate.v1"

json polygon_to_json(const LatticePolygon& p);               // "polygon.v1"

json expansion_report_to_json(const ExpansionReport& r);

json balance_report_to_json(const TropicalComplex& tc, const BalanceReport& r);

json load_json_file(const std::string& path);

/// Writes pretty-printed JSON; relative paths resolve against the
/// TROPCURVES_OUTDIR environment variable when it is set.
void save_json_file(const std::string& path, const json& j);
void save_text_file(const std::string& path, const std::string& text);
std::string resolve_output_path(const std::string& path);

} // namespace tropcurves
