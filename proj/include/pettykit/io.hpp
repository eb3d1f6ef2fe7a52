#pragma once

#include <json.hpp>
#include <string>

#include "pettykit/bodies.hpp"
#include "pettykit/measures.hpp"
#include "pettykit/rearrange.hpp"

namespace pettykit {

using json = nlohmann::json;

/// Body JSON: {"dim": d, "vertices": [[...], ...]}. The reader hulls the
/// points and rejects non-full-dimensional input.
json body_to_json(const Polytope& P);
Polytope body_from_json(const json& j);

json estimate_to_json(const Estimate& e);

/// Measure config block {"kind": ..., "dim": ..., "beta"?: ...}.
json measure_to_json(const RadialMeasure& M);
RadialMeasure measure_from_json(const json& j);

/// Density file {"dim", "box": {"lo", "hi"}, "resolution", "values"}.
json density_to_json(const GridDensity& g);
GridDensity density_from_json(const json& j);

/// Catalog dispatch: body by name + parameters. Throws UnknownName.
Polytope make_standard(const std::string& name, const json& params);
QBody make_standard_q(const std::string& name, const json& params);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// One "x,y[,z]" row per point.
std::string points_to_csv(const std::vector<Vec>& points);

}  // namespace pettykit
