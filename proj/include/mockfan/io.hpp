#pragma once

// JSON file formats. Every document carries a "schema" tag; integers are
// JSON numbers when they fit in 64 bits and decimal strings otherwise.
//
//   mockfan.cone/1         {rank, rays, lineality}
//   mockfan.fan/1          {rank, has_t, rays, cones: [{rays: [ray index], lineality}]}
//   mockfan.chart/1        {label, ambient_dual_rank, scale, sigma_dual_generators,
//                           items: [{id, exponent, kappa}]}
//   mockfan.subdivision/1  {charts, fan, active: [[item id]], effective_dimension}
//   mockfan.annotations/1  {annotations: [{cone, cone_id, component_count, labels}]}
//   mockfan.formal_sum/1   {terms: [{label, coefficient}], text}
//
// Class labels are {"kind": "point"}, {"kind": "symbolic", "name": ...} or
// {"kind": "hypersurface", "projective_dim": ..., "degree": ...}.

#include <map>
#include <string>

#include <json.hpp>

#include "mockfan/subdivision.hpp"
#include "mockfan/volume.hpp"

namespace mockfan::io {

using json = nlohmann::ordered_json;

json to_json(const Integer& x);
Integer integer_from_json(const json& j);
json to_json(const LatticeVector& v);
LatticeVector vector_from_json(const json& j, Index rank);

json to_json(const Cone& c);
Cone cone_from_json(const json& j);

json to_json(const Fan& f);
/// Rebuilds the fan; with `check` set the fan condition is verified.
Fan fan_from_json(const json& j, bool check = true);

json to_json(const MockPolytopeChart& chart);
MockPolytopeChart chart_from_json(const json& j);

json to_json(const SubdivisionResult& r);
json to_json(const GluedFan& g, const std::vector<std::string>& chart_labels);

json to_json(const ClassLabel& label);
ClassLabel label_from_json(const json& j);
json to_json(const FormalSum& s);
FormalSum formal_sum_from_json(const json& j);
std::map<std::size_t, StratumAnnotation> annotations_from_json(const json& j);
json to_json(const std::map<std::size_t, StratumAnnotation>& annotations);

/// Schema tag of a document; throws InvalidInput if it is missing.
std::string schema_of(const json& j);
/// Throws InvalidInput if j's schema tag differs from `expected`.
void expect_schema(const json& j, const std::string& expected);

/// Canonical text: two-space indentation and a trailing newline.
std::string dump(const json& j);
json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

}  // namespace mockfan::io
