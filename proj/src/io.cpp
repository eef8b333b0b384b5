#include "mockfan/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace mockfan::io {
namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw InvalidInput(std::string("missing field '") + name + "'", "E_SCHEMA");
  return j.at(name);
}

const json& array_field(const json& j, const char* name) {
  const json& a = field(j, name);
  if (!a.is_array()) throw InvalidInput(std::string("field '") + name + "' must be an array", "E_SCHEMA");
  return a;
}

Index rank_field(const json& j, const char* name) {
  Integer r = integer_from_json(field(j, name));
  if (r < 0 || r > 1 << 20) throw InvalidInput(std::string("bad value for '") + name + "'", "E_SCHEMA");
  return static_cast<Index>(r);
}

std::vector<LatticeVector> vectors_from_json(const json& a, Index rank) {
  if (!a.is_array()) throw InvalidInput("expected a list of vectors", "E_SCHEMA");
  std::vector<LatticeVector> out;
  for (const auto& v : a) out.push_back(vector_from_json(v, rank));
  return out;
}

json vectors_to_json(const std::vector<LatticeVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

}  // namespace

json to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return json(static_cast<long long>(x));
  return json(x.str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                          [](char c) { return c >= '0' && c <= '9'; }))
      throw InvalidInput("'" + s + "' is not an integer", "E_SCHEMA");
    return Integer(s);
  }
  throw InvalidInput("expected an integer, got " + j.dump(), "E_SCHEMA");
}

json to_json(const LatticeVector& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
  return a;
}

LatticeVector vector_from_json(const json& j, Index rank) {
  if (!j.is_array()) throw InvalidInput("expected a vector, got " + j.dump(), "E_SCHEMA");
  if (static_cast<Index>(j.size()) != rank)
    throw InvalidInput("vector " + j.dump() + " does not have rank " + std::to_string(rank));
  LatticeVector v(rank);
  for (Index i = 0; i < rank; ++i) v(i) = integer_from_json(j[static_cast<std::size_t>(i)]);
  return v;
}

std::string schema_of(const json& j) {
  const json& s = field(j, "schema");
  if (!s.is_string()) throw InvalidInput("schema tag must be a string", "E_SCHEMA");
  return s.get<std::string>();
}

void expect_schema(const json& j, const std::string& expected) {
  const std::string got = schema_of(j);
  if (got != expected)
    throw InvalidInput("expected schema " + expected + ", got " + got, "E_SCHEMA");
}

json to_json(const Cone& c) {
  json j;
  j["schema"] = "mockfan.cone/1";
  j["rank"] = c.rank();
  j["rays"] = vectors_to_json(c.rays());
  j["lineality"] = vectors_to_json(c.lineality());
  return j;
}

Cone cone_from_json(const json& j) {
  expect_schema(j, "mockfan.cone/1");
  const Index rank = rank_field(j, "rank");
  std::vector<LatticeVector> lineality;
  if (j.contains("lineality")) lineality = vectors_from_json(j.at("lineality"), rank);
  return Cone::from_generators(rank, vectors_from_json(array_field(j, "rays"), rank), lineality);
}

json to_json(const Fan& f) {
  std::vector<LatticeVector> rays;
  for (const auto& c : f.cones()) rays.insert(rays.end(), c.rays().begin(), c.rays().end());
  auto less = [](const LatticeVector& a, const LatticeVector& b) { return lex_less(a, b); };
  std::sort(rays.begin(), rays.end(), less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

  json cones = json::array();
  for (const auto& c : f.cones()) {
    json idx = json::array();
    for (const auto& r : c.rays())
      idx.push_back(std::lower_bound(rays.begin(), rays.end(), r, less) - rays.begin());
    cones.push_back({{"rays", idx}, {"lineality", vectors_to_json(c.lineality())}});
  }
  json j;
  j["schema"] = "mockfan.fan/1";
  j["rank"] = f.rank();
  j["has_t"] = f.has_t_coordinate();
  j["rays"] = vectors_to_json(rays);
  j["cones"] = std::move(cones);
  return j;
}

Fan fan_from_json(const json& j, bool check) {
  expect_schema(j, "mockfan.fan/1");
  const Index rank = rank_field(j, "rank");
  const json& has_t = field(j, "has_t");
  if (!has_t.is_boolean()) throw InvalidInput("has_t must be a boolean", "E_SCHEMA");
  const std::vector<LatticeVector> rays = vectors_from_json(array_field(j, "rays"), rank);
  std::vector<Cone> cones;
  for (const auto& c : array_field(j, "cones")) {
    std::vector<LatticeVector> gens;
    for (const auto& k : array_field(c, "rays")) {
      Integer i = integer_from_json(k);
      if (i < 0 || i >= static_cast<long long>(rays.size()))
        throw InvalidInput("ray index " + i.str() + " out of range", "E_SCHEMA");
      gens.push_back(rays[static_cast<std::size_t>(i)]);
    }
    std::vector<LatticeVector> lin;
    if (c.contains("lineality")) lin = vectors_from_json(c.at("lineality"), rank);
    cones.push_back(Cone::from_generators(rank, gens, lin));
  }
  if (check) return Fan::from_cones(rank, cones, has_t.get<bool>());
  return Fan::trusted(rank, std::move(cones), has_t.get<bool>());
}

json to_json(const MockPolytopeChart& chart) {
  json items = json::array();
  for (const auto& it : chart.items)
    items.push_back({{"id", it.id}, {"exponent", to_json(it.exponent)}, {"kappa", to_json(it.kappa)}});
  json j;
  j["schema"] = "mockfan.chart/1";
  j["label"] = chart.label;
  j["ambient_dual_rank"] = chart.ambient_dual_rank;
  j["scale"] = to_json(chart.scale);
  j["sigma_dual_generators"] = vectors_to_json(chart.sigma_dual_generators);
  j["items"] = std::move(items);
  return j;
}

MockPolytopeChart chart_from_json(const json& j) {
  expect_schema(j, "mockfan.chart/1");
  MockPolytopeChart chart;
  if (j.contains("label")) chart.label = j.at("label").get<std::string>();
  chart.ambient_dual_rank = rank_field(j, "ambient_dual_rank");
  if (j.contains("scale")) chart.scale = integer_from_json(j.at("scale"));
  chart.sigma_dual_generators =
      vectors_from_json(array_field(j, "sigma_dual_generators"), chart.ambient_dual_rank);
  for (const auto& it : array_field(j, "items")) {
    const json& id = field(it, "id");
    LiftedExponent e;
    e.id = id.is_string() ? id.get<std::string>() : id.dump();
    e.exponent = vector_from_json(field(it, "exponent"), chart.ambient_dual_rank);
    if (it.contains("kappa")) e.kappa = integer_from_json(it.at("kappa"));
    chart.items.push_back(std::move(e));
  }
  chart.validate();
  return chart;
}

json to_json(const SubdivisionResult& r) {
  json active = json::array(), dims = json::array();
  for (const auto& c : r.fan.cones()) {
    active.push_back(active_ids(r, c));
    dims.push_back(effective_dimension(r, c));
  }
  json j;
  j["schema"] = "mockfan.subdivision/1";
  j["charts"] = json::array({r.chart.label});
  j["fan"] = to_json(r.fan);
  j["active"] = std::move(active);
  j["effective_dimension"] = std::move(dims);
  return j;
}

json to_json(const GluedFan& g, const std::vector<std::string>& chart_labels) {
  json j;
  j["schema"] = "mockfan.subdivision/1";
  j["charts"] = chart_labels;
  j["fan"] = to_json(g.fan);
  j["active"] = g.active;
  return j;
}

json to_json(const ClassLabel& label) {
  struct {
    json operator()(const SymbolicClass& s) const { return {{"kind", "symbolic"}, {"name", s.name}}; }
    json operator()(const PointClass&) const { return {{"kind", "point"}}; }
    json operator()(const HypersurfaceClass& h) const {
      return {{"kind", "hypersurface"}, {"projective_dim", h.projective_dim}, {"degree", h.degree}};
    }
  } visit;
  return std::visit(visit, label);
}

ClassLabel label_from_json(const json& j) {
  const json& kind = field(j, "kind");
  if (kind == "point") return PointClass{};
  if (kind == "symbolic") return SymbolicClass{field(j, "name").get<std::string>()};
  if (kind == "hypersurface")
    return HypersurfaceClass{static_cast<int>(integer_from_json(field(j, "projective_dim"))),
                             static_cast<int>(integer_from_json(field(j, "degree")))};
  throw InvalidInput("unknown class label kind " + kind.dump(), "E_SCHEMA");
}

json to_json(const FormalSum& s) {
  json terms = json::array();
  for (const auto& [label, c] : s.terms())
    terms.push_back({{"label", to_json(label)}, {"coefficient", to_json(c)}});
  json j;
  j["schema"] = "mockfan.formal_sum/1";
  j["terms"] = std::move(terms);
  j["text"] = render(s);
  return j;
}

FormalSum formal_sum_from_json(const json& j) {
  expect_schema(j, "mockfan.formal_sum/1");
  FormalSum s;
  for (const auto& t : array_field(j, "terms"))
    s += FormalSum(label_from_json(field(t, "label")), integer_from_json(field(t, "coefficient")));
  return s;
}

std::map<std::size_t, StratumAnnotation> annotations_from_json(const json& j) {
  expect_schema(j, "mockfan.annotations/1");
  std::map<std::size_t, StratumAnnotation> out;
  for (const auto& a : array_field(j, "annotations")) {
    StratumAnnotation s;
    const std::size_t cone = static_cast<std::size_t>(rank_field(a, "cone"));
    s.cone_id = a.contains("cone_id") ? a.at("cone_id").get<std::string>() : "c" + std::to_string(cone);
    for (const auto& l : array_field(a, "labels")) s.labels.push_back(label_from_json(l));
    s.component_count = a.contains("component_count")
                            ? static_cast<int>(integer_from_json(a.at("component_count")))
                            : static_cast<int>(s.labels.size());
    if (!out.emplace(cone, std::move(s)).second)
      throw InvalidInput("cone " + std::to_string(cone) + " annotated twice", "E_SCHEMA");
  }
  return out;
}

json to_json(const std::map<std::size_t, StratumAnnotation>& annotations) {
  json list = json::array();
  for (const auto& [cone, a] : annotations) {
    json labels = json::array();
    for (const auto& l : a.labels) labels.push_back(to_json(l));
    list.push_back({{"cone", cone},
                    {"cone_id", a.cone_id},
                    {"component_count", a.component_count},
                    {"labels", labels}});
  }
  json j;
  j["schema"] = "mockfan.annotations/1";
  j["annotations"] = std::move(list);
  return j;
}

namespace {

// Like json::dump(2), but arrays of scalars stay on one line.
void write_json(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out << ",\n";
      first = false;
      out << pad << json(it.key()).dump() << ": ";
      write_json(out, it.value(), indent + 2);
    }
    out << '\n' << std::string(static_cast<std::size_t>(indent), ' ') << '}';
  } else if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
    if (flat) {
      out << '[';
      for (std::size_t k = 0; k < j.size(); ++k) out << (k ? ", " : "") << j[k].dump();
      out << ']';
      return;
    }
    out << "[\n";
    bool first = true;
    for (const auto& x : j) {
      if (!first) out << ",\n";
      first = false;
      out << pad;
      write_json(out, x, indent + 2);
    }
    out << '\n' << std::string(static_cast<std::size_t>(indent), ' ') << ']';
  } else {
    out << j.dump();
  }
}

}  // namespace

std::string dump(const json& j) {
  std::ostringstream out;
  write_json(out, j, 0);
  out << '\n';
  return out.str();
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'", "E_IO");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what(), "E_PARSE");
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'", "E_IO");
  out << dump(j);
}

}  // namespace mockfan::io
