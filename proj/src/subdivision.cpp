#include "mockfan/subdivision.hpp"

#include <algorithm>
#include <set>

namespace mockfan {
namespace {

template <typename Vec, typename Value>
std::vector<std::size_t> minimisers(const MockPolytopeChart& chart, const Vec& v, Value& best) {
  if (v.size() != chart.ambient_dual_rank) throw InvalidInput("point rank does not match chart");
  if (!chart.in_support(v)) throw InvalidInput("outside chart support", "E_SUPPORT");
  std::vector<std::size_t> at;
  for (std::size_t i = 0; i < chart.items.size(); ++i) {
    Value x = pair(chart.effective_exponent(i), v);
    if (at.empty() || x < best) {
      best = x;
      at.assign(1, i);
    } else if (x == best) {
      at.push_back(i);
    }
  }
  return at;
}

LatticeVector drop_last(const LatticeVector& v) { return v.head(v.size() - 1); }

}  // namespace

void MockPolytopeChart::validate() const {
  if (ambient_dual_rank < 1) throw InvalidInput("chart rank must be positive");
  if (items.empty()) throw InvalidInput("chart has no items");
  if (scale < 1) throw InvalidInput("chart scale must be a positive integer");
  for (const auto& g : sigma_dual_generators)
    if (g.size() != ambient_dual_rank) throw InvalidInput("sigma-dual generator rank mismatch");
  std::set<std::string> ids;
  for (const auto& it : items) {
    if (it.exponent.size() != ambient_dual_rank) throw InvalidInput("exponent rank mismatch");
    if (!ids.insert(it.id).second) throw InvalidInput("duplicate item id '" + it.id + "'");
  }
}

LatticeVector MockPolytopeChart::effective_exponent(std::size_t i) const {
  LatticeVector w = items[i].exponent;
  w(ambient_dual_rank - 1) += scale * items[i].kappa;
  return w;
}

Cone MockPolytopeChart::support() const {
  return Cone::from_inequalities(ambient_dual_rank, sigma_dual_generators);
}

Cone build_D(const MockPolytopeChart& chart) {
  chart.validate();
  const Index r = chart.ambient_dual_rank;
  std::vector<LatticeVector> gens;
  for (const auto& g : chart.sigma_dual_generators) {
    LatticeVector x = zero_vector(r + 1);
    x.head(r) = g;
    gens.push_back(std::move(x));
  }
  for (std::size_t i = 0; i < chart.items.size(); ++i) {
    LatticeVector x(r + 1);
    x.head(r) = chart.effective_exponent(i);
    x(r) = 1;
    gens.push_back(std::move(x));
  }
  std::sort(gens.begin(), gens.end(),
            [](const LatticeVector& a, const LatticeVector& b) { return lex_less(a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Cone::from_generators(r + 1, gens);
}

SubdivisionResult subdivide_chart(const MockPolytopeChart& chart) {
  SubdivisionResult res;
  res.chart = chart;
  res.D = build_D(chart);
  res.C = dual_cone(res.D);
  if (!res.C.is_strongly_convex())
    throw InvalidInput("chart data gives a lifted cone C that is not strongly convex");

  const Index r = chart.ambient_dual_rank;
  const Cone& C = res.C;
  // A face contains the apex (0, 1) iff every tight facet vanishes on it.
  auto avoids_apex = [&](const FaceIndex& f) {
    for (std::size_t k = f.tight_facets.find_first(); k != Bitset::npos;
         k = f.tight_facets.find_next(k))
      if (C.facets()[k](r) != 0) return true;
    return false;
  };
  res.faces_avoiding = face_lattice(C, avoids_apex);

  std::vector<LatticeVector> lifted;
  for (std::size_t i = 0; i < chart.items.size(); ++i) {
    LatticeVector x(r + 1);
    x.head(r) = chart.effective_exponent(i);
    x(r) = 1;
    lifted.push_back(std::move(x));
  }

  std::vector<Cone> projected;
  std::vector<std::vector<std::size_t>> active;
  for (const auto& face : res.faces_avoiding) {
    std::vector<LatticeVector> rays, images;
    LatticeVector p = zero_vector(r + 1);
    for (std::size_t k = face.rays.find_first(); k != Bitset::npos; k = face.rays.find_next(k)) {
      rays.push_back(C.rays()[k]);
      p += C.rays()[k];
      if (LatticeVector q = drop_last(C.rays()[k]); !is_zero(q)) images.push_back(primitive(q));
    }
    Cone image = Cone::from_generators(r, images);
    if (!image.is_strongly_convex() || image.dim() != rank(rays, r + 1))
      throw Inconsistency("subdivision inconsistency: projection not injective on a face");
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < lifted.size(); ++i)
      if (pair(p, lifted[i]) == 0) at.push_back(i);
    projected.push_back(std::move(image));
    active.push_back(std::move(at));
  }

  const std::size_t count = projected.size();
  res.fan = Fan::trusted(r, projected, true);
  if (res.fan.size() != count)
    throw Inconsistency("subdivision inconsistency: two faces have the same projection");
  res.active.resize(count);
  for (std::size_t k = 0; k < count; ++k) res.active[*res.fan.index_of(projected[k])] = active[k];
  return res;
}

Rational val_min(const MockPolytopeChart& chart, const RationalVector& v) {
  Rational best = 0;
  minimisers(chart, v, best);
  return best;
}

Integer val_min(const MockPolytopeChart& chart, const LatticeVector& v) {
  Integer best = 0;
  minimisers(chart, v, best);
  return best;
}

std::vector<std::size_t> argmin_items(const MockPolytopeChart& chart, const RationalVector& v) {
  Rational best = 0;
  return minimisers(chart, v, best);
}

std::vector<std::size_t> argmin_items(const MockPolytopeChart& chart, const LatticeVector& v) {
  Integer best = 0;
  return minimisers(chart, v, best);
}

const std::vector<std::size_t>& active_set(const SubdivisionResult& result, const Cone& cone) {
  auto k = result.fan.index_of(cone);
  if (!k) throw InvalidInput("cone is not in the subdivision fan");
  return result.active[*k];
}

std::vector<std::string> active_ids(const SubdivisionResult& result, const Cone& cone) {
  std::vector<std::string> ids;
  for (std::size_t i : active_set(result, cone)) ids.push_back(result.chart.items[i].id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::size_t effective_dimension(const SubdivisionResult& result, const Cone& cone) {
  std::vector<LatticeVector> seen;
  for (std::size_t i : active_set(result, cone)) seen.push_back(result.chart.items[i].exponent);
  std::sort(seen.begin(), seen.end(),
            [](const LatticeVector& a, const LatticeVector& b) { return lex_less(a, b); });
  return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

GluedFan glue_charts(const std::vector<SubdivisionResult>& results) {
  if (results.empty()) throw InvalidInput("no charts to glue");
  const Index r = results.front().fan.rank();
  std::vector<Cone> all;
  for (const auto& res : results) {
    if (res.fan.rank() != r) throw InvalidInput("charts do not glue: rank mismatch", "E_GLUE");
    all.insert(all.end(), res.fan.cones().begin(), res.fan.cones().end());
  }
  GluedFan out;
  out.fan = Fan::trusted(r, std::move(all), true);
  if (!satisfies_fan_condition(out.fan))
    throw InvalidInput("charts do not glue: cones overlap outside common faces", "E_GLUE");

  out.active.resize(out.fan.size());
  std::vector<bool> filled(out.fan.size(), false);
  for (const auto& res : results) {
    for (std::size_t k = 0; k < res.fan.size(); ++k) {
      const Cone& c = res.fan.cones()[k];
      std::size_t g = *out.fan.index_of(c);
      std::vector<std::string> ids = active_ids(res, c);
      if (filled[g] && out.active[g] != ids)
        throw InvalidInput("charts do not glue: active sets disagree on a shared cone", "E_GLUE");
      out.active[g] = std::move(ids);
      filled[g] = true;
    }
  }
  return out;
}

}  // namespace mockfan
