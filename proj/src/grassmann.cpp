#include "mockfan/grassmann.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <sstream>

namespace mockfan::grassmann {
namespace {

void compositions(int parts, int total, Multidegree& cur, std::vector<Multidegree>& out) {
  const int k = static_cast<int>(cur.size());
  if (k == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = 0; a <= total; ++a) {
    cur.push_back(a);
    compositions(parts, total - a, cur, out);
    cur.pop_back();
  }
}

std::vector<std::string> ids_of(const IndexData& idx, const std::vector<Multidegree>& s) {
  std::vector<std::string> ids;
  for (const auto& a : s) ids.push_back(multidegree_id(idx, a));
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::string> merge(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

void GrassmannSpec::validate() const {
  if (n < 4) throw InvalidInput("n must be at least 4");
  if (d < 2) throw InvalidInput("d must be at least 2");
  if (l < 1) throw InvalidInput("l must be a positive integer");
}

IndexData::IndexData(int n_) : n(n_) {
  if (n < 4) throw InvalidInput("n must be at least 4");
  for (int i = 0; i <= n - 3; ++i)
    for (int j = i; j <= n - 3; ++j) I.emplace_back(i, j);
  for (int i = 0; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) {
      std::size_t pos = J.size();
      J.emplace_back(i, j);
      if (i == 0 && j == 1) J0.push_back(pos);
      else if (i < 2) J1.push_back(pos);
      else J2.push_back(pos);
    }
}

Index IndexData::omega_coord(int i, int j) const {
  auto it = std::find(I.begin(), I.end(), IndexPair{i, j});
  if (it == I.end()) throw InvalidInput("index pair outside I");
  return static_cast<Index>(it - I.begin()) - 1;
}

std::size_t IndexData::j_position(int i, int j) const {
  auto it = std::find(J.begin(), J.end(), IndexPair{i, j});
  if (it == J.end()) throw InvalidInput("index pair outside J");
  return static_cast<std::size_t>(it - J.begin());
}

LatticeVector varpi(const IndexData& idx, int i, int j) {
  idx.j_position(i, j);
  LatticeVector w = zero_vector(idx.rank());
  auto omega = [&](int a, int b) {
    Index k = idx.omega_coord(a, b);
    if (k >= 0) w(k) += 1;
  };
  auto eta = [&](int k) { w(idx.eta_coord(k)) += 1; };
  if (i == 0 && j == 1) return w;
  if (i == 0 && j == 2) {
    eta(-1);
    eta(0);
  } else if (i == 0) {
    eta(-1);
    eta(j - 2);
    omega(j - 2, j - 2);
  } else if (i == 1) {
    eta(j - 2);
  } else {
    eta(-1);
    eta(i - 2);
    eta(j - 2);
    omega(i - 2, j - 2);
  }
  return w;
}

LatticeVector varpi(const IndexData& idx, const Multidegree& alpha) {
  if (alpha.size() != idx.J.size()) throw InvalidInput("multidegree length must be |J|");
  LatticeVector w = zero_vector(idx.rank());
  for (std::size_t k = 0; k < alpha.size(); ++k)
    if (alpha[k] != 0) w += Integer(alpha[k]) * varpi(idx, idx.J[k].first, idx.J[k].second);
  return w;
}

std::array<int, 3> weight_split(const IndexData& idx, const Multidegree& alpha) {
  if (alpha.size() != idx.J.size()) throw InvalidInput("multidegree length must be |J|");
  std::array<int, 3> c{0, 0, 0};
  for (std::size_t k : idx.J0) c[0] += alpha[k];
  for (std::size_t k : idx.J1) c[1] += alpha[k];
  for (std::size_t k : idx.J2) c[2] += alpha[k];
  return c;
}

int kappa(const GrassmannSpec& spec, const IndexData& idx, const Multidegree& alpha) {
  if (std::accumulate(alpha.begin(), alpha.end(), 0) != spec.d ||
      std::any_of(alpha.begin(), alpha.end(), [](int a) { return a < 0; }))
    throw InvalidInput("multidegree is not in S_{J,d}");
  const int c1 = weight_split(idx, alpha)[1];
  return c1 == spec.d ? 0 : 2 * (spec.d - c1) - 1;
}

std::vector<Multidegree> enumerate_S(const GrassmannSpec& spec) {
  spec.validate();
  IndexData idx(spec.n);
  std::vector<Multidegree> out;
  Multidegree cur;
  compositions(static_cast<int>(idx.J.size()), spec.d, cur, out);
  return out;
}

std::vector<Multidegree> stratify_S(const GrassmannSpec& spec, int d0, int d1, int d2) {
  if (d0 < 0 || d1 < 0 || d2 < 0 || d0 + d1 + d2 != spec.d)
    throw InvalidInput("stratum weights must be nonnegative and sum to d");
  IndexData idx(spec.n);
  std::vector<Multidegree> out;
  for (auto& a : enumerate_S(spec))
    if (weight_split(idx, a) == std::array<int, 3>{d0, d1, d2}) out.push_back(std::move(a));
  return out;
}

std::string multidegree_id(const IndexData& idx, const Multidegree& alpha) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << 'W' << idx.J[k].first << ',' << idx.J[k].second;
    if (alpha[k] > 1) out << '^' << alpha[k];
  }
  return first ? std::string("1") : out.str();
}

MockPolytopeChart zero_chart(const GrassmannSpec& spec) {
  spec.validate();
  IndexData idx(spec.n);
  MockPolytopeChart chart;
  chart.label = "zero";
  chart.ambient_dual_rank = idx.rank();
  chart.scale = spec.l;
  for (Index k = 0; k < idx.n_rank(); ++k) {
    chart.sigma_dual_generators.push_back(unit_vector(idx.rank(), k));
    chart.sigma_dual_generators.push_back(-unit_vector(idx.rank(), k));
  }
  chart.sigma_dual_generators.push_back(unit_vector(idx.rank(), idx.delta_coord()));
  for (const auto& a : enumerate_S(spec))
    chart.items.push_back({multidegree_id(idx, a), varpi(idx, a), kappa(spec, idx, a)});
  return chart;
}

std::vector<ExpectedCone> expected_bounded_cones(const GrassmannSpec& spec) {
  spec.validate();
  IndexData idx(spec.n);
  const int d = spec.d;
  auto ray = [&](int c) {
    LatticeVector v = zero_vector(idx.rank());
    for (int j = 0; j <= spec.n - 3; ++j) v(idx.eta_coord(j)) = c * spec.l;
    v(idx.delta_coord()) = 1;
    return v;
  };
  auto S = [&](int a, int b, int c) { return ids_of(idx, stratify_S(spec, a, b, c)); };
  std::vector<std::string> s0, s3;
  for (int i = 1; i <= d; ++i) {
    s0 = merge(s0, S(0, d - i, i));
    s3 = merge(s3, S(i, d - i, 0));
  }
  const LatticeVector t0 = ray(-2), t1 = ray(-1), t2 = ray(1), t3 = ray(2);
  const Index r = idx.rank();
  return {
      {"tau0", Cone::from_generators(r, {t0}), s0},
      {"tau1", Cone::from_generators(r, {t1}), merge(S(0, d - 1, 1), S(0, d, 0))},
      {"tau2", Cone::from_generators(r, {t2}), merge(S(0, d, 0), S(1, d - 1, 0))},
      {"tau3", Cone::from_generators(r, {t3}), s3},
      {"sigma0", Cone::from_generators(r, {t0, t1}), S(0, d - 1, 1)},
      {"sigma1", Cone::from_generators(r, {t1, t2}), S(0, d, 0)},
      {"sigma2", Cone::from_generators(r, {t2, t3}), S(1, d - 1, 0)},
  };
}

std::size_t Report::cones_found() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const ConeCheck& c) { return c.found; }));
}

std::size_t Report::active_sets_matched() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const ConeCheck& c) { return c.active_match; }));
}

bool Report::passed() const {
  return cones_found() == checks.size() && active_sets_matched() == checks.size() &&
         unexpected_bounded.empty();
}

std::string Report::render() const {
  std::ostringstream out;
  out << "Gr(2," << spec.n << ") degree " << spec.d << " scale " << spec.l << ": "
      << cones_found() << '/' << checks.size() << " cones, " << active_sets_matched() << '/'
      << checks.size() << " active sets";
  if (!unexpected_bounded.empty())
    out << ", " << unexpected_bounded.size() << " unexpected bounded cones";
  out << '\n';
  for (const auto& c : checks) {
    out << "  " << c.name << ": " << (c.found ? "found" : "NOT FOUND");
    if (c.found) out << ", active set " << (c.active_match ? "matches" : "differs");
    if (!c.missing_ids.empty()) out << ", missing " << c.missing_ids.size();
    if (!c.unexpected_ids.empty()) out << ", extra " << c.unexpected_ids.size();
    out << '\n';
  }
  for (const auto& c : unexpected_bounded) {
    out << "  unexpected bounded cone:";
    for (const auto& r : c.rays()) out << " (" << r.transpose() << ")";
    out << '\n';
  }
  out << "  fan has " << fan_size << " cones\n";
  return out.str();
}

Report verify(const GrassmannSpec& spec, const SubdivisionResult& result) {
  Report rep;
  rep.spec = spec;
  rep.fan_size = result.fan.size();
  const std::vector<ExpectedCone> expected = expected_bounded_cones(spec);
  for (const auto& e : expected) {
    ConeCheck check;
    check.name = e.name;
    check.found = result.fan.contains(e.cone);
    if (check.found) {
      std::vector<std::string> got = active_ids(result, e.cone);
      std::set_difference(e.active_ids.begin(), e.active_ids.end(), got.begin(), got.end(),
                          std::back_inserter(check.missing_ids));
      std::set_difference(got.begin(), got.end(), e.active_ids.begin(), e.active_ids.end(),
                          std::back_inserter(check.unexpected_ids));
      check.active_match = check.missing_ids.empty() && check.unexpected_ids.empty();
    }
    rep.checks.push_back(std::move(check));
  }
  for (const auto& c : bounded_cones(result.fan))
    if (std::none_of(expected.begin(), expected.end(),
                     [&](const ExpectedCone& e) { return e.cone == c; }))
      rep.unexpected_bounded.push_back(c);
  return rep;
}

Report verify(const GrassmannSpec& spec) { return verify(spec, subdivide_chart(zero_chart(spec))); }

FormalSum vol_expression(const GrassmannSpec& spec, const SubdivisionResult& result) {
  std::map<std::string, std::vector<ClassLabel>> labels = {
      {"tau1", {PointClass{}}},
      {"tau2", {PointClass{}}},
      {"sigma1", {HypersurfaceClass{2 * spec.n - 5, spec.d}}},
  };
  std::map<std::size_t, StratumAnnotation> annotations;
  for (const auto& e : expected_bounded_cones(spec)) {
    auto k = result.fan.index_of(e.cone);
    if (!k) continue;
    StratumAnnotation a;
    a.cone_id = e.name;
    auto it = labels.find(e.name);
    a.labels = it != labels.end() ? it->second
                                  : std::vector<ClassLabel>{SymbolicClass{"E(" + e.name + ")"}};
    a.component_count = static_cast<int>(a.labels.size());
    annotations.emplace(*k, std::move(a));
  }
  return vol_skeleton(result.fan, annotations, [&](std::size_t k) {
    return effective_dimension(result, result.fan.cones()[k]) >= 2;
  });
}

FormalSum vol_expression(const GrassmannSpec& spec) {
  return vol_expression(spec, subdivide_chart(zero_chart(spec)));
}

}  // namespace mockfan::grassmann
