#pragma once

#include <string>
#include <vector>

#include "mockfan/fan.hpp"

namespace mockfan {

/// One monomial unit of a chart: the exponent omega_i in M' + Z^v (the last
/// coordinate is delta, dual to t) and its t-weight kappa_i. The exponent is
/// stored without the weight; the chart scale l adds l * kappa_i * delta.
struct LiftedExponent {
  std::string id;
  LatticeVector exponent;
  Integer kappa = 0;
};

struct MockPolytopeChart {
  std::string label;
  /// Rank of M' + Z^v. Points v live in the dual N' + Z, with t last.
  Index ambient_dual_rank = 0;
  /// Generators of the dual of the support sigma^pi.
  std::vector<LatticeVector> sigma_dual_generators;
  std::vector<LiftedExponent> items;
  Integer scale = 1;

  /// Throws InvalidInput on empty items, duplicate ids, rank mismatch or a
  /// non-positive scale.
  void validate() const;

  /// omega_i + l * kappa_i * delta.
  LatticeVector effective_exponent(std::size_t i) const;
  /// sigma^pi, the cone on which the chart is defined.
  Cone support() const;
  /// True iff <g, v> >= 0 for every sigma-dual generator g.
  template <typename Derived>
  bool in_support(const Eigen::MatrixBase<Derived>& v) const {
    for (const auto& g : sigma_dual_generators)
      if (pair(g, v) < 0) return false;
    return true;
  }
};

/// Lifted cone D in M' + Z^v + Z generated by (g, 0) for the sigma-dual
/// generators and (omega_i + l kappa_i delta, 1) for the items.
Cone build_D(const MockPolytopeChart& chart);

struct SubdivisionResult {
  MockPolytopeChart chart;
  Cone D;
  Cone C;  // dual of D, in N' + Z + Z
  /// Faces of C that do not contain the apex (0, ..., 0, 1).
  std::vector<FaceIndex> faces_avoiding;
  Fan fan;  // projections of those faces
  /// Indexed like fan.cones(): sorted item indices attaining the minimum.
  std::vector<std::vector<std::size_t>> active;
};

/// C = D^v, its faces avoiding the apex, projected by dropping the lift
/// coordinate. Throws InvalidInput if C is not strongly convex and
/// Inconsistency("subdivision inconsistency") if the projection fails the
/// fan checks.
SubdivisionResult subdivide_chart(const MockPolytopeChart& chart);

/// min_i <v, omega_i + l kappa_i delta>. Throws InvalidInput("outside chart
/// support") if v is not in sigma^pi.
Rational val_min(const MockPolytopeChart& chart, const RationalVector& v);
Integer val_min(const MockPolytopeChart& chart, const LatticeVector& v);

/// Items attaining val_min at v (brute force).
std::vector<std::size_t> argmin_items(const MockPolytopeChart& chart, const RationalVector& v);
std::vector<std::size_t> argmin_items(const MockPolytopeChart& chart, const LatticeVector& v);

/// Active set of a cone of result.fan, as item indices.
const std::vector<std::size_t>& active_set(const SubdivisionResult& result, const Cone& cone);
std::vector<std::string> active_ids(const SubdivisionResult& result, const Cone& cone);

/// Number of distinct exponents omega_i over the active set.
std::size_t effective_dimension(const SubdivisionResult& result, const Cone& cone);

struct GluedFan {
  Fan fan;
  /// Indexed like fan.cones(): sorted item ids.
  std::vector<std::vector<std::string>> active;
};

/// Union of the chart fans. Throws InvalidInput("charts do not glue") if the
/// union is not a fan or two charts disagree on a shared cone's active set.
GluedFan glue_charts(const std::vector<SubdivisionResult>& results);

}  // namespace mockfan
