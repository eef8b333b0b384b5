#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mockfan/subdivision.hpp"
#include "mockfan/volume.hpp"

namespace mockfan::grassmann {

/// Degree-d hypersurfaces of Gr(2, n) at weight scale l.
struct GrassmannSpec {
  int n = 5;
  int d = 2;
  int l = 1;
  void validate() const;  // n >= 4, d >= 2, l >= 1
};

using IndexPair = std::pair<int, int>;
/// Multidegree over J, in the order of IndexData::J.
using Multidegree = std::vector<int>;

/// Index sets and the coordinate layout.
///
/// M + M^dagger + Z^v (and dually N + N^dagger + Z) uses the coordinates
///   [ omega_{ij} - omega_{00} for (i, j) in I minus (0, 0), lexicographic
///   | eta_{-1}, ..., eta_{n-3}
///   | delta ].
struct IndexData {
  int n = 0;
  std::vector<IndexPair> I;  // 0 <= i <= j <= n - 3
  std::vector<IndexPair> J;  // 0 <= i < j <= n - 1
  std::vector<std::size_t> J0, J1, J2;  // positions in J

  explicit IndexData(int n);

  Index n_rank() const { return static_cast<Index>(I.size()) - 1; }
  Index dagger_rank() const { return n - 1; }
  Index rank() const { return n_rank() + dagger_rank() + 1; }
  /// Coordinate of omega_{ij} - omega_{00}; -1 for (0, 0).
  Index omega_coord(int i, int j) const;
  Index eta_coord(int j) const { return n_rank() + (j + 1); }
  Index delta_coord() const { return rank() - 1; }
  std::size_t j_position(int i, int j) const;
};

/// varpi_{ij} in M + M^dagger (delta coordinate 0).
LatticeVector varpi(const IndexData& idx, int i, int j);
LatticeVector varpi(const IndexData& idx, const Multidegree& alpha);

/// (c0, c1, c2): the weight of alpha on J0, J1, J2.
std::array<int, 3> weight_split(const IndexData& idx, const Multidegree& alpha);
/// 0 if c1 = d, else 2 (d - c1) - 1. Throws if alpha does not have degree d.
int kappa(const GrassmannSpec& spec, const IndexData& idx, const Multidegree& alpha);

/// S_{J,d} in increasing lexicographic order.
std::vector<Multidegree> enumerate_S(const GrassmannSpec& spec);
std::vector<Multidegree> stratify_S(const GrassmannSpec& spec, int d0, int d1, int d2);

/// Item id of a multidegree, e.g. "W0,1^2*W1,3".
std::string multidegree_id(const IndexData& idx, const Multidegree& alpha);

/// The chart over sigma = {0} x [0, inf): sigma-dual generators +-M basis and
/// +delta, one item per alpha in S_{J,d}.
MockPolytopeChart zero_chart(const GrassmannSpec& spec);

struct ExpectedCone {
  std::string name;  // tau0..tau3, sigma0..sigma2
  Cone cone;
  std::vector<std::string> active_ids;  // sorted
};
std::vector<ExpectedCone> expected_bounded_cones(const GrassmannSpec& spec);

struct ConeCheck {
  std::string name;
  bool found = false;
  bool active_match = false;
  std::vector<std::string> missing_ids;     // expected, not active
  std::vector<std::string> unexpected_ids;  // active, not expected
};

struct Report {
  GrassmannSpec spec;
  std::vector<ConeCheck> checks;
  std::vector<Cone> unexpected_bounded;  // bounded cones not among the 7
  std::size_t fan_size = 0;
  std::size_t cones_found() const;
  std::size_t active_sets_matched() const;
  bool passed() const;
  /// "7/7 cones, 7/7 active sets" plus one line per cone.
  std::string render() const;
};

Report verify(const GrassmannSpec& spec, const SubdivisionResult& result);
Report verify(const GrassmannSpec& spec);

/// Annotations: tau1, tau2 -> pt; sigma1 -> Hyp(P^{2n-5}, d); the others get
/// symbolic labels E(<name>). Sums over bounded cones with at least two
/// distinct active monomials.
FormalSum vol_expression(const GrassmannSpec& spec, const SubdivisionResult& result);
FormalSum vol_expression(const GrassmannSpec& spec);

}  // namespace mockfan::grassmann
