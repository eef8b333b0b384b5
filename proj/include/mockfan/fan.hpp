#pragma once

#include <optional>
#include <vector>

#include "mockfan/cone.hpp"

namespace mockfan {

/// Face-closed collection of cones in one lattice, kept sorted by the Cone
/// order with no duplicates. With `has_t` set the last coordinate is the
/// height t and no cone may have a ray with t < 0.
class Fan {
 public:
  Fan() = default;

  /// Closes `cones` under faces and checks that any two cones meet in a
  /// common face. Throws InvalidInput("not a fan") otherwise.
  static Fan from_cones(Index rank, const std::vector<Cone>& cones, bool has_t);

  /// The faces of one cone. Lineality is allowed here, so a linear support
  /// such as sigma^pi can serve as a refinement target.
  static Fan of_faces(const Cone& cone, bool has_t);

  /// No fan check: the caller guarantees the input is already face-closed
  /// and meets properly. Still sorts, deduplicates and checks t >= 0.
  static Fan trusted(Index rank, std::vector<Cone> cones, bool has_t);

  Index rank() const { return rank_; }
  bool has_t_coordinate() const { return has_t_; }
  const std::vector<Cone>& cones() const { return cones_; }
  std::size_t size() const { return cones_.size(); }

  std::optional<std::size_t> index_of(const Cone& c) const;
  bool contains(const Cone& c) const { return index_of(c).has_value(); }

  /// Cones that are not a proper face of another cone of the fan.
  std::vector<Cone> maximal_cones() const;
  /// Distinct rays of the fan (generators of its 1-dimensional cones).
  std::vector<LatticeVector> rays() const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.rank_ == b.rank_ && a.has_t_ == b.has_t_ && a.cones_ == b.cones_;
  }

 private:
  Index rank_ = 0;
  bool has_t_ = false;
  std::vector<Cone> cones_;
};

/// Any two maximal cones meet in a common face.
bool satisfies_fan_condition(const Fan& f);

inline Fan fan_from_cones(Index rank, const std::vector<Cone>& cones, bool has_t) {
  return Fan::from_cones(rank, cones, has_t);
}
inline Fan fan_of_faces(const Cone& cone, bool has_t) { return Fan::of_faces(cone, has_t); }

/// Last coordinate of v, the height t.
inline const Integer& height(const LatticeVector& v) { return v(v.size() - 1); }

/// Some ray has t > 0.
bool is_special(const Cone& c);
/// Nonzero and every ray has t > 0, so the slice at t = 1 is a polytope.
bool is_bounded(const Cone& c);

std::vector<Cone> special_cones(const Fan& f);
std::vector<Cone> bounded_cones(const Fan& f);

/// Euler characteristic of the open slice {t = 1} of the relative interior:
/// (-1)^(dim - 1) for bounded cones, 0 otherwise.
int euler_char_height1(const Cone& c);

/// Every cone of `fine` lies in a cone of `coarse`, and every maximal cone
/// of `coarse` is covered by the full-dimensional fine cones inside it
/// (each of their facets lies on the boundary or is shared).
bool is_refinement(const Fan& fine, const Fan& coarse);

/// Image under (v, t) -> (n v, t).
Cone rescale(const Cone& c, const Integer& n);
Fan rescale(const Fan& f, const Integer& n);

/// Least m >= 1 such that rescale(f, m) is specifically reduced: the lcm of
/// the denominators of v / t over the special rays (v, t).
Integer specifically_reduced_scale(const Fan& f);
/// Every special ray has primitive generator with t = 1.
bool is_specifically_reduced(const Fan& f);

/// Whenever special rays are faces of a common cone, they are faces of a
/// common bounded cone. Checked on the maximal cones.
bool is_compactly_arranged(const Fan& f);

}  // namespace mockfan
