#pragma once

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mockfan/fan.hpp"

namespace mockfan {

struct SymbolicClass {
  std::string name;
  friend auto operator<=>(const SymbolicClass&, const SymbolicClass&) = default;
};
/// Class of Spec of the base field.
struct PointClass {
  friend auto operator<=>(const PointClass&, const PointClass&) = default;
};
/// Class of a very general hypersurface of the given degree in P^projective_dim.
struct HypersurfaceClass {
  int projective_dim = 0;
  int degree = 0;
  friend auto operator<=>(const HypersurfaceClass&, const HypersurfaceClass&) = default;
};

/// Display order: symbolic names, then pt, then hypersurfaces.
using ClassLabel = std::variant<SymbolicClass, PointClass, HypersurfaceClass>;

std::string render(const ClassLabel& label);

/// Element of the free abelian group on class labels. Zero coefficients are
/// never stored.
class FormalSum {
 public:
  FormalSum() = default;
  explicit FormalSum(const ClassLabel& label, const Integer& coefficient = 1);

  const std::map<ClassLabel, Integer>& terms() const { return terms_; }
  Integer coefficient(const ClassLabel& label) const;
  bool is_zero() const { return terms_.empty(); }

  FormalSum& operator+=(const FormalSum& other);
  FormalSum& operator-=(const FormalSum& other);
  FormalSum& operator*=(const Integer& k);

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator-(FormalSum a) { return a *= Integer(-1); }
  friend FormalSum operator*(const Integer& k, FormalSum a) { return a *= k; }
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  void add(const ClassLabel& label, const Integer& c);
  std::map<ClassLabel, Integer> terms_;
};

/// Terms in label order joined by spaces, e.g. "+2·pt -1·Hyp(P^5, d=3)";
/// "0" for the empty sum.
std::string render(const FormalSum& s);

struct StratumAnnotation {
  std::string cone_id;
  int component_count = 1;
  std::vector<ClassLabel> labels;  // one per component
};

/// Sum over the bounded cones kept by `keep` of (-1)^(dim - 1) times the sum
/// of their labels. Cones are addressed by their index in fan.cones(); an
/// unannotated cone gets one symbolic label "E(c<index>)".
FormalSum vol_skeleton(const Fan& fan, const std::map<std::size_t, StratumAnnotation>& annotations,
                       const std::function<bool(std::size_t)>& keep = {});

}  // namespace mockfan
