#include "mockfan/volume.hpp"

#include <sstream>

namespace mockfan {

std::string render(const ClassLabel& label) {
  struct {
    std::string operator()(const SymbolicClass& s) const { return s.name; }
    std::string operator()(const PointClass&) const { return "pt"; }
    std::string operator()(const HypersurfaceClass& h) const {
      return "Hyp(P^" + std::to_string(h.projective_dim) + ", d=" + std::to_string(h.degree) + ")";
    }
  } visit;
  return std::visit(visit, label);
}

FormalSum::FormalSum(const ClassLabel& label, const Integer& coefficient) {
  add(label, coefficient);
}

Integer FormalSum::coefficient(const ClassLabel& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? Integer(0) : it->second;
}

void FormalSum::add(const ClassLabel& label, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(label, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  for (const auto& [label, c] : other.terms_) add(label, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& other) {
  for (const auto& [label, c] : other.terms_) add(label, Integer(-c));
  return *this;
}

FormalSum& FormalSum::operator*=(const Integer& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [label, c] : terms_) c *= k;
  return *this;
}

std::string render(const FormalSum& s) {
  if (s.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [label, c] : s.terms()) {
    if (!first) out << ' ';
    first = false;
    out << (c > 0 ? "+" : "") << c << "·" << render(label);
  }
  return out.str();
}

FormalSum vol_skeleton(const Fan& fan, const std::map<std::size_t, StratumAnnotation>& annotations,
                       const std::function<bool(std::size_t)>& keep) {
  FormalSum total;
  for (std::size_t k = 0; k < fan.size(); ++k) {
    const Cone& c = fan.cones()[k];
    if (!is_bounded(c)) continue;
    if (keep && !keep(k)) continue;
    const Integer sign = euler_char_height1(c);
    auto it = annotations.find(k);
    if (it == annotations.end()) {
      total += FormalSum(SymbolicClass{"E(c" + std::to_string(k) + ")"}, sign);
      continue;
    }
    const StratumAnnotation& a = it->second;
    if (static_cast<std::size_t>(a.component_count) != a.labels.size())
      throw InvalidInput("annotation for '" + a.cone_id + "' has " +
                         std::to_string(a.labels.size()) + " labels for " +
                         std::to_string(a.component_count) + " components");
    for (const auto& label : a.labels) total += FormalSum(label, sign);
  }
  return total;
}

}  // namespace mockfan
