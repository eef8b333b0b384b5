#include "mockfan/fan.hpp"

#include <algorithm>
#include <set>

namespace mockfan {
namespace {

void check_heights(const Cone& c) {
  for (const auto& r : c.rays())
    if (height(r) < 0) throw InvalidInput("cone has a ray with negative t coordinate");
  for (const auto& l : c.lineality())
    if (height(l) != 0) throw InvalidInput("cone lineality leaves the half space t >= 0");
}

void require_t(const Fan& f) {
  if (!f.has_t_coordinate()) throw InvalidInput("fan has no t coordinate");
}

bool meet_in_common_face(const Cone& a, const Cone& b) {
  Cone k = intersect(a, b);
  return is_face_of(k, a) && is_face_of(k, b);
}

}  // namespace

Fan Fan::trusted(Index rank, std::vector<Cone> cones, bool has_t) {
  Fan f;
  f.rank_ = rank;
  f.has_t_ = has_t;
  for (const auto& c : cones) {
    if (c.rank() != rank) throw InvalidInput("cone rank does not match the fan rank");
    if (has_t) check_heights(c);
  }
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  f.cones_ = std::move(cones);
  return f;
}

Fan Fan::of_faces(const Cone& cone, bool has_t) {
  std::vector<Cone> all;
  for (auto& face : faces(cone)) all.push_back(std::move(face.cone));
  return trusted(cone.rank(), std::move(all), has_t);
}

Fan Fan::from_cones(Index rank, const std::vector<Cone>& cones, bool has_t) {
  std::set<Cone> closed;
  for (const auto& c : cones) {
    if (c.rank() != rank) throw InvalidInput("cone rank does not match the fan rank");
    if (!c.is_strongly_convex()) throw InvalidInput("fan member is not strongly convex");
    if (has_t) check_heights(c);
    if (closed.count(c)) continue;
    for (auto& face : faces(c)) closed.insert(std::move(face.cone));
  }
  Fan f = trusted(rank, std::vector<Cone>(closed.begin(), closed.end()), has_t);
  if (f.cones_.empty()) f.cones_.push_back(Cone::zero(rank));
  if (!satisfies_fan_condition(f)) throw InvalidInput("not a fan", "E_NOT_FAN");
  return f;
}

bool satisfies_fan_condition(const Fan& f) {
  std::vector<Cone> top = f.maximal_cones();
  for (std::size_t i = 0; i < top.size(); ++i)
    for (std::size_t j = i + 1; j < top.size(); ++j)
      if (!meet_in_common_face(top[i], top[j])) return false;
  return true;
}

std::optional<std::size_t> Fan::index_of(const Cone& c) const {
  auto it = std::lower_bound(cones_.begin(), cones_.end(), c);
  if (it == cones_.end() || !(*it == c)) return std::nullopt;
  return static_cast<std::size_t>(it - cones_.begin());
}

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    bool maximal = true;
    // Sorted by dimension first, so only later cones can contain cone i.
    for (std::size_t j = i + 1; j < cones_.size() && maximal; ++j)
      if (cones_[j].dim() > cones_[i].dim() && contains_cone(cones_[j], cones_[i]))
        maximal = false;
    if (maximal) out.push_back(cones_[i]);
  }
  return out;
}

std::vector<LatticeVector> Fan::rays() const {
  std::vector<LatticeVector> out;
  for (const auto& c : cones_)
    if (c.is_strongly_convex() && c.dim() == 1) out.push_back(c.rays().front());
  return out;
}

bool is_special(const Cone& c) {
  return std::any_of(c.rays().begin(), c.rays().end(),
                     [](const LatticeVector& r) { return height(r) > 0; });
}

bool is_bounded(const Cone& c) {
  if (!c.is_strongly_convex() || c.rays().empty()) return false;
  return std::all_of(c.rays().begin(), c.rays().end(),
                     [](const LatticeVector& r) { return height(r) > 0; });
}

std::vector<Cone> special_cones(const Fan& f) {
  require_t(f);
  std::vector<Cone> out;
  std::copy_if(f.cones().begin(), f.cones().end(), std::back_inserter(out), is_special);
  return out;
}

std::vector<Cone> bounded_cones(const Fan& f) {
  require_t(f);
  std::vector<Cone> out;
  std::copy_if(f.cones().begin(), f.cones().end(), std::back_inserter(out), is_bounded);
  return out;
}

int euler_char_height1(const Cone& c) {
  if (!is_bounded(c)) return 0;
  return (c.dim() - 1) % 2 == 0 ? 1 : -1;
}

bool is_refinement(const Fan& fine, const Fan& coarse) {
  if (fine.rank() != coarse.rank()) return false;
  const std::vector<Cone> coarse_top = coarse.maximal_cones();
  const std::vector<Cone> fine_top = fine.maximal_cones();

  for (const auto& c : fine_top) {
    bool inside = std::any_of(coarse_top.begin(), coarse_top.end(),
                              [&](const Cone& s) { return contains_cone(s, c); });
    if (!inside) return false;
  }

  for (const auto& sigma : coarse_top) {
    std::vector<const Cone*> cells;
    for (const auto& c : fine_top)
      if (c.dim() == sigma.dim() && contains_cone(sigma, c)) cells.push_back(&c);
    if (cells.empty()) return false;
    for (const Cone* cell : cells) {
      for (std::size_t k = 0; k < cell->facets().size(); ++k) {
        std::vector<LatticeVector> wall_rays;
        for (std::size_t r = 0; r < cell->rays().size(); ++r)
          if (cell->incidence(r).test(k)) wall_rays.push_back(cell->rays()[r]);
        Cone wall = Cone::from_generators(cell->rank(), wall_rays, cell->lineality());
        if (minimal_face_containing(sigma, relative_interior_point(wall)).dim() < sigma.dim())
          continue;
        bool shared = std::any_of(cells.begin(), cells.end(), [&](const Cone* other) {
          return other != cell && contains_cone(*other, wall);
        });
        if (!shared) return false;
      }
    }
  }
  return true;
}

Cone rescale(const Cone& c, const Integer& n) {
  if (n < 1) throw InvalidInput("scale must be a positive integer");
  auto image = [&](const std::vector<LatticeVector>& vs) {
    std::vector<LatticeVector> out;
    for (const auto& v : vs) {
      LatticeVector w = v;
      for (Index i = 0; i + 1 < w.size(); ++i) w(i) *= n;
      make_primitive(w);
      out.push_back(std::move(w));
    }
    return out;
  };
  return Cone::from_generators(c.rank(), image(c.rays()), image(c.lineality()));
}

Fan rescale(const Fan& f, const Integer& n) {
  require_t(f);
  std::vector<Cone> out;
  out.reserve(f.size());
  for (const auto& c : f.cones()) out.push_back(rescale(c, n));
  return Fan::trusted(f.rank(), std::move(out), true);
}

Integer specifically_reduced_scale(const Fan& f) {
  require_t(f);
  Integer m = 1;
  for (const auto& r : f.rays()) {
    const Integer& t = height(r);
    if (t <= 0) continue;
    Integer g = t;
    for (Index i = 0; i + 1 < r.size(); ++i) g = detail::gcd(g, Integer(r(i)));
    m = detail::lcm(m, Integer(t / g));
  }
  return m;
}

bool is_specifically_reduced(const Fan& f) {
  require_t(f);
  for (const auto& r : f.rays())
    if (height(r) > 0 && height(r) != 1) return false;
  return true;
}

bool is_compactly_arranged(const Fan& f) {
  require_t(f);
  const std::vector<Cone> bounded = bounded_cones(f);
  for (const auto& c : f.maximal_cones()) {
    std::vector<LatticeVector> special;
    for (const auto& r : c.rays())
      if (height(r) > 0) special.push_back(r);
    if (special.empty()) continue;
    bool found = std::any_of(bounded.begin(), bounded.end(), [&](const Cone& b) {
      return std::all_of(special.begin(), special.end(), [&](const LatticeVector& r) {
        return std::find(b.rays().begin(), b.rays().end(), r) != b.rays().end();
      });
    });
    if (!found) return false;
  }
  return true;
}

}  // namespace mockfan
