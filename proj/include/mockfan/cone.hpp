#pragma once

#include <boost/dynamic_bitset.hpp>

#include <set>
#include <vector>

#include "mockfan/core.hpp"

namespace mockfan {

using Bitset = boost::dynamic_bitset<>;

/// Rational polyhedral cone in Q^rank held in canonical double form.
///
/// V-side: extreme rays (primitive, reduced modulo the lineality space,
/// sorted lexicographically) plus the echelon basis of the lineality space.
/// H-side: facet normals (primitive inner normals reduced modulo the span of
/// the equations, sorted) plus the echelon basis of span(cone)^perp.
/// Equal point sets give structurally equal objects. Both sides and the
/// ray/facet incidence are computed eagerly; a Cone never mutates.
class Cone {
 public:
  Cone() = default;

  /// cone(generators) + span(lineality_generators).
  static Cone from_generators(Index rank, const std::vector<LatticeVector>& generators,
                              const std::vector<LatticeVector>& lineality_generators = {});
  /// {x : <a, x> >= 0 for a in inequalities, <e, x> = 0 for e in equations}.
  static Cone from_inequalities(Index rank, const std::vector<LatticeVector>& inequalities,
                                const std::vector<LatticeVector>& equations = {});
  static Cone zero(Index rank) { return from_generators(rank, {}); }
  static Cone full_space(Index rank);
  static Cone orthant(Index rank);

  Index rank() const { return rank_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<LatticeVector>& lineality() const { return lineality_.rows; }
  const std::vector<LatticeVector>& facets() const { return facets_; }
  const std::vector<LatticeVector>& equations() const { return equations_.rows; }
  const EchelonBasis& lineality_basis() const { return lineality_; }
  const EchelonBasis& equation_basis() const { return equations_; }

  /// Bit f of incidence(r) is set iff ray r lies on facet f.
  const Bitset& incidence(std::size_t ray) const { return incidence_[ray]; }

  Index dim() const { return rank_ - equations_.size(); }
  bool is_strongly_convex() const { return lineality_.rows.empty(); }

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.lineality_.rows == b.lineality_.rows;
  }
  /// Total order: dimension first, then rays, then lineality.
  friend bool operator<(const Cone& a, const Cone& b);

 private:
  static Cone assemble(Index rank, std::vector<LatticeVector> generators, EchelonBasis lineality,
                       EchelonBasis equations, std::vector<LatticeVector> facets);

  Index rank_ = 0;
  std::vector<LatticeVector> rays_;
  EchelonBasis lineality_;
  std::vector<LatticeVector> facets_;
  EchelonBasis equations_;
  std::vector<Bitset> incidence_;
};

/// Combinatorial face: ray indices and tight facet indices of the parent.
/// The face is parent ∩ {x : <f, x> = 0 for f in tight_facets}.
struct FaceIndex {
  Bitset rays;
  Bitset tight_facets;
};

struct Face {
  FaceIndex index;
  Cone cone;
};

/// {y : <x, y> >= 0 for all x in c}, recomputed from c's inequality side.
Cone dual_cone(const Cone& c);

/// Faces listed bottom-up (minimal face first), each exactly once, found as
/// closed tight-facet sets of the incidence. A nonempty `keep` predicate
/// prunes the search; it must be inherited by subfaces.
template <typename Keep>
std::vector<FaceIndex> face_lattice(const Cone& c, Keep keep);
std::vector<FaceIndex> face_lattice(const Cone& c);

Cone face_cone(const Cone& parent, const FaceIndex& face);
std::vector<Face> faces(const Cone& c);

/// Sum of the extreme rays; the zero vector for a linear subspace.
LatticeVector relative_interior_point(const Cone& c);

template <typename Derived>
bool contains(const Cone& c, const Eigen::MatrixBase<Derived>& v) {
  if (v.size() != c.rank()) throw InvalidInput("point rank does not match cone rank");
  for (const auto& e : c.equations())
    if (pair(e, v) != 0) return false;
  for (const auto& f : c.facets())
    if (pair(f, v) < 0) return false;
  return true;
}

/// Facets of c vanishing at v (v assumed in c).
template <typename Derived>
Bitset tight_facets(const Cone& c, const Eigen::MatrixBase<Derived>& v) {
  Bitset out(c.facets().size());
  for (std::size_t f = 0; f < c.facets().size(); ++f)
    if (pair(c.facets()[f], v) == 0) out.set(f);
  return out;
}

/// True iff every generator of `inner` lies in `outer`.
bool contains_cone(const Cone& outer, const Cone& inner);
bool is_face_of(const Cone& face, const Cone& c);
/// Smallest face of c containing the point v (v must lie in c).
Cone minimal_face_containing(const Cone& c, const LatticeVector& v);
Cone intersect(const Cone& a, const Cone& b);

inline bool is_strongly_convex(const Cone& c) { return c.is_strongly_convex(); }
inline Index dim(const Cone& c) { return c.dim(); }
/// Strongly convex, simplicial, and the rays extend to a lattice basis.
bool is_unimodular(const Cone& c);

// ---------------------------------------------------------------------------

template <typename Keep>
std::vector<FaceIndex> face_lattice(const Cone& c, Keep keep) {
  const std::size_t nr = c.rays().size(), nf = c.facets().size();
  auto facets_of = [&](const Bitset& rays) {
    Bitset t(nf);
    t.set();
    for (std::size_t r = rays.find_first(); r != Bitset::npos; r = rays.find_next(r))
      t &= c.incidence(r);
    return t;
  };
  auto rays_of = [&](const Bitset& tight) {
    Bitset out(nr);
    for (std::size_t r = 0; r < nr; ++r)
      if (tight.is_subset_of(c.incidence(r))) out.set(r);
    return out;
  };

  std::vector<FaceIndex> out;
  std::set<Bitset> seen;
  auto visited = [&](const Bitset& rays) { return !seen.insert(rays).second; };

  FaceIndex bottom{Bitset(nr), Bitset(nf)};
  bottom.tight_facets.set();
  bottom.rays = rays_of(bottom.tight_facets);
  if (!keep(bottom)) return out;
  visited(bottom.rays);
  out.push_back(bottom);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t r = 0; r < nr; ++r) {
      if (out[head].rays.test(r)) continue;
      Bitset grown = out[head].rays;
      grown.set(r);
      FaceIndex next;
      next.tight_facets = facets_of(grown);
      next.rays = rays_of(next.tight_facets);
      if (visited(next.rays)) continue;
      if (!keep(next)) continue;
      out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace mockfan
