#include "mockfan/cone.hpp"

#include <algorithm>

#include "mockfan/double_description.hpp"

namespace mockfan {
namespace {

void check_rank(Index rank, const std::vector<LatticeVector>& vs) {
  for (const auto& v : vs)
    if (v.size() != rank) throw InvalidInput("vector rank does not match the cone rank");
}

void sort_unique(std::vector<LatticeVector>& vs) {
  std::sort(vs.begin(), vs.end(),
            [](const LatticeVector& a, const LatticeVector& b) { return lex_less(a, b); });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace

bool operator<(const Cone& a, const Cone& b) {
  if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.rays_ != b.rays_) return lex_less(a.rays_, b.rays_);
  return lex_less(a.lineality_.rows, b.lineality_.rows);
}

Cone Cone::from_generators(Index rank, const std::vector<LatticeVector>& generators,
                           const std::vector<LatticeVector>& lineality_generators) {
  check_rank(rank, generators);
  check_rank(rank, lineality_generators);

  std::vector<LatticeVector> constraints;
  for (const auto& g : generators)
    if (!is_zero(g)) constraints.push_back(g);
  for (const auto& l : lineality_generators) {
    if (is_zero(l)) continue;
    constraints.push_back(l);
    constraints.push_back(-l);
  }

  ConeGenerators dual = solve_inequalities(rank, constraints);
  EchelonBasis equations = echelon_basis(dual.lineality, rank);
  std::vector<LatticeVector> facets;
  for (const auto& r : dual.rays) {
    LatticeVector f = equations.reduce(r);
    if (is_zero(f)) throw Inconsistency("dual ray collapsed modulo the dual lineality");
    facets.push_back(std::move(f));
  }
  sort_unique(facets);

  std::vector<LatticeVector> kernel_rows = equations.rows;
  kernel_rows.insert(kernel_rows.end(), facets.begin(), facets.end());
  EchelonBasis lineality = kernel_basis(kernel_rows, rank);

  return assemble(rank, generators, std::move(lineality), std::move(equations), std::move(facets));
}

Cone Cone::assemble(Index rank, std::vector<LatticeVector> generators, EchelonBasis lineality,
                    EchelonBasis equations, std::vector<LatticeVector> facets) {
  for (auto& g : generators) g = lineality.reduce(g);
  generators.erase(std::remove_if(generators.begin(), generators.end(),
                                  [](const LatticeVector& g) { return is_zero(g); }),
                   generators.end());
  sort_unique(generators);

  std::vector<Bitset> tight;
  tight.reserve(generators.size());
  for (const auto& g : generators) {
    Bitset t(facets.size());
    for (std::size_t f = 0; f < facets.size(); ++f) {
      Integer v = pair(facets[f], g);
      if (v < 0) throw Inconsistency("generator violates a computed facet");
      if (v == 0) t.set(f);
    }
    tight.push_back(std::move(t));
  }

  // A generator spans an extreme ray iff no other (non-parallel) generator
  // lies in its minimal face, i.e. has a superset of its tight facets.
  Cone c;
  c.rank_ = rank;
  std::vector<bool> extreme(generators.size(), true);
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = 0; j < generators.size() && extreme[i]; ++j)
      if (j != i && tight[i].is_subset_of(tight[j])) extreme[i] = false;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (extreme[i]) {
      c.rays_.push_back(std::move(generators[i]));
      c.incidence_.push_back(std::move(tight[i]));
    }
  }
  c.lineality_ = std::move(lineality);
  c.facets_ = std::move(facets);
  c.equations_ = std::move(equations);
  return c;
}

Cone Cone::from_inequalities(Index rank, const std::vector<LatticeVector>& inequalities,
                             const std::vector<LatticeVector>& equations) {
  check_rank(rank, inequalities);
  check_rank(rank, equations);
  std::vector<LatticeVector> rows = inequalities;
  for (const auto& e : equations) {
    rows.push_back(e);
    rows.push_back(-e);
  }
  ConeGenerators gens = solve_inequalities(rank, rows);
  return from_generators(rank, gens.rays, gens.lineality);
}

Cone Cone::full_space(Index rank) {
  std::vector<LatticeVector> basis;
  for (Index k = 0; k < rank; ++k) basis.push_back(unit_vector(rank, k));
  return from_generators(rank, {}, basis);
}

Cone Cone::orthant(Index rank) {
  std::vector<LatticeVector> basis;
  for (Index k = 0; k < rank; ++k) basis.push_back(unit_vector(rank, k));
  return from_generators(rank, basis);
}

Cone dual_cone(const Cone& c) {
  return Cone::from_generators(c.rank(), c.facets(), c.equations());
}

std::vector<FaceIndex> face_lattice(const Cone& c) {
  return face_lattice(c, [](const FaceIndex&) { return true; });
}

Cone face_cone(const Cone& parent, const FaceIndex& face) {
  std::vector<LatticeVector> rays;
  for (std::size_t r = face.rays.find_first(); r != Bitset::npos; r = face.rays.find_next(r))
    rays.push_back(parent.rays()[r]);
  return Cone::from_generators(parent.rank(), rays, parent.lineality());
}

std::vector<Face> faces(const Cone& c) {
  std::vector<Face> out;
  for (auto& idx : face_lattice(c)) {
    Cone fc = face_cone(c, idx);
    out.push_back(Face{std::move(idx), std::move(fc)});
  }
  return out;
}

LatticeVector relative_interior_point(const Cone& c) {
  LatticeVector p = zero_vector(c.rank());
  for (const auto& r : c.rays()) p += r;
  return p;
}

bool contains_cone(const Cone& outer, const Cone& inner) {
  if (outer.rank() != inner.rank()) return false;
  for (const auto& r : inner.rays())
    if (!contains(outer, r)) return false;
  for (const auto& l : inner.lineality())
    if (!contains(outer, l) || !contains(outer, LatticeVector(-l))) return false;
  return true;
}

Cone minimal_face_containing(const Cone& c, const LatticeVector& v) {
  if (!contains(c, v)) throw InvalidInput("point is not in the cone");
  Bitset t = tight_facets(c, v);
  std::vector<LatticeVector> rays;
  for (std::size_t r = 0; r < c.rays().size(); ++r)
    if (t.is_subset_of(c.incidence(r))) rays.push_back(c.rays()[r]);
  return Cone::from_generators(c.rank(), rays, c.lineality());
}

bool is_face_of(const Cone& face, const Cone& c) {
  if (!contains_cone(c, face)) return false;
  return minimal_face_containing(c, relative_interior_point(face)) == face;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.rank() != b.rank()) throw InvalidInput("cone rank mismatch");
  std::vector<LatticeVector> ineq = a.facets(), eq = a.equations();
  ineq.insert(ineq.end(), b.facets().begin(), b.facets().end());
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(a.rank(), ineq, eq);
}

bool is_unimodular(const Cone& c) {
  if (!c.is_strongly_convex()) return false;
  if (static_cast<Index>(c.rays().size()) != c.dim()) return false;
  return lattice_basis_extension_test(c.rays(), c.rank());
}

}  // namespace mockfan
