#include <gtest/gtest.h>

#include <set>

#include "mockfan/cone.hpp"
#include "support/random_models.hpp"

using namespace mockfan;
using mockfan::fixtures::Rng;

namespace {

using VecSet = std::set<std::vector<long long>>;

std::vector<long long> to_ll(const LatticeVector& v) {
  std::vector<long long> out;
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).convert_to<long long>());
  return out;
}

VecSet as_set(const std::vector<LatticeVector>& vs) {
  VecSet s;
  for (const auto& v : vs) s.insert(to_ll(v));
  return s;
}

// Facet normals of a full-dimensional cone by brute force: every (rank-1)
// subset of generators with a one-dimensional kernel gives a candidate
// hyperplane, kept if the generators lie on one side of it.
VecSet brute_force_facets(const std::vector<LatticeVector>& gens, Index rank) {
  VecSet out;
  const std::size_t n = gens.size(), k = static_cast<std::size_t>(rank - 1);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(k, n)), true);
  if (k > n) return out;
  do {
    std::vector<LatticeVector> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) sub.push_back(gens[i]);
    EchelonBasis ker = kernel_basis(sub, rank);
    if (ker.size() != 1) continue;
    LatticeVector a = ker.rows[0];
    bool pos = true, neg = true;
    for (const auto& g : gens) {
      Integer p = pair(a, g);
      if (p < 0) pos = false;
      if (p > 0) neg = false;
    }
    if (pos && !neg) out.insert(to_ll(primitive(a)));
    if (neg && !pos) out.insert(to_ll(primitive(LatticeVector(-a))));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

TEST(ConeFromGenerators, Examples) {
  Cone a = Cone::from_generators(2, {vec({1, 0}), vec({0, 1}), vec({1, 1})});
  EXPECT_EQ(as_set(a.rays()), as_set({vec({1, 0}), vec({0, 1})}));
  EXPECT_TRUE(a.lineality().empty());

  Cone b = Cone::from_generators(2, {vec({1, 0}), vec({-1, 0}), vec({0, 1})});
  EXPECT_EQ(b.lineality(), std::vector<LatticeVector>{vec({1, 0})});
  EXPECT_EQ(b.rays(), std::vector<LatticeVector>{vec({0, 1})});

  Cone c = Cone::from_generators(3, {vec({2, 0, 0})});
  EXPECT_EQ(c.rays(), std::vector<LatticeVector>{vec({1, 0, 0})});

  EXPECT_THROW(Cone::from_generators(2, {vec({1, 0, 0})}), InvalidInput);
}

TEST(ConeFromGenerators, EqualPointSetsGiveEqualCones) {
  Cone a = Cone::from_generators(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  Cone b = Cone::from_inequalities(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, Cone::orthant(3));
  Cone plane1 = Cone::from_generators(3, {}, {vec({1, 1, 0}), vec({0, 1, 0})});
  Cone plane2 = Cone::from_generators(3, {vec({1, 0, 0}), vec({-1, 0, 0}), vec({0, 3, 0}), vec({0, -1, 0})});
  EXPECT_EQ(plane1, plane2);
}

TEST(DualCone, Examples) {
  EXPECT_EQ(dual_cone(Cone::orthant(2)), Cone::orthant(2));
  EXPECT_EQ(dual_cone(Cone::full_space(2)), Cone::zero(2));
  EXPECT_EQ(dual_cone(Cone::zero(2)), Cone::full_space(2));
  Cone d = dual_cone(Cone::from_generators(2, {vec({1, 0}), vec({1, 2})}));
  EXPECT_EQ(as_set(d.rays()), as_set({vec({2, -1}), vec({0, 1})}));
}

TEST(DualCone, InvolutionOnRandomCones) {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    auto rc = fixtures::random_cone(rng);
    Cone dd = dual_cone(dual_cone(rc.cone));
    EXPECT_EQ(dd, rc.cone);
    for (const auto& g : rc.generators) EXPECT_TRUE(contains(dd, g));
    // dim c + dim of the minimal face (lineality) of the dual = rank.
    EXPECT_EQ(rc.cone.dim() + static_cast<Index>(dual_cone(rc.cone).lineality().size()), rc.rank);
    EXPECT_EQ(dual_cone(rc.cone).is_strongly_convex(), rc.cone.dim() == rc.rank);
  }
}

TEST(DoubleDescription, InequalitiesAndGeneratorsAgree) {
  Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    auto rc = fixtures::random_cone(rng, 5, 8);
    const Cone& c = rc.cone;
    for (const auto& g : rc.generators) EXPECT_TRUE(contains(c, g));
    for (const auto& l : rc.lineality) {
      EXPECT_TRUE(contains(c, l));
      EXPECT_TRUE(contains(c, LatticeVector(-l)));
    }
    // Every facet supports rays spanning dim - 1 modulo lineality.
    for (std::size_t f = 0; f < c.facets().size(); ++f) {
      std::vector<LatticeVector> tight = c.lineality();
      for (const auto& r : c.rays())
        if (pair(c.facets()[f], r) == 0) tight.push_back(r);
      EXPECT_EQ(rank(tight, c.rank()), c.dim() - 1);
    }
    // Cone from the H-side reproduces the V-side.
    EXPECT_EQ(Cone::from_inequalities(c.rank(), c.facets(), c.equations()), c);
  }
}

TEST(DoubleDescription, FacetsMatchBruteForce) {
  Rng rng(23);
  int checked = 0;
  while (checked < 150) {
    auto rc = fixtures::random_cone(rng, 4, 7);
    if (!rc.lineality.empty() || rc.cone.dim() != rc.rank || !rc.cone.is_strongly_convex()) continue;
    EXPECT_EQ(as_set(rc.cone.facets()), brute_force_facets(rc.generators, rc.rank));
    // Rays by the same oracle on the dual side.
    std::vector<LatticeVector> fs = rc.cone.facets();
    EXPECT_EQ(as_set(rc.cone.rays()), brute_force_facets(fs, rc.rank));
    ++checked;
  }
}

TEST(Faces, Counts) {
  EXPECT_EQ(faces(Cone::orthant(2)).size(), 4u);
  EXPECT_EQ(faces(Cone::from_generators(3, {vec({1, 2, 3})})).size(), 2u);
  EXPECT_EQ(faces(Cone::from_generators(3, {vec({1, 0, 0}), vec({1, 1, 0}), vec({1, 1, 1})})).size(), 8u);
  // Square pyramid: apex, 4 rays, 4 2-faces, the cone.
  Cone pyr = Cone::from_generators(3, {vec({1, 1, 1}), vec({1, -1, 1}), vec({-1, 1, 1}), vec({-1, -1, 1})});
  EXPECT_EQ(faces(pyr).size(), 10u);
  // Half-plane: the lineality line and the whole half-plane.
  EXPECT_EQ(faces(Cone::from_generators(2, {vec({0, 1})}, {vec({1, 0})})).size(), 2u);
}

TEST(Faces, MatchFacetSubsetOracle) {
  Rng rng(24);
  for (int trial = 0; trial < 120; ++trial) {
    auto rc = fixtures::random_cone(rng, 4, 6);
    const Cone& c = rc.cone;
    // Oracle: faces are the intersections with every subset of facets.
    std::set<Cone> oracle;
    const std::size_t nf = c.facets().size();
    if (nf > 10) continue;
    for (std::size_t mask = 0; mask < (std::size_t{1} << nf); ++mask) {
      std::vector<LatticeVector> eq = c.equations();
      for (std::size_t f = 0; f < nf; ++f)
        if (mask >> f & 1) eq.push_back(c.facets()[f]);
      oracle.insert(Cone::from_inequalities(c.rank(), c.facets(), eq));
    }
    std::set<Cone> got;
    for (const auto& f : faces(c)) {
      EXPECT_TRUE(is_face_of(f.cone, c));
      got.insert(f.cone);
    }
    EXPECT_EQ(got, oracle);
  }
}

TEST(Faces, ClosedUnderIntersection) {
  Rng rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    auto rc = fixtures::random_cone(rng, 4, 6);
    std::set<Cone> all;
    for (const auto& f : faces(rc.cone)) all.insert(f.cone);
    for (const auto& a : all)
      for (const auto& b : all) EXPECT_TRUE(all.count(intersect(a, b)));
  }
}

TEST(RelativeInteriorPoint, Examples) {
  EXPECT_EQ(relative_interior_point(Cone::orthant(2)), vec({1, 1}));
  EXPECT_EQ(relative_interior_point(Cone::from_generators(3, {vec({1, 0, -2})})), vec({1, 0, -2}));
  EXPECT_EQ(relative_interior_point(Cone::zero(2)), vec({0, 0}));
}

TEST(RelativeInteriorPoint, TightOnlyOnEquations) {
  Rng rng(26);
  for (int trial = 0; trial < 200; ++trial) {
    auto rc = fixtures::random_cone(rng);
    LatticeVector p = relative_interior_point(rc.cone);
    EXPECT_TRUE(contains(rc.cone, p));
    EXPECT_TRUE(tight_facets(rc.cone, p).none());
    EXPECT_EQ(minimal_face_containing(rc.cone, p), rc.cone);
  }
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(Cone::orthant(2), vec({0, 0})));
  EXPECT_FALSE(contains(Cone::orthant(2), vec({-1, 2})));
  RationalVector half(2);
  half << Rational(1, 2), Rational(1, 3);
  EXPECT_TRUE(contains(Cone::orthant(2), half));
}

TEST(ConeClassification, Examples) {
  Cone o = Cone::orthant(2);
  EXPECT_TRUE(o.is_strongly_convex());
  EXPECT_TRUE(is_unimodular(o));
  EXPECT_EQ(o.dim(), 2);

  Cone w = Cone::from_generators(2, {vec({1, 1}), vec({1, -1})});
  EXPECT_TRUE(w.is_strongly_convex());
  EXPECT_FALSE(is_unimodular(w));
  EXPECT_EQ(w.dim(), 2);

  Cone h = Cone::from_generators(2, {vec({0, 1})}, {vec({1, 0})});
  EXPECT_FALSE(h.is_strongly_convex());
  EXPECT_EQ(h.dim(), 2);
}

TEST(ConeOrder, TotalAndConsistentWithEquality) {
  Rng rng(27);
  std::vector<Cone> cs;
  for (int k = 0; k < 40; ++k) cs.push_back(fixtures::random_cone(rng, 3, 4).cone);
  for (const auto& a : cs)
    for (const auto& b : cs) {
      if (a.rank() != b.rank()) continue;
      EXPECT_EQ(a == b, !(a < b) && !(b < a));
      EXPECT_FALSE(a < b && b < a);
    }
}
