#include <gtest/gtest.h>

#include <set>

#include "mockfan/grassmann.hpp"

using namespace mockfan;
using namespace mockfan::grassmann;

namespace {

long long binomial(long long n, long long k) {
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::string> ids(const MockPolytopeChart& chart, const std::vector<std::size_t>& at) {
  std::vector<std::string> out;
  for (std::size_t i : at) out.push_back(chart.items[i].id);
  std::sort(out.begin(), out.end());
  return out;
}

struct Pipeline {
  GrassmannSpec spec;
  SubdivisionResult result;
  explicit Pipeline(GrassmannSpec s) : spec(s), result(subdivide_chart(zero_chart(s))) {}
};

const Pipeline& pipeline_521() {
  static const Pipeline p(GrassmannSpec{5, 2, 1});
  return p;
}

}  // namespace

TEST(IndexData, Partition) {
  for (int n : {4, 5, 6, 7}) {
    IndexData idx(n);
    EXPECT_EQ(static_cast<int>(idx.J.size()), n * (n - 1) / 2);
    EXPECT_EQ(static_cast<int>(idx.I.size()), (n - 2) * (n - 1) / 2);
    EXPECT_EQ(idx.J0.size(), 1u);
    EXPECT_EQ(static_cast<int>(idx.J1.size()), 2 * (n - 2));
    EXPECT_EQ(idx.J0.size() + idx.J1.size() + idx.J2.size(), idx.J.size());
    EXPECT_EQ(idx.rank(), static_cast<Index>(idx.I.size()) - 1 + (n - 1) + 1);
  }
  EXPECT_THROW(IndexData(3), InvalidInput);
}

TEST(Varpi, Examples) {
  IndexData idx(5);
  EXPECT_TRUE(is_zero(varpi(idx, 0, 1)));
  LatticeVector e02 = zero_vector(idx.rank());
  e02(idx.eta_coord(-1)) = 1;
  e02(idx.eta_coord(0)) = 1;
  EXPECT_EQ(varpi(idx, 0, 2), e02);
  EXPECT_EQ(varpi(idx, 1, 4), unit_vector(idx.rank(), idx.eta_coord(2)));
  LatticeVector e24 = zero_vector(idx.rank());
  e24(idx.eta_coord(-1)) = 1;
  e24(idx.eta_coord(0)) = 1;
  e24(idx.eta_coord(2)) = 1;
  e24(idx.omega_coord(0, 2)) = 1;
  EXPECT_EQ(varpi(idx, 2, 4), e24);
  // omega_{00} - omega_{00} vanishes.
  LatticeVector e03 = zero_vector(idx.rank());
  e03(idx.eta_coord(-1)) = 1;
  e03(idx.eta_coord(1)) = 1;
  e03(idx.omega_coord(1, 1)) = 1;
  EXPECT_EQ(varpi(idx, 0, 3), e03);
  EXPECT_THROW(varpi(idx, 2, 1), InvalidInput);
  EXPECT_THROW(varpi(idx, 0, 5), InvalidInput);
  for (const auto& [i, j] : idx.J) EXPECT_EQ(varpi(idx, i, j)(idx.delta_coord()), 0);
}

TEST(Kappa, Examples) {
  GrassmannSpec s{5, 3, 1};
  IndexData idx(5);
  Multidegree a(idx.J.size(), 0);
  a[idx.j_position(0, 2)] = 3;
  EXPECT_EQ(kappa(s, idx, a), 0);
  Multidegree b(idx.J.size(), 0);
  b[idx.j_position(0, 1)] = 3;
  EXPECT_EQ(kappa(s, idx, b), 2 * 3 - 1);
  Multidegree c(idx.J.size(), 0);
  c[idx.j_position(0, 1)] = 1;
  c[idx.j_position(0, 2)] = 2;
  EXPECT_EQ(kappa(s, idx, c), 1);
  Multidegree bad(idx.J.size(), 0);
  bad[0] = 2;
  EXPECT_THROW(kappa(s, idx, bad), InvalidInput);
}

TEST(EnumerateS, CountsAndOrder) {
  auto S = enumerate_S({5, 2, 1});
  EXPECT_EQ(S.size(), 55u);
  EXPECT_TRUE(std::is_sorted(S.begin(), S.end()));
  EXPECT_EQ(std::set<Multidegree>(S.begin(), S.end()).size(), S.size());
  EXPECT_EQ(stratify_S({5, 2, 1}, 0, 2, 0).size(), 21u);
  for (int n : {4, 5, 6})
    for (int d : {2, 3}) {
      IndexData idx(n);
      EXPECT_EQ(static_cast<long long>(enumerate_S({n, d, 1}).size()),
                binomial(static_cast<long long>(idx.J.size()) + d - 1, d));
    }
}

TEST(EnumerateS, StrataPartition) {
  for (int d : {2, 3}) {
    GrassmannSpec s{5, d, 1};
    std::size_t total = 0;
    std::set<Multidegree> seen;
    for (int d0 = 0; d0 <= d; ++d0)
      for (int d1 = 0; d0 + d1 <= d; ++d1)
        for (const auto& a : stratify_S(s, d0, d1, d - d0 - d1)) {
          ++total;
          EXPECT_TRUE(seen.insert(a).second);
        }
    EXPECT_EQ(total, enumerate_S(s).size());
  }
  EXPECT_THROW(stratify_S({5, 2, 1}, 1, 0, 0), InvalidInput);
}

TEST(MultidegreeId, Format) {
  IndexData idx(5);
  Multidegree a(idx.J.size(), 0);
  a[idx.j_position(0, 1)] = 2;
  a[idx.j_position(1, 3)] = 1;
  EXPECT_EQ(multidegree_id(idx, a), "W0,1^2*W1,3");
}

TEST(ZeroChart, Shape) {
  for (int l : {1, 2}) {
    GrassmannSpec s{5, 2, l};
    IndexData idx(5);
    MockPolytopeChart c = zero_chart(s);
    EXPECT_EQ(c.items.size(), 55u);
    EXPECT_EQ(c.ambient_dual_rank, 10);
    // alpha_0 = d (0,1) lifts to ((2d - 1) l delta, 1).
    Multidegree a0(idx.J.size(), 0);
    a0[idx.j_position(0, 1)] = s.d;
    std::size_t k = 0;
    while (c.items[k].id != multidegree_id(idx, a0)) ++k;
    EXPECT_EQ(c.effective_exponent(k), Integer((2 * s.d - 1) * l) * unit_vector(10, idx.delta_coord()));
  }
}

TEST(ZeroChart, LiftedConeFullAndDualStronglyConvex) {
  const auto& p = pipeline_521();
  const Index r = p.result.chart.ambient_dual_rank;
  std::vector<LatticeVector> gens;
  for (const auto& g : p.result.chart.sigma_dual_generators) {
    LatticeVector x = zero_vector(r + 1);
    x.head(r) = g;
    gens.push_back(x);
  }
  for (std::size_t i = 0; i < p.result.chart.items.size(); ++i) {
    LatticeVector x(r + 1);
    x.head(r) = p.result.chart.effective_exponent(i);
    x(r) = 1;
    gens.push_back(x);
  }
  EXPECT_EQ(rank(gens, r + 1), 11);
  EXPECT_EQ(p.result.D.dim(), 11);
  EXPECT_TRUE(p.result.C.is_strongly_convex());
}

TEST(Verify, ZeroChart521) {
  const auto& p = pipeline_521();
  Report rep = verify(p.spec, p.result);
  EXPECT_TRUE(rep.passed()) << rep.render();
  EXPECT_NE(rep.render().find("7/7 cones, 7/7 active sets"), std::string::npos);
  EXPECT_TRUE(is_compactly_arranged(p.result.fan));
  EXPECT_TRUE(is_specifically_reduced(p.result.fan));
  EXPECT_TRUE(is_refinement(p.result.fan, fan_of_faces(p.result.chart.support(), true)));
}

TEST(Verify, ExpectedActiveSetsMatchArgmin) {
  // Oracle: minimise the pairing directly at each expected cone's interior point.
  for (GrassmannSpec s : {GrassmannSpec{5, 2, 1}, GrassmannSpec{5, 3, 2}, GrassmannSpec{4, 2, 1}}) {
    MockPolytopeChart chart = zero_chart(s);
    for (const auto& e : expected_bounded_cones(s))
      EXPECT_EQ(ids(chart, argmin_items(chart, relative_interior_point(e.cone))), e.active_ids) << e.name;
  }
}

TEST(Verify, TauOneValuation) {
  GrassmannSpec s{5, 3, 1};
  IndexData idx(5);
  MockPolytopeChart chart = zero_chart(s);
  LatticeVector v = unit_vector(idx.rank(), idx.delta_coord());
  for (int j = 0; j <= s.n - 3; ++j) v(idx.eta_coord(j)) = -s.l;
  std::set<std::string> expect;
  for (auto st : {stratify_S(s, 0, s.d - 1, 1), stratify_S(s, 0, s.d, 0)})
    for (const auto& a : st) expect.insert(multidegree_id(idx, a));
  auto got = ids(chart, argmin_items(chart, v));
  EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), expect);
}

TEST(Verify, OtherSpecs) {
  for (GrassmannSpec s : {GrassmannSpec{5, 3, 2}, GrassmannSpec{4, 2, 1}, GrassmannSpec{4, 3, 1}}) {
    Report rep = verify(s);
    EXPECT_TRUE(rep.passed()) << rep.render();
  }
}

TEST(Verify, BoundedRaysHaveHeightOne) {
  for (int l : {1, 2, 3}) {
    for (const auto& e : expected_bounded_cones({5, 2, l}))
      for (const auto& r : e.cone.rays()) EXPECT_EQ(height(r), 1);
  }
}

TEST(Verify, ActiveSetsAreFaceMonotone) {
  const auto& p = pipeline_521();
  for (const auto& c : p.result.fan.cones()) {
    const auto& big = active_set(p.result, c);
    for (const auto& f : faces(c)) {
      const auto& small = active_set(p.result, f.cone);
      EXPECT_TRUE(std::includes(small.begin(), small.end(), big.begin(), big.end()));
    }
  }
}

TEST(Verify, EffectiveDimensionAtLeastTwoOnBoundedCones) {
  const auto& p = pipeline_521();
  for (const auto& e : expected_bounded_cones(p.spec)) EXPECT_GE(effective_dimension(p.result, e.cone), 2u);
  std::set<LatticeVector, bool (*)(const LatticeVector&, const LatticeVector&)> distinct(
      [](const LatticeVector& a, const LatticeVector& b) { return lex_less(a, b); });
  for (const auto& a : stratify_S(p.spec, 0, p.spec.d, 0)) distinct.insert(varpi(IndexData(5), a));
  EXPECT_GE(distinct.size(), 2u);
}

TEST(Verify, ScaleTwoIsRescaleOfScaleOne) {
  const auto& one = pipeline_521();
  SubdivisionResult two = subdivide_chart(zero_chart({5, 2, 2}));
  std::set<Cone> b1, b2;
  for (const auto& c : bounded_cones(rescale(one.result.fan, 2))) b1.insert(c);
  for (const auto& c : bounded_cones(two.fan)) b2.insert(c);
  EXPECT_EQ(b1, b2);
  EXPECT_EQ(two.fan, rescale(one.result.fan, 2));
  for (const auto& c : bounded_cones(one.result.fan))
    EXPECT_EQ(active_ids(two, rescale(c, 2)), active_ids(one.result, c));
}

TEST(VolExpression, FiveThree) {
  FormalSum v = vol_expression({5, 3, 1});
  EXPECT_EQ(render(v), "-1·E(sigma0) -1·E(sigma2) +1·E(tau0) +1·E(tau3) +2·pt -1·Hyp(P^5, d=3)");
}

TEST(VolExpression, PointCoefficientIsTwo) {
  for (GrassmannSpec s : {GrassmannSpec{5, 2, 1}, GrassmannSpec{4, 2, 1}, GrassmannSpec{5, 2, 2}}) {
    FormalSum v = vol_expression(s);
    EXPECT_EQ(v.coefficient(PointClass{}), 2);
    EXPECT_EQ(v.coefficient(HypersurfaceClass{2 * s.n - 5, s.d}), -1);
  }
}

TEST(GrassmannSpec, Validation) {
  EXPECT_THROW((GrassmannSpec{3, 2, 1}.validate()), InvalidInput);
  EXPECT_THROW((GrassmannSpec{5, 1, 1}.validate()), InvalidInput);
  EXPECT_THROW((GrassmannSpec{5, 2, 0}.validate()), InvalidInput);
}
