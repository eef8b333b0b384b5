#include "mockfan/double_description.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <utility>

namespace mockfan {
namespace {

struct Ray {
  LatticeVector v;
  boost::dynamic_bitset<> zero;  // processed inequalities vanishing on v
};

// (s * x - t * y) / gcd, the combination cancelling one functional.
LatticeVector combine(const Integer& s, const LatticeVector& x, const Integer& t,
                      const LatticeVector& y) {
  Integer g = detail::gcd(s, t);
  LatticeVector out = (Integer(s / g) * x - Integer(t / g) * y).eval();
  make_primitive(out);
  return out;
}

}  // namespace

ConeGenerators solve_inequalities(Index dim, const std::vector<LatticeVector>& inequalities) {
  const std::size_t m = inequalities.size();
  std::vector<LatticeVector> lineality;
  for (Index k = 0; k < dim; ++k) lineality.push_back(unit_vector(dim, k));
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < m; ++k) {
    const LatticeVector& a = inequalities[k];
    if (a.size() != dim) throw InvalidInput("inequality rank mismatch");

    // Case 1: the functional is nonzero on the lineality space. One lineality
    // direction becomes a ray, the rest of the description is projected onto
    // the hyperplane a = 0.
    std::size_t pick = lineality.size();
    for (std::size_t i = 0; i < lineality.size(); ++i)
      if (pair(a, lineality[i]) != 0) {
        pick = i;
        break;
      }
    if (pick < lineality.size()) {
      LatticeVector lead = lineality[pick];
      Integer s = pair(a, lead);
      if (s < 0) {
        lead = (-lead).eval();
        s = -s;
      }
      lineality.erase(lineality.begin() + static_cast<std::ptrdiff_t>(pick));
      for (auto& l : lineality) {
        Integer t = pair(a, l);
        if (t != 0) l = combine(s, l, t, lead);
      }
      for (auto& r : rays) {
        Integer t = pair(a, r.v);
        if (t != 0) r.v = combine(s, r.v, t, lead);
        r.zero.resize(m);
        r.zero.set(k);
      }
      Ray fresh{lead, boost::dynamic_bitset<>(m)};
      for (std::size_t j = 0; j < k; ++j) fresh.zero.set(j);
      rays.push_back(std::move(fresh));
      continue;
    }

    // Case 2: a vanishes on the lineality space; split the rays.
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = pair(a, rays[i].v);
      if (value[i] > 0) pos.push_back(i);
      else if (value[i] < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (value[i] == 0) rays[i].zero.set(k);
      continue;
    }

    const std::size_t need =
        dim - static_cast<Index>(lineality.size()) >= 2
            ? static_cast<std::size_t>(dim - static_cast<Index>(lineality.size()) - 2)
            : 0;
    std::vector<Ray> next;
    for (std::size_t i : pos) next.push_back(rays[i]);
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (value[i] == 0) {
        next.push_back(rays[i]);
        next.back().zero.set(k);
      }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        boost::dynamic_bitset<> common = rays[p].zero & rays[q].zero;
        if (common.count() < need) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        // value[p] > 0 > value[q]: value[p] * q - value[q] * p lies on a = 0.
        Ray fresh{combine(value[p], rays[q].v, value[q], rays[p].v), common};
        fresh.zero.set(k);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = std::move(lineality);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace mockfan
