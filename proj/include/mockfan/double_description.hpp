#pragma once

#include <vector>

#include "mockfan/core.hpp"

namespace mockfan {

/// Minkowski-Weyl generators of a cone: span(lineality) + cone(rays).
struct ConeGenerators {
  std::vector<LatticeVector> lineality;
  std::vector<LatticeVector> rays;  // extreme, pairwise distinct modulo lineality
};

/// Generators of {y in Q^dim : <a, y> >= 0 for every a in inequalities},
/// computed by the double description method with the combinatorial
/// adjacency test. Rows are processed in the given order.
ConeGenerators solve_inequalities(Index dim, const std::vector<LatticeVector>& inequalities);

}  // namespace mockfan
