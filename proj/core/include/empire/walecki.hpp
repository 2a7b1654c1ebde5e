#pragma once

#include <vector>

namespace empire {

/// r edge-disjoint Hamiltonian cycles of K_{2r+1}; vertex 2r plays infinity.
struct HamiltonianDecomposition {
  int r = 0;
  std::vector<std::vector<int>> cycles;
};

HamiltonianDecomposition walecki(int r);

}  // namespace empire
