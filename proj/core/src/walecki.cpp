#include "empire/walecki.hpp"

#include "empire/empire_graph.hpp"

namespace empire {

HamiltonianDecomposition walecki(int r) {
  if (r < 1) throw Error("walecki: r must be at least 1");
  const int inf = 2 * r;
  std::vector<int> zigzag{0};
  for (int k = 1; k < r; ++k) {
    zigzag.push_back(k);
    zigzag.push_back(2 * r - k);
  }
  zigzag.push_back(r);
  zigzag.push_back(inf);

  HamiltonianDecomposition d;
  d.r = r;
  for (int i = 0; i < r; ++i) {
    std::vector<int> cycle;
    for (int x : zigzag) cycle.push_back(x == inf ? inf : (x + i) % (2 * r));
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

}  // namespace empire
