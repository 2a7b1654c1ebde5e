#include "empire/graph_props.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace empire {

std::vector<int> components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbours(v))
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

int num_components(const Graph& g) {
  const auto comp = components(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool is_forest(const Graph& g) {
  return g.num_edges() == g.num_vertices() - num_components(g);
}

bool is_tree(const Graph& g) {
  return g.num_vertices() > 0 && num_components(g) == 1 && g.num_edges() == g.num_vertices() - 1;
}

bool is_linear_forest(const Graph& g) {
  return max_degree(g) <= 2 && is_forest(g);
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.num_vertices(); ++v) d = std::max(d, g.degree(v));
  return d;
}

bool is_planar(const Graph& g) {
  if (g.num_vertices() >= 3 && g.num_edges() > 3 * g.num_vertices() - 6) return false;
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(g.num_vertices());
  for (const auto& [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace empire
