#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the plain data types, so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/planar_face_traversal.hpp>
#include <boost/rational.hpp>

#include "empire/cnf.hpp"
#include "empire/empire_graph.hpp"

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

// Empire adjacency by scanning vertex edges, without reduce().
inline EdgeList empire_adjacency(const empire::EmpireGraph& g) {
  std::set<std::pair<int, int>> s;
  for (const auto& [u, v] : g.edges()) {
    int a = g.empire_of(u), b = g.empire_of(v);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    s.insert({a, b});
  }
  return {s.begin(), s.end()};
}

inline EdgeList edges_of(const empire::Graph& g) { return {g.edges().begin(), g.edges().end()}; }

// Counts proper s-colourings by plain backtracking in index order, stopping
// once `cap` are found (cap < 0: count all).
inline long long count_colourings(int n, const EdgeList& edges, int s, long long cap = -1) {
  std::vector<std::vector<int>> earlier(n);
  for (auto [a, b] : edges) {
    if (a < b) std::swap(a, b);
    earlier[a].push_back(b);
  }
  std::vector<int> col(n, -1);
  long long found = 0;
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return ++found == cap;
    for (int c = 0; c < s; ++c) {
      bool ok = true;
      for (int w : earlier[v]) ok = ok && col[w] != c;
      if (!ok) continue;
      col[v] = c;
      if (self(self, v + 1)) return true;
    }
    col[v] = -1;
    return false;
  };
  rec(rec, 0);
  return found;
}

inline bool colourable(int n, const EdgeList& edges, int s) { return count_colourings(n, edges, s, 1) > 0; }

// All proper s-colourings (small inputs only).
inline std::vector<std::vector<int>> all_colourings(int n, const EdgeList& edges, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> col(n, 0);
  std::vector<std::vector<int>> earlier(n);
  for (auto [a, b] : edges) {
    if (a < b) std::swap(a, b);
    earlier[a].push_back(b);
  }
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.push_back(col);
      return;
    }
    for (int c = 0; c < s; ++c) {
      bool ok = true;
      for (int w : earlier[v]) ok = ok && col[w] != c;
      if (!ok) continue;
      col[v] = c;
      self(self, v + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// Max over non-empty subsets of 2|E(S)|/|S|, by enumeration (n <= 20).
inline boost::rational<long long> max_avg_degree(int n, const EdgeList& edges) {
  boost::rational<long long> best(0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    long long e = 0;
    for (auto [a, b] : edges)
      if ((mask >> a & 1) && (mask >> b & 1)) ++e;
    best = std::max(best, boost::rational<long long>(2 * e, __builtin_popcount(mask)));
  }
  return best;
}

// Union-find scan: number of components and whether an edge closed a cycle.
struct ForestScan {
  int components = 0;
  bool acyclic = true;
};
inline ForestScan scan_forest(int n, const EdgeList& edges) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  auto find = [&](int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  ForestScan out;
  out.components = n;
  for (auto [a, b] : edges) {
    const int x = find(a), y = find(b);
    if (x == y) {
      out.acyclic = false;
    } else {
      p[x] = y;
      --out.components;
    }
  }
  return out;
}

inline int max_degree(int n, const EdgeList& edges) {
  std::vector<int> d(n, 0);
  for (auto [a, b] : edges) ++d[a], ++d[b];
  return n == 0 ? 0 : *std::max_element(d.begin(), d.end());
}

// Planarity with a certificate: Boyer-Myrvold supplies a rotation system,
// which is accepted only if its face count satisfies Euler's formula
// V - E + F = 1 + C (isolated vertices counted as components).
inline bool planar_certified(int n, const EdgeList& edges) {
  using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                  boost::property<boost::vertex_index_t, int>,
                                  boost::property<boost::edge_index_t, int>>;
  G g(n);
  for (auto [a, b] : edges) boost::add_edge(a, b, g);
  int k = 0;
  for (auto [it, end] = boost::edges(g); it != end; ++it) boost::put(boost::edge_index, g, *it, k++);
  using Embedding = std::vector<std::vector<boost::graph_traits<G>::edge_descriptor>>;
  Embedding emb(n);
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                           boost::boyer_myrvold_params::embedding = &emb[0]))
    return false;
  struct Counter : boost::planar_face_traversal_visitor {
    int faces = 0;
    void begin_face() { ++faces; }
  } counter;
  boost::planar_face_traversal(g, &emb[0], counter);
  // Each non-trivial component contributes its faces with the outer face
  // counted once per component by the traversal.
  const ForestScan fs = scan_forest(n, edges);
  int isolated = 0;
  std::vector<int> d(n, 0);
  for (auto [a, b] : edges) ++d[a], ++d[b];
  for (int v = 0; v < n; ++v) isolated += d[v] == 0;
  const int nontrivial = fs.components - isolated;
  const int v_used = n - isolated;
  const int e = static_cast<int>(edges.size());
  // Per non-trivial component V_i - E_i + F_i = 2.
  return v_used - e + counter.faces == 2 * nontrivial;
}

inline bool satisfiable_brute(const empire::CnfFormula& f) {
  const int n = f.num_vars;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool all = true;
    for (const auto& cl : f.clauses) {
      bool sat = false;
      for (int lit : cl) sat = sat || (((mask >> (std::abs(lit) - 1)) & 1) == (lit > 0 ? 1u : 0u));
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

inline empire::CnfFormula random_cnf(std::mt19937& rng, int n, int m, int k_max, bool exact_width = false) {
  empire::CnfFormula f;
  f.num_vars = n;
  for (int c = 0; c < m; ++c) {
    const int w = exact_width ? k_max : 1 + static_cast<int>(rng() % k_max);
    std::vector<int> cl;
    for (int i = 0; i < w; ++i) {
      const int v = 1 + static_cast<int>(rng() % n);
      cl.push_back(rng() % 2 ? v : -v);
    }
    f.clauses.push_back(cl);
  }
  return f;
}

inline empire::Graph random_graph(std::mt19937& rng, int n, double p) {
  std::vector<empire::Edge> e;
  std::uniform_real_distribution<double> u(0, 1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (u(rng) < p) e.push_back({a, b});
  return empire::Graph(n, std::move(e));
}

// Random r-empire graph: n vertices dealt into empires of size <= r.
inline empire::EmpireGraph random_empire_graph(std::mt19937& rng, int empires, int r, double p) {
  const int n = empires * r;
  std::vector<int> owner(n);
  for (int v = 0; v < n; ++v) owner[v] = v / r;
  std::shuffle(owner.begin(), owner.end(), rng);
  const empire::Graph g = random_graph(rng, n, p);
  return empire::EmpireGraph(n, owner, g.edges(), r);
}

}  // namespace oracle
