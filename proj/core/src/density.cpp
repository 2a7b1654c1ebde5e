#include "empire/density.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace empire {

namespace {

class Dinic {
 public:
  explicit Dinic(int n) : adj_(n), level_(n), it_(n) {}

  void add(int u, int v, long long cap) {
    adj_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap});
    adj_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, 0});
  }

  long long max_flow(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (long long f = dfs(s, t, std::numeric_limits<long long>::max())) total += f;
    }
    return total;
  }

  // Vertices reachable from s in the residual graph after max_flow.
  std::vector<bool> source_side(int s) {
    bfs(s, -1);
    std::vector<bool> out(adj_.size());
    for (std::size_t v = 0; v < adj_.size(); ++v) out[v] = level_[v] >= 0;
    return out;
  }

 private:
  struct Arc {
    int to;
    long long cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int id : adj_[v])
        if (arcs_[id].cap > 0 && level_[arcs_[id].to] < 0) {
          level_[arcs_[id].to] = level_[v] + 1;
          q.push(arcs_[id].to);
        }
    }
    return t >= 0 && level_[t] >= 0;
  }

  long long dfs(int v, int t, long long f) {
    if (v == t) return f;
    for (int& i = it_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
      Arc& a = arcs_[adj_[v][i]];
      if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
      if (long long d = dfs(a.to, t, std::min(f, a.cap))) {
        a.cap -= d;
        arcs_[adj_[v][i] ^ 1].cap += d;
        return d;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> it_;
};

// Maximizes q|E(S)| - p|V(S)| by max closure; returns the optimal S.
std::vector<int> best_subset(const Graph& g, long long p, long long q) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  const int src = n + m, sink = n + m + 1;
  Dinic d(n + m + 2);
  const long long inf = std::numeric_limits<long long>::max() / 4;
  for (int i = 0; i < m; ++i) {
    const auto& [u, v] = g.edges()[i];
    d.add(src, n + i, q);
    d.add(n + i, u, inf);
    d.add(n + i, v, inf);
  }
  for (int v = 0; v < n; ++v) d.add(v, sink, p);
  d.max_flow(src, sink);
  const auto side = d.source_side(src);
  std::vector<int> s;
  for (int v = 0; v < n; ++v)
    if (side[v]) s.push_back(v);
  return s;
}

long long edges_within(const Graph& g, const std::vector<int>& s) {
  std::vector<bool> in(g.num_vertices(), false);
  for (int v : s) in[v] = true;
  long long e = 0;
  for (const auto& [u, v] : g.edges())
    if (in[u] && in[v]) ++e;
  return e;
}

}  // namespace

Rational max_subgraph_avg_degree(const Graph& g) {
  if (g.num_vertices() == 0) throw Error("density: graph has no vertices");
  // Dinkelbach iteration on lambda = |E(S)|/|V(S)|, starting from the whole graph.
  Rational lambda(g.num_edges(), g.num_vertices());
  while (true) {
    const auto s = best_subset(g, lambda.numerator(), lambda.denominator());
    if (s.empty()) break;
    const Rational next(edges_within(g, s), static_cast<long long>(s.size()));
    if (next <= lambda) break;
    lambda = next;
  }
  return lambda * Rational(2);
}

bool in_sparse_class(const Graph& g, Rational sigma) {
  if (g.num_vertices() == 0) return true;
  return max_subgraph_avg_degree(g) <= sigma;
}

}  // namespace empire
