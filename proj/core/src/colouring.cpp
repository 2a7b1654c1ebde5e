#include "empire/colouring.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "empire/graph_props.hpp"

namespace empire {

namespace {

using Witness = InfeasibilityWitness;

// Induced subgraph on a sorted vertex list; local id i is verts[i].
Graph induced(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (local[u] >= 0 && local[v] >= 0) edges.push_back({local[u], local[v]});
  return Graph(static_cast<int>(verts.size()), std::move(edges));
}

bool connected_without(const Graph& g, const std::vector<bool>& gone) {
  const int n = g.num_vertices();
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbours(v))
      if (!gone[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == alive;
}

int smallest_free(const Graph& g, int v, const std::vector<int>& col, int s) {
  std::vector<bool> used(s, false);
  for (int w : g.neighbours(v))
    if (col[w] >= 0 && col[w] < s) used[col[w]] = true;
  for (int c = 0; c < s; ++c)
    if (!used[c]) return c;
  return -1;
}

// BFS from root over vertices with active[v] and col[v] < 0, then colour in
// reverse BFS order. Vertices already coloured act as fixed constraints.
bool greedy_bfs(const Graph& g, int root, const std::vector<bool>& active, std::vector<int>& col,
                int s) {
  std::vector<int> order{root};
  std::vector<bool> seen(g.num_vertices(), false);
  seen[root] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : g.neighbours(order[i]))
      if (active[w] && col[w] < 0 && !seen[w]) {
        seen[w] = true;
        order.push_back(w);
      }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int c = smallest_free(g, *it, col, s);
    if (c < 0) return false;
    col[*it] = c;
  }
  return true;
}

std::vector<int> all_vertices(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::vector<int> cycle_order(const Graph& g) {
  std::vector<int> order{0};
  int prev = -1, cur = 0;
  while (true) {
    int next = -1;
    for (int w : g.neighbours(cur))
      if (w != prev) {
        next = w;
        break;
      }
    if (next == 0 || next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

// Core of brooks_colour on local ids; g connected and s-regular.
std::variant<std::vector<int>, Witness> brooks_local(const Graph& g, int s) {
  const int n = g.num_vertices();
  if (n == s + 1) return Witness{Witness::Kind::CliqueFound, all_vertices(n)};
  std::vector<int> col(n, -1);
  if (s == 2) {
    if (n % 2 == 1) return Witness{Witness::Kind::OddCycleFound, cycle_order(g)};
    const auto order = cycle_order(g);
    for (int i = 0; i < n; ++i) col[order[i]] = i % 2;
    return col;
  }

  std::vector<bool> gone(n, false);
  for (int c = 0; c < n; ++c) {
    gone[c] = true;
    const bool cut = !connected_without(g, gone);
    gone[c] = false;
    if (!cut) continue;
    // Colour each piece of G - c together with c, rooted at c, then rename
    // colours in the piece so c always ends up with colour 0.
    std::vector<bool> done(n, false);
    done[c] = true;
    col[c] = 0;
    for (int start = 0; start < n; ++start) {
      if (done[start]) continue;
      std::vector<bool> piece(n, false);
      std::vector<int> stack{start};
      piece[start] = done[start] = true;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbours(v))
          if (w != c && !piece[w]) {
            piece[w] = done[w] = true;
            stack.push_back(w);
          }
      }
      piece[c] = true;
      std::vector<int> local(n, -1);
      if (!greedy_bfs(g, c, piece, local, s)) throw Error("brooks: piece colouring failed");
      const int a = local[c];
      for (int v = 0; v < n; ++v) {
        if (!piece[v] || v == c) continue;
        int x = local[v];
        if (x == a) x = 0;
        else if (x == 0) x = a;
        col[v] = x;
      }
    }
    return col;
  }

  for (int v = 0; v < n; ++v) {
    const auto& nb = g.neighbours(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const int x = nb[i], y = nb[j];
        if (g.adjacent(x, y)) continue;
        gone[x] = gone[y] = true;
        const bool ok = connected_without(g, gone);
        if (ok) {
          col[x] = col[y] = 0;
          std::vector<bool> active(n, true);
          active[x] = active[y] = false;
          if (!greedy_bfs(g, v, active, col, s)) throw Error("brooks: greedy step failed");
          return col;
        }
        gone[x] = gone[y] = false;
      }
  }
  throw Error("brooks: no admissible vertex triple in a 2-connected graph");
}

void check_regular_connected(const Graph& g, int s) {
  if (g.num_vertices() == 0) throw Error("brooks: empty graph");
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) != s) throw Error("brooks: graph is not " + std::to_string(s) + "-regular");
  if (num_components(g) != 1) throw Error("brooks: graph is not connected");
}

}  // namespace

PeelResult degeneracy_order(const ReducedGraph& rg) {
  const Graph& g = rg.graph;
  const int n = g.num_vertices();
  std::vector<int> deg(n);
  std::set<std::pair<int, int>> queue;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.insert({deg[v], v});
  }
  std::vector<bool> removed(n, false);
  PeelResult out;
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    out.ordering.push_back(v);
    out.degeneracy = std::max(out.degeneracy, d);
    for (int w : g.neighbours(v))
      if (!removed[w]) {
        queue.erase({deg[w], w});
        queue.insert({--deg[w], w});
      }
  }
  return out;
}

ColourOutcome greedy_colour(const ReducedGraph& rg, const std::vector<int>& ordering, int s) {
  const Graph& g = rg.graph;
  const int n = g.num_vertices();
  if (static_cast<int>(ordering.size()) != n) throw Error("greedy: ordering is not a permutation");
  std::vector<int> col(n, -1);
  for (auto it = ordering.rbegin(); it != ordering.rend(); ++it) {
    const int v = *it;
    if (v < 0 || v >= n || col[v] >= 0) throw Error("greedy: ordering is not a permutation");
    const int c = smallest_free(g, v, col, s);
    if (c < 0) {
      std::vector<int> blockers{v};
      for (int w : g.neighbours(v))
        if (col[w] >= 0) blockers.push_back(w);
      return Witness{Witness::Kind::ExhaustedSearch, blockers};
    }
    col[v] = c;
  }
  return Colouring{col, s};
}

ColourOutcome brooks_colour(const ReducedGraph& rg, int s) {
  check_regular_connected(rg.graph, s);
  auto r = brooks_local(rg.graph, s);
  if (auto* w = std::get_if<Witness>(&r)) return *w;
  return Colouring{std::get<std::vector<int>>(r), s};
}

ColourOutcome sparse_colour(const EmpireGraph& g, Rational sigma) {
  const Rational rs = sigma * Rational(g.r());
  if (rs.denominator() != 1) throw Error("sparse_colour: r*sigma must be an integer");
  const int s = static_cast<int>(rs.numerator());
  if (s < 0) throw Error("sparse_colour: negative palette");
  const ReducedGraph rg = reduce(g);
  const Graph& h = rg.graph;
  const int n = h.num_vertices();

  // Peel vertices of degree < s, smallest id first.
  std::vector<int> deg(n);
  std::set<std::pair<int, int>> queue;
  for (int v = 0; v < n; ++v) {
    deg[v] = h.degree(v);
    queue.insert({deg[v], v});
  }
  std::vector<bool> peeled(n, false);
  std::vector<int> order;
  while (!queue.empty() && queue.begin()->first < s) {
    const int v = queue.begin()->second;
    queue.erase(queue.begin());
    peeled[v] = true;
    order.push_back(v);
    for (int w : h.neighbours(v))
      if (!peeled[w]) {
        queue.erase({deg[w], w});
        queue.insert({--deg[w], w});
      }
  }

  std::vector<int> col(n, -1);
  std::vector<int> residue;
  for (int v = 0; v < n; ++v)
    if (!peeled[v]) residue.push_back(v);
  if (!residue.empty()) {
    const Graph rest = induced(h, residue);
    const auto comp = components(rest);
    const int nc = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    for (int c = 0; c < nc; ++c) {
      std::vector<int> local_ids, global_ids;
      for (int i = 0; i < rest.num_vertices(); ++i)
        if (comp[i] == c) {
          local_ids.push_back(i);
          global_ids.push_back(residue[i]);
        }
      const Graph piece = induced(rest, local_ids);
      for (int v = 0; v < piece.num_vertices(); ++v)
        if (piece.degree(v) != s)
          throw Error("sparse_colour: residue is not " + std::to_string(s) +
                      "-regular; graph is denser than sigma allows");
      auto r = brooks_local(piece, s);
      if (auto* w = std::get_if<Witness>(&r)) {
        for (int& e : w->empires) e = global_ids[e];
        return *w;
      }
      const auto& pc = std::get<std::vector<int>>(r);
      for (std::size_t i = 0; i < global_ids.size(); ++i) col[global_ids[i]] = pc[i];
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int c = smallest_free(h, *it, col, s);
    if (c < 0) throw Error("sparse_colour: peeled vertex has no free colour");
    col[*it] = c;
  }
  return Colouring{col, s};
}

VerifyResult verify_colouring(const EmpireGraph& g, const Colouring& c) {
  if (static_cast<int>(c.colour_of.size()) != g.num_empires())
    throw Error("verify: colouring does not cover every empire");
  for (int x : c.colour_of)
    if (x < 0 || x >= c.s) throw Error("verify: colour out of range");
  VerifyResult out;
  for (const auto& [u, v] : g.edges()) {
    const int a = g.empire_of(u), b = g.empire_of(v);
    if (a != b && c.colour_of[a] == c.colour_of[b]) out.violated.push_back({u, v});
  }
  out.ok = out.violated.empty();
  return out;
}

}  // namespace empire
