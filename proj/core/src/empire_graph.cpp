#include "empire/empire_graph.hpp"

#include <algorithm>
#include <string>

namespace empire {

Graph::Graph(int num_vertices, std::vector<Edge> edges) : n_(num_vertices) {
  if (num_vertices < 0) throw Error("graph: negative vertex count");
  for (auto& e : edges) {
    if (e.first == e.second) throw Error("graph: self-loop at vertex " + std::to_string(e.first));
    if (e.first < 0 || e.second < 0 || e.first >= n_ || e.second >= n_)
      throw Error("graph: edge endpoint out of range");
    e = make_edge(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

EmpireGraph::EmpireGraph(int num_vertices, std::vector<int> empire_of,
                         std::vector<Edge> edges, int r)
    : graph_(num_vertices, std::move(edges)), empire_of_(std::move(empire_of)), r_(r) {
  if (r < 1) throw Error("empire graph: r must be positive");
  if (static_cast<int>(empire_of_.size()) != num_vertices)
    throw Error("empire graph: every vertex needs exactly one empire id");
  int num_empires = 0;
  for (int e : empire_of_) {
    if (e < 0) throw Error("empire graph: negative empire id");
    num_empires = std::max(num_empires, e + 1);
  }
  members_.assign(num_empires, {});
  for (int v = 0; v < num_vertices; ++v) members_[empire_of_[v]].push_back(v);
  for (int e = 0; e < num_empires; ++e) {
    if (members_[e].empty())
      throw Error("empire graph: empire ids must be dense, " + std::to_string(e) + " is empty");
    if (static_cast<int>(members_[e].size()) > r_)
      throw Error("empire graph: empire " + std::to_string(e) + " exceeds r");
  }
}

EmpireGraph EmpireGraph::from_graph(const Graph& g) {
  std::vector<int> ids(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) ids[v] = v;
  return EmpireGraph(g.num_vertices(), std::move(ids), g.edges(), 1);
}

bool EmpireGraph::is_strict() const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](const auto& m) { return static_cast<int>(m.size()) == r_; });
}

int ReducedGraph::multi_degree(int e) const {
  int total = 0;
  for (int f : graph.neighbours(e)) total += multiplicity.at(make_edge(e, f));
  return total;
}

ReducedGraph reduce(const EmpireGraph& g) {
  ReducedGraph rg;
  std::vector<Edge> pairs;
  for (const auto& [u, v] : g.edges()) {
    const int a = g.empire_of(u);
    const int b = g.empire_of(v);
    if (a == b) continue;
    const Edge e = make_edge(a, b);
    if (rg.multiplicity[e]++ == 0) pairs.push_back(e);
  }
  rg.graph = Graph(g.num_empires(), std::move(pairs));
  return rg;
}

ReducedGraph as_reduced(const Graph& g) {
  ReducedGraph rg;
  rg.graph = g;
  for (const auto& e : g.edges()) rg.multiplicity[e] = 1;
  return rg;
}

const char* to_string(InfeasibilityWitness::Kind kind) {
  switch (kind) {
    case InfeasibilityWitness::Kind::CliqueFound: return "CliqueFound";
    case InfeasibilityWitness::Kind::OddCycleFound: return "OddCycleFound";
    case InfeasibilityWitness::Kind::ExhaustedSearch: return "ExhaustedSearch";
  }
  return "?";
}

const std::vector<int>& RoleMap::vertex_set(const std::string& tag) const {
  auto it = vertices.find(tag);
  if (it == vertices.end()) throw Error("missing vertex role '" + tag + "'");
  return it->second;
}

const std::vector<int>& RoleMap::empire_set(const std::string& tag) const {
  auto it = empires.find(tag);
  if (it == empires.end()) throw Error("missing empire role '" + tag + "'");
  return it->second;
}

}  // namespace empire
