#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace empire {

/// Thrown for precondition violations and malformed inputs across the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  /// Self-loops are rejected; duplicate pairs are collapsed.
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// A graph together with a partition of its vertices into empires.
///
/// Empire ids are dense from 0. Every empire holds at least one and at most
/// r vertices; is_strict() reports whether all of them hold exactly r.
/// Intra-empire edges are legal and carry no colouring constraint.
class EmpireGraph {
 public:
  EmpireGraph() = default;
  EmpireGraph(int num_vertices, std::vector<int> empire_of,
              std::vector<Edge> edges, int r);

  /// Each vertex is its own empire (r = 1).
  static EmpireGraph from_graph(const Graph& g);

  int num_vertices() const { return graph_.num_vertices(); }
  int num_empires() const { return static_cast<int>(members_.size()); }
  int num_edges() const { return graph_.num_edges(); }
  int r() const { return r_; }
  const Graph& graph() const { return graph_; }
  const std::vector<Edge>& edges() const { return graph_.edges(); }
  int empire_of(int v) const { return empire_of_[v]; }
  const std::vector<int>& empire_map() const { return empire_of_; }
  /// Vertices of empire e in increasing id order.
  const std::vector<int>& members(int e) const { return members_[e]; }
  bool is_strict() const;

 private:
  Graph graph_;
  std::vector<int> empire_of_;
  std::vector<std::vector<int>> members_;
  int r_ = 1;
};

/// Graph on empire ids obtained by contracting every empire to a point.
/// Loops are dropped and parallel edges collapsed; multiplicity keeps the
/// number of vertex-level edges behind each adjacency.
struct ReducedGraph {
  Graph graph;
  std::map<Edge, int> multiplicity;

  int num_empires() const { return graph.num_vertices(); }
  bool adjacent(int a, int b) const { return graph.adjacent(a, b); }
  /// Number of cross-empire vertex edges at empire e (the multigraph degree).
  int multi_degree(int e) const;
};

/// Contracts every empire of g to a pseudo-vertex.
ReducedGraph reduce(const EmpireGraph& g);

/// Wraps a plain graph as a reduced graph with unit multiplicities.
ReducedGraph as_reduced(const Graph& g);

/// Colour per empire, each in [0, s).
struct Colouring {
  std::vector<int> colour_of;
  int s = 0;
};

struct InfeasibilityWitness {
  enum class Kind { CliqueFound, OddCycleFound, ExhaustedSearch };
  Kind kind = Kind::ExhaustedSearch;
  std::vector<int> empires;
};

const char* to_string(InfeasibilityWitness::Kind kind);

/// Role-tagged vertex and empire sets attached to a constructed graph.
struct RoleMap {
  std::map<std::string, std::vector<int>> vertices;
  std::map<std::string, std::vector<int>> empires;

  const std::vector<int>& vertex_set(const std::string& tag) const;
  const std::vector<int>& empire_set(const std::string& tag) const;
  bool has_vertex_set(const std::string& tag) const { return vertices.count(tag) != 0; }
  bool has_empire_set(const std::string& tag) const { return empires.count(tag) != 0; }
};

/// An empire graph plus its role annotations; produced by every gadget
/// constructor and reduction.
struct Artifact {
  EmpireGraph graph;
  RoleMap roles;
};

using GadgetArtifact = Artifact;

}  // namespace empire
