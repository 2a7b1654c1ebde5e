#pragma once

#include <set>
#include <string>
#include <vector>

#include "empire/empire_graph.hpp"

namespace empire {

/// Where an embedded graph's empires and vertices landed in the host.
struct Embedding {
  std::vector<int> empire;  // gadget empire -> host empire
  std::vector<int> vertex;  // gadget vertex -> host vertex
};

/// Incremental construction of empire graphs out of gadget copies.
///
/// Empires are created with a fixed number of vertex slots. Gadgets are glued
/// in by mapping their empires onto host empires; slot k of a gadget empire
/// lands on slot k of its host empire, so two gadgets mapped onto the same
/// host empire share vertices. Ids handed out stay valid until build(),
/// which drops removed empires and renumbers densely in creation order.
class EmpireGraphBuilder {
 public:
  explicit EmpireGraphBuilder(int r) : r_(r) {}

  /// size 0 means r. A non-empty label is recorded as an empire role.
  int add_empire(int size = 0, const std::string& label = {});
  int empire_size(int e) const { return static_cast<int>(slots_[e].size()); }
  int vertex(int e, int slot) const;
  int empire_of(int v) const { return empire_of_[v]; }
  int r() const { return r_; }

  void add_edge(int u, int v);
  /// Removes and returns every edge incident to a vertex of empire e.
  std::vector<Edge> detach_edges(int e);
  /// Drops empire e, its vertices and all incident edges.
  void remove_empire(int e);

  /// -1 in empire_map asks for a fresh empire sized like the gadget's r.
  Embedding embed(const EmpireGraph& g, std::vector<int> empire_map);

  RoleMap& roles() { return roles_; }
  Artifact build() const;

 private:
  int r_;
  std::vector<std::vector<int>> slots_;
  std::vector<int> empire_of_;
  std::vector<bool> removed_;
  std::set<Edge> edges_;
  RoleMap roles_;
};

}  // namespace empire
