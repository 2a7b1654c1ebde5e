#include "empire/builder.hpp"

#include <algorithm>

namespace empire {

int EmpireGraphBuilder::add_empire(int size, const std::string& label) {
  if (size == 0) size = r_;
  if (size < 1) throw Error("builder: empire size must be positive");
  r_ = std::max(r_, size);
  const int e = static_cast<int>(slots_.size());
  std::vector<int> members;
  for (int k = 0; k < size; ++k) {
    members.push_back(static_cast<int>(empire_of_.size()));
    empire_of_.push_back(e);
  }
  slots_.push_back(std::move(members));
  removed_.push_back(false);
  if (!label.empty()) roles_.empires[label].push_back(e);
  return e;
}

int EmpireGraphBuilder::vertex(int e, int slot) const {
  if (e < 0 || e >= static_cast<int>(slots_.size()) || removed_[e])
    throw Error("builder: no such empire");
  if (slot < 0 || slot >= empire_size(e)) throw Error("builder: slot out of range");
  return slots_[e][slot];
}

void EmpireGraphBuilder::add_edge(int u, int v) {
  if (u == v) throw Error("builder: self-loop");
  edges_.insert(make_edge(u, v));
}

std::vector<Edge> EmpireGraphBuilder::detach_edges(int e) {
  std::vector<Edge> out;
  for (auto it = edges_.begin(); it != edges_.end();) {
    if (empire_of_[it->first] == e || empire_of_[it->second] == e) {
      out.push_back(*it);
      it = edges_.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

void EmpireGraphBuilder::remove_empire(int e) {
  detach_edges(e);
  removed_[e] = true;
}

Embedding EmpireGraphBuilder::embed(const EmpireGraph& g, std::vector<int> empire_map) {
  if (static_cast<int>(empire_map.size()) != g.num_empires())
    throw Error("builder: empire map size mismatch");
  Embedding out;
  out.vertex.assign(g.num_vertices(), -1);
  for (int j = 0; j < g.num_empires(); ++j) {
    if (empire_map[j] < 0) empire_map[j] = add_empire(g.r());
    const auto& members = g.members(j);
    if (static_cast<int>(members.size()) > empire_size(empire_map[j]))
      throw Error("builder: host empire too small for gadget empire");
    for (std::size_t k = 0; k < members.size(); ++k)
      out.vertex[members[k]] = vertex(empire_map[j], static_cast<int>(k));
  }
  for (const auto& [u, v] : g.edges()) add_edge(out.vertex[u], out.vertex[v]);
  out.empire = std::move(empire_map);
  return out;
}

Artifact EmpireGraphBuilder::build() const {
  std::vector<int> new_empire(slots_.size(), -1);
  std::vector<int> new_vertex(empire_of_.size(), -1);
  int ne = 0;
  for (std::size_t e = 0; e < slots_.size(); ++e)
    if (!removed_[e]) new_empire[e] = ne++;
  int nv = 0;
  std::vector<int> empire_of;
  for (std::size_t v = 0; v < empire_of_.size(); ++v) {
    const int e = new_empire[empire_of_[v]];
    if (e < 0) continue;
    new_vertex[v] = nv++;
    empire_of.push_back(e);
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& [u, v] : edges_) edges.push_back(make_edge(new_vertex[u], new_vertex[v]));

  auto remap = [](const std::map<std::string, std::vector<int>>& in, const std::vector<int>& ids) {
    std::map<std::string, std::vector<int>> out;
    for (const auto& [tag, list] : in) {
      std::vector<int> mapped;
      for (int x : list)
        if (ids[x] >= 0) mapped.push_back(ids[x]);
      if (list.empty() || !mapped.empty()) out[tag] = std::move(mapped);
    }
    return out;
  };
  Artifact a{EmpireGraph(nv, std::move(empire_of), std::move(edges), r_), {}};
  a.roles.vertices = remap(roles_.vertices, new_vertex);
  a.roles.empires = remap(roles_.empires, new_empire);
  return a;
}

}  // namespace empire
