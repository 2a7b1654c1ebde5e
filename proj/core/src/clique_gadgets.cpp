#include "empire/clique_gadgets.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "empire/walecki.hpp"

namespace empire {

std::vector<std::vector<int>> clique_gadget_paths(int r, int s) {
  if (r < 1 || s < 1 || s >= 2 * r)
    throw Error("B gadget: need 1 <= s < 2r, got r=" + std::to_string(r) + " s=" + std::to_string(s));
  const auto d = walecki(r);
  const int len = 2 * r + 1;
  std::vector<std::vector<int>> paths;
  for (const auto& cycle : d.cycles) {
    const int p = static_cast<int>(std::find(cycle.begin(), cycle.end(), 0) - cycle.begin());
    const int next = cycle[(p + 1) % len];
    const int prev = cycle[(p + len - 1) % len];
    const int step = next < prev ? 1 : len - 1;
    std::vector<int> path;
    for (int k = 1; k < len; ++k) path.push_back(cycle[(p + k * step) % len]);
    paths.push_back(std::move(path));
  }
  // Dropping empire s+2 from B_{r,s+1} joins its two path neighbours.
  for (int label = 2 * r; label > s + 1; --label)
    for (auto& path : paths) path.erase(std::remove(path.begin(), path.end(), label), path.end());
  return paths;
}

namespace {

struct BParts {
  std::vector<int> empire_of;
  std::vector<Edge> edges;
};

BParts b_parts(int r, int s) {
  const auto paths = clique_gadget_paths(r, s);
  BParts b;
  for (int v = 0; v < r * (s + 1); ++v) b.empire_of.push_back(v / r);
  for (int i = 0; i < r; ++i) {
    const auto& p = paths[i];
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
      b.edges.push_back(make_edge((p[k] - 1) * r + i, (p[k + 1] - 1) * r + i));
  }
  return b;
}

void check_empire(int e, int s, const char* what) {
  if (e < 0 || e > s) throw Error(std::string("B gadget: ") + what + " empire out of range");
}

}  // namespace

Artifact build_B(int r, int s) {
  auto b = b_parts(r, s);
  const int n = r * (s + 1);
  return Artifact{EmpireGraph(n, std::move(b.empire_of), std::move(b.edges), r), {}};
}

Artifact build_B_plus(int r, int s, int root_empire) {
  if (r < 2) throw Error("B+ gadget: r must be at least 2");
  check_empire(root_empire, s, "root");
  auto b = b_parts(r, s);
  for (int i = 0; i + 1 < r; ++i) b.edges.push_back(make_edge(root_empire * r + i, root_empire * r + i + 1));
  const int n = r * (s + 1);
  Artifact a{EmpireGraph(n, std::move(b.empire_of), std::move(b.edges), r), {}};
  a.roles.empires["root_empire"] = {root_empire};
  return a;
}

std::optional<std::pair<int, int>> find_B_minus_pair(int r, int s) {
  const auto paths = clique_gadget_paths(r, s);
  const auto& p = paths[0];
  if (p.size() < 2) return std::nullopt;
  std::map<Edge, int> mult;
  for (const auto& path : paths)
    for (std::size_t k = 0; k + 1 < path.size(); ++k) ++mult[make_edge(path[k], path[k + 1])];
  const std::pair<int, int> ends[2] = {{p[0], p[1]}, {p.back(), p[p.size() - 2]}};
  for (const auto& [u, v] : ends)
    if (mult[make_edge(u, v)] == 1) return std::make_pair(u - 1, v - 1);
  return std::nullopt;
}

Artifact build_B_minus(int r, int s, int u_empire, int v_empire) {
  check_empire(u_empire, s, "u");
  check_empire(v_empire, s, "v");
  const auto paths = clique_gadget_paths(r, s);
  const auto& p = paths[0];
  const int u = u_empire + 1, v = v_empire + 1;
  const bool at_end = p.size() >= 2 && ((p[0] == u && p[1] == v) ||
                                        (p.back() == u && p[p.size() - 2] == v));
  if (!at_end) throw Error("B- gadget: u_1 v_1 is not an end edge of the first path");
  int mult = 0;
  for (const auto& path : paths)
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
      if (make_edge(path[k], path[k + 1]) == make_edge(u, v)) ++mult;
  if (mult != 1) throw Error("B- gadget: u and v share more than one edge");

  auto b = b_parts(r, s);
  const Edge cut = make_edge(u_empire * r, v_empire * r);
  b.edges.erase(std::remove(b.edges.begin(), b.edges.end(), cut), b.edges.end());
  const int n = r * (s + 1);
  Artifact a{EmpireGraph(n, std::move(b.empire_of), std::move(b.edges), r), {}};
  a.roles.empires["u_empire"] = {u_empire};
  a.roles.empires["v_empire"] = {v_empire};
  a.roles.vertices["isolated"] = {u_empire * r};
  return a;
}

}  // namespace empire
