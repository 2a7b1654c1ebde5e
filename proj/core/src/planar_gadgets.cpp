#include "empire/planar_gadgets.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>

#include "empire/graph_props.hpp"
#include "empire/io.hpp"

namespace empire {

namespace {

// Assigns edges (in order) to planar layers by depth-first search. Layers
// with equal class are interchangeable, so an empty layer is only opened if
// no lower empty layer of its class exists.
class LayerSearch {
 public:
  LayerSearch(int n, const std::vector<Edge>& edges, std::vector<int> cls, std::vector<bool> forbid0,
              long long budget)
      : n_(n), edges_(edges), cls_(std::move(cls)), forbid0_(std::move(forbid0)), budget_(budget),
        layers_(cls_.size()), assign_(edges.size(), -1) {}

  std::optional<std::vector<int>> run() {
    if (dfs(0)) return assign_;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t i) {
    if (i == edges_.size()) return true;
    const int L = static_cast<int>(layers_.size());
    for (int l = 0; l < L; ++l) {
      if (l == 0 && forbid0_[i]) continue;
      if (layers_[l].empty()) {
        bool lower_empty = false;
        for (int k = 0; k < l; ++k)
          if (cls_[k] == cls_[l] && layers_[k].empty()) lower_empty = true;
        if (lower_empty) continue;
      }
      if (++nodes_ > budget_) throw SearchBudgetExceeded("planar layer search: node budget exhausted");
      layers_[l].push_back(edges_[i]);
      if (is_planar(Graph(n_, layers_[l])) && dfs(i + 1)) {
        assign_[i] = l;
        return true;
      }
      layers_[l].pop_back();
    }
    return false;
  }

  int n_;
  const std::vector<Edge>& edges_;
  std::vector<int> cls_;
  std::vector<bool> forbid0_;
  long long budget_;
  long long nodes_ = 0;
  std::vector<std::vector<Edge>> layers_;
  std::vector<int> assign_;
};

// Layered empire graph: n empires of size L, edge k in layer assign[k]
// joins copy assign[k] of its two endpoint empires.
Artifact layered(int n, int L, const std::vector<Edge>& edges, const std::vector<int>& assign) {
  std::vector<int> empire_of;
  for (int v = 0; v < n * L; ++v) empire_of.push_back(v / L);
  std::vector<Edge> out;
  for (std::size_t k = 0; k < edges.size(); ++k)
    out.push_back(make_edge(edges[k].first * L + assign[k], edges[k].second * L + assign[k]));
  return Artifact{EmpireGraph(n * L, std::move(empire_of), std::move(out), L), {}};
}

// Recovers the assignment from a layered artifact; nullopt if it does not
// cover `edges` exactly with planar layers.
std::optional<std::vector<int>> unlayer(const Artifact& a, int n, int L, const std::vector<Edge>& edges) {
  const EmpireGraph& g = a.graph;
  if (g.num_vertices() != n * L || g.r() != L || g.num_edges() != static_cast<int>(edges.size()))
    return std::nullopt;
  std::map<Edge, int> layer_of;
  std::vector<std::vector<Edge>> layers(L);
  for (const auto& [x, y] : g.edges()) {
    if (x % L != y % L) return std::nullopt;
    const Edge e = make_edge(x / L, y / L);
    if (layer_of.count(e)) return std::nullopt;
    layer_of[e] = x % L;
    layers[x % L].push_back(e);
  }
  std::vector<int> assign;
  for (const auto& e : edges) {
    auto it = layer_of.find(e);
    if (it == layer_of.end()) return std::nullopt;
    assign.push_back(it->second);
  }
  for (const auto& layer : layers)
    if (!is_planar(Graph(n, layer))) return std::nullopt;
  return assign;
}

std::mutex memo_mutex;
std::map<std::string, std::vector<int>> memo;

std::vector<int> cached_search(const std::string& key, int n, int L, const std::vector<Edge>& edges,
                               const std::vector<int>& cls, const std::vector<bool>& forbid0,
                               const PlanarSearchOptions& opt, const std::string& what) {
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::optional<std::vector<int>> found;
  std::filesystem::path file;
  if (!opt.cache_dir.empty()) {
    file = std::filesystem::path(opt.cache_dir) / (key + ".eg");
    if (std::filesystem::exists(file)) {
      try {
        found = unlayer(parse_eg(read_text(file.string())), n, L, edges);
        if (found)
          for (std::size_t k = 0; k < edges.size(); ++k)
            if (forbid0[k] && (*found)[k] == 0) found.reset();
      } catch (const Error&) {
        found.reset();
      }
    }
  }
  if (!found) {
    found = LayerSearch(n, edges, cls, forbid0, opt.node_budget).run();
    if (!found) throw Error(what + ": no planar layering exists");
    if (!file.empty()) {
      try {
        std::filesystem::create_directories(file.parent_path());
        write_text(file.string(), to_eg_string(layered(n, L, edges, *found)));
      } catch (const std::exception&) {
        // cache is best effort
      }
    }
  }
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo[key] = *found;
  return *found;
}

}  // namespace

int complete_graph_thickness(int n) {
  if (n < 1) throw Error("thickness: n must be positive");
  if (n == 9 || n == 10) return 3;
  return (n + 7) / 6;
}

std::vector<std::vector<Edge>> planar_decompose_K(int n, int layers, const PlanarSearchOptions& opt) {
  if (n < 1 || layers < 1) throw Error("planar decomposition: n and layers must be positive");
  if (layers < complete_graph_thickness(n))
    throw Error("planar decomposition: K_" + std::to_string(n) + " needs at least " +
                std::to_string(complete_graph_thickness(n)) + " planar layers");
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  const std::string key = "K_n" + std::to_string(n) + "_l" + std::to_string(layers);
  const auto assign = cached_search(key, n, layers, edges, std::vector<int>(layers, 0),
                                    std::vector<bool>(edges.size(), false), opt, "planar decomposition");
  std::vector<std::vector<Edge>> out(layers);
  for (std::size_t k = 0; k < edges.size(); ++k) out[assign[k]].push_back(edges[k]);
  return out;
}

Artifact build_D(int r, int s, int u_empire, int v_empire, const PlanarSearchOptions& opt) {
  if (r < 2) throw Error("D gadget: r must be at least 2");
  const int limit = 6 * r - 3 - (r == 2 ? 2 : 0);
  if (s < 1 || s >= limit)
    throw Error("D gadget: need 1 <= s < " + std::to_string(limit) + " for r=" + std::to_string(r));
  if (u_empire < 0 || u_empire > s || v_empire < 0 || v_empire > s || u_empire == v_empire)
    throw Error("D gadget: u and v must be distinct empires in 0..s");

  // Canonical instance with u = 0, v = 1; v's edges stay out of layer 0.
  const int n = s + 1;
  std::vector<Edge> edges;
  std::vector<bool> forbid0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (a == 0 && b == 1) continue;
      edges.push_back({a, b});
      forbid0.push_back(a == 1 || b == 1);
    }
  std::vector<int> cls(r, 1);
  cls[0] = 0;
  const std::string key = "D_r" + std::to_string(r) + "_s" + std::to_string(s);
  const auto assign = cached_search(key, n, r, edges, cls, forbid0, opt, "D gadget");

  std::vector<int> label(n);
  label[0] = u_empire;
  label[1] = v_empire;
  for (int a = 2, next = 0; a < n; ++a, ++next) {
    while (next == u_empire || next == v_empire) ++next;
    label[a] = next;
  }
  std::vector<Edge> relabelled;
  for (const auto& [a, b] : edges) relabelled.push_back({label[a], label[b]});
  Artifact d = layered(n, r, relabelled, assign);
  d.roles.empires["u_empire"] = {u_empire};
  d.roles.empires["v_empire"] = {v_empire};
  d.roles.vertices["isolated"] = {v_empire * r};
  return d;
}

bool satisfies_D_conditions(const Artifact& d, int r, int s, int u_empire, int v_empire) {
  const EmpireGraph& g = d.graph;
  if (g.num_vertices() != r * (s + 1) || g.num_empires() != s + 1) return false;
  for (int e = 0; e < g.num_empires(); ++e)
    if (static_cast<int>(g.members(e).size()) != r) return false;
  if (g.graph().degree(g.members(v_empire)[0]) != 0) return false;
  const auto comp = components(g.graph());
  std::map<std::pair<int, int>, int> seen;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (seen[{comp[v], g.empire_of(v)}]++ > 0) return false;
  const ReducedGraph rg = reduce(g);
  for (int a = 0; a <= s; ++a)
    for (int b = a + 1; b <= s; ++b)
      if (make_edge(a, b) != make_edge(u_empire, v_empire) && !rg.adjacent(a, b)) return false;
  return is_planar(g.graph());
}

}  // namespace empire
