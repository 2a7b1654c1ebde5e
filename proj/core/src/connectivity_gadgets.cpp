#include "empire/connectivity_gadgets.hpp"

#include <algorithm>
#include <string>

namespace empire {

namespace {

std::vector<int> iota_vec(int from, int to) {
  std::vector<int> v;
  for (int i = from; i < to; ++i) v.push_back(i);
  return v;
}

void check_E_params(int s, int q, int t) {
  if (s < 3) throw Error("E gadget: s must be at least 3");
  if (q < 1 || q * q < s - 1) throw Error("E gadget: q must be at least sqrt(s-1)");
  if (t < 1) throw Error("E gadget: t must be at least 1");
}

}  // namespace

Artifact build_E(int s, int q, int t) {
  check_E_params(s, q, t);
  const ELayout L{s, q, t};
  std::vector<Edge> edges;
  auto add = [&](int a, int b) { edges.push_back(make_edge(a, b)); };
  for (int b = 0; b < t; ++b) {
    for (int j = 1; j < s; ++j)
      for (int k = j + 1; k < s; ++k) add(L.w(b, j), L.w(b, k));
    for (int i = 1; i <= q; ++i)
      for (int j = 1; j < s; ++j) add(L.u(b, i), L.w(b, j));
    if (b == 0) {
      for (int j = 1; j < s; ++j) add(L.plug(), L.w(0, j));
      continue;
    }
    // sockets of the previous block, index taken mod q in 1..q
    auto sock = [&](int i) { return L.u(b - 1, (i - 1) % q + 1); };
    if (s % 2 == 1) {
      for (int i = 1; i <= (s - 1) / 2; ++i) {
        add(sock(i), L.w(b, 2 * i - 1));
        add(sock(i), L.w(b, 2 * i));
      }
    } else {
      for (int i = 1; i <= std::min(s - 1, q); ++i) add(L.u(b - 1, i), L.w(b, i));
      if (s - 1 > q) {
        for (int i = 1; i <= (s - 1 - q) / 2; ++i) {
          add(sock(i), L.w(b, q + 2 * i - 1));
          add(sock(i), L.w(b, q + 2 * i));
        }
        if (q % 2 == 0) add(L.u(b - 1, q), L.w(b, s - 1));
      }
    }
  }

  const int n = L.num_vertices();
  Artifact a{EmpireGraph(n, iota_vec(0, n), std::move(edges), 1), {}};
  std::vector<int> cc, internal, sockets, mono{L.plug()};
  for (int b = 0; b < t; ++b) {
    for (int j = 1; j < s; ++j) cc.push_back(L.w(b, j));
    for (int i = 1; i <= q; ++i) {
      (b + 1 < t ? internal : sockets).push_back(L.u(b, i));
      mono.push_back(L.u(b, i));
    }
  }
  for (auto* roles : {&a.roles.vertices, &a.roles.empires}) {
    (*roles)["plug"] = {L.plug()};
    (*roles)["colour_constraining"] = cc;
    if (!internal.empty()) (*roles)["internal"] = internal;
    (*roles)["sockets"] = sockets;
    (*roles)["monochromatic"] = mono;
  }
  return a;
}

std::vector<std::pair<int, int>> euler_tour(const Graph& g, int start) {
  const int n = g.num_vertices();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) % 2 == 1) throw Error("euler tour: vertex " + std::to_string(v) + " has odd degree");
  const int m = g.num_edges();
  if (m == 0) return {};
  if (start < 0)
    for (int v = 0; v < n && start < 0; ++v)
      if (g.degree(v) > 0) start = v;
  if (start >= n || g.degree(start) == 0) throw Error("euler tour: start vertex has no edges");

  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int id = 0; id < m; ++id) {
    const auto& [u, v] = g.edges()[id];
    adj[u].push_back({v, id});
    adj[v].push_back({u, id});
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<std::size_t> ptr(n, 0);
  std::vector<bool> used(m, false);
  std::vector<int> stack{start}, circuit;
  while (!stack.empty()) {
    const int v = stack.back();
    while (ptr[v] < adj[v].size() && used[adj[v][ptr[v]].second]) ++ptr[v];
    if (ptr[v] == adj[v].size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      const auto [w, id] = adj[v][ptr[v]];
      used[id] = true;
      stack.push_back(w);
    }
  }
  if (static_cast<int>(circuit.size()) != m + 1) throw Error("euler tour: edge set is not connected");
  std::reverse(circuit.begin(), circuit.end());
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m; ++i) out.push_back({circuit[i], circuit[i + 1]});
  return out;
}

bool connector_params_ok(int r, int s) {
  if (r < 2 || s < 3) return false;
  const long long lhs = 4LL * r + 3 - 2LL * s;
  return lhs > 0 && lhs * lhs > 8LL * r + 1;
}

long long connector_isolated_formula(int r, int s, int t) {
  const long long q = 2LL * r - (s - 1);
  const long long base = q * r - (q + 1) * (s - 1) / 2;
  if (s % 2 == 1) return r - 1 + t * base;
  return (q + 1) * (r - s / 2) + (t - 1LL) * (base - std::max(q - s - 1, 0LL));
}

namespace {

struct Realized {
  Artifact artifact;
  int isolated = 0;
};

// Splits trails[i] at its first interior visit of x. Returns false if none.
bool cut_at(std::vector<std::vector<int>>& trails, int x) {
  for (std::size_t i = 0; i < trails.size(); ++i) {
    auto& tr = trails[i];
    for (std::size_t k = 1; k + 1 < tr.size(); ++k)
      if (tr[k] == x) {
        std::vector<int> tail(tr.begin() + static_cast<long>(k), tr.end());
        tr.resize(k + 1);
        trails.insert(trails.begin() + static_cast<long>(i) + 1, std::move(tail));
        return true;
      }
  }
  return false;
}

std::vector<std::vector<int>> connector_trails(const Graph& E, const ELayout& L) {
  const int n = E.num_vertices();
  std::vector<int> odd;
  for (int v = 0; v < n; ++v)
    if (E.degree(v) % 2 == 1) odd.push_back(v);

  if (odd.empty()) {
    // One closed trail from the plug, first step plug -> w^1.
    const auto tour = euler_tour(E, L.plug());
    std::vector<int> cyc;
    for (const auto& st : tour) cyc.push_back(st.first);
    const int len = static_cast<int>(cyc.size());
    const int w1 = L.w(0, 1);
    auto find = [&]() {
      for (int k = 0; k < len; ++k)
        if (cyc[k] == L.plug() && cyc[(k + 1) % len] == w1) return k;
      return -1;
    };
    int k = find();
    if (k < 0) {
      std::reverse(cyc.begin(), cyc.end());
      k = find();
    }
    std::rotate(cyc.begin(), cyc.begin() + k, cyc.end());
    cyc.push_back(L.plug());
    return {cyc};
  }

  // Odd-degree vertices: join them to a dummy, tour, and cut at the dummy.
  const int dummy = n;
  std::vector<Edge> edges = E.edges();
  for (int v : odd) edges.push_back({v, dummy});
  const Graph aug(n + 1, std::move(edges));
  const auto tour = euler_tour(aug, dummy);
  std::vector<std::vector<int>> trails;
  std::vector<int> cur;
  for (const auto& [from, to] : tour) {
    if (to == dummy) {
      trails.push_back(std::move(cur));
      cur.clear();
    } else {
      if (cur.empty()) cur.push_back(from == dummy ? to : from);
      if (from != dummy) cur.push_back(to);
    }
  }
  if (!cur.empty()) trails.push_back(std::move(cur));

  // Extra cuts in internal groups bring the isolated count to the closed form.
  const int s = L.s, q = L.q;
  if (s % 2 == 0 && q >= s + 3) {
    const int cuts = (q - s - 3) / 2;
    for (int b = 0; b + 1 < L.t; ++b) {
      int done = 0;
      for (int i = 1; i <= q && done < cuts; ++i) {
        const int x = L.u(b, i);
        if (E.degree(x) % 2 == 1 && cut_at(trails, x)) ++done;
      }
    }
  }
  return trails;
}

Realized realize_connector(int r, int s, int t) {
  const int q = 2 * r - (s - 1);
  const ELayout L{s, q, t};
  const Artifact e = build_E(s, q, t);
  const Graph& E = e.graph.graph();
  const int n = E.num_vertices();
  const auto trails = connector_trails(E, L);

  EmpireGraphBuilder b(r);
  for (int v = 0; v < n; ++v) b.add_empire(r);
  std::vector<int> used(n, 0);
  auto fresh = [&](int emp) {
    if (used[emp] >= r) throw Error("connector: empire capacity exceeded");
    return b.vertex(emp, used[emp]++);
  };
  for (const auto& tr : trails) {
    int prev = fresh(tr[0]);
    for (std::size_t k = 1; k < tr.size(); ++k) {
      const int cur = fresh(tr[k]);
      b.add_edge(prev, cur);
      prev = cur;
    }
  }
  b.roles().empires = e.roles.empires;
  std::vector<int> z;
  for (int emp : e.roles.empire_set("monochromatic"))
    for (int k = used[emp]; k < r; ++k) z.push_back(b.vertex(emp, k));
  b.roles().vertices["Z"] = z;
  return Realized{b.build(), static_cast<int>(z.size())};
}

Artifact single_empire(int r) {
  Artifact a{EmpireGraph(r, std::vector<int>(r, 0), {}, r), {}};
  a.roles.empires["plug"] = {0};
  a.roles.empires["monochromatic"] = {0};
  a.roles.vertices["Z"] = iota_vec(0, r);
  return a;
}

void check_A_params(int r, int s, int m) {
  if (!connector_params_ok(r, s))
    throw Error("A gadget: (r,s)=(" + std::to_string(r) + "," + std::to_string(s) +
                ") outside 3 <= s < 2r - sqrt(2r+1/4) + 3/2");
  if (m < 1) throw Error("A gadget: m must be at least 1");
}

std::pair<int, Realized> choose_connector(int r, int s, int m) {
  const long long base = connector_isolated_formula(r, s, 1);
  const long long gain = connector_isolated_formula(r, s, 2) - base;
  int t = 1;
  if (m > base) t = static_cast<int>(1 + (m - base + gain - 1) / gain);
  Realized cur = realize_connector(r, s, t);
  while (cur.isolated < m) cur = realize_connector(r, s, ++t);
  while (t > 1) {
    Realized prev = realize_connector(r, s, t - 1);
    if (prev.isolated < m) break;
    cur = std::move(prev);
    --t;
  }
  return {t, std::move(cur)};
}

}  // namespace

Artifact build_A(int r, int s, int m) {
  check_A_params(r, s, m);
  if (m < r) return single_empire(r);
  return choose_connector(r, s, m).second.artifact;
}

int connector_blocks(int r, int s, int m) {
  check_A_params(r, s, m);
  if (m < r) return 0;
  return choose_connector(r, s, m).first;
}

DegreeDistribution degree_distribution(const Artifact& a) {
  if (!a.roles.has_empire_set("plug") || !a.roles.has_vertex_set("Z"))
    throw Error("degree distribution: not a connector gadget");
  const EmpireGraph& g = a.graph;
  auto count = [&](int e) {
    DegreeCounts c;
    for (int v : g.members(e)) {
      switch (g.graph().degree(v)) {
        case 0: ++c.deg0; break;
        case 1: ++c.deg1; break;
        case 2: ++c.deg2; break;
        default: throw Error("degree distribution: vertex of degree above 2");
      }
    }
    return c;
  };
  DegreeDistribution d;
  d.plug = count(a.roles.empire_set("plug").front());
  if (a.roles.has_empire_set("colour_constraining"))
    for (int e : a.roles.empire_set("colour_constraining")) d.colour_constraining.push_back(count(e));
  if (a.roles.has_empire_set("sockets"))
    for (int e : a.roles.empire_set("sockets")) d.sockets.push_back(count(e));
  if (a.roles.has_empire_set("internal")) {
    const auto& internal = a.roles.empire_set("internal");
    const std::size_t q = d.sockets.size();
    for (std::size_t i = 0; i < internal.size(); ++i) {
      if (i % q == 0) d.internal_groups.emplace_back();
      const auto c = count(internal[i]);
      auto& grp = d.internal_groups.back();
      grp.deg0 += c.deg0;
      grp.deg1 += c.deg1;
      grp.deg2 += c.deg2;
    }
  }
  return d;
}

Linearization linearize_in(EmpireGraphBuilder& b, int v, int r_out, int s, int extra) {
  std::vector<int> outside;
  for (const auto& [x, y] : b.detach_edges(v)) {
    const bool xin = b.empire_of(x) == v, yin = b.empire_of(y) == v;
    if (xin && yin) continue;
    outside.push_back(xin ? y : x);
  }
  const int m = static_cast<int>(outside.size());
  const Artifact a = build_A(r_out, s, std::max(m + extra, 1));
  Linearization out;
  out.embedding = b.embed(a.graph, std::vector<int>(a.graph.num_empires(), -1));
  const auto& z = a.roles.vertex_set("Z");
  for (int k = 0; k < m; ++k) {
    const int host = out.embedding.vertex[z[k]];
    b.add_edge(outside[k], host);
    out.simulating.push_back(host);
  }
  for (std::size_t k = m; k < z.size(); ++k) out.spare.push_back(out.embedding.vertex[z[k]]);
  for (int e : a.roles.empire_set("monochromatic")) out.monochromatic.push_back(out.embedding.empire[e]);
  b.remove_empire(v);
  return out;
}

Artifact linearize(const EmpireGraph& g, int v, int r_out, int s) {
  if (v < 0 || v >= g.num_empires()) throw Error("linearize: no such empire");
  EmpireGraphBuilder b(g.r());
  std::vector<int> host(g.num_vertices());
  for (int e = 0; e < g.num_empires(); ++e) {
    const auto& mem = g.members(e);
    b.add_empire(static_cast<int>(mem.size()));
    for (std::size_t k = 0; k < mem.size(); ++k) host[mem[k]] = b.vertex(e, static_cast<int>(k));
  }
  for (const auto& [x, y] : g.edges()) b.add_edge(host[x], host[y]);
  const auto lin = linearize_in(b, v, r_out, s);
  b.roles().vertices["Z"] = lin.simulating;
  return b.build();
}

}  // namespace empire
