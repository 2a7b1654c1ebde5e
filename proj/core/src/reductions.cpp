#include "empire/reductions.hpp"

#include <algorithm>
#include <string>

#include "empire/builder.hpp"
#include "empire/clique_gadgets.hpp"
#include "empire/connectivity_gadgets.hpp"

namespace empire {

namespace {

std::string idx(int i) { return std::to_string(i); }

std::vector<std::vector<int>> padded_3cnf(const CnfFormula& phi, const char* who) {
  std::vector<std::vector<int>> out;
  for (const auto& cl : phi.clauses) {
    if (cl.empty()) throw Error(std::string(who) + ": empty clause");
    if (cl.size() > 3) throw Error(std::string(who) + ": clause wider than 3");
    auto p = cl;
    while (p.size() < 3) p.push_back(cl.back());
    out.push_back(std::move(p));
  }
  return out;
}

// Fresh connector copy whose Z vertices are handed out one at a time.
struct Connector {
  std::vector<int> z;
  std::vector<int> mono;
  std::size_t next = 0;

  int take() {
    if (next >= z.size()) throw Error("reduction: connector ran out of monochromatic vertices");
    return z[next++];
  }
};

Connector embed_connector(EmpireGraphBuilder& b, int r, int s, int m) {
  const Artifact a = build_A(r, s, std::max(m, 1));
  const auto emb = b.embed(a.graph, std::vector<int>(a.graph.num_empires(), -1));
  Connector c;
  for (int v : a.roles.vertex_set("Z")) c.z.push_back(emb.vertex[v]);
  for (int e : a.roles.empire_set("monochromatic")) c.mono.push_back(emb.empire[e]);
  return c;
}

// Clause widget on five fresh empires, an OR of three literals. t1, t2 are vertices
// standing for T; lit[k] for the k-th literal of the clause.
void clause_widget(EmpireGraphBuilder& b, int r, int t1, int t2, const int lit[3],
                   RoleMap& roles, int clause) {
  int c[5];
  for (int j = 0; j < 5; ++j) {
    c[j] = b.add_empire(r);
    roles.empires["c" + idx(clause) + "_" + idx(j + 1)] = {c[j]};
  }
  auto v = [&](int j, int slot) { return b.vertex(c[j - 1], slot); };
  b.add_edge(t1, v(1, 0));
  b.add_edge(v(1, 0), v(3, 0));
  b.add_edge(v(3, 0), v(4, 0));
  b.add_edge(v(4, 0), v(5, 0));
  b.add_edge(v(5, 0), v(3, 1));
  b.add_edge(t2, v(2, 0));
  b.add_edge(v(2, 0), v(1, 1));
  b.add_edge(v(4, 1), lit[0]);
  b.add_edge(v(5, 1), lit[1]);
  b.add_edge(v(2, 1), lit[2]);
}

}  // namespace

Artifact sat3_to_lforest(const CnfFormula& phi, int r) {
  if (r < 2) throw Error("sat3_to_lforest: r must be at least 2");
  const auto clauses = padded_3cnf(phi, "sat3_to_lforest");
  const int n = phi.num_vars, m = static_cast<int>(clauses.size());

  EmpireGraphBuilder b(r);
  RoleMap roles;
  const int T = b.add_empire(r), F = b.add_empire(r), X = b.add_empire(r);
  b.embed(build_B(2, 2).graph, {T, F, X});
  const auto lin_t = linearize_in(b, T, r, 3, 2 * m);
  const auto lin_x = linearize_in(b, X, r, 3, n);
  roles.empires["T"] = lin_t.monochromatic;
  roles.empires["F"] = {F};
  roles.empires["X1"] = lin_x.monochromatic;

  std::vector<int> occ(2 * n + 1, 0);
  for (const auto& cl : clauses)
    for (int lit : cl) ++occ[n + lit];
  std::vector<Connector> pos, neg;
  for (int i = 1; i <= n; ++i) {
    pos.push_back(embed_connector(b, r, 3, occ[n + i] + 2));
    neg.push_back(embed_connector(b, r, 3, occ[n - i] + 2));
    auto& a = pos.back();
    auto& na = neg.back();
    const int z = lin_x.spare.at(i - 1);
    const int za = a.take(), zna = na.take();
    b.add_edge(z, za);
    b.add_edge(z, zna);
    b.add_edge(a.take(), na.take());
    roles.empires["a" + idx(i)] = a.mono;
    roles.empires["abar" + idx(i)] = na.mono;
  }

  for (int i = 0; i < m; ++i) {
    int lit[3];
    for (int k = 0; k < 3; ++k) {
      const int l = clauses[i][k];
      lit[k] = (l > 0 ? pos[l - 1] : neg[-l - 1]).take();
    }
    clause_widget(b, r, lin_t.spare.at(2 * i), lin_t.spare.at(2 * i + 1), lit, roles, i + 1);
  }
  b.roles() = roles;
  return b.build();
}

Artifact sat3_to_tree(const CnfFormula& phi) {
  const auto clauses = padded_3cnf(phi, "sat3_to_tree");
  const int r = 2, n = phi.num_vars;

  EmpireGraphBuilder b(r);
  RoleMap roles;
  const int T = b.add_empire(r, "T"), F = b.add_empire(r, "F"), X = b.add_empire(r, "X1");
  b.embed(build_B_plus(2, 2, 0).graph, {T, F, X});
  std::vector<int> pos, neg;
  const Artifact triangle = build_B(2, 2);
  for (int i = 1; i <= n; ++i) {
    pos.push_back(b.add_empire(r, "a" + idx(i)));
    neg.push_back(b.add_empire(r, "abar" + idx(i)));
    b.embed(triangle.graph, {pos.back(), neg.back(), X});
  }
  // The widget's two T ends go to the two vertices of T and every literal end
  // to the first vertex of the literal's empire: each widget path then meets
  // the truth component in exactly one vertex, so the result stays a tree.
  roles = b.roles();
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    int lit[3];
    for (int k = 0; k < 3; ++k) {
      const int l = clauses[i][k];
      lit[k] = b.vertex(l > 0 ? pos[l - 1] : neg[-l - 1], 0);
    }
    clause_widget(b, r, b.vertex(T, 0), b.vertex(T, 1), lit, roles, static_cast<int>(i) + 1);
  }
  b.roles() = roles;
  return b.build();
}

Artifact pad_empires(const Artifact& g, int r_from, int r_to) {
  if (r_to < r_from) throw Error("pad_empires: r_to must be at least r_from");
  const EmpireGraph& eg = g.graph;
  EmpireGraphBuilder b(r_to);
  std::vector<int> host(eg.num_vertices());
  for (int e = 0; e < eg.num_empires(); ++e) {
    const auto& mem = eg.members(e);
    if (static_cast<int>(mem.size()) != r_from)
      throw Error("pad_empires: empire " + idx(e) + " does not have " + idx(r_from) + " vertices");
    b.add_empire(r_to);
    for (int k = 0; k < r_from; ++k) host[mem[k]] = b.vertex(e, k);
    for (int k = r_from; k < r_to; ++k) b.add_edge(b.vertex(e, 0), b.vertex(e, k));
  }
  for (const auto& [x, y] : eg.edges()) b.add_edge(host[x], host[y]);
  b.roles().empires = g.roles.empires;
  for (const auto& [tag, vs] : g.roles.vertices) {
    auto& out = b.roles().vertices[tag];
    for (int v : vs) out.push_back(host[v]);
  }
  return b.build();
}

Artifact fg_to_lforest(const FormulaGraph& fg, int r) {
  const int s = fg.s;
  if (s <= 3) throw Error("fg_to_lforest: s must exceed 3");
  if (!connector_params_ok(r, s))
    throw Error("fg_to_lforest: (r,s)=(" + idx(r) + "," + idx(s) + ") outside the connector range");
  const Graph& g = fg.graph;
  EmpireGraphBuilder b(r);
  std::vector<Connector> copy;
  for (int v = 0; v < g.num_vertices(); ++v) copy.push_back(embed_connector(b, r, s, g.degree(v)));
  for (const auto& [x, y] : g.edges()) b.add_edge(copy[x].take(), copy[y].take());
  RoleMap roles;
  for (const auto& [tag, vs] : formula_graph_artifact(fg).roles.empires)
    roles.empires[tag] = copy[vs.front()].mono;
  b.roles() = roles;
  return b.build();
}

namespace {

// Shared skeleton of the tree and planar constructions. The two differ only
// in how a clique on s empires is realized and in which gadget forces a fresh
// empire W to repeat the colour of a host empire.
class FormulaGraphEmbedder {
 public:
  FormulaGraphEmbedder(const FormulaGraph& fg, int r, bool planar, const PlanarSearchOptions& opt)
      : fg_(fg), r_(r), s_(fg.s), planar_(planar), opt_(opt), b_(r) {
    if (planar_) {
      layers_ = planar_decompose_K(s_, r_, opt_);
      forcing_ = build_D(r_, s_, 0, 1, opt_);
    } else {
      const auto pair = find_B_minus_pair(r_, s_);
      if (!pair) throw Error("fg_to_tree: no usable B- gadget for r=" + idx(r_) + ", s=" + idx(s_));
      forcing_ = build_B_minus(r_, s_, pair->first, pair->second);
    }
    const int iso = forcing_.roles.vertex_set("isolated").front();
    w_side_ = forcing_.graph.empire_of(iso);
    const int u = forcing_.roles.empire_set("u_empire").front();
    const int v = forcing_.roles.empire_set("v_empire").front();
    host_side_ = w_side_ == u ? v : u;
    iso_ = iso;
  }

  Artifact run() {
    const int T = b_.add_empire(r_, "T"), F = b_.add_empire(r_, "F");
    std::vector<int> truth{T, F};
    for (int j = 1; j <= s_ - 2; ++j) truth.push_back(b_.add_empire(r_, "X" + idx(j)));
    clique(truth, true);

    std::vector<int> pos, neg;
    for (int i = 1; i <= fg_.n; ++i) {
      const int a = b_.add_empire(r_, "a" + idx(i)), na = b_.add_empire(r_, "abar" + idx(i));
      for (int e : {a, na})
        for (int k = 1; k < r_; ++k) b_.add_edge(b_.vertex(e, 0), b_.vertex(e, k));
      b_.add_edge(b_.vertex(a, 0), b_.vertex(na, 0));
      b_.add_edge(b_.vertex(a, 0), b_.vertex(truth[2], 0));
      for (int j = 2; j <= s_ - 2; ++j)
        b_.add_edge(force(truth[1 + j], "W" + idx(j) + "_a" + idx(i)), b_.vertex(a, 0));
      for (int j = 1; j <= s_ - 2; ++j)
        b_.add_edge(force(truth[1 + j], "W" + idx(j) + "_abar" + idx(i)), b_.vertex(na, 0));
      pos.push_back(a);
      neg.push_back(na);
    }

    for (int i = 1; i <= fg_.m; ++i) {
      std::vector<int> group{T};
      for (int j = 1; j < s_; ++j) group.push_back(b_.add_empire(r_, "c" + idx(i) + "_" + idx(j)));
      clique(group, false);
      for (int j = 1; j < s_; ++j) {
        int target = F;
        if (j <= fg_.k) {
          const int l = fg_.clauses[i - 1][j - 1];
          target = l > 0 ? pos[l - 1] : neg[-l - 1];
        }
        b_.add_edge(force(group[j], "b" + idx(i) + "_" + idx(j)), b_.vertex(target, 0));
      }
    }
    return b_.build();
  }

 private:
  // Clique on s host empires. Trees use B_{r,s-1} (B+ rooted at the first
  // host for the truth gadget); planar graphs put layer l on copy l.
  void clique(const std::vector<int>& hosts, bool root) {
    if (planar_) {
      for (std::size_t l = 0; l < layers_.size(); ++l)
        for (const auto& [x, y] : layers_[l])
          b_.add_edge(b_.vertex(hosts[x], static_cast<int>(l)), b_.vertex(hosts[y], static_cast<int>(l)));
      return;
    }
    const Artifact g = root ? build_B_plus(r_, s_ - 1, 0) : build_B(r_, s_ - 1);
    b_.embed(g.graph, hosts);
  }

  // Attaches a forcing gadget to `host` and returns the isolated vertex of
  // its fresh empire W, which any colouring gives the host's colour.
  int force(int host, const std::string& label) {
    std::vector<int> map(forcing_.graph.num_empires(), -1);
    map[host_side_] = host;
    map[w_side_] = b_.add_empire(r_, label);
    return b_.embed(forcing_.graph, map).vertex[iso_];
  }

  const FormulaGraph& fg_;
  int r_, s_;
  bool planar_;
  PlanarSearchOptions opt_;
  EmpireGraphBuilder b_;
  std::vector<std::vector<Edge>> layers_;
  Artifact forcing_;
  int w_side_ = 0, host_side_ = 0, iso_ = 0;
};

}  // namespace

Artifact fg_to_tree(const FormulaGraph& fg, int r) {
  if (r < 3 || fg.s <= 3 || fg.s >= 2 * r)
    throw Error("fg_to_tree: need r >= 3 and 3 < s < 2r (r=" + idx(r) + ", s=" + idx(fg.s) + ")");
  return FormulaGraphEmbedder(fg, r, false, {}).run();
}

Artifact fg_to_planar(const FormulaGraph& fg, int r, const PlanarSearchOptions& opt) {
  const int limit = 6 * r - 3 - (r == 2 ? 2 : 0);
  if (r < 2 || fg.s < 2 * r || fg.s >= limit)
    throw Error("fg_to_planar: need r >= 2 and 2r <= s < " + idx(limit) + " (r=" + idx(r) +
                ", s=" + idx(fg.s) + ")");
  return FormulaGraphEmbedder(fg, r, true, opt).run();
}

}  // namespace empire
