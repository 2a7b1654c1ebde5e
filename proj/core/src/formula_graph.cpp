#include "empire/formula_graph.hpp"

#include <string>

namespace empire {

FormulaGraph ksat_to_formula_graph(const CnfFormula& phi, int s, int k) {
  if (k < 0) k = phi.k();
  if (s < 3) throw Error("formula graph: s must be at least 3");
  if (k < 1 || k >= s) throw Error("formula graph: need 1 <= k < s");
  FormulaGraph fg;
  fg.s = s;
  fg.k = k;
  fg.n = phi.num_vars;
  fg.m = phi.num_clauses();
  for (const auto& cl : phi.clauses) {
    if (cl.empty()) throw Error("formula graph: empty clause");
    if (static_cast<int>(cl.size()) > k)
      throw Error("formula graph: clause wider than k=" + std::to_string(k));
    auto padded = cl;
    while (static_cast<int>(padded.size()) < k) padded.push_back(cl.back());
    fg.clauses.push_back(std::move(padded));
  }

  std::vector<Edge> edges;
  auto clique = [&](const std::vector<int>& vs) {
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) edges.push_back({vs[a], vs[b]});
  };
  std::vector<int> truth{fg.T(), fg.F()};
  for (int j = 1; j <= s - 2; ++j) truth.push_back(fg.X(j));
  clique(truth);
  for (int i = 1; i <= fg.n; ++i) {
    edges.push_back({fg.pos(i), fg.neg(i)});
    for (int j = 1; j <= s - 2; ++j) {
      edges.push_back({fg.pos(i), fg.X(j)});
      edges.push_back({fg.neg(i), fg.X(j)});
    }
  }
  for (int i = 1; i <= fg.m; ++i) {
    std::vector<int> group{fg.T()};
    for (int j = 1; j < s; ++j) group.push_back(fg.c(i, j));
    clique(group);
    for (int j = 1; j < s; ++j)
      edges.push_back({fg.c(i, j), j <= k ? fg.literal(fg.clauses[i - 1][j - 1]) : fg.F()});
  }
  fg.graph = Graph(fg.num_vertices(), std::move(edges));
  return fg;
}

Artifact formula_graph_artifact(const FormulaGraph& fg) {
  Artifact a{EmpireGraph::from_graph(fg.graph), {}};
  auto& e = a.roles.empires;
  e["T"] = {fg.T()};
  e["F"] = {fg.F()};
  for (int j = 1; j <= fg.s - 2; ++j) e["X" + std::to_string(j)] = {fg.X(j)};
  for (int i = 1; i <= fg.n; ++i) {
    e["a" + std::to_string(i)] = {fg.pos(i)};
    e["abar" + std::to_string(i)] = {fg.neg(i)};
  }
  for (int i = 1; i <= fg.m; ++i)
    for (int j = 1; j < fg.s; ++j) e["c" + std::to_string(i) + "_" + std::to_string(j)] = {fg.c(i, j)};
  return a;
}

}  // namespace empire
