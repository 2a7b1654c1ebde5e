#pragma once

#include <vector>

#include "empire/cnf.hpp"
#include "empire/empire_graph.hpp"

namespace empire {

/// (s,k)-formula graph of a k-CNF formula.
///
/// Vertex order: T, F, X^1..X^{s-2}, a_1..a_n, abar_1..abar_n, then the
/// clause groups c^{i,1..s-1} for i = 1..m.
struct FormulaGraph {
  Graph graph;
  int s = 0, k = 0, n = 0, m = 0;
  /// Clause literals after padding to width k.
  std::vector<std::vector<int>> clauses;

  int T() const { return 0; }
  int F() const { return 1; }
  int X(int j) const { return 1 + j; }                  // 1 <= j <= s-2
  int pos(int i) const { return s + i - 1; }            // a_i, 1 <= i <= n
  int neg(int i) const { return s + n + i - 1; }        // abar_i
  int literal(int lit) const { return lit > 0 ? pos(lit) : neg(-lit); }
  int c(int i, int j) const { return s + 2 * n + (i - 1) * (s - 1) + (j - 1); }  // 1-based i, j
  int num_vertices() const { return s + 2 * n + m * (s - 1); }
};

/// Builds the (s,k)-formula graph; k < 0 means phi.k(). Clauses narrower than
/// k are padded by repeating their last literal. Requires s >= 3, 1 <= k < s.
FormulaGraph ksat_to_formula_graph(const CnfFormula& phi, int s, int k = -1);

/// The formula graph as an r = 1 empire graph with empire roles T, F,
/// X<j>, a<i>, abar<i>, c<i>_<j>.
Artifact formula_graph_artifact(const FormulaGraph& fg);

}  // namespace empire
