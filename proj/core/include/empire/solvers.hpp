#pragma once

#include <optional>
#include <vector>

#include "empire/cnf.hpp"
#include "empire/empire_graph.hpp"

namespace empire {

struct SolveBudget {
  long long node_limit = 10'000'000;
  double time_limit_s = 60.0;
};

struct SolverStats {
  long long nodes = 0;
  double seconds = 0.0;
};

enum class SolveStatus { Colourable, NotColourable, Timeout };
const char* to_string(SolveStatus s);

struct SolverResult {
  SolveStatus status = SolveStatus::Timeout;
  std::optional<Colouring> colouring;
  SolverStats stats;
};

struct ExactOptions {
  SolveBudget budget;
  /// A new colour may only be the smallest unused one.
  bool symmetry_breaking = true;
  /// Merge vertices forced to share a colour and peel vertices of degree
  /// below s before searching.
  bool simplify = true;
};

/// Complete search for an s-colouring of reduce(g), one connected component
/// at a time, after the optional simplification: dynamic smallest-domain ordering (ties: larger degree, then
/// smaller id), forward checking and conflict-directed backjumping.
SolverResult exact_empire_colour(const EmpireGraph& g, int s, const ExactOptions& opt = {});
SolverResult exact_colour(const ReducedGraph& rg, int s, const ExactOptions& opt = {});

/// Variable (e*s + c + 1) means empire e has colour c.
CnfFormula empire_to_cnf(const EmpireGraph& g, int s);

struct DpllResult {
  enum class Status { Sat, Unsat, Timeout };
  Status status = Status::Timeout;
  std::vector<bool> assignment;  // value of variable i+1, when Sat
  SolverStats stats;
};
const char* to_string(DpllResult::Status s);

/// DPLL with unit propagation and pure-literal elimination, branching on the
/// most frequent unassigned variable, false first.
DpllResult dpll_solve(const CnfFormula& f, const SolveBudget& budget = {});

/// Decodes a satisfying assignment of empire_to_cnf(g, s).
Colouring decode_colouring(const std::vector<bool>& assignment, int num_empires, int s);

/// All proper s-colourings of rg in lexicographic order, at most cap of
/// them (cap < 0: no cap). Without a cap, throws if s^n exceeds 1e9.
std::vector<Colouring> enumerate_colourings(const ReducedGraph& rg, int s, long long cap = -1);

}  // namespace empire
