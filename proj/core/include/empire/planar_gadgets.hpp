#pragma once

#include <string>
#include <vector>

#include "empire/empire_graph.hpp"

namespace empire {

/// Raised when a search runs out of its node budget before deciding.
class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct PlanarSearchOptions {
  long long node_budget = 20'000'000;
  /// Directory for cached results in the eg format; empty disables it.
  std::string cache_dir;
};

/// Known thickness of K_n: floor((n+7)/6), except 3 for n = 9 and 10.
int complete_graph_thickness(int n);

/// Partition of E(K_n) into `layers` planar edge sets. The result is the
/// lexicographically least layer assignment in edge order, with empty
/// layers opened in index order. Throws if layers < thickness.
std::vector<std::vector<Edge>> planar_decompose_K(int n, int layers,
                                                  const PlanarSearchOptions& opt = {});

/// D_{r,s}(u,v): r planar layers over s+1 empires of size r, layer l using
/// copy l of every empire, together covering K_{s+1} minus {u,v}. Copy 0 of
/// v is isolated. Requires r >= 2, 1 <= s < 6r-3 (6r-5 for r = 2).
Artifact build_D(int r, int s, int u_empire, int v_empire, const PlanarSearchOptions& opt = {});

/// Structural check of D0-D3 plus planarity of every component.
bool satisfies_D_conditions(const Artifact& d, int r, int s, int u_empire, int v_empire);

}  // namespace empire
