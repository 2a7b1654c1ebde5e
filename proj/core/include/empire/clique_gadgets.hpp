#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "empire/empire_graph.hpp"

namespace empire {

/// Empire label sequences (1-based labels) of the r paths of B_{r,s};
/// path i holds copy i of each empire it visits.
std::vector<std::vector<int>> clique_gadget_paths(int r, int s);

/// B_{r,s}: r vertex-disjoint paths on s+1 empires of size r whose
/// reduced graph is K_{s+1}. Empire id is label - 1, vertex id is
/// empire * r + copy. Requires 1 <= s < 2r.
Artifact build_B(int r, int s);

/// B_{r,s} plus a path through the root empire's vertices; a tree.
Artifact build_B_plus(int r, int s, int root_empire);

/// B_{r,s} minus the end edge u_1 v_1 of the first path. u and v must sit at
/// an end of that path and share no other edge, so that u and v end up
/// non-adjacent and are forced to the same colour.
Artifact build_B_minus(int r, int s, int u_empire, int v_empire);

/// First (u, v) accepted by build_B_minus(r, s, u, v), if any.
std::optional<std::pair<int, int>> find_B_minus_pair(int r, int s);

}  // namespace empire
