#pragma once

#include <vector>

#include "empire/empire_graph.hpp"

namespace empire {

/// Component id per vertex, numbered by smallest member.
std::vector<int> components(const Graph& g);
int num_components(const Graph& g);

bool is_forest(const Graph& g);
/// Connected and acyclic. The empty graph is not a tree.
bool is_tree(const Graph& g);
/// Disjoint union of paths (isolated vertices included).
bool is_linear_forest(const Graph& g);
bool is_planar(const Graph& g);
int max_degree(const Graph& g);

}  // namespace empire
