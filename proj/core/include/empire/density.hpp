#pragma once

#include "empire/colouring.hpp"
#include "empire/empire_graph.hpp"

namespace empire {

/// Exact maximum of 2|E(S)|/|V(S)| over non-empty vertex subsets S.
/// Throws on a graph with no vertices.
Rational max_subgraph_avg_degree(const Graph& g);

/// True iff no subgraph of g has average degree above sigma.
bool in_sparse_class(const Graph& g, Rational sigma);

}  // namespace empire
