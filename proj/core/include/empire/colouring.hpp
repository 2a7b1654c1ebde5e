#pragma once

#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "empire/empire_graph.hpp"

namespace empire {

using Rational = boost::rational<long long>;

/// Either a colouring or the reason none was produced.
using ColourOutcome = std::variant<Colouring, InfeasibilityWitness>;

inline bool succeeded(const ColourOutcome& o) { return std::holds_alternative<Colouring>(o); }

struct PeelResult {
  std::vector<int> ordering;  // removal order
  int degeneracy = 0;
};

/// Repeated minimum-degree removal, smallest id first on ties.
PeelResult degeneracy_order(const ReducedGraph& rg);

/// Colours in reverse `ordering`, each vertex taking the smallest free colour.
ColourOutcome greedy_colour(const ReducedGraph& rg, const std::vector<int>& ordering, int s);

/// s-colouring of a connected s-regular graph. Fails only on K_{s+1}
/// (CliqueFound) and on odd cycles when s = 2 (OddCycleFound).
ColourOutcome brooks_colour(const ReducedGraph& rg, int s);

/// Colours the empires of g with r*sigma colours, assuming no subgraph of g
/// has average degree above sigma. Throws if r*sigma is not integral or if
/// a residue is not regular (g outside the sparse class).
ColourOutcome sparse_colour(const EmpireGraph& g, Rational sigma);

struct VerifyResult {
  bool ok = true;
  std::vector<Edge> violated;  // monochromatic cross-empire vertex edges
};

/// Throws if c does not assign a colour in [0, s) to every empire.
VerifyResult verify_colouring(const EmpireGraph& g, const Colouring& c);

}  // namespace empire
