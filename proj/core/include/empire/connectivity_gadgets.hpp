#pragma once

#include <utility>
#include <vector>

#include "empire/builder.hpp"
#include "empire/empire_graph.hpp"

namespace empire {

/// Vertex numbering of E_{s,q,t}: the plug u^0 is 0, then block b holds
/// w^1..w^{s-1} followed by its sockets u^1..u^q.
struct ELayout {
  int s, q, t;
  int num_vertices() const { return 1 + t * (s + q - 1); }
  int plug() const { return 0; }
  int w(int block, int j) const { return 1 + block * (s + q - 1) + (j - 1); }
  int u(int block, int i) const { return 1 + block * (s + q - 1) + (s - 1) + (i - 1); }
};

/// E_{s,q,t} as an empire graph with r = 1. Roles: vertex and empire sets
/// "plug", "colour_constraining", "internal", "sockets", "monochromatic".
/// Requires s >= 3, q*q >= s-1, t >= 1.
Artifact build_E(int s, int q, int t);

/// Closed walk through every edge once, as oriented (from, to) steps.
/// Starts at `start`, or at the smallest non-isolated vertex if start < 0.
/// Throws on an odd-degree vertex or a disconnected edge set.
std::vector<std::pair<int, int>> euler_tour(const Graph& g, int start = -1);

/// True iff (r, s) lies in the admissible range of build_A:
/// r >= 2 and 3 <= s < 2r - sqrt(2r + 1/4) + 3/2.
bool connector_params_ok(int r, int s);

/// Isolated monochromatic vertex count of the t-block connector, following
/// the closed forms used to size it.
long long connector_isolated_formula(int r, int s, int t);

/// A_{r,s,m}: a linear forest whose reduced graph is E_{s,q,t}, q = 2r-(s-1),
/// holding at least m isolated vertices (vertex role "Z") that every
/// (s, r)-colouring puts in one colour class. For m < r a single edgeless
/// empire. Empire roles as in build_E.
Artifact build_A(int r, int s, int m);

/// Number of connector blocks used by build_A(r, s, m); 0 for the single empire.
int connector_blocks(int r, int s, int m);

struct DegreeCounts {
  int deg0 = 0, deg1 = 0, deg2 = 0;
  bool operator==(const DegreeCounts&) const = default;
};

struct DegreeDistribution {
  DegreeCounts plug;
  std::vector<DegreeCounts> colour_constraining;  // per empire
  std::vector<DegreeCounts> internal_groups;      // per group of q empires
  std::vector<DegreeCounts> sockets;              // per final socket empire
};

/// Per-class vertex degree counts of a build_A artifact.
DegreeDistribution degree_distribution(const Artifact& a);

/// Replaces empire v by a fresh A_{r_out,s,m}, m = number of cross-empire
/// edges at v, re-attaching each of those edges to its own Z vertex of the
/// copy. Returns the embedding of the copy and the Z vertices used, in edge
/// order. Edges inside v are dropped. The copy is sized for `extra` further
/// Z vertices, returned untouched in `spare`.
struct Linearization {
  Embedding embedding;
  std::vector<int> simulating;
  std::vector<int> spare;          // unused Z vertices, in role order
  std::vector<int> monochromatic;  // host ids of the copy's monochromatic empires
};
Linearization linearize_in(EmpireGraphBuilder& b, int v, int r_out, int s, int extra = 0);

/// Whole-graph form. Output r is max(g.r(), r_out); vertex role "Z" lists
/// the simulating vertices.
Artifact linearize(const EmpireGraph& g, int v, int r_out, int s);

}  // namespace empire
