#pragma once

#include "empire/cnf.hpp"
#include "empire/empire_graph.hpp"
#include "empire/formula_graph.hpp"
#include "empire/planar_gadgets.hpp"

namespace empire {

// Every reduction returns an Artifact whose empire roles name the empires
// standing for the source vertices: T, F, X<j>, a<i>, abar<i>, c<i>_<j>.
// When a source vertex is simulated by a connector copy, its role lists the
// copy's monochromatic empires (all forced to one colour).

/// 3-CNF to a linear forest with empires of size r >= 2; (3,r)-colourable
/// iff phi is satisfiable. Clauses narrower than 3 are padded by repeating
/// their last literal.
Artifact sat3_to_lforest(const CnfFormula& phi, int r);

/// 3-CNF to a tree with empires of size 2; (3,2)-colourable iff phi is
/// satisfiable.
Artifact sat3_to_tree(const CnfFormula& phi);

/// Grows every empire from r_from to r_to vertices by hanging new leaves off
/// the empire's first vertex. Trees stay trees and (s,r)-colourability is
/// unchanged. Roles carry over.
Artifact pad_empires(const Artifact& g, int r_from, int r_to);

/// Formula graph to a linear forest: each vertex becomes a connector copy
/// A_{r,s,deg}, each edge joins fresh monochromatic vertices of two copies.
/// Requires s > 3 and (r, s) in the connector range.
Artifact fg_to_lforest(const FormulaGraph& fg, int r);

/// Formula graph to a single tree with empires of size r; requires
/// r >= 3 and 3 < s < 2r. Extra roles W<i>_a<n>, W<i>_abar<n>, b<i>_<j>.
Artifact fg_to_tree(const FormulaGraph& fg, int r);

/// Formula graph to an empire graph whose components are planar; requires
/// r >= 2 and 2r <= s < 6r-3 (6r-5 for r = 2). Same roles as fg_to_tree.
Artifact fg_to_planar(const FormulaGraph& fg, int r, const PlanarSearchOptions& opt = {});

}  // namespace empire
