#pragma once

// Convenience header pulling in the whole library.

#include "empire/builder.hpp"
#include "empire/clique_gadgets.hpp"
#include "empire/cnf.hpp"
#include "empire/colouring.hpp"
#include "empire/connectivity_gadgets.hpp"
#include "empire/density.hpp"
#include "empire/empire_graph.hpp"
#include "empire/formula_graph.hpp"
#include "empire/graph_props.hpp"
#include "empire/io.hpp"
#include "empire/planar_gadgets.hpp"
#include "empire/reductions.hpp"
#include "empire/solvers.hpp"
#include "empire/walecki.hpp"
