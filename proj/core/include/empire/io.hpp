#pragma once

#include <iosfwd>
#include <string>

#include "empire/empire_graph.hpp"

namespace empire {

/// Empire graph text format:
///
///   eg <num_vertices> <r> <num_empires> <num_edges>
///   v <vid> <empire>          one per vertex, increasing vid
///   e <u> <v>                 one per edge, u < v, sorted
///   # role v:<tag> <ids...>   vertex roles
///   # role e:<tag> <ids...>   empire roles
///
/// Role lines come last, sorted by their "v:"/"e:" prefixed tag. Other
/// lines starting with '#' and blank lines are ignored on input.
void write_eg(std::ostream& out, const Artifact& a);
std::string to_eg_string(const Artifact& a);

/// Throws Error with a line number on malformed input.
Artifact read_eg(std::istream& in);
Artifact parse_eg(const std::string& text);

/// Colouring text format: `col <s>` then `c <empire> <colour>` lines, with
/// every empire from 0 up listed once and colours in [0, s).
void write_colouring(std::ostream& out, const Colouring& c);
Colouring read_colouring(std::istream& in);

/// Whole-file helpers; "-" means stdin / stdout.
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace empire
