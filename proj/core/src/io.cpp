#include "empire/io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

namespace empire {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error("line " + std::to_string(line) + ": " + msg);
}

void write_role(std::ostream& out, const std::string& tag, const std::vector<int>& ids) {
  for (char ch : tag)
    if (std::isspace(static_cast<unsigned char>(ch))) throw Error("role tag '" + tag + "' contains whitespace");
  out << "# role " << tag;
  for (int x : ids) out << ' ' << x;
  out << '\n';
}

}  // namespace

void write_eg(std::ostream& out, const Artifact& a) {
  const EmpireGraph& g = a.graph;
  out << "eg " << g.num_vertices() << ' ' << g.r() << ' ' << g.num_empires() << ' ' << g.num_edges() << '\n';
  for (int v = 0; v < g.num_vertices(); ++v) out << "v " << v << ' ' << g.empire_of(v) << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  for (const auto& [tag, ids] : a.roles.empires) write_role(out, "e:" + tag, ids);
  for (const auto& [tag, ids] : a.roles.vertices) write_role(out, "v:" + tag, ids);
}

std::string to_eg_string(const Artifact& a) {
  std::ostringstream os;
  write_eg(os, a);
  return os.str();
}

Artifact read_eg(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int nv = 0, r = 0, ne = 0, nedges = 0;
  std::vector<int> empire_of;
  std::vector<Edge> edges;
  RoleMap roles;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "#") {
      std::string word, tag;
      if (!(ls >> word) || word != "role") continue;
      if (!(ls >> tag) || tag.size() < 3 || tag[1] != ':' || (tag[0] != 'v' && tag[0] != 'e'))
        fail(lineno, "role tag must look like v:<name> or e:<name>");
      std::vector<int> ids;
      std::string tok;
      while (ls >> tok) {
        try {
          std::size_t used = 0;
          ids.push_back(std::stoi(tok, &used));
          if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          fail(lineno, "bad id '" + tok + "' in role line");
        }
      }
      auto& dst = tag[0] == 'v' ? roles.vertices : roles.empires;
      dst[tag.substr(2)] = std::move(ids);
      continue;
    }
    if (kind == "eg") {
      if (have_header) fail(lineno, "duplicate header");
      if (!(ls >> nv >> r >> ne >> nedges) || nv < 0 || r < 1 || ne < 0 || nedges < 0)
        fail(lineno, "malformed header");
      have_header = true;
      continue;
    }
    if (!have_header) fail(lineno, "expected 'eg' header first");
    if (kind == "v") {
      int vid, emp;
      if (!(ls >> vid >> emp)) fail(lineno, "malformed vertex line");
      if (vid != static_cast<int>(empire_of.size())) fail(lineno, "vertex ids must be dense and increasing");
      if (emp < 0 || emp >= ne) fail(lineno, "empire id out of range");
      empire_of.push_back(emp);
    } else if (kind == "e") {
      int u, v;
      if (!(ls >> u >> v)) fail(lineno, "malformed edge line");
      if (u < 0 || v < 0 || u >= nv || v >= nv) fail(lineno, "edge endpoint out of range");
      if (u == v) fail(lineno, "self-loop");
      edges.push_back(make_edge(u, v));
    } else {
      fail(lineno, "unknown line kind '" + kind + "'");
    }
    std::string extra;
    if (ls >> extra) fail(lineno, "trailing text '" + extra + "'");
  }
  if (!have_header) throw Error("empty input: missing 'eg' header");
  if (static_cast<int>(empire_of.size()) != nv) throw Error("vertex count does not match header");
  if (static_cast<int>(std::set<Edge>(edges.begin(), edges.end()).size()) != nedges ||
      static_cast<int>(edges.size()) != nedges)
    throw Error("edge count does not match header (or duplicate edges)");
  EmpireGraph g(nv, std::move(empire_of), std::move(edges), r);
  if (g.num_empires() != ne) throw Error("empire count does not match header");
  for (const auto& [tag, ids] : roles.vertices)
    for (int x : ids)
      if (x < 0 || x >= nv) throw Error("role v:" + tag + " references missing vertex");
  for (const auto& [tag, ids] : roles.empires)
    for (int x : ids)
      if (x < 0 || x >= ne) throw Error("role e:" + tag + " references missing empire");
  return Artifact{std::move(g), std::move(roles)};
}

Artifact parse_eg(const std::string& text) {
  std::istringstream is(text);
  return read_eg(is);
}

void write_colouring(std::ostream& out, const Colouring& c) {
  out << "col " << c.s << '\n';
  for (std::size_t e = 0; e < c.colour_of.size(); ++e) out << "c " << e << ' ' << c.colour_of[e] << '\n';
}

Colouring read_colouring(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  Colouring c;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind[0] == '#') continue;
    if (kind == "col") {
      if (have_header || !(ls >> c.s) || c.s < 0) fail(lineno, "malformed 'col' header");
      have_header = true;
    } else if (kind == "c") {
      int e, col;
      if (!have_header) fail(lineno, "expected 'col' header first");
      if (!(ls >> e >> col) || e < 0) fail(lineno, "malformed colour line");
      if (col < 0 || col >= c.s) fail(lineno, "colour " + std::to_string(col) + " outside 0.." + std::to_string(c.s - 1));
      if (e >= static_cast<int>(c.colour_of.size())) {
        c.colour_of.resize(e + 1, -1);
        seen.resize(e + 1, false);
      }
      if (seen[e]) fail(lineno, "empire " + std::to_string(e) + " coloured twice");
      seen[e] = true;
      c.colour_of[e] = col;
    } else {
      fail(lineno, "unknown line kind '" + kind + "'");
    }
  }
  if (!have_header) throw Error("missing 'col' header");
  for (std::size_t e = 0; e < seen.size(); ++e)
    if (!seen[e]) throw Error("empire " + std::to_string(e) + " has no colour");
  return c;
}

std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
  if (!f) throw Error("write to '" + path + "' failed");
}

}  // namespace empire
