#include "empire/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "empire/empire_graph.hpp"

namespace empire {

int CnfFormula::k() const {
  std::size_t w = 0;
  for (const auto& c : clauses) w = std::max(w, c.size());
  return static_cast<int>(w);
}

int CnfFormula::occurrences(int literal) const {
  int n = 0;
  for (const auto& c : clauses) n += static_cast<int>(std::count(c.begin(), c.end(), literal));
  return n;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int declared = 0;
  CnfFormula f;
  std::vector<int> current;
  auto fail = [&](const std::string& msg) -> void {
    throw Error("dimacs line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == 'c') continue;
    if (tok == "%") break;
    if (tok == "p") {
      std::string fmt;
      if (have_header) fail("duplicate 'p' line");
      if (!(ls >> fmt >> f.num_vars >> declared) || fmt != "cnf" || f.num_vars < 0 || declared < 0)
        fail("malformed 'p cnf' header");
      have_header = true;
      continue;
    }
    if (!have_header) fail("clause before 'p cnf' header");
    do {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') fail("bad literal '" + tok + "'");
      if (lit == 0) {
        if (current.empty()) fail("empty clause");
        f.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (std::labs(lit) > f.num_vars) fail("literal " + tok + " out of range");
        current.push_back(static_cast<int>(lit));
      }
    } while (ls >> tok);
  }
  if (!have_header) throw Error("dimacs: missing 'p cnf' header");
  if (!current.empty()) throw Error("dimacs: last clause is missing its terminating 0");
  if (f.num_clauses() != declared)
    throw Error("dimacs: header declares " + std::to_string(declared) + " clauses, found " +
                std::to_string(f.num_clauses()));
  return f;
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream os;
  os << "p cnf " << f.num_vars << ' ' << f.num_clauses() << '\n';
  for (const auto& c : f.clauses) {
    for (int lit : c) os << lit << ' ';
    os << "0\n";
  }
  return os.str();
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) < f.num_vars) return false;
  for (const auto& c : f.clauses) {
    const bool sat = std::any_of(c.begin(), c.end(), [&](int lit) {
      return assignment[std::abs(lit) - 1] == (lit > 0);
    });
    if (!sat) return false;
  }
  return true;
}

}  // namespace empire
