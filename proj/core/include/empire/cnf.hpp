#pragma once

#include <string>
#include <vector>

namespace empire {

/// Literals are signed 1-based variable indices.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
  /// Widest clause.
  int k() const;
  /// Occurrences of a literal across all clauses.
  int occurrences(int literal) const;
};

/// Throws Error on a missing or malformed `p cnf` header, literals out of
/// range, empty clauses, a clause without terminating 0, or a clause count
/// that differs from the header. Lines starting with 'c' are comments.
CnfFormula parse_dimacs(const std::string& text);
std::string to_dimacs(const CnfFormula& f);

/// assignment[i] is the value of variable i+1.
bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment);

}  // namespace empire
