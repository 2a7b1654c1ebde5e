#include "empire/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>

#include "empire/graph_props.hpp"

namespace empire {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Colourable: return "Colourable";
    case SolveStatus::NotColourable: return "NotColourable";
    case SolveStatus::Timeout: return "Timeout";
  }
  return "?";
}

const char* to_string(DpllResult::Status s) {
  switch (s) {
    case DpllResult::Status::Sat: return "SAT";
    case DpllResult::Status::Unsat: return "UNSAT";
    case DpllResult::Status::Timeout: return "Timeout";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

class BudgetMeter {
 public:
  explicit BudgetMeter(const SolveBudget& b) : budget_(b), start_(Clock::now()) {}

  // Counts one node; false once the budget is spent.
  bool tick() {
    ++nodes_;
    if (nodes_ > budget_.node_limit) return false;
    if ((nodes_ & 4095) == 0 && elapsed() > budget_.time_limit_s) return false;
    return true;
  }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  SolverStats stats() const { return {nodes_, elapsed()}; }

 private:
  SolveBudget budget_;
  Clock::time_point start_;
  long long nodes_ = 0;
};

class Bits {
 public:
  Bits(int rows, int bits) : words_((bits + 63) / 64), data_(static_cast<std::size_t>(rows) * words_, 0) {}
  void set(int row, int b) { data_[idx(row) + b / 64] |= std::uint64_t{1} << (b % 64); }
  void clear_row(int row) { std::fill_n(data_.begin() + static_cast<long>(idx(row)), words_, 0); }
  void merge(int dst, int src) {
    for (int w = 0; w < words_; ++w) data_[idx(dst) + w] |= data_[idx(src) + w];
  }
  void reset(int row, int b) { data_[idx(row) + b / 64] &= ~(std::uint64_t{1} << (b % 64)); }
  int highest(int row) const {
    for (int w = words_ - 1; w >= 0; --w) {
      const std::uint64_t x = data_[idx(row) + w];
      if (x) return w * 64 + 63 - __builtin_clzll(x);
    }
    return -1;
  }

 private:
  std::size_t idx(int row) const { return static_cast<std::size_t>(row) * words_; }
  int words_;
  std::vector<std::uint64_t> data_;
};

enum class Outcome { Found, None, OutOfBudget };

// Forward checking with conflict-directed backjumping on one connected graph.
Outcome fc_cbj(const Graph& g, int s, bool symmetry, BudgetMeter& meter, std::vector<int>& col) {
  const int k = g.num_vertices();
  col.assign(k, -1);
  if (k == 0) return Outcome::Found;
  std::vector<int> pruned(static_cast<std::size_t>(k) * s, -1);  // depth that removed colour
  std::vector<int> dom(k, s);
  std::vector<int> order(k, -1), next_col(k, 0), max_before(k, -1);
  std::vector<std::vector<std::pair<int, int>>> undo(k);
  Bits conf(k, k);

  auto P = [&](int v, int c) -> int& { return pruned[static_cast<std::size_t>(v) * s + c]; };
  auto choose = [&]() {
    int best = -1;
    for (int v = 0; v < k; ++v) {
      if (col[v] >= 0) continue;
      if (best < 0 || dom[v] < dom[best] || (dom[v] == dom[best] && g.degree(v) > g.degree(best))) best = v;
    }
    return best;
  };
  auto enter = [&](int d) {
    order[d] = choose();
    next_col[d] = 0;
    conf.clear_row(d);
    max_before[d] = d == 0 ? -1 : std::max(max_before[d - 1], col[order[d - 1]]);
  };
  auto undo_fc = [&](int d) {
    for (const auto& [w, c] : undo[d]) {
      P(w, c) = -1;
      ++dom[w];
    }
    undo[d].clear();
  };
  auto add_past_fc = [&](int d, int v) {
    for (int c = 0; c < s; ++c)
      if (P(v, c) >= 0 && P(v, c) != d) conf.set(d, P(v, c));
  };

  int d = 0;
  enter(0);
  while (true) {
    const int v = order[d];
    bool advanced = false;
    for (int c = next_col[d]; c < s; ++c) {
      if (P(v, c) >= 0) continue;
      if (symmetry && c > max_before[d] + 1) break;
      if (!meter.tick()) return Outcome::OutOfBudget;
      col[v] = c;
      int wiped = -1;
      for (int w : g.neighbours(v)) {
        if (col[w] >= 0 || P(w, c) >= 0) continue;
        P(w, c) = d;
        --dom[w];
        undo[d].push_back({w, c});
        if (dom[w] == 0) {
          wiped = w;
          break;
        }
      }
      if (wiped >= 0) {
        add_past_fc(d, wiped);
        undo_fc(d);
        col[v] = -1;
        continue;
      }
      next_col[d] = c + 1;
      if (++d == k) return Outcome::Found;
      enter(d);
      advanced = true;
      break;
    }
    if (advanced) continue;

    // Every value of v failed: jump back to the deepest culprit.
    add_past_fc(d, v);
    if (symmetry) {
      bool excluded = false;
      for (int c = max_before[d] + 2; c < s; ++c)
        if (P(v, c) < 0) excluded = true;
      if (excluded)
        for (int dd = 0; dd < d; ++dd) conf.set(d, dd);
    }
    const int h = conf.highest(d);
    if (h < 0) return Outcome::None;
    for (int dd = d - 1; dd > h; --dd) {
      undo_fc(dd);
      col[order[dd]] = -1;
    }
    undo_fc(h);
    col[order[h]] = -1;
    conf.merge(h, d);
    conf.reset(h, h);
    d = h;
  }
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (local[u] >= 0 && local[v] >= 0) edges.push_back({local[u], local[v]});
  return Graph(static_cast<int>(verts.size()), std::move(edges));
}

// Sound shrinking before search. Vertices adjacent to every member of an
// (s-1)-clique all take the one colour the clique leaves free, so they are
// merged; a vertex of degree < s can always be coloured last, so it is
// peeled. Both rules are applied until neither fires.
class Simplifier {
 public:
  Simplifier(const Graph& g, int s) : s_(s), parent_(g.num_vertices()), adj_(g.num_vertices()),
                                      active_(g.num_vertices(), true) {
    for (int v = 0; v < g.num_vertices(); ++v) parent_[v] = v;
    for (const auto& [u, v] : g.edges()) {
      adj_[u].insert(v);
      adj_[v].insert(u);
    }
  }

  // False if the rules derive a contradiction (two adjacent vertices forced equal).
  bool run() {
    for (bool changed = true; changed;) {
      changed = false;
      const auto groups = forced_groups();
      for (const auto& grp : groups)
        for (std::size_t i = 1; i < grp.size(); ++i) {
          if (!merge(grp[0], grp[i])) return false;
          changed = true;
        }
      changed = peel() || changed;
    }
    return true;
  }

  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }

  // Remaining vertices (roots), as a graph with a map back to roots.
  Graph core(std::vector<int>& roots) const {
    roots.clear();
    std::vector<int> local(adj_.size(), -1);
    for (std::size_t v = 0; v < adj_.size(); ++v)
      if (active_[v] && parent_[v] == static_cast<int>(v)) {
        local[v] = static_cast<int>(roots.size());
        roots.push_back(static_cast<int>(v));
      }
    std::vector<Edge> edges;
    for (int v : roots)
      for (int w : adj_[v])
        if (v < w) edges.push_back({local[v], local[w]});
    return Graph(static_cast<int>(roots.size()), std::move(edges));
  }

  // Colours peeled vertices, given colours of the core roots in `colour`.
  void colour_peeled(std::vector<int>& colour) {
    for (auto it = peeled_.rbegin(); it != peeled_.rend(); ++it) {
      std::vector<bool> used(s_, false);
      for (int w : it->second) used[colour[find(w)]] = true;
      colour[it->first] = static_cast<int>(std::find(used.begin(), used.end(), false) - used.begin());
    }
  }

 private:
  static constexpr long long kCliqueCap = 2'000'000;

  std::vector<std::vector<int>> forced_groups() {
    std::vector<int> uf(adj_.size());
    for (std::size_t v = 0; v < uf.size(); ++v) uf[v] = static_cast<int>(v);
    auto root = [&](int v) {
      while (uf[v] != v) v = uf[v] = uf[uf[v]];
      return v;
    };
    bool any = false;
    long long seen = 0;
    std::vector<int> clique;
    // Extends `clique` with larger-id vertices from `cand`, the common
    // neighbourhood of the current clique.
    auto grow = [&](auto&& self, const std::vector<int>& cand) -> void {
      if (++seen > kCliqueCap) return;
      if (static_cast<int>(clique.size()) == s_ - 1) {
        for (std::size_t i = 1; i < cand.size(); ++i) {
          const int a = root(cand[0]), b = root(cand[i]);
          if (a != b) {
            uf[b] = a;
            any = true;
          }
        }
        return;
      }
      for (int v : cand) {
        if (!clique.empty() && v < clique.back()) continue;
        std::vector<int> next;
        for (int w : cand)
          if (w != v && adj_[v].count(w)) next.push_back(w);
        if (static_cast<int>(clique.size()) + 1 < s_ - 1 && next.empty()) continue;
        clique.push_back(v);
        self(self, next);
        clique.pop_back();
      }
    };
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (!active_[v] || parent_[v] != static_cast<int>(v)) continue;
      clique.assign(1, static_cast<int>(v));
      std::vector<int> cand(adj_[v].begin(), adj_[v].end());
      grow(grow, cand);
      clique.clear();
    }
    std::vector<std::vector<int>> groups;
    if (!any) return groups;
    std::map<int, std::vector<int>> by_root;
    for (std::size_t v = 0; v < uf.size(); ++v)
      if (active_[v] && parent_[v] == static_cast<int>(v)) by_root[root(static_cast<int>(v))].push_back(static_cast<int>(v));
    for (auto& [r, grp] : by_root)
      if (grp.size() > 1) groups.push_back(std::move(grp));
    return groups;
  }

  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    if (adj_[a].count(b)) return false;
    parent_[b] = a;
    for (int w : adj_[b]) {
      adj_[w].erase(b);
      adj_[w].insert(a);
      adj_[a].insert(w);
    }
    adj_[b].clear();
    return true;
  }

  bool peel() {
    bool any = false;
    std::vector<int> stack;
    for (std::size_t v = 0; v < adj_.size(); ++v)
      if (active_[v] && parent_[v] == static_cast<int>(v) && static_cast<int>(adj_[v].size()) < s_)
        stack.push_back(static_cast<int>(v));
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (!active_[v]) continue;
      active_[v] = false;
      any = true;
      peeled_.emplace_back(v, std::vector<int>(adj_[v].begin(), adj_[v].end()));
      for (int w : adj_[v]) {
        adj_[w].erase(v);
        if (static_cast<int>(adj_[w].size()) < s_) stack.push_back(w);
      }
      adj_[v].clear();
    }
    return any;
  }

  int s_;
  std::vector<int> parent_;
  std::vector<std::set<int>> adj_;
  std::vector<bool> active_;
  std::vector<std::pair<int, std::vector<int>>> peeled_;
};

}  // namespace

SolverResult exact_colour(const ReducedGraph& rg, int s, const ExactOptions& opt) {
  if (s < 1) throw Error("exact colouring: s must be at least 1");
  BudgetMeter meter(opt.budget);
  SolverResult res;
  const bool simplify = opt.simplify && s >= 2;
  Simplifier simp(rg.graph, s);
  if (simplify && !simp.run()) {
    res.status = SolveStatus::NotColourable;
    res.stats = meter.stats();
    return res;
  }
  std::vector<int> roots;
  const Graph core = simplify ? simp.core(roots) : rg.graph;
  const Graph& g = core;
  const auto comp = components(g);
  const int nc = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> members(nc);
  for (int v = 0; v < g.num_vertices(); ++v) members[comp[v]].push_back(v);
  std::vector<int> colour(g.num_vertices(), 0);
  for (const auto& mem : members) {
    std::vector<int> local;
    const Outcome o = fc_cbj(induced_subgraph(g, mem), s, opt.symmetry_breaking, meter, local);
    if (o != Outcome::Found) {
      res.status = o == Outcome::None ? SolveStatus::NotColourable : SolveStatus::Timeout;
      res.stats = meter.stats();
      return res;
    }
    for (std::size_t i = 0; i < mem.size(); ++i) colour[mem[i]] = local[i];
  }
  if (simplify) {
    std::vector<int> full(rg.graph.num_vertices(), 0);
    for (std::size_t i = 0; i < roots.size(); ++i) full[roots[i]] = colour[i];
    simp.colour_peeled(full);
    for (int v = 0; v < rg.graph.num_vertices(); ++v) full[v] = full[simp.find(v)];
    colour = std::move(full);
  }
  for (const auto& [u, v] : rg.graph.edges())
    if (colour[u] == colour[v]) throw Error("exact colouring: internal error, improper result");
  res.status = SolveStatus::Colourable;
  res.colouring = Colouring{colour, s};
  res.stats = meter.stats();
  return res;
}

SolverResult exact_empire_colour(const EmpireGraph& g, int s, const ExactOptions& opt) {
  return exact_colour(reduce(g), s, opt);
}

CnfFormula empire_to_cnf(const EmpireGraph& g, int s) {
  const int n = g.num_empires();
  CnfFormula f;
  f.num_vars = n * s;
  auto x = [s](int e, int c) { return e * s + c + 1; };
  for (int e = 0; e < n; ++e) {
    std::vector<int> alo;
    for (int c = 0; c < s; ++c) alo.push_back(x(e, c));
    f.clauses.push_back(alo);
    for (int c = 0; c < s; ++c)
      for (int c2 = c + 1; c2 < s; ++c2) f.clauses.push_back({-x(e, c), -x(e, c2)});
  }
  const ReducedGraph rg = reduce(g);
  for (const auto& [a, b] : rg.graph.edges())
    for (int c = 0; c < s; ++c) f.clauses.push_back({-x(a, c), -x(b, c)});
  return f;
}

Colouring decode_colouring(const std::vector<bool>& assignment, int num_empires, int s) {
  Colouring c{std::vector<int>(num_empires, -1), s};
  for (int e = 0; e < num_empires; ++e)
    for (int k = 0; k < s; ++k)
      if (assignment.at(static_cast<std::size_t>(e) * s + k)) {
        c.colour_of[e] = k;
        break;
      }
  for (int x : c.colour_of)
    if (x < 0) throw Error("decode colouring: empire without a colour");
  return c;
}

namespace {

struct BudgetSpent {};

class Dpll {
 public:
  Dpll(const CnfFormula& f, BudgetMeter& meter) : n_(f.num_vars), meter_(meter) {
    for (auto c : f.clauses) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      bool taut = false;
      for (int lit : c)
        if (std::binary_search(c.begin(), c.end(), -lit)) taut = true;
      if (!taut) clauses_.push_back(std::move(c));
    }
    occ_.assign(2 * (n_ + 1), {});
    for (int id = 0; id < static_cast<int>(clauses_.size()); ++id)
      for (int lit : clauses_[id]) occ_[slot(lit)].push_back(id);
    val_.assign(n_ + 1, 0);
    sat_.assign(clauses_.size(), 0);
    false_.assign(clauses_.size(), 0);
  }

  bool run() {
    for (int id = 0; id < static_cast<int>(clauses_.size()); ++id)
      if (clauses_[id].empty()) return false;
    std::vector<int> units;
    for (int id = 0; id < static_cast<int>(clauses_.size()); ++id)
      if (clauses_[id].size() == 1) units.push_back(id);
    if (!propagate(units)) return false;
    return solve();
  }

  std::vector<bool> assignment() const {
    std::vector<bool> a(n_);
    for (int v = 1; v <= n_; ++v) a[v - 1] = val_[v] > 0;
    return a;
  }

 private:
  int slot(int lit) const { return lit > 0 ? 2 * lit : 2 * -lit + 1; }
  int value(int lit) const { return lit > 0 ? val_[lit] : -val_[-lit]; }

  // Returns false on conflict; counters are always fully updated.
  bool assign(int lit, std::vector<int>& units) {
    val_[std::abs(lit)] = lit > 0 ? 1 : -1;
    trail_.push_back(lit);
    for (int id : occ_[slot(lit)])
      if (sat_[id]++ == 0) ++num_sat_;
    bool ok = true;
    for (int id : occ_[slot(-lit)]) {
      ++false_[id];
      if (sat_[id] > 0) continue;
      const int size = static_cast<int>(clauses_[id].size());
      if (false_[id] == size) ok = false;
      else if (false_[id] == size - 1) units.push_back(id);
    }
    return ok;
  }

  void unassign(int lit) {
    for (int id : occ_[slot(lit)])
      if (--sat_[id] == 0) --num_sat_;
    for (int id : occ_[slot(-lit)]) --false_[id];
    val_[std::abs(lit)] = 0;
  }

  void backtrack(std::size_t mark) {
    while (trail_.size() > mark) {
      unassign(trail_.back());
      trail_.pop_back();
    }
  }

  bool propagate(std::vector<int>& units) {
    while (!units.empty()) {
      const int id = units.back();
      units.pop_back();
      if (sat_[id] > 0) continue;
      int free_lit = 0;
      for (int lit : clauses_[id])
        if (value(lit) == 0) free_lit = lit;
      if (free_lit == 0) return false;
      if (!assign(free_lit, units)) return false;
    }
    return true;
  }

  bool assign_and_propagate(int lit) {
    std::vector<int> units;
    if (!assign(lit, units)) return false;
    return propagate(units);
  }

  bool solve() {
    if (!meter_.tick()) throw BudgetSpent{};
    // pure literals
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> pos(n_ + 1, 0), neg(n_ + 1, 0);
      for (int id = 0; id < static_cast<int>(clauses_.size()); ++id) {
        if (sat_[id] > 0) continue;
        for (int lit : clauses_[id])
          if (value(lit) == 0) ++(lit > 0 ? pos : neg)[std::abs(lit)];
      }
      for (int v = 1; v <= n_; ++v) {
        if (val_[v] != 0 || (pos[v] > 0) == (neg[v] > 0)) continue;
        std::vector<int> units;
        assign(pos[v] > 0 ? v : -v, units);
        changed = true;
      }
    }
    if (num_sat_ == static_cast<int>(clauses_.size())) return true;

    std::vector<int> count(n_ + 1, 0);
    for (int id = 0; id < static_cast<int>(clauses_.size()); ++id) {
      if (sat_[id] > 0) continue;
      for (int lit : clauses_[id])
        if (value(lit) == 0) ++count[std::abs(lit)];
    }
    int var = 0;
    for (int v = 1; v <= n_; ++v)
      if (val_[v] == 0 && count[v] > count[var]) var = v;
    if (var == 0) return false;

    const std::size_t mark = trail_.size();
    for (int lit : {-var, var}) {
      if (assign_and_propagate(lit) && solve()) return true;
      backtrack(mark);
    }
    return false;
  }

  int n_;
  BudgetMeter& meter_;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<int>> occ_;
  std::vector<int> val_, sat_, false_, trail_;
  int num_sat_ = 0;
};

}  // namespace

DpllResult dpll_solve(const CnfFormula& f, const SolveBudget& budget) {
  BudgetMeter meter(budget);
  Dpll solver(f, meter);
  DpllResult res;
  try {
    if (solver.run()) {
      res.status = DpllResult::Status::Sat;
      res.assignment = solver.assignment();
      if (!satisfies(f, res.assignment)) throw Error("dpll: internal error, assignment does not satisfy formula");
    } else {
      res.status = DpllResult::Status::Unsat;
    }
  } catch (const BudgetSpent&) {
    res.status = DpllResult::Status::Timeout;
  }
  res.stats = meter.stats();
  return res;
}

std::vector<Colouring> enumerate_colourings(const ReducedGraph& rg, int s, long long cap) {
  const Graph& g = rg.graph;
  const int n = g.num_vertices();
  if (cap < 0 && n * std::log10(std::max(s, 1)) > 9.0)
    throw Error("enumerate colourings: s^n exceeds 1e9 and no cap was given");
  std::vector<Colouring> out;
  if (cap == 0) return out;
  std::vector<int> col(n, -1);
  int e = 0;
  while (e >= 0) {
    if (e == n) {
      out.push_back(Colouring{col, s});
      if (cap > 0 && static_cast<long long>(out.size()) >= cap) break;
      --e;
      continue;
    }
    int c = col[e] + 1;
    for (; c < s; ++c) {
      bool ok = true;
      for (int w : g.neighbours(e))
        if (w < e && col[w] == c) ok = false;
      if (ok) break;
    }
    if (c < s) {
      col[e] = c;
      ++e;
    } else {
      col[e] = -1;
      --e;
    }
  }
  return out;
}

}  // namespace empire
