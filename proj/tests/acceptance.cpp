// Acceptance checks. One line per criterion; known deviations are reported
// as FAIL but do not change the exit status, anything else failing does.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "empire/empire.hpp"
#include "oracles.hpp"

using namespace empire;

namespace {

// Pinned limits, in seconds.
constexpr double kWaleckiLimit = 5;
constexpr double kCliqueLimit = 30;
constexpr double kBMinusLimit = 10;
constexpr double kConnectorLimit = 60;
constexpr double kSparseLimit = 120;
constexpr double kRoundTripLimit = 600;
constexpr int kSparseInstances = 500;
constexpr int kCorpusSize = 200;
constexpr int kOracleInstances = 300;

struct Check {
  std::vector<std::string> failures;  // unexpected
  std::vector<std::string> known;     // failures on pre-registered deviations
  long long cases = 0;

  void expect(bool ok, const std::string& what, bool known_deviation = false) {
    ++cases;
    if (ok) return;
    (known_deviation ? known : failures).push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

int unexpected = 0;

void report(int id, const char* title, double limit, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit > 0 && secs > limit) {
    std::ostringstream os;
    os << "took " << secs << " s, limit " << limit << " s";
    c.failures.push_back(os.str());
  }
  const bool pass = c.failures.empty() && c.known.empty();
  std::printf("[%s] %2d %s: %lld cases, %.2f s", pass ? "PASS" : "FAIL", id, title, c.cases, secs);
  if (limit > 0) std::printf(" (limit %.0f s)", limit);
  if (!c.failures.empty()) std::printf(", %zu unexpected", c.failures.size());
  if (!c.known.empty()) std::printf(", %zu known deviation(s)", c.known.size());
  std::printf("\n");
  auto list = [](const char* label, const std::vector<std::string>& xs) {
    const std::size_t shown = std::min<std::size_t>(xs.size(), 12);
    for (std::size_t i = 0; i < shown; ++i) std::printf("       %s: %s\n", label, xs[i].c_str());
    if (xs.size() > shown) std::printf("       %s: ... %zu more\n", label, xs.size() - shown);
  };
  list("unexpected", c.failures);
  list("known deviation", c.known);
  if (!c.failures.empty()) ++unexpected;
}

std::string fmt(const char* f, std::initializer_list<long long> xs) {
  std::string out;
  auto it = xs.begin();
  for (const char* p = f; *p; ++p) {
    if (*p == '%' && it != xs.end()) {
      out += std::to_string(*it++);
    } else {
      out += *p;
    }
  }
  return out;
}

bool colourable(const SolverResult& r) { return r.status == SolveStatus::Colourable; }

// ---------------------------------------------------------------------------

void walecki_soundness(Check& c) {
  for (int r = 1; r <= 50; ++r) {
    const int n = 2 * r + 1;
    const HamiltonianDecomposition d = walecki(r);
    bool ok = static_cast<int>(d.cycles.size()) == r;
    std::set<std::pair<int, int>> used;
    for (const auto& cyc : d.cycles) {
      ok = ok && static_cast<int>(cyc.size()) == n && std::set<int>(cyc.begin(), cyc.end()).size() == cyc.size();
      for (std::size_t i = 0; ok && i < cyc.size(); ++i) {
        const int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        ok = a >= 0 && a < n && b >= 0 && b < n && used.insert({std::min(a, b), std::max(a, b)}).second;
      }
    }
    ok = ok && static_cast<int>(used.size()) == n * (n - 1) / 2;
    c.expect(ok, fmt("r=%", {r}));
  }
}

void clique_gadget_chromatic(Check& c) {
  for (int r = 2; r <= 4; ++r)
    for (int s = 2; s < 2 * r; ++s) {
      const Artifact b = build_B(r, s);
      const auto hi = exact_empire_colour(b.graph, s + 1);
      const auto lo = exact_empire_colour(b.graph, s);
      c.expect(colourable(hi) && verify_colouring(b.graph, *hi.colouring).ok, fmt("r=% s=% with s+1 colours", {r, s}));
      c.expect(lo.status == SolveStatus::NotColourable, fmt("r=% s=% with s colours", {r, s}));
    }
}

void b_minus_forcing(Check& c) {
  for (int r : {2, 3}) {
    const int s = 2 * r - 1;
    const auto pair = find_B_minus_pair(r, s);
    c.expect(pair.has_value(), fmt("r=% no pair", {r}));
    if (!pair) continue;
    const Artifact bm = build_B_minus(r, s, pair->first, pair->second);
    const int u = bm.roles.empire_set("u_empire").front();
    const int v = bm.roles.empire_set("v_empire").front();
    const auto sols = oracle::all_colourings(bm.graph.num_empires(), oracle::empire_adjacency(bm.graph), s);
    c.expect(!sols.empty(), fmt("r=% has no solution", {r}));
    long long agree = 0;
    for (const auto& col : sols) agree += col[u] == col[v];
    c.expect(agree == static_cast<long long>(sols.size()), fmt("r=% u,v differ in % of % solutions",
                                                                {r, static_cast<long long>(sols.size()) - agree,
                                                                 static_cast<long long>(sols.size())}));
  }
}

// Visits the proper s-colourings of g up to colour renaming (each new colour
// is the smallest unused one). `visit` returning false stops the walk.
void for_each_canonical_colouring(const Graph& g, int s, const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = g.num_vertices();
  std::vector<int> col(n, -1);
  auto rec = [&](auto&& self, int v, int used) -> bool {
    if (v == n) return visit(col);
    for (int k = 0; k < std::min(s, used + 1); ++k) {
      bool ok = true;
      for (int w : g.neighbours(v)) ok = ok && !(w < v && col[w] == k);
      if (!ok) continue;
      col[v] = k;
      if (!self(self, v + 1, std::max(used, k + 1))) return false;
    }
    col[v] = -1;
    return true;
  };
  rec(rec, 0, 0);
}

// Isolated monochromatic vertices of the t-block connector, from the closed
// forms for odd and even s.
long long isolated_closed_form(long long r, long long s, long long t) {
  const long long q = 2 * r - s + 1;
  if (s % 2 == 1) return r - 1 + t * (q * r - (q + 1) * (s - 1) / 2);
  const long long extra = std::max(q - s - 1, 0LL);
  return (q + 1) * (r - s / 2) + (t - 1) * (q * r - (q + 1) * (s - 1) / 2 - extra);
}

// The even-s count cannot be met when s = r: E then has two odd-degree
// internal empires per group, each costing one extra path end.
bool isolated_count_known_deviation(int r, int s, int t) { return s % 2 == 0 && s == r && t >= 2; }

void connector_forcing(Check& c) {
  for (int s = 3; s <= 12; ++s)
    for (int q = 1; q <= 12; ++q) {
      if (q * q < s - 1) continue;
      for (int t = 1; (s + q - 1) * t + 1 <= 13; ++t) {
        const Artifact e = build_E(s, q, t);
        const ELayout L{s, q, t};
        std::vector<int> mono{L.plug()};
        for (int b = 0; b < t; ++b)
          for (int i = 1; i <= q; ++i) mono.push_back(L.u(b, i));
        long long seen = 0, split = 0;
        for_each_canonical_colouring(e.graph.graph(), s, [&](const std::vector<int>& col) {
          ++seen;
          for (int x : mono) split += col[x] != col[mono.front()];
          return split == 0;
        });
        c.expect(e.graph.num_vertices() == (s + q - 1) * t + 1 && static_cast<int>(mono.size()) == q * t + 1,
                 fmt("E s=% q=% t=% size", {s, q, t}));
        c.expect(seen > 0 && split == 0, fmt("E s=% q=% t=% forcing", {s, q, t}));
      }
    }

  for (int r = 2; r <= 6; ++r)
    for (int s = 3; s < 2 * r; ++s) {
      if (!connector_params_ok(r, s)) continue;
      for (int t = 1; t <= 3; ++t) {
        const long long want = isolated_closed_form(r, s, t);
        if (want < r) continue;  // below the single-empire threshold
        const Artifact a = build_A(r, s, static_cast<int>(want));
        const int blocks = connector_blocks(r, s, static_cast<int>(want));
        long long isolated = 0;
        for (int emp : a.roles.empire_set("monochromatic"))
          for (int v : a.graph.members(emp)) isolated += a.graph.graph().degree(v) == 0;
        const long long z = static_cast<long long>(a.roles.vertex_set("Z").size());
        const bool ok = blocks == t && isolated == want && z == want;
        c.expect(ok, fmt("A r=% s=% t=%: blocks % isolated % |Z| % want %", {r, s, t, blocks, isolated, z, want}),
                 isolated_count_known_deviation(r, s, t));
      }
    }
}

std::string show(const DegreeCounts& d) { return fmt("deg2/deg1/deg0 %/%/%", {d.deg2, d.deg1, d.deg0}); }

DegreeCounts count(const Artifact& a, int emp) {
  DegreeCounts d;
  for (int v : a.graph.members(emp)) {
    const int k = a.graph.graph().degree(v);
    (k == 0 ? d.deg0 : k == 1 ? d.deg1 : d.deg2) += 1;
  }
  return d;
}

void degree_tables(Check& c) {
  for (int r = 2; r <= 6; ++r)
    for (int s = 3; s < 2 * r; ++s) {
      if (!connector_params_ok(r, s)) continue;
      const int q = 2 * r - s + 1;
      for (int t = 1; t <= 3; ++t) {
        const long long m = isolated_closed_form(r, s, t);
        if (m < r) continue;
        const Artifact a = build_A(r, s, static_cast<int>(m));
        if (connector_blocks(r, s, static_cast<int>(m)) != t) continue;  // reported by criterion 4
        const std::string at = fmt("r=% s=% t=% ", {r, s, t});

        DegreeCounts plug, cc, internal, socket;
        if (s % 2 == 1) {
          plug = {r - (s - 1) / 2 - 1, 2, (s - 1) / 2 - 1};
          internal = {q * r - (q + 1) * (s - 1) / 2, 0, (q + 1) * (s - 1) / 2};
          socket = {r - (s - 1) / 2, 0, (s - 1) / 2};
        } else {
          const int extra = std::max(q - s - 1, 0);
          plug = {r - s / 2, 1, s / 2 - 1};
          internal = {q * r - (q + 1) * (s - 1) / 2 - extra, extra, (q + 1) * (s - 1) / 2 - extra};
          socket = {r - s / 2, 1, s / 2 - 1};
        }
        cc = {0, 0, r};

        const DegreeCounts got_plug = count(a, a.roles.empire_set("plug").front());
        c.expect(got_plug == plug, at + "plug " + show(got_plug) + " want " + show(plug));
        for (int e : a.roles.empire_set("colour_constraining")) {
          const DegreeCounts got = count(a, e);
          c.expect(got == cc, at + "colour constraining " + show(got) + " want " + show(cc));
        }
        for (int e : a.roles.empire_set("sockets")) {
          const DegreeCounts got = count(a, e);
          c.expect(got == socket, at + "final socket " + show(got) + " want " + show(socket));
        }
        if (a.roles.has_empire_set("internal")) {
          const auto& in = a.roles.empire_set("internal");
          for (std::size_t g = 0; g + q <= in.size(); g += q) {
            DegreeCounts got;
            for (int k = 0; k < q; ++k) {
              const DegreeCounts x = count(a, in[g + k]);
              got.deg0 += x.deg0, got.deg1 += x.deg1, got.deg2 += x.deg2;
            }
            // Even s: the deg-1 entry makes the row sum qr - extra, not qr,
            // and s = r adds two odd-degree empires per group.
            const bool known = s % 2 == 0 && (q - s - 1 > 0 || s == r);
            c.expect(got == internal, at + "internal group " + show(got) + " want " + show(internal), known);
          }
        }
      }
    }
}

void sparse_algorithm(Check& c) {
  std::mt19937 rng(2024);
  int witnesses = 0;
  for (int it = 0; it < kSparseInstances; ++it) {
    const int r = 2 + it % 2;
    const int rs = 2 + (it / 2) % 3;  // r * sigma
    const Rational sigma(rs, r);
    const int empires = 3 + static_cast<int>(rng() % (r == 2 ? 5 : 3));
    const int n = empires * r;
    std::vector<int> owner(n);
    for (int v = 0; v < n; ++v) owner[v] = v / r;
    std::shuffle(owner.begin(), owner.end(), rng);
    std::vector<std::vector<int>> members(empires);
    for (int v = 0; v < n; ++v) members[owner[v]].push_back(v);

    // Optionally plant a reduced K_{r sigma + 1} or odd cycle, spreading each
    // empire's edges over its members; kept only if it respects the bound.
    std::set<Edge> edges;
    std::vector<int> next(empires, 0);
    auto pick = [&](int emp) { return members[emp][next[emp]++ % r]; };
    const int plant = it % 5;
    if (plant == 0 && empires >= rs + 1) {
      for (int a = 0; a <= rs; ++a)
        for (int b = a + 1; b <= rs; ++b) edges.insert(make_edge(pick(a), pick(b)));
    } else if (plant == 1 && rs == 2) {
      const int len = empires % 2 == 1 ? empires : empires - 1;
      for (int a = 0; a < len; ++a) edges.insert(make_edge(pick(a), pick((a + 1) % len)));
    }
    if (oracle::max_avg_degree(n, {edges.begin(), edges.end()}) > sigma) edges.clear();
    // Grow randomly while the density bound holds.
    for (int tries = 0; tries < 4 * n; ++tries) {
      const int x = static_cast<int>(rng() % n), y = static_cast<int>(rng() % n);
      if (x == y || edges.count(make_edge(x, y))) continue;
      edges.insert(make_edge(x, y));
      if (max_subgraph_avg_degree(Graph(n, {edges.begin(), edges.end()})) > sigma) edges.erase(make_edge(x, y));
    }
    if (oracle::max_avg_degree(n, {edges.begin(), edges.end()}) > sigma) {
      c.expect(false, fmt("instance % exceeds the density bound", {it}));
      continue;
    }
    const EmpireGraph g(n, owner, {edges.begin(), edges.end()}, r);
    const oracle::EdgeList adj = oracle::empire_adjacency(g);
    const std::set<std::pair<int, int>> adjset(adj.begin(), adj.end());
    const ColourOutcome out = sparse_colour(g, sigma);
    const bool exact = colourable(exact_empire_colour(g, rs));
    if (const auto* col = std::get_if<Colouring>(&out)) {
      std::set<int> used(col->colour_of.begin(), col->colour_of.end());
      const bool ok = verify_colouring(g, *col).ok && col->s <= rs && static_cast<int>(used.size()) <= rs;
      c.expect(ok && exact, fmt("instance % colouring", {it}));
    } else {
      const auto& w = std::get<InfeasibilityWitness>(out);
      const int k = static_cast<int>(w.empires.size());
      bool shape = false;
      if (w.kind == InfeasibilityWitness::Kind::CliqueFound) {
        shape = k == rs + 1;
        for (int a = 0; a < k; ++a)
          for (int b = a + 1; b < k; ++b)
            shape = shape && adjset.count({std::min(w.empires[a], w.empires[b]), std::max(w.empires[a], w.empires[b])});
      } else if (w.kind == InfeasibilityWitness::Kind::OddCycleFound) {
        shape = rs == 2 && k % 2 == 1 && k >= 3;
        for (int a = 0; a < k; ++a) {
          const int x = w.empires[a], y = w.empires[(a + 1) % k];
          shape = shape && adjset.count({std::min(x, y), std::max(x, y)});
        }
      }
      c.expect(shape && !exact, fmt("instance % witness", {it}));
      ++witnesses;
    }
  }
  c.expect(witnesses > 0, "no instance exercised the witness path");
}

struct CorpusEntry {
  CnfFormula phi;
  bool sat;
};

std::vector<CorpusEntry> build_corpus(Check& c) {
  std::mt19937 rng(99);
  std::vector<CorpusEntry> out;
  for (int i = 0; i < kCorpusSize; ++i) {
    const int n = 1 + static_cast<int>(rng() % 5), m = 1 + static_cast<int>(rng() % 6);
    const CnfFormula phi = oracle::random_cnf(rng, n, m, 3);
    const auto d = dpll_solve(phi);
    c.expect(d.status != DpllResult::Status::Timeout, fmt("corpus % dpll timeout", {i}));
    const bool sat = d.status == DpllResult::Status::Sat;
    c.expect(sat == oracle::satisfiable_brute(phi), fmt("corpus % dpll disagrees with brute force", {i}));
    out.push_back({phi, sat});
  }
  return out;
}

struct ShapeLog {
  long long lforest = 0, tree = 0, planar = 0;
  std::vector<std::string> bad;
};

void round_trips(Check& c, const std::vector<CorpusEntry>& corpus, ShapeLog& shapes) {
  long long sats = 0;
  for (const auto& e : corpus) sats += e.sat;
  c.expect(sats > 0 && sats < static_cast<long long>(corpus.size()), "corpus is not mixed SAT/UNSAT");

  enum Kind { LForest, Tree, Planar };
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& [phi, sat] = corpus[i];
    auto check = [&](const char* name, const Artifact& a, int s, Kind kind) {
      const auto res = exact_empire_colour(a.graph, s);
      c.expect(res.status != SolveStatus::Timeout && colourable(res) == sat,
               std::string(name) + fmt(" formula %", {static_cast<long long>(i)}));
      const Graph& g = a.graph.graph();
      const oracle::EdgeList el = oracle::edges_of(g);
      const oracle::ForestScan fs = oracle::scan_forest(g.num_vertices(), el);
      bool ok = true;
      switch (kind) {
        case LForest: ok = fs.acyclic && oracle::max_degree(g.num_vertices(), el) <= 2; ++shapes.lforest; break;
        case Tree: ok = fs.acyclic && fs.components == 1; ++shapes.tree; break;
        case Planar: ok = oracle::planar_certified(g.num_vertices(), el); ++shapes.planar; break;
      }
      if (!ok) shapes.bad.push_back(std::string(name) + fmt(" formula %", {static_cast<long long>(i)}));
    };
    check("sat3_to_lforest r=2", sat3_to_lforest(phi, 2), 3, LForest);
    check("sat3_to_lforest r=3", sat3_to_lforest(phi, 3), 3, LForest);
    const Artifact tree = sat3_to_tree(phi);
    check("sat3_to_tree r=2", tree, 3, Tree);
    check("sat3_to_tree padded to r=3", pad_empires(tree, 2, 3), 3, Tree);
    const FormulaGraph fg = ksat_to_formula_graph(phi, 4, 3);
    check("fg_to_lforest r=7 s=4", fg_to_lforest(fg, 7), 4, LForest);
    check("fg_to_tree r=3 s=4", fg_to_tree(fg, 3), 4, Tree);
    check("fg_to_planar r=2 s=4", fg_to_planar(fg, 2), 4, Planar);
  }
}

void shape_guarantees(Check& c, const ShapeLog& shapes) {
  c.expect(shapes.lforest > 0 && shapes.tree > 0 && shapes.planar > 0, "round trips produced no outputs");
  c.cases += shapes.lforest + shapes.tree + shapes.planar;
  for (const auto& b : shapes.bad) c.expect(false, b);
  for (int s = 1; s <= 6; ++s) {
    const Artifact d = build_D(2, s, 0, 1);
    const oracle::EdgeList el = oracle::edges_of(d.graph.graph());
    c.expect(satisfies_D_conditions(d, 2, s, 0, 1) && oracle::planar_certified(d.graph.num_vertices(), el),
             fmt("D_{2,%}", {s}));
  }
}

void oracle_agreement(Check& c) {
  std::mt19937 rng(77);
  for (int it = 0; it < kOracleInstances; ++it) {
    const int empires = 2 + static_cast<int>(rng() % 11);
    const int r = 1 + static_cast<int>(rng() % 3);
    const int s = 1 + static_cast<int>(rng() % 6);
    const EmpireGraph g = oracle::random_empire_graph(rng, empires, r, 0.1 + 0.3 * (rng() % 100) / 100.0);
    const auto exact = exact_empire_colour(g, s);
    const auto d = dpll_solve(empire_to_cnf(g, s));
    const bool ok = exact.status != SolveStatus::Timeout && d.status != DpllResult::Status::Timeout &&
                    colourable(exact) == (d.status == DpllResult::Status::Sat);
    c.expect(ok, fmt("instance % (empires % r % s %)", {it, empires, r, s}));
  }
}

void formula_graph_size(Check& c, const std::vector<CorpusEntry>& corpus) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const CnfFormula& phi = corpus[i].phi;
    for (int s : {4, 5, 6}) {
      const FormulaGraph fg = ksat_to_formula_graph(phi, s, 3);
      const long long want = s + 2LL * phi.num_vars + static_cast<long long>(phi.clauses.size()) * (s - 1);
      c.expect(fg.graph.num_vertices() == want, fmt("formula % s=%", {static_cast<long long>(i), s}));
    }
  }
}

}  // namespace

int main() {
  report(1, "walecki decomposition, 1 <= r <= 50", kWaleckiLimit, walecki_soundness);
  report(2, "clique gadget chromatic number, 2 <= r <= 4", kCliqueLimit, clique_gadget_chromatic);
  report(3, "B- forces u and v together, r in {2,3}", kBMinusLimit, b_minus_forcing);
  report(4, "E forcing and A isolated-vertex counts", kConnectorLimit, connector_forcing);
  report(5, "A degree tables, r <= 6", 0, degree_tables);
  report(6, "sparse colouring vs exact", kSparseLimit, sparse_algorithm);

  Check corpus_check;
  std::vector<CorpusEntry> corpus = build_corpus(corpus_check);
  ShapeLog shapes;
  report(7, "reduction round trips on the formula corpus", kRoundTripLimit, [&](Check& c) {
    c.failures = corpus_check.failures;
    round_trips(c, corpus, shapes);
  });
  report(8, "shape guarantees", 0, [&](Check& c) { shape_guarantees(c, shapes); });
  report(9, "exact solver vs CNF + DPLL", 0, oracle_agreement);
  report(10, "formula graph size", 0, [&](Check& c) { formula_graph_size(c, corpus); });

  std::printf("%s\n", unexpected == 0 ? "acceptance: no unexpected failures" : "acceptance: UNEXPECTED FAILURES");
  return unexpected == 0 ? 0 : 1;
}
