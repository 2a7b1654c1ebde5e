#include "cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "empire/empire.hpp"

namespace empire::cli {

namespace {

struct Options {
  std::string kind;
  int r = 0, s = 0, m = 1, t = 1, q = 0;
  std::optional<int> u, v;
  std::string input = "-", output = "-", colouring;
  std::string engine = "backtrack";
  std::string sigma;
  std::string cache_dir;
  long long node_limit = 10'000'000;
  double time_limit = 60.0;
  bool json = false;
};

Artifact load_graph(const std::string& path) { return parse_eg(read_text(path)); }

CnfFormula load_cnf(const std::string& path) { return parse_dimacs(read_text(path)); }

void need(bool ok, const std::string& what) {
  if (!ok) throw CLI::ValidationError(what);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos)
      return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    const std::string frac = text.substr(dot + 1);
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const long long whole = dot == 0 ? 0 : std::stoll(text.substr(0, dot));
    const long long part = frac.empty() ? 0 : std::stoll(frac);
    return Rational(whole, 1) + Rational(text[0] == '-' ? -part : part, den);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--sigma: expected p/q or a decimal, got '" + text + "'");
  }
}

int run_gadget(const Options& o, std::ostream&) {
  Artifact a;
  if (o.kind == "B") {
    a = build_B(o.r, o.s);
  } else if (o.kind == "Bplus") {
    a = build_B_plus(o.r, o.s, o.u.value_or(0));
  } else if (o.kind == "Bminus") {
    int u = 0, v = 0;
    if (o.u && o.v) {
      u = *o.u;
      v = *o.v;
    } else {
      const auto pair = find_B_minus_pair(o.r, o.s);
      if (!pair) throw Error("no end edge of B_{r,s} qualifies for B-; pass --u and --v");
      std::tie(u, v) = *pair;
    }
    a = build_B_minus(o.r, o.s, u, v);
  } else if (o.kind == "E") {
    a = build_E(o.s, o.q > 0 ? o.q : 2 * o.r - o.s + 1, o.t);
  } else if (o.kind == "A") {
    a = build_A(o.r, o.s, o.m);
  } else {
    PlanarSearchOptions po;
    po.cache_dir = o.cache_dir;
    a = build_D(o.r, o.s, o.u.value_or(0), o.v.value_or(1), po);
  }
  write_text(o.output, to_eg_string(a));
  return kOk;
}

int run_reduce(const Options& o, std::ostream&) {
  const CnfFormula phi = load_cnf(o.input);
  Artifact a;
  if (o.kind == "sat2lforest") {
    a = sat3_to_lforest(phi, o.r);
  } else if (o.kind == "sat2tree") {
    a = sat3_to_tree(phi);
    if (o.r > 2) a = pad_empires(a, 2, o.r);
  } else {
    need(o.s > 0, "--s is required for " + o.kind);
    const FormulaGraph fg = ksat_to_formula_graph(phi, o.s);
    if (o.kind == "sat2fg") {
      a = formula_graph_artifact(fg);
    } else if (o.kind == "fg2lforest") {
      a = fg_to_lforest(fg, o.r);
    } else if (o.kind == "fg2tree") {
      a = fg_to_tree(fg, o.r);
    } else {
      PlanarSearchOptions po;
      po.cache_dir = o.cache_dir;
      a = fg_to_planar(fg, o.r, po);
    }
  }
  write_text(o.output, to_eg_string(a));
  return kOk;
}

SolveBudget budget_of(const Options& o) { return {o.node_limit, o.time_limit}; }

void write_colouring_to(const std::string& path, const Colouring& c) {
  std::ostringstream os;
  write_colouring(os, c);
  write_text(path, os.str());
}

int run_solve(const Options& o, std::ostream& out) {
  const Artifact a = load_graph(o.input);
  need(o.s >= 1, "--s must be at least 1");
  SolveStatus status;
  std::optional<Colouring> colouring;
  SolverStats stats;
  if (o.engine == "cnf") {
    const DpllResult d = dpll_solve(empire_to_cnf(a.graph, o.s), budget_of(o));
    status = d.status == DpllResult::Status::Sat     ? SolveStatus::Colourable
             : d.status == DpllResult::Status::Unsat ? SolveStatus::NotColourable
                                                     : SolveStatus::Timeout;
    if (d.status == DpllResult::Status::Sat)
      colouring = decode_colouring(d.assignment, a.graph.num_empires(), o.s);
    stats = d.stats;
  } else {
    ExactOptions eo;
    eo.budget = budget_of(o);
    const SolverResult res = exact_empire_colour(a.graph, o.s, eo);
    status = res.status;
    colouring = res.colouring;
    stats = res.stats;
  }
  out << to_string(status) << " nodes=" << stats.nodes << '\n';
  if (colouring && !o.colouring.empty()) write_colouring_to(o.colouring, *colouring);
  switch (status) {
    case SolveStatus::Colourable: return kOk;
    case SolveStatus::NotColourable: return kNegative;
    case SolveStatus::Timeout: return kTimeout;
  }
  return kFailure;
}

int run_verify(const Options& o, std::ostream& out) {
  const Artifact a = load_graph(o.input);
  std::istringstream in(read_text(o.colouring));
  const Colouring c = read_colouring(in);
  const VerifyResult res = verify_colouring(a.graph, c);
  if (res.ok) {
    out << "valid\n";
    return kOk;
  }
  out << "invalid: " << res.violated.size() << " monochromatic edge(s)\n";
  for (const auto& [x, y] : res.violated) out << "e " << x << ' ' << y << '\n';
  return kNegative;
}

int run_sparse(const Options& o, std::ostream& out) {
  const Artifact a = load_graph(o.input);
  const ColourOutcome res = sparse_colour(a.graph, parse_rational(o.sigma));
  if (const auto* c = std::get_if<Colouring>(&res)) {
    out << "coloured with " << c->s << " colours\n";
    write_colouring_to(o.colouring.empty() ? o.output : o.colouring, *c);
    return kOk;
  }
  const auto& w = std::get<InfeasibilityWitness>(res);
  out << to_string(w.kind);
  for (int e : w.empires) out << ' ' << e;
  out << '\n';
  return kNegative;
}

int run_stats(const Options& o, std::ostream& out) {
  const Artifact a = load_graph(o.input);
  const EmpireGraph& g = a.graph;
  const Graph& vg = g.graph();
  std::map<int, int> deg_hist, size_hist;
  for (int v = 0; v < vg.num_vertices(); ++v) ++deg_hist[vg.degree(v)];
  for (int e = 0; e < g.num_empires(); ++e) ++size_hist[static_cast<int>(g.members(e).size())];
  const ReducedGraph rg = reduce(g);

  nlohmann::ordered_json j;
  j["vertices"] = g.num_vertices();
  j["edges"] = g.num_edges();
  j["empires"] = g.num_empires();
  j["r"] = g.r();
  j["strict"] = g.is_strict();
  j["components"] = num_components(vg);
  j["max_degree"] = max_degree(vg);
  j["forest"] = is_forest(vg);
  j["tree"] = is_tree(vg);
  j["linear_forest"] = is_linear_forest(vg);
  j["planar"] = is_planar(vg);
  j["reduced_edges"] = rg.graph.num_edges();
  j["reduced_max_degree"] = max_degree(rg.graph);
  for (const auto& [d, c] : deg_hist) j["degree_histogram"][std::to_string(d)] = c;
  for (const auto& [sz, c] : size_hist) j["empire_sizes"][std::to_string(sz)] = c;
  if (o.json) {
    out << j.dump(2) << '\n';
    return kOk;
  }
  for (const auto& [key, val] : j.items()) {
    if (val.is_object()) {
      out << key << ':';
      for (const auto& [k2, v2] : val.items()) out << ' ' << k2 << '=' << v2;
      out << '\n';
    } else {
      out << key << ": " << val << '\n';
    }
  }
  return kOk;
}

int run_dpll(const Options& o, std::ostream& out) {
  const DpllResult d = dpll_solve(load_cnf(o.input), budget_of(o));
  switch (d.status) {
    case DpllResult::Status::Sat:
      out << "s SATISFIABLE\nv";
      for (std::size_t i = 0; i < d.assignment.size(); ++i)
        out << ' ' << (d.assignment[i] ? "" : "-") << i + 1;
      out << " 0\n";
      return kOk;
    case DpllResult::Status::Unsat:
      out << "s UNSATISFIABLE\n";
      return kNegative;
    case DpllResult::Status::Timeout:
      out << "s UNKNOWN\n";
      return kTimeout;
  }
  return kFailure;
}

int run_to_cnf(const Options& o, std::ostream&) {
  const Artifact a = load_graph(o.input);
  need(o.s >= 1, "--s must be at least 1");
  write_text(o.output, to_dimacs(empire_to_cnf(a.graph, o.s)));
  return kOk;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Empire colouring toolkit: gadgets, reductions and solvers"};
  app.require_subcommand(1);
  Options o;

  auto* gadget = app.add_subcommand("gadget", "Build a gadget and write it in eg format");
  gadget->add_option("kind", o.kind, "B, Bplus, Bminus, E, A or D")
      ->required()
      ->check(CLI::IsMember({"B", "Bplus", "Bminus", "E", "A", "D"}));
  gadget->add_option("--r", o.r, "Empire size");
  gadget->add_option("--s", o.s, "Colour count parameter")->required();
  gadget->add_option("--m", o.m, "A: number of monochromatic vertices wanted");
  gadget->add_option("--t", o.t, "E: number of blocks");
  gadget->add_option("--q", o.q, "E: sockets per block (default 2r-s+1)");
  gadget->add_option("--u", o.u, "Bplus root / Bminus, D: first special empire");
  gadget->add_option("--v", o.v, "Bminus, D: second special empire");
  gadget->add_option("--cache-dir", o.cache_dir, "D: cache directory for planar searches");
  gadget->add_option("-o,--output", o.output, "Output file");

  auto* red = app.add_subcommand("reduce", "Reduce a DIMACS CNF formula to an empire graph");
  red->add_option("kind", o.kind, "sat2fg, sat2lforest, sat2tree, fg2lforest, fg2tree or fg2planar")
      ->required()
      ->check(CLI::IsMember({"sat2fg", "sat2lforest", "sat2tree", "fg2lforest", "fg2tree", "fg2planar"}));
  red->add_option("input", o.input, "DIMACS file")->required();
  red->add_option("--r", o.r, "Empire size")->default_val(2);
  red->add_option("--s", o.s, "Colours of the formula graph (fg2*, sat2fg)");
  red->add_option("--cache-dir", o.cache_dir, "fg2planar: cache directory for planar searches");
  red->add_option("-o,--output", o.output, "Output file");

  auto* solve = app.add_subcommand("solve", "Decide (s,r)-colourability exactly");
  solve->add_option("input", o.input, "eg file")->required();
  solve->add_option("--s", o.s, "Number of colours")->required();
  solve->add_option("--engine", o.engine, "backtrack or cnf")->check(CLI::IsMember({"backtrack", "cnf"}));
  solve->add_option("--node-limit", o.node_limit, "Search node budget");
  solve->add_option("--time-limit", o.time_limit, "Time budget in seconds");
  solve->add_option("-c,--colouring", o.colouring, "Write the colouring found here");

  auto* verify = app.add_subcommand("verify", "Check a colouring against an empire graph");
  verify->add_option("graph", o.input, "eg file")->required();
  verify->add_option("colouring", o.colouring, "Colouring file")->required();

  auto* sparse = app.add_subcommand("sparse-colour", "Colour a sparse empire graph with r*sigma colours");
  sparse->add_option("input", o.input, "eg file")->required();
  sparse->add_option("--sigma", o.sigma, "Average-degree bound, p/q or decimal")->required();
  sparse->add_option("-o,--output", o.output, "Colouring output file");

  auto* stats = app.add_subcommand("stats", "Structural summary of an empire graph");
  stats->add_option("input", o.input, "eg file")->required();
  stats->add_flag("--json", o.json, "Emit JSON");

  auto* dpll = app.add_subcommand("dpll", "Solve a DIMACS CNF formula");
  dpll->add_option("input", o.input, "DIMACS file")->required();
  dpll->add_option("--node-limit", o.node_limit, "Search node budget");
  dpll->add_option("--time-limit", o.time_limit, "Time budget in seconds");

  auto* to_cnf = app.add_subcommand("to-cnf", "Encode s-colourability of an empire graph as CNF");
  to_cnf->add_option("input", o.input, "eg file")->required();
  to_cnf->add_option("--s", o.s, "Number of colours")->required();
  to_cnf->add_option("-o,--output", o.output, "Output file");

  try {
    app.parse(argc, argv);
    if (*gadget) return run_gadget(o, out);
    if (*red) return run_reduce(o, out);
    if (*solve) return run_solve(o, out);
    if (*verify) return run_verify(o, out);
    if (*sparse) return run_sparse(o, out);
    if (*stats) return run_stats(o, out);
    if (*dpll) return run_dpll(o, out);
    if (*to_cnf) return run_to_cnf(o, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace empire::cli
