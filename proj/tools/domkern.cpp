// Command line front end: kernelization runs with CSV reporting, instance
// generation, and input checking. Exit codes: 0 success, 2 unreadable or
// malformed input, 3 broken internal guarantee, 4 instance or solution that
// does not verify (including exact solver budget refusals).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "domkern/domkern.hpp"

using namespace domkern;

namespace {

std::ifstream open_or_die(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(1, "cannot open " + path);
  return in;
}

Graph load_graph(const std::string& path) {
  std::ifstream in = open_or_die(path);
  return parse_gr(in);
}

// answers pass through untouched except the last chosen vertex is dropped,
// so the handle's feasibility check has something to catch
class DamagedBackend : public OracleBackend {
 public:
  explicit DamagedBackend(OracleBackend& inner) : inner_(&inner) {}
  std::string name() const override { return inner_->name() + "+damaged"; }
  VertexSet solve(ProblemKind kind, const Graph& g) override {
    VertexSet ans = inner_->solve(kind, g);
    if (!ans.empty()) ans.pop_back();
    return ans;
  }
  CapacitatedSolution solve(const CapacitatedGraph& cg) override {
    CapacitatedSolution ans = inner_->solve(cg);
    if (!ans.chosen.empty()) ans.chosen.pop_back();
    return ans;
  }
  VertexSet solve(const HittingSetInstance& inst) override { return inner_->solve(inst); }
  VertexSet solve(const SteinerInstance& inst) override { return inner_->solve(inst); }

 private:
  OracleBackend* inner_;
};

ProblemKind parse_problem(const std::string& name) {
  if (name == "ds") return ProblemKind::DS;
  if (name == "ids") return ProblemKind::IDS;
  if (name == "cds") return ProblemKind::CDS;
  if (name == "capds") return ProblemKind::CapDS;
  throw invalid_input("unknown problem '" + name + "', expected ds, ids, cds, or capds");
}

std::vector<int> build_caps(const Graph& g, const std::string& spec, std::uint64_t seed) {
  if (spec == "degree") return ds_to_capds(g).cap;
  if (spec.rfind("uniform:", 0) == 0) {
    int k = std::stoi(spec.substr(8));
    if (k < 0) throw invalid_input("uniform capacity must be nonnegative");
    return std::vector<int>(g.vertex_count(), k);
  }
  if (spec.rfind("random:", 0) == 0) {
    int k = std::stoi(spec.substr(7));
    Rng rng(seed);
    return gen_caps(rng, g, k);
  }
  throw invalid_input("unknown capacity spec '" + spec + "'");
}

void write_trace(const std::string& path, const std::vector<KernelLevel>& trace) {
  std::ofstream out(path);
  if (!out) throw invalid_input("cannot write " + path);
  for (const auto& lvl : trace) {
    nlohmann::json j{{"node", lvl.node},
                     {"subtree", lvl.subtree_size},
                     {"bag", lvl.bag_size},
                     {"query", lvl.query_size},
                     {"answer", lvl.answer_size},
                     {"base", lvl.base_case}};
    out << j.dump() << "\n";
  }
}

void print_solution(const VertexSet& sol) {
  std::cout << "solution";
  for (int v : sol) std::cout << " " << (v + 1);
  std::cout << "\n";
}

int run_kernelize(const std::string& graph_path, const std::string& td_path,
                  const std::string& problem, const std::string& backend_name,
                  const std::string& eps_text, const std::string& caps_spec,
                  std::uint64_t cap_seed, long long budget, const std::string& trace_path,
                  bool want_optimum, bool no_header, bool show_solution, bool negative_control,
                  const std::string& name) {
  ProblemKind kind = parse_problem(problem);
  Graph g = load_graph(graph_path);
  TreeDecomposition td;
  if (!td_path.empty()) {
    std::ifstream in = open_or_die(td_path);
    td = parse_td(in, g);
  } else {
    td = heuristic_td(g);
  }
  NiceTreeDecomposition nd = make_nice(g, td);

  ExactBudget eb = ExactBudget::from_env();
  if (budget > 0) eb.ds = eb.cds = eb.ids = eb.capds = eb.hs = eb.nst = static_cast<int>(budget);
  ExactBackend exact{eb};
  GreedyBackend greedy;
  OracleBackend* backend = nullptr;
  if (backend_name == "exact")
    backend = &exact;
  else if (backend_name == "greedy")
    backend = &greedy;
  else
    throw invalid_input("unknown backend '" + backend_name + "', expected exact or greedy");
  DamagedBackend damaged{*backend};
  if (negative_control) backend = &damaged;

  KernelConfig cfg;
  cfg.epsilon = parse_rational(eps_text);
  cfg.oracle = backend;
  cfg.record_trace = !trace_path.empty();

  ExperimentRecord rec;
  rec.instance = name.empty() ? graph_path : name;
  rec.problem = problem;
  rec.backend = backend->name();
  rec.epsilon = to_string(cfg.epsilon);
  rec.n = g.vertex_count();
  rec.m = g.edge_count();
  rec.treewidth = nd.width();
  rec.max_degree = g.max_degree();

  auto t0 = std::chrono::steady_clock::now();
  VertexSet plain;
  CapacitatedSolution cap_sol;
  if (kind == ProblemKind::CapDS) {
    CapacitatedGraph cg{g, build_caps(g, caps_spec, cap_seed)};
    cap_sol = kernelize_capds(cg, nd, cfg);
    rec.answer_size = static_cast<long long>(cap_sol.chosen.size());
  } else {
    if (kind == ProblemKind::DS) plain = kernelize_ds(g, nd, cfg);
    if (kind == ProblemKind::IDS) plain = kernelize_ids(g, nd, cfg);
    if (kind == ProblemKind::CDS) plain = kernelize_cds(g, nd, cfg);
    rec.answer_size = static_cast<long long>(plain.size());
  }
  auto t1 = std::chrono::steady_clock::now();
  rec.seconds = std::chrono::duration<double>(t1 - t0).count();
  rec.size_target = cfg.size_target;
  rec.queries = static_cast<long long>(cfg.queries.size());
  for (const auto& q : cfg.queries)
    rec.max_query_size = std::max(rec.max_query_size, static_cast<long long>(q.instance_size));

  if (want_optimum) {
    ExactBackend ref{eb};
    if (kind == ProblemKind::CapDS) {
      CapacitatedGraph cg{g, build_caps(g, caps_spec, cap_seed)};
      rec.optimum = static_cast<long long>(ref.solve(cg).chosen.size());
    } else {
      rec.optimum = static_cast<long long>(ref.solve(kind, g).size());
    }
  }

  if (!trace_path.empty()) write_trace(trace_path, cfg.trace);
  if (!no_header) std::cout << experiment_csv_header() << "\n";
  std::cout << to_csv_row(rec) << "\n";
  if (show_solution) print_solution(kind == ProblemKind::CapDS ? cap_sol.chosen : plain);
  return 0;
}

int run_generate(const std::string& family, int n, int rows, int cols, int cliques, int size,
                 int max_degree, int na, int nb, int nc, int vars, int nclauses, int max_len,
                 std::uint64_t seed, const std::string& out_path) {
  std::ostringstream body;
  if (family == "cnf") {
    Rng rng(seed);
    CnfFormula f = gen_cnf(rng, vars, nclauses, max_len);
    body << "p cnf " << f.variables << " " << f.clauses.size() << "\n";
    for (const auto& cl : f.clauses) {
      for (int lit : cl) body << lit << " ";
      body << "0\n";
    }
  } else {
    Graph g(0, {});
    std::string comment;
    if (family == "path") {
      g = gen_path(n);
    } else if (family == "cycle") {
      g = gen_cycle(n);
    } else if (family == "grid") {
      g = gen_grid(rows, cols);
    } else if (family == "star") {
      g = gen_star(n);
    } else if (family == "clique-chain") {
      g = gen_clique_chain(cliques, size);
    } else if (family == "random") {
      Rng rng(seed);
      g = gen_random_bounded(rng, n, max_degree);
    } else if (family == "connected") {
      Rng rng(seed);
      g = gen_connected_bounded(rng, n, max_degree);
    } else if (family == "separated") {
      Rng rng(seed);
      SeparatedInstance inst = gen_separated(rng, na, nb, nc, max_degree);
      g = inst.graph;
      std::ostringstream cs;
      cs << "c blocks a=1.." << na << " b=" << (na + 1) << ".." << (na + nb) << " c="
         << (na + nb + 1) << ".." << (na + nb + nc) << "\n";
      comment = cs.str();
    } else {
      throw invalid_input("unknown family '" + family + "'");
    }
    body << comment;
    write_gr(body, g);
  }
  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw invalid_input("cannot write " + out_path);
    out << body.str();
  }
  return 0;
}

int run_verify(const std::string& graph_path, const std::string& td_path) {
  Graph g = load_graph(graph_path);
  if (td_path.empty()) {
    std::cout << "ok n=" << g.vertex_count() << " m=" << g.edge_count()
              << " maxdeg=" << g.max_degree() << "\n";
    return 0;
  }
  std::ifstream in = open_or_die(td_path);
  TreeDecomposition td;
  try {
    td = parse_td(in, g);
  } catch (const invalid_input& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return 4;
  }
  NiceTreeDecomposition nd = make_nice(g, td);
  CheckResult chk = validate_nice(g, nd);
  if (!chk.ok) {
    std::cout << "invalid: " << chk.violation << "\n";
    return 4;
  }
  std::cout << "ok width=" << width(td) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"approximate Turing kernelization for domination problems"};
  app.require_subcommand(1);

  auto* kern = app.add_subcommand("kernelize", "run a kernelization and report a CSV row");
  std::string graph_path, td_path, problem = "ds", backend = "exact", eps_text = "1";
  std::string caps_spec = "degree", trace_path, name;
  std::uint64_t cap_seed = 1;
  long long budget = 0;
  bool want_optimum = false, no_header = false, show_solution = false, negative_control = false;
  kern->add_option("--graph", graph_path, "input graph in .gr format")->required();
  kern->add_option("--td", td_path, "tree decomposition in .td format, computed if omitted");
  kern->add_option("--problem", problem, "ds, ids, cds, or capds");
  kern->add_option("--backend", backend, "exact or greedy");
  kern->add_option("--epsilon", eps_text, "approximation slack, e.g. 1, 0.25, or 3/4");
  kern->add_option("--caps", caps_spec, "capds capacities: degree, uniform:K, or random:K");
  kern->add_option("--cap-seed", cap_seed, "seed for random capacities");
  kern->add_option("--budget", budget, "exact backend size budget for all problems");
  kern->add_option("--trace", trace_path, "write per level JSONL trace to this file");
  kern->add_option("--name", name, "instance name for the CSV column");
  kern->add_flag("--optimum", want_optimum, "also compute the exact optimum");
  kern->add_flag("--no-header", no_header, "omit the CSV header line");
  kern->add_flag("--solution", show_solution, "print the solution vertices, 1-based");
  kern->add_flag("--negative-control", negative_control, "damaged oracle, must fail")
      ->group("");  // hidden, exists to exercise the failure exit

  auto* gen = app.add_subcommand("generate", "write an instance in .gr or DIMACS format");
  std::string family = "path", out_path;
  int n = 10, rows = 3, cols = 3, cliques = 3, size = 4, max_degree = 4;
  int na = 5, nb = 2, nc = 5, vars = 4, nclauses = 8, max_len = 3;
  std::uint64_t seed = 1;
  gen->add_option("--family", family,
                  "path, cycle, grid, star, clique-chain, random, connected, separated, or cnf");
  gen->add_option("--n", n, "vertex count for path, cycle, star, random, connected");
  gen->add_option("--rows", rows, "grid rows");
  gen->add_option("--cols", cols, "grid columns");
  gen->add_option("--cliques", cliques, "clique-chain length");
  gen->add_option("--size", size, "clique-chain clique size");
  gen->add_option("--max-degree", max_degree, "degree bound for the random families");
  gen->add_option("--na", na, "separated: first block size");
  gen->add_option("--nb", nb, "separated: middle block size");
  gen->add_option("--nc", nc, "separated: last block size");
  gen->add_option("--vars", vars, "cnf: variable count");
  gen->add_option("--clauses", nclauses, "cnf: clause count");
  gen->add_option("--max-len", max_len, "cnf: largest clause length");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--out", out_path, "output file, stdout if omitted");

  auto* ver = app.add_subcommand("verify", "check a graph file and optionally a decomposition");
  std::string v_graph, v_td;
  ver->add_option("--graph", v_graph, "input graph in .gr format")->required();
  ver->add_option("--td", v_td, "tree decomposition to check against the graph");

  try {
    app.parse(argc, argv);
    if (kern->parsed())
      return run_kernelize(graph_path, td_path, problem, backend, eps_text, caps_spec, cap_seed,
                           budget, trace_path, want_optimum, no_header, show_solution,
                           negative_control, name);
    if (gen->parsed())
      return run_generate(family, n, rows, cols, cliques, size, max_degree, na, nb, nc, vars,
                          nclauses, max_len, seed, out_path);
    if (ver->parsed()) return run_verify(v_graph, v_td);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const contract_violation& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const size_error& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const invalid_input& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
