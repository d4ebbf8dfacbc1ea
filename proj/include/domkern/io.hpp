#pragma once

// Text formats: the .gr/.td graph and decomposition exchange formats with
// 1-based vertex ids, DIMACS CNF, and the flat CSV experiment records the
// command line tool emits. Parsers are strict and every complaint carries
// the offending line number.

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "domkern/errors.hpp"
#include "domkern/graph.hpp"
#include "domkern/reductions.hpp"
#include "domkern/tree_decomposition.hpp"

namespace domkern {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

inline long long parse_ll(const std::string& tok, int line, const std::string& what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (...) {
    throw parse_error(line, what + " is not an integer: '" + tok + "'");
  }
  if (pos != tok.size()) throw parse_error(line, what + " is not an integer: '" + tok + "'");
  return v;
}

inline long long parse_count(const std::string& tok, int line, const std::string& what) {
  long long v = parse_ll(tok, line, what);
  if (v < 0) throw parse_error(line, what + " must be nonnegative");
  if (v > 10000000) throw parse_error(line, what + " out of supported range");
  return v;
}

}  // namespace detail

inline Graph parse_gr(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) throw parse_error(lineno, "duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "tds" && tok[1] != "tw"))
        throw parse_error(lineno, "expected a problem line like 'p tds <n> <m>'");
      n = detail::parse_count(tok[2], lineno, "vertex count");
      m = detail::parse_count(tok[3], lineno, "edge count");
      continue;
    }
    if (n < 0) throw parse_error(lineno, "edge listed before the problem line");
    if (tok.size() != 2) throw parse_error(lineno, "expected two endpoints");
    long long u = detail::parse_ll(tok[0], lineno, "endpoint");
    long long v = detail::parse_ll(tok[1], lineno, "endpoint");
    if (u < 1 || u > n || v < 1 || v > n)
      throw parse_error(lineno, "vertex id out of range 1.." + std::to_string(n));
    if (u == v) throw parse_error(lineno, "self loop at vertex " + std::to_string(u));
    int a = static_cast<int>(u) - 1, b = static_cast<int>(v) - 1;
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second)
      throw parse_error(lineno, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (static_cast<long long>(edges.size()) >= m)
      throw parse_error(lineno, "more edges than the problem line declares");
    edges.emplace_back(a, b);
  }
  if (n < 0) throw parse_error(lineno == 0 ? 1 : lineno, "missing problem line");
  if (static_cast<long long>(edges.size()) != m)
    throw parse_error(lineno == 0 ? 1 : lineno,
                      "edge count mismatch: header declares " + std::to_string(m) + ", found " +
                          std::to_string(edges.size()));
  return Graph(static_cast<int>(n), std::move(edges));
}

inline void write_gr(std::ostream& out, const Graph& g) {
  out << "p tds " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << (u + 1) << " " << (v + 1) << "\n";
}

inline TreeDecomposition parse_td(std::istream& in, const Graph& g) {
  std::string line;
  int lineno = 0;
  long long nb = -1, maxbag = -1, n = -1;
  std::vector<std::vector<int>> bags;
  std::vector<char> bag_seen;
  std::vector<std::pair<int, int>> tedges;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "s") {
      if (nb >= 0) throw parse_error(lineno, "duplicate header line");
      if (tok.size() != 5 || tok[1] != "td")
        throw parse_error(lineno, "expected a header like 's td <bags> <maxbag> <n>'");
      nb = detail::parse_count(tok[2], lineno, "bag count");
      maxbag = detail::parse_count(tok[3], lineno, "largest bag size");
      n = detail::parse_count(tok[4], lineno, "vertex count");
      if (nb == 0) throw parse_error(lineno, "at least one bag is required");
      if (n != g.vertex_count())
        throw parse_error(lineno, "vertex count " + std::to_string(n) +
                                      " differs from the graph's " +
                                      std::to_string(g.vertex_count()));
      bags.assign(nb, {});
      bag_seen.assign(nb, 0);
      continue;
    }
    if (nb < 0) throw parse_error(lineno, "content before the header line");
    if (tok[0] == "b") {
      if (tok.size() < 2) throw parse_error(lineno, "bag line without a bag id");
      long long i = detail::parse_ll(tok[1], lineno, "bag id");
      if (i < 1 || i > nb) throw parse_error(lineno, "bag id out of range 1.." + std::to_string(nb));
      if (bag_seen[i - 1]) throw parse_error(lineno, "bag " + std::to_string(i) + " listed twice");
      bag_seen[i - 1] = 1;
      std::vector<int> bag;
      for (std::size_t k = 2; k < tok.size(); ++k) {
        long long v = detail::parse_ll(tok[k], lineno, "bag vertex");
        if (v < 1 || v > n)
          throw parse_error(lineno, "vertex id out of range 1.." + std::to_string(n));
        bag.push_back(static_cast<int>(v) - 1);
      }
      bag = vs_normalized(bag);
      if (static_cast<long long>(bag.size()) > maxbag)
        throw parse_error(lineno, "bag " + std::to_string(i) + " exceeds the declared maximum size");
      bags[i - 1] = std::move(bag);
      continue;
    }
    if (tok.size() != 2) throw parse_error(lineno, "expected a tree edge with two node ids");
    long long a = detail::parse_ll(tok[0], lineno, "node id");
    long long b = detail::parse_ll(tok[1], lineno, "node id");
    if (a < 1 || a > nb || b < 1 || b > nb)
      throw parse_error(lineno, "node id out of range 1.." + std::to_string(nb));
    tedges.emplace_back(static_cast<int>(a) - 1, static_cast<int>(b) - 1);
  }
  if (nb < 0) throw parse_error(lineno == 0 ? 1 : lineno, "missing header line");
  for (long long i = 0; i < nb; ++i)
    if (!bag_seen[i])
      throw parse_error(lineno, "bag " + std::to_string(i + 1) + " never listed");
  if (static_cast<long long>(tedges.size()) != nb - 1)
    throw parse_error(lineno, "tree edge count mismatch: " + std::to_string(tedges.size()) +
                                  " edges for " + std::to_string(nb) + " bags");
  TreeDecomposition td{std::move(bags), std::move(tedges), 0};
  CheckResult chk = validate(g, td);
  if (!chk.ok) throw invalid_input("invalid tree decomposition: " + chk.violation);
  return td;
}

inline void write_td(std::ostream& out, const TreeDecomposition& td, int n) {
  int maxbag = 0;
  for (const auto& b : td.bags) maxbag = std::max(maxbag, static_cast<int>(b.size()));
  out << "s td " << td.bags.size() << " " << maxbag << " " << n << "\n";
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << (i + 1);
    for (int v : td.bags[i]) out << " " << (v + 1);
    out << "\n";
  }
  for (auto [a, b] : td.edges) out << (a + 1) << " " << (b + 1) << "\n";
}

inline CnfFormula parse_dimacs_cnf(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long vars = -1, m = -1;
  std::vector<std::vector<int>> clauses;
  std::vector<int> cur;
  bool terminated = false;
  while (!terminated && std::getline(in, line)) {
    ++lineno;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0][0] == 'c') continue;
    if (tok[0] == "p") {
      if (vars >= 0) throw parse_error(lineno, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "cnf")
        throw parse_error(lineno, "expected a problem line like 'p cnf <vars> <clauses>'");
      vars = detail::parse_count(tok[2], lineno, "variable count");
      m = detail::parse_count(tok[3], lineno, "clause count");
      continue;
    }
    if (tok[0] == "%") {
      terminated = true;  // trailer marker some collections use; rest is ignored
      break;
    }
    if (vars < 0) throw parse_error(lineno, "literal before the problem line");
    for (const auto& t : tok) {
      long long lit = detail::parse_ll(t, lineno, "literal");
      if (lit == 0) {
        if (cur.empty()) throw parse_error(lineno, "empty clause");
        clauses.push_back(vs_normalized(cur));
        cur.clear();
        continue;
      }
      if (lit > vars || lit < -vars)
        throw parse_error(lineno, "literal " + std::to_string(lit) + " out of range for " +
                                      std::to_string(vars) + " variables");
      cur.push_back(static_cast<int>(lit));
    }
  }
  int last = lineno == 0 ? 1 : lineno;
  if (vars < 0) throw parse_error(last, "missing problem line");
  if (!cur.empty()) throw parse_error(last, "unterminated clause");
  if (static_cast<long long>(clauses.size()) != m)
    throw parse_error(last, "clause count mismatch: header declares " + std::to_string(m) +
                                ", found " + std::to_string(clauses.size()));
  return {static_cast<int>(vars), std::move(clauses)};
}

struct ExperimentRecord {
  std::string instance;
  std::string problem;
  std::string backend;
  std::string epsilon;
  int n = 0;
  int m = 0;
  int treewidth = 0;
  int max_degree = 0;
  long long size_target = 0;
  long long queries = 0;
  long long max_query_size = 0;
  long long answer_size = 0;
  long long optimum = -1;  // -1 when not computed
  double seconds = 0.0;
};

namespace detail {
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

inline std::string experiment_csv_header() {
  return "instance,problem,backend,epsilon,n,m,treewidth,max_degree,size_target,queries,"
         "max_query_size,answer_size,optimum,seconds";
}

inline std::string to_csv_row(const ExperimentRecord& r) {
  std::ostringstream out;
  out << detail::csv_field(r.instance) << "," << detail::csv_field(r.problem) << ","
      << detail::csv_field(r.backend) << "," << detail::csv_field(r.epsilon) << "," << r.n << ","
      << r.m << "," << r.treewidth << "," << r.max_degree << "," << r.size_target << ","
      << r.queries << "," << r.max_query_size << "," << r.answer_size << "," << r.optimum << ","
      << r.seconds;
  return out.str();
}

}  // namespace domkern
