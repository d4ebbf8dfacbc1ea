#pragma once

// The approximate kernelization drivers. Each one fixes a query size target
// s from epsilon, treewidth and maximum degree once at the top, then
// repeatedly slices off a tree decomposition subtree covering between s and
// 2s vertices, asks the oracle about that slice, and recurses on the rest.
// The per-problem combination steps reassemble the two partial answers into
// a feasible solution of the whole instance.
//
// The connected variant never hands the oracle a piece with dangling
// boundary: the separator bag is contracted to a single fresh vertex on both
// sides before querying or recursing, which keeps every piece connected.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "domkern/errors.hpp"
#include "domkern/graph.hpp"
#include "domkern/oracle.hpp"
#include "domkern/rational.hpp"
#include "domkern/tree_decomposition.hpp"

namespace domkern {

// Query size target per problem. All formulas are evaluated as one exact
// ceiling over 128-bit integers.
inline long long kernel_size(ProblemKind kind, const Rational& eps, int treewidth,
                             int max_degree) {
  if (!eps.positive()) throw invalid_input("epsilon must be positive");
  if (treewidth < 0) throw invalid_input("treewidth must be nonnegative");
  if (max_degree < 0) throw invalid_input("maximum degree must be nonnegative");
  if (treewidth > 1000000 || max_degree > 1000000)
    throw invalid_input("parameter out of supported range");
  long long p = eps.num, q = eps.den;
  if (p > (1ll << 40) || q > (1ll << 40))
    throw invalid_input("epsilon precision out of supported range");
  __int128 tw1 = treewidth + 1, d1 = max_degree + 1, pq = p + q;
  __int128 a = 0;
  switch (kind) {
    case ProblemKind::DS: a = 2 * pq * tw1 * d1; break;
    case ProblemKind::IDS: a = 3 * pq * tw1 * d1 * d1; break;
    case ProblemKind::CapDS: a = 3 * pq * tw1 * d1 * d1; break;
    case ProblemKind::CDS: a = pq * d1 * (4 * tw1 + 2); break;
    default: throw invalid_input("kernel size is defined for ds, ids, cds, and capds only");
  }
  __int128 s = (a + p - 1) / p;
  if (s > (__int128)4611686018427387903ll) throw size_error("kernel size target overflows");
  return static_cast<long long>(s);
}

struct KernelLevel {
  int node = -1;            // split node id in that level's decomposition, -1 at the base
  long long subtree_size = 0;
  int bag_size = 0;
  int query_size = 0;
  int answer_size = 0;
  bool base_case = false;
};

struct KernelConfig {
  Rational epsilon{1, 1};
  OracleBackend* oracle = nullptr;
  bool record_trace = false;
  std::vector<KernelLevel> trace;    // filled when record_trace is set
  std::vector<QueryRecord> queries;  // always filled from the oracle handle
  long long size_target = 0;         // the s the run used
};

// x solves the instance without the part behind b, y solves the sliced-off
// part, b is the separator bag. Their union minus b stays independent, and
// whatever b alone dominated is re-dominated greedily.
inline VertexSet combine_ids(const Graph& g, const VertexSet& x, const VertexSet& y,
                             const VertexSet& b) {
  detail::require_vertex_set(g, b, "separator");
  VertexSet z = vs_diff(vs_union(x, y), b);
  return complete_independent(g, z);
}

// For the connected variant both sides are solutions of separator-contracted
// graphs; putting the bag itself back in makes the union dominating, and the
// shortest-path merge restores connectivity.
inline VertexSet combine_cds(const Graph& g, const VertexSet& x, const VertexSet& y,
                             const VertexSet& b) {
  detail::require_vertex_set(g, b, "separator");
  return connect_dominating_set(g, vs_union(vs_union(x, y), b));
}

// The capacitated combination promotes all of N[b] into the solution, which
// frees every vertex whose assignment pointed into the bag; remaining
// assignments are disjoint between the two sides and keep their loads.
inline CapacitatedSolution combine_capds(const CapacitatedGraph& cg, const CapacitatedSolution& xs,
                                         const CapacitatedSolution& ys, const VertexSet& b) {
  const Graph& g = cg.graph;
  detail::require_vertex_set(g, b, "separator");
  VertexSet nb = closed_neighborhood(g, b);
  VertexSet z = vs_union(vs_union(xs.chosen, ys.chosen), nb);
  std::map<int, int> asg;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (vs_has(z, v)) continue;
    auto itx = xs.assignment.find(v);
    if (itx != xs.assignment.end()) {
      asg[v] = itx->second;
      continue;
    }
    auto ity = ys.assignment.find(v);
    if (ity != ys.assignment.end()) asg[v] = ity->second;
    // a vertex with no assignment on either side is caught by the final check
  }
  CapacitatedSolution sol{std::move(z), std::move(asg)};
  CheckResult chk = check_solution(cg, sol);
  if (!chk.ok) throw invalid_input("sides do not combine: " + chk.violation);
  return sol;
}

namespace detail {

inline void kern_check_inputs(const Graph& g, const NiceTreeDecomposition& nd,
                              const KernelConfig& cfg) {
  if (!cfg.oracle) throw invalid_input("no oracle backend configured");
  if (!cfg.epsilon.positive()) throw invalid_input("epsilon must be positive");
  CheckResult chk = validate_nice(g, nd);
  if (!chk.ok) throw invalid_input("invalid nice tree decomposition: " + chk.violation);
}

inline VertexSet map_back(const VertexSet& local, const std::vector<int>& to_original) {
  VertexSet out;
  out.reserve(local.size());
  for (int v : local) out.push_back(to_original[v]);
  return vs_normalized(out);
}

inline void trace_push(KernelConfig& cfg, const KernelLevel& lvl) {
  if (cfg.record_trace) cfg.trace.push_back(lvl);
}

struct PlainSplit {
  VertexSet vt, xt, keep;
  InducedSubgraph part;          // the sliced-off side, G[V_t]
  InducedSubgraph rest;          // what stays, G minus (V_t \ X_t)
  NiceTreeDecomposition rest_nd; // decomposes rest.graph under its new ids
};

inline PlainSplit plain_split(const Graph& g, const NiceTreeDecomposition& nd, int t) {
  PlainSplit s;
  s.vt = nd.subtree_vertices(t);
  s.xt = nd.node(t).bag;
  VertexSet all;
  all.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all.push_back(v);
  s.keep = vs_diff(all, vs_diff(s.vt, s.xt));
  s.part = induced_subgraph(g, s.vt);
  s.rest = induced_subgraph(g, s.keep);
  NiceTreeDecomposition pruned = prune_subtree(nd, t);
  std::vector<int> newid(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(s.keep.size()); ++i) newid[s.keep[i]] = i;
  s.rest_nd = rename_vertices(pruned, newid);
  return s;
}

inline VertexSet kern_ds_rec(const Graph& g, const NiceTreeDecomposition& nd, long long s,
                             OracleHandle& h, KernelConfig& cfg) {
  long long n = g.vertex_count();
  if (n <= 2 * s) {
    VertexSet ans = h.query(ProblemKind::DS, g);
    trace_push(cfg, {-1, n, 0, static_cast<int>(n), static_cast<int>(ans.size()), true});
    return ans;
  }
  int t = find_split_node(nd, s);
  PlainSplit sp = plain_split(g, nd, t);
  VertexSet y = map_back(h.query(ProblemKind::DS, sp.part.graph), sp.part.to_original);
  trace_push(cfg, {t, static_cast<long long>(sp.vt.size()), static_cast<int>(sp.xt.size()),
                   sp.part.graph.vertex_count(), static_cast<int>(y.size()), false});
  VertexSet x = map_back(kern_ds_rec(sp.rest.graph, sp.rest_nd, s, h, cfg), sp.rest.to_original);
  return vs_union(x, y);
}

inline VertexSet kern_ids_rec(const Graph& g, const NiceTreeDecomposition& nd, long long s,
                              OracleHandle& h, KernelConfig& cfg) {
  long long n = g.vertex_count();
  if (n <= 2 * s) {
    VertexSet ans = h.query(ProblemKind::IDS, g);
    trace_push(cfg, {-1, n, 0, static_cast<int>(n), static_cast<int>(ans.size()), true});
    return ans;
  }
  int t = find_split_node(nd, s);
  PlainSplit sp = plain_split(g, nd, t);
  VertexSet y = map_back(h.query(ProblemKind::IDS, sp.part.graph), sp.part.to_original);
  trace_push(cfg, {t, static_cast<long long>(sp.vt.size()), static_cast<int>(sp.xt.size()),
                   sp.part.graph.vertex_count(), static_cast<int>(y.size()), false});
  VertexSet x = map_back(kern_ids_rec(sp.rest.graph, sp.rest_nd, s, h, cfg), sp.rest.to_original);
  return combine_ids(g, x, y, sp.xt);
}

inline CapacitatedSolution kern_capds_rec(const CapacitatedGraph& cg,
                                          const NiceTreeDecomposition& nd, long long s,
                                          OracleHandle& h, KernelConfig& cfg) {
  long long n = cg.graph.vertex_count();
  if (n <= 2 * s) {
    CapacitatedSolution ans = h.query(cg);
    trace_push(cfg, {-1, n, 0, static_cast<int>(n), static_cast<int>(ans.chosen.size()), true});
    return ans;
  }
  int t = find_split_node(nd, s);
  PlainSplit sp = plain_split(cg.graph, nd, t);
  InducedCapacitated part_c = induced_subgraph(cg, sp.vt);
  CapacitatedSolution y_local = h.query(part_c.graph);
  CapacitatedSolution y;
  y.chosen = map_back(y_local.chosen, part_c.to_original);
  for (auto [v, u] : y_local.assignment)
    y.assignment[part_c.to_original[v]] = part_c.to_original[u];
  trace_push(cfg, {t, static_cast<long long>(sp.vt.size()), static_cast<int>(sp.xt.size()),
                   part_c.graph.graph.vertex_count(), static_cast<int>(y.chosen.size()), false});
  InducedCapacitated rest_c = induced_subgraph(cg, sp.keep);
  CapacitatedSolution x_local = kern_capds_rec(rest_c.graph, sp.rest_nd, s, h, cfg);
  CapacitatedSolution x;
  x.chosen = map_back(x_local.chosen, rest_c.to_original);
  for (auto [v, u] : x_local.assignment)
    x.assignment[rest_c.to_original[v]] = rest_c.to_original[u];
  return combine_capds(cg, x, y, sp.xt);
}

inline VertexSet kern_cds_rec(const Graph& g, const NiceTreeDecomposition& nd, long long s,
                              OracleHandle& h, KernelConfig& cfg) {
  long long n = g.vertex_count();
  if (n <= 2 * s) {
    VertexSet ans = h.query(ProblemKind::CDS, g);
    trace_push(cfg, {-1, n, 0, static_cast<int>(n), static_cast<int>(ans.size()), true});
    return ans;
  }
  int t = find_split_node(nd, s);
  VertexSet vt = nd.subtree_vertices(t);
  VertexSet xt = nd.node(t).bag;
  VertexSet all;
  all.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all.push_back(v);
  VertexSet keep = vs_diff(all, vs_diff(vt, xt));

  // sliced-off side with the bag contracted to the fresh vertex
  InducedSubgraph part = induced_subgraph(g, vt);
  VertexSet xt_in_part;
  for (int i = 0; i < static_cast<int>(vt.size()); ++i)
    if (vs_has(xt, vt[i])) xt_in_part.push_back(i);
  SeparatorGadget gy = attach_separator_vertex(part.graph, xt_in_part);
  VertexSet yg = h.query(ProblemKind::CDS, gy.graph);
  VertexSet y;
  for (int v : yg)
    if (gy.to_original[v] >= 0) y.push_back(part.to_original[gy.to_original[v]]);
  y = vs_normalized(y);
  trace_push(cfg, {t, static_cast<long long>(vt.size()), static_cast<int>(xt.size()),
                   gy.graph.vertex_count(), static_cast<int>(yg.size()), false});

  // remaining side, also contracted, with the decomposition following suit
  InducedSubgraph rest = induced_subgraph(g, keep);
  VertexSet xt_in_rest;
  for (int i = 0; i < static_cast<int>(keep.size()); ++i)
    if (vs_has(xt, keep[i])) xt_in_rest.push_back(i);
  SeparatorGadget gx = attach_separator_vertex(rest.graph, xt_in_rest);
  NiceTreeDecomposition pruned = prune_subtree(nd, t);
  NiceTreeDecomposition subst = substitute_bag_vertices(pruned, xt, g.vertex_count());
  std::vector<int> newid(g.vertex_count() + 1, -1);
  VertexSet survivors = vs_diff(keep, xt);
  for (int i = 0; i < static_cast<int>(survivors.size()); ++i) newid[survivors[i]] = i;
  newid[g.vertex_count()] = gx.z;
  NiceTreeDecomposition nd2 = rename_vertices(subst, newid);

  VertexSet xg = kern_cds_rec(gx.graph, nd2, s, h, cfg);
  VertexSet x;
  for (int v : xg)
    if (gx.to_original[v] >= 0) x.push_back(rest.to_original[gx.to_original[v]]);
  x = vs_normalized(x);
  return combine_cds(g, x, y, xt);
}

}  // namespace detail

inline VertexSet kernelize_ds(const Graph& g, const NiceTreeDecomposition& nd,
                              KernelConfig& cfg) {
  detail::kern_check_inputs(g, nd, cfg);
  long long s = kernel_size(ProblemKind::DS, cfg.epsilon, nd.width(), g.max_degree());
  cfg.size_target = s;
  cfg.trace.clear();
  cfg.queries.clear();
  OracleHandle h(*cfg.oracle, 2 * s);
  VertexSet sol = detail::kern_ds_rec(g, nd, s, h, cfg);
  cfg.queries = h.log();
  CheckResult chk = check_solution(g, ProblemKind::DS, sol);
  if (!chk.ok)
    throw contract_violation("kernelization produced an invalid solution: " + chk.violation);
  return sol;
}

inline VertexSet kernelize_ids(const Graph& g, const NiceTreeDecomposition& nd,
                               KernelConfig& cfg) {
  detail::kern_check_inputs(g, nd, cfg);
  long long s = kernel_size(ProblemKind::IDS, cfg.epsilon, nd.width(), g.max_degree());
  cfg.size_target = s;
  cfg.trace.clear();
  cfg.queries.clear();
  OracleHandle h(*cfg.oracle, 2 * s);
  VertexSet sol = detail::kern_ids_rec(g, nd, s, h, cfg);
  cfg.queries = h.log();
  CheckResult chk = check_solution(g, ProblemKind::IDS, sol);
  if (!chk.ok)
    throw contract_violation("kernelization produced an invalid solution: " + chk.violation);
  return sol;
}

inline VertexSet kernelize_cds(const Graph& g, const NiceTreeDecomposition& nd,
                               KernelConfig& cfg) {
  detail::kern_check_inputs(g, nd, cfg);
  if (!is_connected(g)) throw invalid_input("graph is not connected");
  long long s = kernel_size(ProblemKind::CDS, cfg.epsilon, nd.width(), g.max_degree());
  cfg.size_target = s;
  cfg.trace.clear();
  cfg.queries.clear();
  OracleHandle h(*cfg.oracle, 2 * s + 1);
  VertexSet sol = detail::kern_cds_rec(g, nd, s, h, cfg);
  cfg.queries = h.log();
  CheckResult chk = check_solution(g, ProblemKind::CDS, sol);
  if (!chk.ok)
    throw contract_violation("kernelization produced an invalid solution: " + chk.violation);
  return sol;
}

inline CapacitatedSolution kernelize_capds(const CapacitatedGraph& cg,
                                           const NiceTreeDecomposition& nd, KernelConfig& cfg) {
  detail::kern_check_inputs(cg.graph, nd, cfg);
  long long s = kernel_size(ProblemKind::CapDS, cfg.epsilon, nd.width(), cg.graph.max_degree());
  cfg.size_target = s;
  cfg.trace.clear();
  cfg.queries.clear();
  OracleHandle h(*cfg.oracle, 2 * s);
  CapacitatedSolution sol = detail::kern_capds_rec(cg, nd, s, h, cfg);
  cfg.queries = h.log();
  CheckResult chk = check_solution(cg, sol);
  if (!chk.ok)
    throw contract_violation("kernelization produced an invalid solution: " + chk.violation);
  return sol;
}

}  // namespace domkern
