#pragma once

// Translations between the problems, kept separate from the kernelization
// core: hitting set into domination (shared layout with a hub vertex and a
// clique over the elements), hitting set into terminal connection on the
// same graph, plain domination into the capacitated variant, the
// satisfiability gap construction for independent domination, and the
// decision-to-search routine for independent domination.

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "domkern/errors.hpp"
#include "domkern/graph.hpp"
#include "domkern/rational.hpp"
#include "domkern/solvers.hpp"

namespace domkern {

enum class VertexRole { Element, Hub, SetNode };

// Elements become vertices 0..U-1, the hub is vertex U, set j becomes
// vertex U+1+j. Elements and hub form a clique; a set vertex is adjacent to
// exactly its elements. Optimum dominating set size equals optimum hitting
// set size, and stays equal under the connectivity requirement.
struct DsReduction {
  Graph graph;
  std::vector<VertexRole> role;
  HittingSetInstance source;
};

namespace detail {
inline void require_hs_instance(const HittingSetInstance& inst) {
  if (inst.universe < 0) throw invalid_input("negative universe size");
  if (inst.sets.empty()) throw invalid_input("empty set family has nothing to dominate");
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    if (inst.sets[i].empty())
      throw invalid_input("set " + std::to_string(i) + " is empty and cannot be hit");
    for (int e : inst.sets[i])
      if (e < 0 || e >= inst.universe)
        throw invalid_input("set " + std::to_string(i) + " contains element " + std::to_string(e) +
                            " outside the universe");
  }
}
}  // namespace detail

inline DsReduction hs_to_ds(const HittingSetInstance& inst) {
  detail::require_hs_instance(inst);
  int u = inst.universe;
  int m = static_cast<int>(inst.sets.size());
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a <= u; ++a)
    for (int b = a + 1; b <= u; ++b) edges.emplace_back(a, b);
  for (int j = 0; j < m; ++j)
    for (int e : vs_normalized(inst.sets[j])) edges.emplace_back(e, u + 1 + j);
  std::vector<VertexRole> role(u + 1 + m, VertexRole::Element);
  role[u] = VertexRole::Hub;
  for (int j = 0; j < m; ++j) role[u + 1 + j] = VertexRole::SetNode;
  return {Graph(u + 1 + m, std::move(edges)), std::move(role), inst};
}

// Any dominating set maps to a hitting set of the same size or smaller:
// element vertices stand for themselves, a set vertex stands for the
// smallest element of its set, the hub contributes nothing.
inline VertexSet lift_ds_to_hs(const DsReduction& red, const VertexSet& ds) {
  detail::require_vertex_set(red.graph, ds, "solution");
  int u = red.source.universe;
  VertexSet out;
  for (int v : ds) {
    if (v < u)
      out.push_back(v);
    else if (v > u)
      out.push_back(*std::min_element(red.source.sets[v - u - 1].begin(),
                                      red.source.sets[v - u - 1].end()));
  }
  return vs_normalized(out);
}

// Same graph, but the set vertices and the hub become terminals; a connector
// is exactly a hitting set drawn from the element vertices.
struct NstReduction {
  SteinerInstance instance;
  HittingSetInstance source;
};

inline NstReduction hs_to_nst(const HittingSetInstance& inst) {
  DsReduction ds = hs_to_ds(inst);
  int u = inst.universe;
  VertexSet terminals;
  for (int v = u; v < ds.graph.vertex_count(); ++v) terminals.push_back(v);
  return {{std::move(ds.graph), std::move(terminals)}, inst};
}

inline VertexSet lift_nst_to_hs(const NstReduction& red, const VertexSet& connector) {
  detail::require_vertex_set(red.instance.graph, connector, "connector");
  int u = red.source.universe;
  VertexSet out;
  for (int v : connector) {
    if (v >= u) throw invalid_input("connector contains a terminal vertex");
    out.push_back(v);
  }
  return out;
}

// With capacity equal to its degree no vertex ever runs out, so the
// capacitated optimum coincides with the plain one.
inline CapacitatedGraph ds_to_capds(const Graph& g) {
  std::vector<int> cap(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) cap[v] = g.degree(v);
  return CapacitatedGraph(g, std::move(cap));
}

struct CnfFormula {
  int variables = 0;
  std::vector<std::vector<int>> clauses;  // nonzero signed literals, 1-based variables
};

namespace detail {
inline std::vector<std::vector<int>> require_cnf(const CnfFormula& f) {
  if (f.variables < 0) throw invalid_input("negative variable count");
  std::vector<std::vector<int>> norm;
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    if (f.clauses[j].empty())
      throw invalid_input("clause " + std::to_string(j) + " is empty");
    for (int lit : f.clauses[j])
      if (lit == 0 || lit > f.variables || lit < -f.variables)
        throw invalid_input("clause " + std::to_string(j) + " has bad literal " +
                            std::to_string(lit));
    norm.push_back(vs_normalized(f.clauses[j]));
  }
  return norm;
}
}  // namespace detail

// Literal vertices 2(i-1) and 2(i-1)+1 joined per variable; clause j gets
// clause_copies pairwise nonadjacent twin vertices starting at
// 2*variables + j*clause_copies, each adjacent to its literal vertices.
// A satisfiable formula admits an independent dominating set of size at most
// variables; an unsatisfiable one forces size at least clause_copies, and
// the stretch factor controls how far those thresholds sit apart.
struct GapReduction {
  Graph graph;
  int variables = 0;
  int clause_copies = 0;
  int sat_threshold = 0;    // satisfiable: minimum at or below this
  int unsat_threshold = 0;  // unsatisfiable: minimum at or above this
};

inline int literal_vertex(int lit) {
  if (lit == 0) throw invalid_input("literal must be nonzero");
  int i = lit > 0 ? lit : -lit;
  return 2 * (i - 1) + (lit > 0 ? 0 : 1);
}

inline GapReduction cnf_to_ids_gap(const CnfFormula& f, const Rational& stretch) {
  auto clauses = detail::require_cnf(f);
  if (!stretch.positive() || stretch.num < stretch.den)
    throw invalid_input("stretch factor must be at least 1");
  int n = f.variables;
  long long s_ll = ceil_mul(stretch, n) + 1;
  if (s_ll > 1000000) throw size_error("clause copy count out of supported range");
  int s = static_cast<int>(s_ll);
  int m = static_cast<int>(clauses.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  for (int j = 0; j < m; ++j)
    for (int l = 0; l < s; ++l)
      for (int lit : clauses[j]) edges.emplace_back(literal_vertex(lit), 2 * n + j * s + l);
  GapReduction red;
  red.graph = Graph(2 * n + m * s, std::move(edges));
  red.variables = n;
  red.clause_copies = s;
  red.sat_threshold = n;
  red.unsat_threshold = s;
  return red;
}

// Turns a size-decision procedure for independent domination into the
// search for a minimum solution: first the optimum value by a rising scan,
// then one vertex at a time, keeping the invariant that the remainder still
// admits a solution within the remaining budget.
inline VertexSet ids_selfreduce(const Graph& g,
                                const std::function<bool(const Graph&, int)>& decide) {
  int n = g.vertex_count();
  int k0 = -1;
  for (int k = 0; k <= n; ++k)
    if (decide(g, k)) {
      k0 = k;
      break;
    }
  if (k0 < 0) throw contract_violation("decision procedure rejected every size up to n");

  VertexSet chosen;
  Graph h = g;
  std::vector<int> to_orig(n);
  for (int v = 0; v < n; ++v) to_orig[v] = v;
  int budget = k0;
  while (budget > 0) {
    if (h.vertex_count() == 0)
      throw contract_violation("decision procedure inconsistent: instance emptied early");
    bool committed = false;
    for (int u = 0; u < h.vertex_count(); ++u) {
      VertexSet all;
      for (int v = 0; v < h.vertex_count(); ++v) all.push_back(v);
      VertexSet rest = vs_diff(all, closed_neighborhood(h, {u}));
      InducedSubgraph sub = induced_subgraph(h, rest);
      if (decide(sub.graph, budget - 1)) {
        chosen.push_back(to_orig[u]);
        std::vector<int> next_orig(sub.graph.vertex_count());
        for (int v = 0; v < sub.graph.vertex_count(); ++v)
          next_orig[v] = to_orig[sub.to_original[v]];
        h = sub.graph;
        to_orig = std::move(next_orig);
        --budget;
        committed = true;
        break;
      }
    }
    if (!committed)
      throw contract_violation("decision procedure inconsistent: no vertex extends the solution");
  }
  return vs_normalized(chosen);
}

}  // namespace domkern
