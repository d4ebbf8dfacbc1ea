#pragma once

// Reference solvers used behind the oracle interface: branch and bound for
// the domination variants, subset enumeration for the capacitated and
// Steiner problems, plus the greedy heuristics. Everything is deterministic;
// ties go to the smallest vertex id throughout.

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domkern/errors.hpp"
#include "domkern/graph.hpp"

namespace domkern {

// Instance size ceilings for the exact backends, per problem. The
// DOMKERN_EXACT_BUDGET environment variable overrides all six at once.
struct ExactBudget {
  int ds = 26;
  int cds = 26;
  int ids = 20;
  int capds = 20;
  int hs = 20;
  int nst = 16;

  int for_kind(ProblemKind kind) const {
    switch (kind) {
      case ProblemKind::DS: return ds;
      case ProblemKind::IDS: return ids;
      case ProblemKind::CDS: return cds;
      case ProblemKind::CapDS: return capds;
      case ProblemKind::HS: return hs;
      case ProblemKind::NST: return nst;
    }
    return 0;
  }

  static ExactBudget from_env() {
    ExactBudget b;
    const char* raw = std::getenv("DOMKERN_EXACT_BUDGET");
    if (!raw || !*raw) return b;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (!end || *end != '\0' || v <= 0 || v > 1000000)
      throw invalid_input("DOMKERN_EXACT_BUDGET must be a positive integer");
    b.ds = b.cds = b.ids = b.capds = b.hs = b.nst = static_cast<int>(v);
    return b;
  }
};

namespace detail {

struct MaskGraph {
  int n = 0;
  std::uint64_t all = 0;
  std::vector<std::uint64_t> closed;
  std::vector<std::uint64_t> open;
};

inline MaskGraph mask_graph(const Graph& g, const char* what) {
  int n = g.vertex_count();
  if (n > 64)
    throw size_error(std::string(what) + " solver handles at most 64 vertices, got " +
                     std::to_string(n));
  MaskGraph mg;
  mg.n = n;
  mg.all = (n >= 64) ? ~0ull : ((1ull << n) - 1);
  mg.closed.assign(n, 0);
  mg.open.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    mg.closed[v] = 1ull << v;
    for (int u : g.neighbors(v)) {
      mg.open[v] |= 1ull << u;
      mg.closed[v] |= 1ull << u;
    }
  }
  return mg;
}

inline VertexSet mask_to_set(std::uint64_t m) {
  VertexSet out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

}  // namespace detail

// Covering greedy: repeatedly take the vertex whose closed neighborhood
// contains the most still-undominated vertices.
inline VertexSet greedy_dominating_set(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> dom(n, 0);
  int remaining = n;
  VertexSet out;
  while (remaining > 0) {
    int bestv = -1, bestc = 0;
    for (int v = 0; v < n; ++v) {
      int c = dom[v] ? 0 : 1;
      for (int u : g.neighbors(v)) c += dom[u] ? 0 : 1;
      if (c > bestc) {
        bestc = c;
        bestv = v;
      }
    }
    out.push_back(bestv);
    if (!dom[bestv]) {
      dom[bestv] = 1;
      --remaining;
    }
    for (int u : g.neighbors(bestv))
      if (!dom[u]) {
        dom[u] = 1;
        --remaining;
      }
  }
  return vs_normalized(out);
}

inline VertexSet exact_dominating_set(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return {};
  auto mg = detail::mask_graph(g, "dominating set");
  int dplus = g.max_degree() + 1;
  VertexSet seed = greedy_dominating_set(g);
  std::uint64_t best_mask = 0;
  for (int v : seed) best_mask |= 1ull << v;
  int best = static_cast<int>(seed.size());

  auto dfs = [&](auto&& self, std::uint64_t chosen, int cnt, std::uint64_t dom,
                 std::uint64_t forb) -> void {
    if (dom == mg.all) {
      if (cnt < best) {
        best = cnt;
        best_mask = chosen;
      }
      return;
    }
    int undom = std::popcount(mg.all & ~dom);
    if (cnt + (undom + dplus - 1) / dplus >= best) return;
    int pickc = INT_MAX;
    std::uint64_t pickmask = 0;
    for (std::uint64_t rest = mg.all & ~dom; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint64_t cand = mg.closed[v] & ~forb;
      int c = std::popcount(cand);
      if (c == 0) return;  // v can no longer be dominated down this branch
      if (c < pickc) {
        pickc = c;
        pickmask = cand;
      }
    }
    for (std::uint64_t cm = pickmask; cm; cm &= cm - 1) {
      int u = std::countr_zero(cm);
      self(self, chosen | (1ull << u), cnt + 1, dom | mg.closed[u], forb);
      forb |= 1ull << u;  // later branches must dominate the pick differently
    }
  };
  dfs(dfs, 0, 0, 0, 0);
  return detail::mask_to_set(best_mask);
}

inline VertexSet exact_independent_dominating_set(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return {};
  auto mg = detail::mask_graph(g, "independent dominating set");
  int dplus = g.max_degree() + 1;
  VertexSet seed = complete_independent(g, {});
  std::uint64_t best_mask = 0;
  for (int v : seed) best_mask |= 1ull << v;
  int best = static_cast<int>(seed.size());

  auto dfs = [&](auto&& self, std::uint64_t chosen, int cnt, std::uint64_t dom,
                 std::uint64_t forb) -> void {
    if (dom == mg.all) {
      if (cnt < best) {
        best = cnt;
        best_mask = chosen;
      }
      return;
    }
    int undom = std::popcount(mg.all & ~dom);
    if (cnt + (undom + dplus - 1) / dplus >= best) return;
    int pickc = INT_MAX;
    std::uint64_t pickmask = 0;
    for (std::uint64_t rest = mg.all & ~dom; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint64_t cand = mg.closed[v] & ~forb;
      int c = std::popcount(cand);
      if (c == 0) return;
      if (c < pickc) {
        pickc = c;
        pickmask = cand;
      }
    }
    for (std::uint64_t cm = pickmask; cm; cm &= cm - 1) {
      int u = std::countr_zero(cm);
      // neighbors of u are barred from the solution to keep it independent
      self(self, chosen | (1ull << u), cnt + 1, dom | mg.closed[u], forb | mg.open[u]);
      forb |= 1ull << u;
    }
  };
  dfs(dfs, 0, 0, 0, 0);
  return detail::mask_to_set(best_mask);
}

inline bool ids_decision(const Graph& g, int k) {
  if (k < 0) return false;
  return static_cast<int>(exact_independent_dominating_set(g).size()) <= k;
}

inline VertexSet exact_connected_dominating_set(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return {};
  if (!is_connected(g)) throw invalid_input("graph is not connected");
  auto mg = detail::mask_graph(g, "connected dominating set");
  int dplus = g.max_degree() + 1;
  int merge_step = std::max(1, g.max_degree() - 1);
  VertexSet seed = connect_dominating_set(g, greedy_dominating_set(g));
  std::uint64_t best_mask = 0;
  for (int v : seed) best_mask |= 1ull << v;
  int best = static_cast<int>(seed.size());

  // component count plus the component of the smallest chosen vertex
  auto comps = [&](std::uint64_t m) -> std::pair<int, std::uint64_t> {
    int cnt = 0;
    std::uint64_t first = 0, rest = m;
    while (rest) {
      std::uint64_t comp = 0, frontier = rest & (~rest + 1);
      while (frontier) {
        comp |= frontier;
        std::uint64_t nxt = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) nxt |= mg.open[std::countr_zero(f)];
        frontier = nxt & m & ~comp;
      }
      if (cnt == 0) first = comp;
      ++cnt;
      rest &= ~comp;
    }
    return {cnt, first};
  };

  auto dfs = [&](auto&& self, std::uint64_t chosen, int cnt, std::uint64_t dom,
                 std::uint64_t forb) -> void {
    auto [ncomp, c1] = chosen ? comps(chosen) : std::pair<int, std::uint64_t>{0, 0};
    int undom = std::popcount(mg.all & ~dom);
    int lb = (undom + dplus - 1) / dplus;
    if (ncomp >= 2) lb = std::max(lb, (ncomp - 2 + merge_step) / merge_step);
    if (cnt + lb >= best) return;
    if (undom == 0) {
      if (ncomp <= 1) {
        best = cnt;
        best_mask = chosen;
        return;
      }
      // dominated but split: some neighbor of the first component must join
      std::uint64_t cand = 0;
      for (std::uint64_t f = c1; f; f &= f - 1) cand |= mg.open[std::countr_zero(f)];
      cand &= ~chosen & ~forb;
      for (std::uint64_t cm = cand; cm; cm &= cm - 1) {
        int u = std::countr_zero(cm);
        self(self, chosen | (1ull << u), cnt + 1, dom | mg.closed[u], forb);
        forb |= 1ull << u;
      }
      return;
    }
    int pickc = INT_MAX;
    std::uint64_t pickmask = 0;
    for (std::uint64_t rest = mg.all & ~dom; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint64_t cand = mg.closed[v] & ~forb;
      int c = std::popcount(cand);
      if (c == 0) return;
      if (c < pickc) {
        pickc = c;
        pickmask = cand;
      }
    }
    for (std::uint64_t cm = pickmask; cm; cm &= cm - 1) {
      int u = std::countr_zero(cm);
      self(self, chosen | (1ull << u), cnt + 1, dom | mg.closed[u], forb);
      forb |= 1ull << u;
    }
  };
  dfs(dfs, 0, 0, 0, 0);
  return detail::mask_to_set(best_mask);
}

// Feasible assignment of every non-chosen vertex to an adjacent chosen one
// within capacities, or nothing. Augmenting path search, ascending scans.
inline std::optional<std::map<int, int>> capacitated_assignment(const CapacitatedGraph& cg,
                                                                const VertexSet& chosen) {
  const Graph& g = cg.graph;
  detail::require_vertex_set(g, chosen, "chosen set");
  int n = g.vertex_count();
  std::vector<char> is_chosen(n, 0);
  for (int v : chosen) is_chosen[v] = 1;
  std::map<int, int> match;
  std::map<int, std::vector<int>> load;

  auto augment = [&](auto&& self, int v, std::vector<char>& visited) -> bool {
    for (int u : g.neighbors(v)) {
      if (!is_chosen[u] || visited[u]) continue;
      visited[u] = 1;
      auto& lu = load[u];
      if (static_cast<int>(lu.size()) < cg.cap[u]) {
        lu.push_back(v);
        match[v] = u;
        return true;
      }
      for (std::size_t i = 0; i < lu.size(); ++i) {
        int w = lu[i];
        if (self(self, w, visited)) {
          lu[i] = v;
          match[v] = u;
          return true;
        }
      }
    }
    return false;
  };

  for (int v = 0; v < n; ++v) {
    if (is_chosen[v]) continue;
    std::vector<char> visited(n, 0);
    if (!augment(augment, v, visited)) return std::nullopt;
  }
  return match;
}

inline CapacitatedSolution exact_capacitated_dominating_set(const CapacitatedGraph& cg) {
  const Graph& g = cg.graph;
  int n = g.vertex_count();
  if (n == 0) return {{}, {}};
  auto mg = detail::mask_graph(g, "capacitated dominating set");
  int cmax = 0;
  for (int c : cg.cap) cmax = std::max(cmax, c);
  int dplus = g.max_degree() + 1;
  int start = std::max({1, (n + cmax) / (cmax + 1), (n + dplus - 1) / dplus});

  for (int k = start; k <= n; ++k) {
    std::uint64_t m = ~0ull >> (64 - k);
    std::uint64_t last = m << (n - k);
    while (true) {
      std::uint64_t dom = 0;
      long long caps = 0;
      for (std::uint64_t t = m; t; t &= t - 1) {
        int v = std::countr_zero(t);
        dom |= mg.closed[v];
        caps += cg.cap[v];
      }
      if (dom == mg.all && caps >= n - k) {
        VertexSet chosen = detail::mask_to_set(m);
        if (auto asg = capacitated_assignment(cg, chosen))
          return {std::move(chosen), std::move(*asg)};
      }
      if (m == last) break;
      std::uint64_t c = m & (~m + 1);
      std::uint64_t r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  // chosen = V always works: nothing is left to assign
  VertexSet all;
  for (int v = 0; v < n; ++v) all.push_back(v);
  return {std::move(all), {}};
}

struct HittingSetInstance {
  int universe = 0;
  std::vector<std::vector<int>> sets;
};

inline VertexSet exact_hitting_set(const HittingSetInstance& inst) {
  if (inst.universe < 0) throw invalid_input("negative universe size");
  if (inst.universe > 64)
    throw size_error("hitting set solver handles at most 64 elements, got " +
                     std::to_string(inst.universe));
  int m = static_cast<int>(inst.sets.size());
  std::vector<std::uint64_t> sm(m, 0);
  for (int i = 0; i < m; ++i) {
    if (inst.sets[i].empty())
      throw invalid_input("set " + std::to_string(i) + " is empty and cannot be hit");
    for (int e : inst.sets[i]) {
      if (e < 0 || e >= inst.universe)
        throw invalid_input("set " + std::to_string(i) + " contains element " + std::to_string(e) +
                            " outside the universe");
      sm[i] |= 1ull << e;
    }
  }

  // greedy seed: element hitting the most unhit sets
  std::uint64_t seed = 0;
  {
    std::vector<char> hit(m, 0);
    int remaining = m;
    while (remaining > 0) {
      int beste = -1, bestc = 0;
      for (int e = 0; e < inst.universe; ++e) {
        int c = 0;
        for (int i = 0; i < m; ++i)
          if (!hit[i] && (sm[i] >> e) & 1) ++c;
        if (c > bestc) {
          bestc = c;
          beste = e;
        }
      }
      seed |= 1ull << beste;
      for (int i = 0; i < m; ++i)
        if (!hit[i] && (sm[i] >> beste) & 1) {
          hit[i] = 1;
          --remaining;
        }
    }
  }
  std::uint64_t best_mask = seed;
  int best = std::popcount(seed);

  auto dfs = [&](auto&& self, std::uint64_t chosen, int cnt, std::uint64_t forb) -> void {
    int pick = -1, pickc = INT_MAX;
    std::uint64_t used = 0;
    int lb = 0;
    for (int i = 0; i < m; ++i) {
      if (sm[i] & chosen) continue;
      if ((sm[i] & used) == 0) {
        ++lb;
        used |= sm[i];
      }
      std::uint64_t cand = sm[i] & ~forb;
      int c = std::popcount(cand);
      if (c == 0) return;
      if (c < pickc) {
        pickc = c;
        pick = i;
      }
    }
    if (pick < 0) {
      if (cnt < best) {
        best = cnt;
        best_mask = chosen;
      }
      return;
    }
    if (cnt + lb >= best) return;
    for (std::uint64_t cm = sm[pick] & ~forb; cm; cm &= cm - 1) {
      int e = std::countr_zero(cm);
      self(self, chosen | (1ull << e), cnt + 1, forb);
      forb |= 1ull << e;
    }
  };
  dfs(dfs, 0, 0, 0);
  return detail::mask_to_set(best_mask);
}

struct SteinerInstance {
  Graph graph;
  VertexSet terminals;
};

// Fewest extra vertices whose addition makes the terminals induce a
// connected subgraph. Enumeration by size over the terminals' component.
inline VertexSet exact_steiner_tree_vertices(const SteinerInstance& inst) {
  const Graph& g = inst.graph;
  detail::require_vertex_set(g, inst.terminals, "terminal set");
  if (inst.terminals.empty()) return {};
  std::vector<int> comp(g.vertex_count(), -1);
  {
    auto comp_lists = components(g);
    for (std::size_t i = 0; i < comp_lists.size(); ++i)
      for (int v : comp_lists[i]) comp[v] = static_cast<int>(i);
  }
  int home = comp[inst.terminals[0]];
  for (int t : inst.terminals)
    if (comp[t] != home)
      throw invalid_input("terminals lie in different components, no connector exists");
  if (is_connected(induced_subgraph(g, inst.terminals).graph)) return {};

  VertexSet pool;  // candidate connectors: non-terminals in the home component
  for (int v = 0; v < g.vertex_count(); ++v)
    if (comp[v] == home && !vs_has(inst.terminals, v)) pool.push_back(v);
  int p = static_cast<int>(pool.size());
  if (p > 64)
    throw size_error("steiner connector solver handles at most 64 candidates, got " +
                     std::to_string(p));
  for (int k = 1; k <= p; ++k) {
    std::uint64_t m = ~0ull >> (64 - k);
    std::uint64_t last = m << (p - k);
    while (true) {
      VertexSet extra;
      for (std::uint64_t t = m; t; t &= t - 1) extra.push_back(pool[std::countr_zero(t)]);
      if (is_connected(induced_subgraph(g, vs_union(inst.terminals, extra)).graph)) return extra;
      if (m == last) break;
      std::uint64_t c = m & (~m + 1);
      std::uint64_t r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  throw contract_violation("connector search exhausted inside one component");
}

}  // namespace domkern
