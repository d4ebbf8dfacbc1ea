#pragma once

// Reference oracles for the tests, written as plain exhaustive enumeration
// so they share nothing with the library's solvers beyond the graph
// representation. Slow on purpose; keep the instances handed to them small.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "domkern/domkern.hpp"

namespace ts {

using domkern::CapacitatedGraph;
using domkern::CnfFormula;
using domkern::Graph;
using domkern::HittingSetInstance;
using domkern::SteinerInstance;
using domkern::VertexSet;

inline bool mask_dominates(const Graph& g, std::uint64_t m) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((m >> v) & 1) continue;
    bool dom = false;
    for (int u : g.neighbors(v))
      if ((m >> u) & 1) {
        dom = true;
        break;
      }
    if (!dom) return false;
  }
  return true;
}

inline bool mask_independent(const Graph& g, std::uint64_t m) {
  for (auto [u, v] : g.edges())
    if (((m >> u) & 1) && ((m >> v) & 1)) return false;
  return true;
}

inline bool mask_connected(const Graph& g, std::uint64_t m) {
  if (m == 0) return true;
  int start = 0;
  while (!((m >> start) & 1)) ++start;
  std::uint64_t seen = 1ull << start;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v))
      if (((m >> u) & 1) && !((seen >> u) & 1)) {
        seen |= 1ull << u;
        stack.push_back(u);
      }
  }
  return seen == m;
}

inline int popcount64(std::uint64_t m) {
  int c = 0;
  while (m) {
    ++c;
    m &= m - 1;
  }
  return c;
}

inline int brute_min_ds(const Graph& g) {
  int n = g.vertex_count();
  int best = n;
  for (std::uint64_t m = 0; m < (1ull << n); ++m)
    if (mask_dominates(g, m)) best = std::min(best, popcount64(m));
  return best;
}

inline int brute_min_ids(const Graph& g) {
  int n = g.vertex_count();
  int best = n;
  for (std::uint64_t m = 0; m < (1ull << n); ++m)
    if (mask_independent(g, m) && mask_dominates(g, m)) best = std::min(best, popcount64(m));
  return best;
}

// -1 when no connected dominating set exists (disconnected graph)
inline int brute_min_cds(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  int best = -1;
  for (std::uint64_t m = 1; m < (1ull << n); ++m)
    if (mask_dominates(g, m) && mask_connected(g, m)) {
      int c = popcount64(m);
      if (best < 0 || c < best) best = c;
    }
  return best;
}

// backtracking assignment check, written to stand apart from the library's
// augmenting path matcher
inline bool capds_assignable(const CapacitatedGraph& cg, std::uint64_t chosen) {
  int n = cg.graph.vertex_count();
  std::vector<int> pending;
  for (int v = 0; v < n; ++v)
    if (!((chosen >> v) & 1)) pending.push_back(v);
  std::vector<int> left(n, 0);
  for (int v = 0; v < n; ++v)
    if ((chosen >> v) & 1) left[v] = cg.cap[v];

  std::function<bool(std::size_t)> go = [&](std::size_t idx) -> bool {
    if (idx == pending.size()) return true;
    int v = pending[idx];
    for (int u : cg.graph.neighbors(v)) {
      if (!((chosen >> u) & 1) || left[u] == 0) continue;
      --left[u];
      if (go(idx + 1)) return true;
      ++left[u];
    }
    return false;
  };
  return go(0);
}

inline int brute_min_capds(const CapacitatedGraph& cg) {
  int n = cg.graph.vertex_count();
  int best = n;
  for (std::uint64_t m = 0; m < (1ull << n); ++m) {
    int c = popcount64(m);
    if (c >= best) continue;
    if (!mask_dominates(cg.graph, m)) continue;
    if (capds_assignable(cg, m)) best = c;
  }
  return best;
}

inline int brute_min_hs(const HittingSetInstance& inst) {
  int u = inst.universe;
  int best = u + 1;
  for (std::uint64_t m = 0; m < (1ull << u); ++m) {
    bool ok = true;
    for (const auto& s : inst.sets) {
      bool hit = false;
      for (int e : s)
        if ((m >> e) & 1) {
          hit = true;
          break;
        }
      if (!hit) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::min(best, popcount64(m));
  }
  return best;  // universe+1 means no hitting set exists (an empty set present)
}

// -1 when no connector exists
inline int brute_min_nst(const SteinerInstance& inst) {
  const Graph& g = inst.graph;
  int n = g.vertex_count();
  if (inst.terminals.empty()) return 0;
  std::uint64_t tmask = 0;
  for (int t : inst.terminals) tmask |= 1ull << t;
  std::vector<int> nont;
  for (int v = 0; v < n; ++v)
    if (!((tmask >> v) & 1)) nont.push_back(v);
  int p = static_cast<int>(nont.size());
  int best = -1;
  for (std::uint64_t m = 0; m < (1ull << p); ++m) {
    std::uint64_t full = tmask;
    for (int i = 0; i < p; ++i)
      if ((m >> i) & 1) full |= 1ull << nont[i];
    if (mask_connected(g, full)) {
      int c = popcount64(m);
      if (best < 0 || c < best) best = c;
    }
  }
  return best;
}

inline bool cnf_satisfiable(const CnfFormula& f) {
  int n = f.variables;
  for (std::uint64_t a = 0; a < (1ull << n); ++a) {
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool sat = false;
      for (int lit : clause) {
        int var = lit > 0 ? lit : -lit;
        bool val = (a >> (var - 1)) & 1;
        if ((lit > 0) == val) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return f.clauses.empty();
}

// Minimum independent dominating set of a gap construction graph, by
// structural enumeration: any such set is a choice of at most one literal
// vertex per variable plus all copies of every clause that choice misses.
// Works far beyond the vertex counts the mask enumerators can touch.
inline long long gap_min_ids(const CnfFormula& f, int copies) {
  int n = f.variables;
  int m = static_cast<int>(f.clauses.size());
  long long best = -1;
  std::vector<int> pick(n, 0);  // 0 none, 1 positive, 2 negative
  while (true) {
    bool valid = true;
    int lcount = 0;
    std::vector<char> unhit(m, 1);
    for (int j = 0; j < m; ++j)
      for (int lit : f.clauses[j]) {
        int var = lit > 0 ? lit : -lit;
        int want = lit > 0 ? 1 : 2;
        if (pick[var - 1] == want) {
          unhit[j] = 0;
          break;
        }
      }
    for (int i = 0; i < n; ++i)
      if (pick[i] != 0) ++lcount;
    // a variable with no picked literal needs both its vertices dominated by
    // copies that are forced in
    for (int i = 0; i < n && valid; ++i) {
      if (pick[i] != 0) continue;
      bool pos = false, neg = false;
      for (int j = 0; j < m; ++j) {
        if (!unhit[j]) continue;
        for (int lit : f.clauses[j]) {
          if (lit == i + 1) pos = true;
          if (lit == -(i + 1)) neg = true;
        }
      }
      if (!pos || !neg) valid = false;
    }
    if (valid) {
      long long total = lcount;
      for (int j = 0; j < m; ++j)
        if (unhit[j]) total += copies;
      if (best < 0 || total < best) best = total;
    }
    int i = 0;
    while (i < n && pick[i] == 2) pick[i++] = 0;
    if (i == n) break;
    ++pick[i];
  }
  return best;
}

}  // namespace ts
