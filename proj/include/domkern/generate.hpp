#pragma once

// Deterministic instance generators. All randomness flows through the local
// Rng so a seed pins down every instance exactly, independent of platform
// and standard library. Structured families cover the shapes the
// kernelizers care about (long thin graphs, bounded degree, planted
// separators); the random families keep maximum degree under control.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "domkern/errors.hpp"
#include "domkern/graph.hpp"
#include "domkern/reductions.hpp"
#include "domkern/solvers.hpp"

namespace domkern {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform 0..n-1, rejection keeps it unbiased
  int below(int n) {
    if (n <= 0) throw invalid_input("random bound must be positive");
    std::uint64_t un = static_cast<std::uint64_t>(n);
    std::uint64_t limit = (~0ull / un) * un;
    std::uint64_t u;
    do {
      u = next();
    } while (u >= limit);
    return static_cast<int>(u % un);
  }

  int range(int lo, int hi) {
    if (hi < lo) throw invalid_input("empty random range");
    return lo + below(hi - lo + 1);
  }

  bool chance(int num, int den) { return below(den) < num; }

  void shuffle(std::vector<int>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[below(i + 1)]);
  }

  template <typename T>
  void shuffle_items(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[below(i + 1)]);
  }

 private:
  std::uint64_t state_;
};

inline Graph gen_path(int n) {
  if (n < 0) throw invalid_input("negative vertex count");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

inline Graph gen_cycle(int n) {
  if (n < 3) throw invalid_input("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, std::move(edges));
}

inline Graph gen_grid(int rows, int cols) {
  if (rows < 0 || cols < 0) throw invalid_input("negative grid dimension");
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  return Graph(rows * cols, std::move(edges));
}

inline Graph gen_star(int n) {
  if (n < 1) throw invalid_input("star needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph(n, std::move(edges));
}

// cliques of the given size in a row, consecutive ones linked by one edge
inline Graph gen_clique_chain(int cliques, int size) {
  if (cliques < 1 || size < 1) throw invalid_input("clique chain needs positive dimensions");
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < cliques; ++k) {
    int base = k * size;
    for (int a = 0; a < size; ++a)
      for (int b = a + 1; b < size; ++b) edges.emplace_back(base + a, base + b);
    if (k + 1 < cliques) edges.emplace_back(base + size - 1, (k + 1) * size);
  }
  return Graph(cliques * size, std::move(edges));
}

// every pair is considered once in random order and kept with the given
// odds, unless that would push an endpoint over the degree bound
inline Graph gen_random_bounded(Rng& rng, int n, int max_degree, int num = 1, int den = 2) {
  if (n < 0) throw invalid_input("negative vertex count");
  if (max_degree < 0) throw invalid_input("negative degree bound");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  rng.shuffle_items(pairs);
  std::vector<int> deg(n, 0);
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : pairs) {
    if (deg[a] >= max_degree || deg[b] >= max_degree) continue;
    if (!rng.chance(num, den)) continue;
    ++deg[a];
    ++deg[b];
    edges.emplace_back(a, b);
  }
  return Graph(n, std::move(edges));
}

// random tree grown by attaching each vertex to an eligible earlier one,
// then extra edges sprinkled under the same degree bound
inline Graph gen_connected_bounded(Rng& rng, int n, int max_degree, int extra_num = 1,
                                   int extra_den = 4) {
  if (n < 0) throw invalid_input("negative vertex count");
  if (n > 1 && max_degree < 1) throw invalid_input("degree bound too small to connect");
  if (n > 2 && max_degree < 2) throw invalid_input("degree bound too small to connect");
  std::vector<int> deg(n, 0);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    std::vector<int> eligible;
    for (int u = 0; u < v; ++u)
      if (deg[u] < max_degree) eligible.push_back(u);
    if (eligible.empty()) throw contract_violation("tree growth ran out of eligible vertices");
    int u = eligible[rng.below(static_cast<int>(eligible.size()))];
    ++deg[u];
    ++deg[v];
    edges.emplace_back(u, v);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  rng.shuffle_items(pairs);
  std::vector<std::vector<char>> have(n ? n : 1);
  for (auto& row : have) row.assign(n ? n : 1, 0);
  for (auto [a, b] : edges) have[a][b] = have[b][a] = 1;
  for (auto [a, b] : pairs) {
    if (have[a][b] || deg[a] >= max_degree || deg[b] >= max_degree) continue;
    if (!rng.chance(extra_num, extra_den)) continue;
    have[a][b] = have[b][a] = 1;
    ++deg[a];
    ++deg[b];
    edges.emplace_back(a, b);
  }
  return Graph(n, std::move(edges));
}

// Three blocks with the middle one separating the outer two: no edge ever
// runs between the first and third block. The whole graph is connected.
struct SeparatedInstance {
  Graph graph;
  VertexSet a, b, c;
};

inline SeparatedInstance gen_separated(Rng& rng, int na, int nb, int nc, int max_degree,
                                       int extra_num = 1, int extra_den = 3) {
  if (na < 1 || nb < 1 || nc < 1) throw invalid_input("all three blocks need vertices");
  if (max_degree < 2) throw invalid_input("degree bound too small to connect");
  int n = na + nb + nc;
  auto block = [&](int v) { return v < na ? 0 : (v < na + nb ? 1 : 2); };
  std::vector<int> deg(n, 0);
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<char>> have(n, std::vector<char>(n, 0));
  auto add = [&](int u, int v) {
    have[u][v] = have[v][u] = 1;
    ++deg[u];
    ++deg[v];
    edges.emplace_back(u, v);
  };
  // spanning structure: blocks one and two grow one tree, block three hangs
  // off the middle block so nothing links the outer blocks directly
  for (int v = 1; v < na + nb; ++v) {
    std::vector<int> eligible;
    for (int u = 0; u < v; ++u)
      if (deg[u] < max_degree) eligible.push_back(u);
    if (eligible.empty()) throw contract_violation("tree growth ran out of eligible vertices");
    add(eligible[rng.below(static_cast<int>(eligible.size()))], v);
  }
  for (int v = na + nb; v < n; ++v) {
    std::vector<int> eligible;
    for (int u = na; u < v; ++u)
      if (deg[u] < max_degree) eligible.push_back(u);
    if (eligible.empty()) throw contract_violation("tree growth ran out of eligible vertices");
    add(eligible[rng.below(static_cast<int>(eligible.size()))], v);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!(block(u) == 0 && block(v) == 2) && !(block(u) == 2 && block(v) == 0))
        pairs.emplace_back(u, v);
  rng.shuffle_items(pairs);
  for (auto [u, v] : pairs) {
    if (have[u][v] || deg[u] >= max_degree || deg[v] >= max_degree) continue;
    if (!rng.chance(extra_num, extra_den)) continue;
    add(u, v);
  }
  SeparatedInstance out{Graph(n, std::move(edges)), {}, {}, {}};
  for (int v = 0; v < na; ++v) out.a.push_back(v);
  for (int v = na; v < na + nb; ++v) out.b.push_back(v);
  for (int v = na + nb; v < n; ++v) out.c.push_back(v);
  return out;
}

inline std::vector<int> gen_caps(Rng& rng, const Graph& g, int max_cap) {
  if (max_cap < 0) throw invalid_input("negative capacity bound");
  std::vector<int> cap(g.vertex_count());
  for (auto& c : cap) c = rng.below(max_cap + 1);
  return cap;
}

inline HittingSetInstance gen_hitting_set(Rng& rng, int universe, int nsets, int max_size) {
  if (universe < 1) throw invalid_input("universe needs at least one element");
  if (nsets < 0 || max_size < 1) throw invalid_input("bad set family shape");
  HittingSetInstance inst;
  inst.universe = universe;
  for (int j = 0; j < nsets; ++j) {
    int len = 1 + rng.below(std::min(max_size, universe));
    std::vector<int> all(universe);
    for (int e = 0; e < universe; ++e) all[e] = e;
    rng.shuffle(all);
    inst.sets.push_back(vs_normalized({all.begin(), all.begin() + len}));
  }
  return inst;
}

inline CnfFormula gen_cnf(Rng& rng, int vars, int nclauses, int max_len) {
  if (vars < 1) throw invalid_input("formula needs at least one variable");
  if (nclauses < 0 || max_len < 1) throw invalid_input("bad formula shape");
  CnfFormula f;
  f.variables = vars;
  for (int j = 0; j < nclauses; ++j) {
    int len = 1 + rng.below(std::min(max_len, vars));
    std::vector<int> all(vars);
    for (int i = 0; i < vars; ++i) all[i] = i + 1;
    rng.shuffle(all);
    std::vector<int> clause;
    for (int i = 0; i < len; ++i) clause.push_back(rng.chance(1, 2) ? all[i] : -all[i]);
    f.clauses.push_back(vs_normalized(clause));
  }
  return f;
}

}  // namespace domkern
