#pragma once

// Immutable graphs over dense vertex ids 0..n-1, the solution checkers, and
// the two vertex-set transformations every kernelizer is built from:
// induced subgraphs and the separator gadget. Transformations that change
// the vertex set return a fresh graph plus a new-id -> old-id mapping; the
// input graph is never touched.

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "domkern/errors.hpp"

namespace domkern {

// Sorted ascending, no duplicates. Helpers below keep that invariant.
using VertexSet = std::vector<int>;

enum class ProblemKind { DS, IDS, CDS, CapDS, HS, NST };

inline const char* problem_name(ProblemKind k) {
  switch (k) {
    case ProblemKind::DS: return "ds";
    case ProblemKind::IDS: return "ids";
    case ProblemKind::CDS: return "cds";
    case ProblemKind::CapDS: return "capds";
    case ProblemKind::HS: return "hs";
    case ProblemKind::NST: return "nst";
  }
  return "?";
}

inline VertexSet vs_normalized(VertexSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool vs_has(const VertexSet& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

inline VertexSet vs_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet vs_diff(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet vs_inter(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw invalid_input("negative vertex count");
    adj_.resize(n);
    for (auto& [u, v] : edge_list) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw invalid_input("edge endpoint out of range: {" + std::to_string(u) + "," +
                            std::to_string(v) + "}");
      if (u == v) throw invalid_input("self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    auto dup = std::adjacent_find(edge_list.begin(), edge_list.end());
    if (dup != edge_list.end())
      throw invalid_input("duplicate edge {" + std::to_string(dup->first) + "," +
                          std::to_string(dup->second) + "}");
    edges_ = std::move(edge_list);
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  int max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw invalid_input("vertex id out of range: " + std::to_string(v));
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

struct CapacitatedGraph {
  Graph graph;
  std::vector<int> cap;

  CapacitatedGraph() = default;
  CapacitatedGraph(Graph g, std::vector<int> caps) : graph(std::move(g)), cap(std::move(caps)) {
    if (static_cast<int>(cap.size()) != graph.vertex_count())
      throw invalid_input("capacity vector length mismatch");
    for (int c : cap)
      if (c < 0) throw invalid_input("negative capacity");
  }
};

// chosen plus, for every non-chosen vertex, the chosen neighbor it leans on.
// For a solution of an induced part embedded in a larger graph the map is
// simply partial: its keys name the part.
struct CapacitatedSolution {
  VertexSet chosen;
  std::map<int, int> assignment;
};

struct CheckResult {
  bool ok = true;
  std::string violation;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
  VertexSet out;
  for (int v : x) {
    g.check_vertex(v);
    out.push_back(v);
    const auto& nbrs = g.neighbors(v);
    out.insert(out.end(), nbrs.begin(), nbrs.end());
  }
  return vs_normalized(std::move(out));
}

namespace detail {

inline void require_vertex_set(const Graph& g, const VertexSet& x, const char* what) {
  int prev = -1;
  for (int v : x) {
    if (v < 0 || v >= g.vertex_count())
      throw invalid_input(std::string(what) + " vertex out of range: " + std::to_string(v));
    if (v <= prev) throw invalid_input(std::string(what) + " not sorted ascending unique");
    prev = v;
  }
}

// -1 when every vertex is dominated, else the smallest undominated id.
inline int first_undominated(const Graph& g, const VertexSet& x) {
  std::vector<char> dom(g.vertex_count(), 0);
  for (int v : x) {
    dom[v] = 1;
    for (int w : g.neighbors(v)) dom[w] = 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!dom[v]) return v;
  return -1;
}

}  // namespace detail

inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    comps.push_back(vs_normalized(std::move(comp)));
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

// Checks the vertex-set problems. Violations are reported in a fixed order
// (domination, then independence, then connectivity) and always name the
// smallest offending id, so a failing instance reproduces verbatim.
inline CheckResult check_solution(const Graph& g, ProblemKind kind, const VertexSet& x) {
  if (kind == ProblemKind::CapDS)
    throw invalid_input("capacitated solutions carry an assignment, use the capacitated overload");
  if (kind == ProblemKind::HS || kind == ProblemKind::NST)
    throw invalid_input("not a plain graph problem kind");
  detail::require_vertex_set(g, x, "solution");

  int u = detail::first_undominated(g, x);
  if (u >= 0) return CheckResult::fail("vertex " + std::to_string(u) + " undominated");

  if (kind == ProblemKind::IDS) {
    for (int v : x)
      for (int w : g.neighbors(v))
        if (w > v && vs_has(x, w))
          return CheckResult::fail("edge {" + std::to_string(v) + "," + std::to_string(w) +
                                   "} inside solution");
  }

  if (kind == ProblemKind::CDS && !x.empty()) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : x) in[v] = 1;
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<int> q;
    q.push(x.front());
    seen[x.front()] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    for (int v : x)
      if (!seen[v])
        return CheckResult::fail("solution splits into components, vertex " + std::to_string(v) +
                                 " unreachable from vertex " + std::to_string(x.front()));
  }
  return CheckResult::pass();
}

// Capacitated check. Order: every non-chosen vertex assigned, no stray
// assignments, targets chosen and adjacent, then capacities.
inline CheckResult check_solution(const CapacitatedGraph& cg, const CapacitatedSolution& sol) {
  const Graph& g = cg.graph;
  detail::require_vertex_set(g, sol.chosen, "solution");
  for (const auto& [v, t] : sol.assignment) {
    g.check_vertex(v);
    g.check_vertex(t);
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool in = vs_has(sol.chosen, v);
    bool assigned = sol.assignment.count(v) > 0;
    if (!in && !assigned) return CheckResult::fail("vertex " + std::to_string(v) + " unassigned");
    if (in && assigned)
      return CheckResult::fail("chosen vertex " + std::to_string(v) + " has an assignment");
  }
  for (const auto& [v, t] : sol.assignment) {
    if (!vs_has(sol.chosen, t))
      return CheckResult::fail("vertex " + std::to_string(v) + " assigned to non-chosen " +
                               std::to_string(t));
    if (!g.has_edge(v, t))
      return CheckResult::fail("vertex " + std::to_string(v) + " assigned to non-neighbor " +
                               std::to_string(t));
  }
  std::vector<int> load(g.vertex_count(), 0);
  for (const auto& [v, t] : sol.assignment) ++load[t];
  for (int t = 0; t < g.vertex_count(); ++t)
    if (load[t] > cg.cap[t])
      return CheckResult::fail("capacity of vertex " + std::to_string(t) + " exceeded: " +
                               std::to_string(load[t]) + " > " + std::to_string(cg.cap[t]));
  return CheckResult::pass();
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;  // new id -> old id, strictly increasing
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  detail::require_vertex_set(g, s, "subset");
  std::vector<int> newid(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(s.size()); ++i) newid[s[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (newid[u] >= 0 && newid[v] >= 0) edges.emplace_back(newid[u], newid[v]);
  return {Graph(static_cast<int>(s.size()), std::move(edges)), s};
}

struct InducedCapacitated {
  CapacitatedGraph graph;
  std::vector<int> to_original;
};

inline InducedCapacitated induced_subgraph(const CapacitatedGraph& cg, const VertexSet& s) {
  InducedSubgraph base = induced_subgraph(cg.graph, s);
  std::vector<int> caps(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) caps[i] = cg.cap[s[i]];
  return {CapacitatedGraph(std::move(base.graph), std::move(caps)), std::move(base.to_original)};
}

// Deletes s and adds one fresh vertex z (largest id in the result) adjacent
// to every surviving vertex that had a neighbor inside s. to_original[z] is -1.
struct SeparatorGadget {
  Graph graph;
  int z;
  std::vector<int> to_original;
};

inline SeparatorGadget attach_separator_vertex(const Graph& g, const VertexSet& s) {
  detail::require_vertex_set(g, s, "separator");
  std::vector<int> newid(g.vertex_count(), -1);
  std::vector<int> to_orig;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!vs_has(s, v)) {
      newid[v] = static_cast<int>(to_orig.size());
      to_orig.push_back(v);
    }
  int z = static_cast<int>(to_orig.size());
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (newid[u] >= 0 && newid[v] >= 0) edges.emplace_back(newid[u], newid[v]);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (newid[v] < 0) continue;
    bool touches = false;
    for (int w : g.neighbors(v))
      if (newid[w] < 0) {
        touches = true;
        break;
      }
    if (touches) edges.emplace_back(newid[v], z);
  }
  to_orig.push_back(-1);
  return {Graph(z + 1, std::move(edges)), z, std::move(to_orig)};
}

// ceil(n / (max degree + 1)). Any vertex dominates at most maxdeg+1 vertices,
// so this sits under the optimum of every domination variant here.
inline int ds_lower_bound(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  int d1 = g.max_degree() + 1;
  return (n + d1 - 1) / d1;
}

// Greedily extends an independent set to an independent dominating set by
// repeatedly absorbing the smallest undominated vertex (which is never
// adjacent to the current set, so independence is free).
inline VertexSet complete_independent(const Graph& g, const VertexSet& x) {
  detail::require_vertex_set(g, x, "solution");
  for (int v : x)
    for (int w : g.neighbors(v))
      if (w > v && vs_has(x, w))
        throw invalid_input("set is not independent: edge {" + std::to_string(v) + "," +
                            std::to_string(w) + "}");
  std::vector<char> dom(g.vertex_count(), 0);
  VertexSet out = x;
  for (int v : x) {
    dom[v] = 1;
    for (int w : g.neighbors(v)) dom[w] = 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dom[v]) continue;
    out.push_back(v);
    dom[v] = 1;
    for (int w : g.neighbors(v)) dom[w] = 1;
  }
  return vs_normalized(std::move(out));
}

// Bridges the components of g[x] until connected. Needs g connected and x
// dominating and nonempty. Each round runs a BFS from the component holding
// the smallest id to the nearest other solution vertex; because x dominates,
// that path has at most two interior vertices, and they land outside x, so a
// round adds at most two vertices and removes at least one component.
inline VertexSet connect_dominating_set(const Graph& g, const VertexSet& x) {
  detail::require_vertex_set(g, x, "solution");
  if (!is_connected(g)) throw invalid_input("graph is not connected");
  if (detail::first_undominated(g, x) >= 0) throw invalid_input("set is not dominating");
  if (x.empty()) {
    if (g.vertex_count() == 0) return {};
    throw invalid_input("empty set cannot be connected up");
  }
  VertexSet z = x;
  while (true) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : z) in[v] = 1;
    // component of g[z] containing the smallest solution vertex
    std::vector<char> c1(g.vertex_count(), 0);
    {
      std::queue<int> q;
      q.push(z.front());
      c1[z.front()] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
          if (in[w] && !c1[w]) {
            c1[w] = 1;
            q.push(w);
          }
      }
    }
    bool whole = true;
    for (int v : z)
      if (!c1[v]) {
        whole = false;
        break;
      }
    if (whole) return z;
    // BFS over g from the whole component toward the nearest other z-vertex
    std::vector<int> dist(g.vertex_count(), -1), par(g.vertex_count(), -1);
    std::queue<int> q;
    for (int v : z)
      if (c1[v]) {
        dist[v] = 0;
        q.push(v);
      }
    int target = -1;
    while (!q.empty() && target < 0) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[v] + 1;
        par[w] = v;
        if (in[w]) {
          target = w;
          break;
        }
        q.push(w);
      }
    }
    if (target < 0) throw contract_violation("no path between solution components");
    for (int v = par[target]; v >= 0 && !c1[v]; v = par[v]) z.push_back(v);
    z = vs_normalized(std::move(z));
  }
}

}  // namespace domkern
