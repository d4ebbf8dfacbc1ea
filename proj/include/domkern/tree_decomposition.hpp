#pragma once

// Tree decompositions, the nice normal form, and the subtree surgery the
// kernelizers run: find a node whose subtree covers between s and 2s
// vertices, cut everything strictly below it, and keep going on the rest.
//
// Nice form here: rooted binary tree, root and leaf bags empty, every
// internal node is an introduce, forget, or join. Conversions preserve the
// width exactly.

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "domkern/errors.hpp"
#include "domkern/graph.hpp"

namespace domkern {

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> edges;  // over node ids
  int root = 0;
};

inline int width(const TreeDecomposition& td) {
  int w = -1;
  for (const auto& b : td.bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

// Reports, in order: tree shape, vertex coverage, edge coverage, and the
// connected-subtree condition. Bag contents outside g are a precondition
// violation and throw.
inline CheckResult validate(const Graph& g, const TreeDecomposition& td) {
  int nn = static_cast<int>(td.bags.size());
  if (nn == 0) {
    if (g.vertex_count() == 0) return CheckResult::pass();
    return CheckResult::fail("no bags but graph has vertices");
  }
  for (int i = 0; i < nn; ++i)
    for (int v : td.bags[i])
      if (v < 0 || v >= g.vertex_count())
        throw invalid_input("bag " + std::to_string(i) + " contains vertex " + std::to_string(v) +
                            " outside the graph");
  if (static_cast<int>(td.edges.size()) != nn - 1)
    return CheckResult::fail("node links do not form a tree: " + std::to_string(td.edges.size()) +
                             " edges for " + std::to_string(nn) + " nodes");
  std::vector<std::vector<int>> tadj(nn);
  for (auto [a, b] : td.edges) {
    if (a < 0 || a >= nn || b < 0 || b >= nn || a == b)
      return CheckResult::fail("bad tree edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  {
    std::vector<char> seen(nn, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : tadj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          q.push(w);
        }
    }
    if (cnt != nn) return CheckResult::fail("node links do not form a tree: disconnected");
  }

  std::vector<std::vector<int>> norm(nn);
  std::vector<std::vector<int>> holding(g.vertex_count());
  for (int i = 0; i < nn; ++i) {
    norm[i] = vs_normalized(td.bags[i]);
    for (int v : norm[i]) holding[v].push_back(i);
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (holding[v].empty())
      return CheckResult::fail("vertex " + std::to_string(v) + " appears in no bag");
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int i : holding[u])
      if (vs_has(norm[i], v)) {
        covered = true;
        break;
      }
    if (!covered)
      return CheckResult::fail("edge {" + std::to_string(u) + "," + std::to_string(v) +
                               "} not inside any bag");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<char> inset(nn, 0);
    for (int i : holding[v]) inset[i] = 1;
    std::vector<char> seen(nn, 0);
    std::queue<int> q;
    q.push(holding[v][0]);
    seen[holding[v][0]] = 1;
    std::size_t cnt = 1;
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int b : tadj[a])
        if (inset[b] && !seen[b]) {
          seen[b] = 1;
          ++cnt;
          q.push(b);
        }
    }
    if (cnt != holding[v].size())
      return CheckResult::fail("bags holding vertex " + std::to_string(v) +
                               " are not connected in the tree");
  }
  return CheckResult::pass();
}

// Min-degree elimination with smallest-id tie break. Bag i is the eliminated
// vertex plus its current neighborhood, which then becomes a clique; node i
// hangs off the bag of its earliest-eliminated bag member.
inline TreeDecomposition heuristic_td(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return {{{}}, {}, 0};
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<int> deg(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u][v] = adj[v][u] = 1;
    ++deg[u];
    ++deg[v];
  }
  std::vector<char> alive(n, 1);
  std::vector<int> pos(n, -1);
  TreeDecomposition td;
  td.bags.resize(n);
  std::vector<std::vector<int>> bag_members(n);
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int u = 0; u < n; ++u)
      if (alive[u] && (v < 0 || deg[u] < deg[v])) v = u;
    std::vector<int> nb;
    for (int u = 0; u < n; ++u)
      if (alive[u] && adj[v][u]) nb.push_back(u);
    td.bags[step] = nb;
    td.bags[step].push_back(v);
    std::sort(td.bags[step].begin(), td.bags[step].end());
    bag_members[step] = nb;
    pos[v] = step;
    alive[v] = 0;
    for (int u : nb) --deg[u];
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!adj[nb[i]][nb[j]]) {
          adj[nb[i]][nb[j]] = adj[nb[j]][nb[i]] = 1;
          ++deg[nb[i]];
          ++deg[nb[j]];
        }
  }
  for (int i = 0; i + 1 < n; ++i) {
    int parent = i + 1;  // fallback keeps isolated bags attached
    int best = -1;
    for (int u : bag_members[i])
      if (best < 0 || pos[u] < best) best = pos[u];
    if (best >= 0) parent = best;
    td.edges.emplace_back(i, parent);
  }
  td.root = n - 1;
  return td;
}

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NodeKind kind = NodeKind::Leaf;
  int vertex = -1;  // the introduced or forgotten vertex
  std::vector<int> bag;
  int parent = -1;
  std::vector<int> children;
};

namespace detail {
inline std::string bag_text(const std::vector<int>& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b[i]);
  }
  return s + "}";
}
}  // namespace detail

class NiceTreeDecomposition {
 public:
  // Takes nodes with kind, vertex, bag, children filled in; derives parents,
  // rejects anything that is not a well-shaped nice decomposition, and
  // precomputes the vertices covered by each subtree.
  static NiceTreeDecomposition build(std::vector<NiceNode> nodes, int root) {
    NiceTreeDecomposition nd;
    int nn = static_cast<int>(nodes.size());
    if (root < 0 || root >= nn) throw invalid_input("nice decomposition: bad root");
    for (auto& node : nodes) {
      node.parent = -1;
      node.bag = vs_normalized(node.bag);
    }
    for (int i = 0; i < nn; ++i)
      for (int c : node_check(nodes, i).children) {
        if (c < 0 || c >= nn || c == i) throw invalid_input("nice decomposition: bad child link");
        if (nodes[c].parent != -1) throw invalid_input("nice decomposition: node with two parents");
        nodes[c].parent = i;
      }
    if (nodes[root].parent != -1) throw invalid_input("nice decomposition: root has a parent");
    // reachability doubles as the acyclicity check
    {
      std::vector<char> seen(nn, 0);
      std::vector<int> stack{root};
      seen[root] = 1;
      int cnt = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : nodes[v].children)
          if (!seen[c]) {
            seen[c] = 1;
            ++cnt;
            stack.push_back(c);
          }
      }
      if (cnt != nn) throw invalid_input("nice decomposition: unreachable nodes");
    }
    for (int i = 0; i < nn; ++i) shape_check(nodes, i);
    if (!nodes[root].bag.empty()) throw invalid_input("nice decomposition: root bag not empty");

    nd.nodes_ = std::move(nodes);
    nd.root_ = root;
    nd.compute_subtrees();
    return nd;
  }

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int root() const { return root_; }
  const NiceNode& node(int t) const {
    if (t < 0 || t >= node_count()) throw invalid_input("node id out of range");
    return nodes_[t];
  }
  // All vertices appearing in bags at or below t, sorted.
  const std::vector<int>& subtree_vertices(int t) const {
    if (t < 0 || t >= node_count()) throw invalid_input("node id out of range");
    return subtree_[t];
  }
  int vertex_count() const {
    return subtree_.empty() ? 0 : static_cast<int>(subtree_[root_].size());
  }
  int width() const {
    int w = -1;
    for (const auto& node : nodes_) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
    return w;
  }

  TreeDecomposition as_tree_decomposition() const {
    TreeDecomposition td;
    td.root = root_;
    for (const auto& node : nodes_) td.bags.push_back(node.bag);
    for (int i = 0; i < node_count(); ++i)
      if (nodes_[i].parent >= 0) td.edges.emplace_back(nodes_[i].parent, i);
    return td;
  }

 private:
  static const NiceNode& node_check(const std::vector<NiceNode>& nodes, int i) { return nodes[i]; }

  static void shape_check(const std::vector<NiceNode>& nodes, int i) {
    const NiceNode& nd = nodes[i];
    auto bad = [&](const std::string& why) {
      throw invalid_input("nice decomposition node " + std::to_string(i) + ": " + why);
    };
    switch (nd.kind) {
      case NodeKind::Leaf:
        if (!nd.children.empty()) bad("leaf with children");
        if (!nd.bag.empty()) bad("leaf bag not empty");
        break;
      case NodeKind::Introduce: {
        if (nd.children.size() != 1) bad("introduce without exactly one child");
        const auto& cb = nodes[nd.children[0]].bag;
        if (nd.vertex < 0 || vs_has(cb, nd.vertex)) bad("introduced vertex already below");
        if (nd.bag != vs_union(cb, {nd.vertex}))
          bad("bag " + detail::bag_text(nd.bag) + " is not child bag plus vertex " +
              std::to_string(nd.vertex));
        break;
      }
      case NodeKind::Forget: {
        if (nd.children.size() != 1) bad("forget without exactly one child");
        const auto& cb = nodes[nd.children[0]].bag;
        if (nd.vertex < 0 || vs_has(nd.bag, nd.vertex)) bad("forgotten vertex still in bag");
        if (cb != vs_union(nd.bag, {nd.vertex}))
          bad("child bag is not bag plus vertex " + std::to_string(nd.vertex));
        break;
      }
      case NodeKind::Join:
        if (nd.children.size() != 2) bad("join without exactly two children");
        if (nodes[nd.children[0]].bag != nd.bag || nodes[nd.children[1]].bag != nd.bag)
          bad("join children bags differ from own bag");
        break;
    }
  }

  void compute_subtrees() {
    int nn = node_count();
    subtree_.assign(nn, {});
    // iterative post-order
    std::vector<int> order;
    order.reserve(nn);
    std::vector<int> stack{root_};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int c : nodes_[v].children) stack.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      std::vector<int> acc = nodes_[v].bag;
      for (int c : nodes_[v].children) acc = vs_union(acc, subtree_[c]);
      subtree_[v] = std::move(acc);
    }
  }

  std::vector<NiceNode> nodes_;
  int root_ = 0;
  std::vector<std::vector<int>> subtree_;
};

inline CheckResult validate_nice(const Graph& g, const NiceTreeDecomposition& nd) {
  return validate(g, nd.as_tree_decomposition());
}

// Width-exact conversion to nice form. Between every original node and its
// parent we forget the vertices leaving the bag (ascending) and introduce the
// ones entering (ascending); multi-child nodes are join-folded left to right;
// leaves grow from an empty bag and the root forgets down to one.
inline NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
  CheckResult chk = validate(g, td);
  if (!chk.ok) throw invalid_input("invalid tree decomposition: " + chk.violation);
  if (g.vertex_count() == 0) return NiceTreeDecomposition::build({NiceNode{}}, 0);

  int nn = static_cast<int>(td.bags.size());
  std::vector<std::vector<int>> bags(nn);
  for (int i = 0; i < nn; ++i) bags[i] = vs_normalized(td.bags[i]);
  std::vector<std::vector<int>> tadj(nn);
  for (auto [a, b] : td.edges) {
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  int root = (td.root >= 0 && td.root < nn) ? td.root : 0;
  std::vector<std::vector<int>> kids(nn);
  std::vector<int> bfs{root}, par(nn, -1);
  par[root] = root;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    int v = bfs[i];
    for (int w : tadj[v])
      if (par[w] < 0) {
        par[w] = v;
        kids[v].push_back(w);
        bfs.push_back(w);
      }
  }

  std::vector<NiceNode> out;
  auto add = [&](NodeKind k, int vx, std::vector<int> bag, std::vector<int> ch) {
    NiceNode node;
    node.kind = k;
    node.vertex = vx;
    node.bag = std::move(bag);
    node.children = std::move(ch);
    out.push_back(std::move(node));
    return static_cast<int>(out.size()) - 1;
  };
  auto transition = [&](int top, std::vector<int> from, const std::vector<int>& to) {
    for (int v : vs_diff(from, to)) {
      from = vs_diff(from, {v});
      top = add(NodeKind::Forget, v, from, {top});
    }
    for (int v : vs_diff(to, from)) {
      from = vs_union(from, {v});
      top = add(NodeKind::Introduce, v, from, {top});
    }
    return top;
  };

  std::function<int(int)> assemble = [&](int u) -> int {
    if (kids[u].empty()) {
      int top = add(NodeKind::Leaf, -1, {}, {});
      std::vector<int> cur;
      for (int v : bags[u]) {
        cur = vs_union(cur, {v});
        top = add(NodeKind::Introduce, v, cur, {top});
      }
      return top;
    }
    std::vector<int> tops;
    for (int c : kids[u]) tops.push_back(transition(assemble(c), bags[c], bags[u]));
    int acc = tops[0];
    for (std::size_t i = 1; i < tops.size(); ++i)
      acc = add(NodeKind::Join, -1, bags[u], {acc, tops[i]});
    return acc;
  };

  int top = transition(assemble(root), bags[root], {});
  return NiceTreeDecomposition::build(std::move(out), top);
}

// Walks down from the root while the subtree holds more than 2s vertices,
// taking the heavier child at joins (ties to the smaller node id). The first
// node at or under 2s is also at or above s: unary steps shed at most one
// vertex and a join's heavier side holds at least half.
inline int find_split_node(const NiceTreeDecomposition& nd, long long s) {
  long long n = nd.vertex_count();
  if (s < 0) throw invalid_input("negative subtree target");
  if (s > n)
    throw invalid_input("subtree target " + std::to_string(s) + " exceeds vertex count " +
                        std::to_string(n));
  int t = nd.root();
  while (static_cast<long long>(nd.subtree_vertices(t).size()) > 2 * s) {
    const NiceNode& node = nd.node(t);
    if (node.children.empty())
      throw contract_violation("leaf subtree larger than threshold");
    if (node.children.size() == 1) {
      t = node.children[0];
    } else {
      int a = node.children[0], b = node.children[1];
      std::size_t sa = nd.subtree_vertices(a).size(), sb = nd.subtree_vertices(b).size();
      if (sa > sb || (sa == sb && a < b))
        t = a;
      else
        t = b;
    }
  }
  if (static_cast<long long>(nd.subtree_vertices(t).size()) < s)
    throw contract_violation("split node undershoots target window");
  return t;
}

// Everything strictly below t goes away; t's bag is rebuilt from an empty
// leaf by an ascending introduce chain, so the result is nice again and
// decomposes the graph minus (subtree vertices other than t's bag).
inline NiceTreeDecomposition prune_subtree(const NiceTreeDecomposition& nd, int t) {
  int nn = nd.node_count();
  if (t < 0 || t >= nn) throw invalid_input("node id out of range");
  std::vector<char> drop(nn, 0);
  {
    std::vector<int> stack(nd.node(t).children.begin(), nd.node(t).children.end());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      drop[v] = 1;
      for (int c : nd.node(v).children) stack.push_back(c);
    }
  }
  std::vector<int> newid(nn, -1);
  std::vector<NiceNode> out;
  for (int i = 0; i < nn; ++i) {
    if (drop[i]) continue;
    newid[i] = static_cast<int>(out.size());
    out.push_back(nd.node(i));
  }
  for (auto& node : out) {
    node.parent = -1;
    for (auto& c : node.children) c = newid[c];
  }
  int tn = newid[t];
  const std::vector<int>& tbag = nd.node(t).bag;
  out[tn].children.clear();
  if (tbag.empty()) {
    out[tn].kind = NodeKind::Leaf;
    out[tn].vertex = -1;
  } else {
    NiceNode leaf;
    out.push_back(leaf);
    int top = static_cast<int>(out.size()) - 1;
    std::vector<int> cur;
    for (std::size_t i = 0; i + 1 < tbag.size(); ++i) {
      cur = vs_union(cur, {tbag[i]});
      NiceNode step;
      step.kind = NodeKind::Introduce;
      step.vertex = tbag[i];
      step.bag = cur;
      step.children = {top};
      out.push_back(step);
      top = static_cast<int>(out.size()) - 1;
    }
    out[tn].kind = NodeKind::Introduce;
    out[tn].vertex = tbag.back();
    out[tn].children = {top};
  }
  return NiceTreeDecomposition::build(std::move(out), newid[nd.root()]);
}

// Applies a vertex renaming to every bag. newid[v] must be nonnegative for
// every vertex that occurs and injective over them.
inline NiceTreeDecomposition rename_vertices(const NiceTreeDecomposition& nd,
                                             const std::vector<int>& newid) {
  std::vector<NiceNode> out;
  out.reserve(nd.node_count());
  auto map1 = [&](int v) {
    if (v < 0 || v >= static_cast<int>(newid.size()) || newid[v] < 0)
      throw invalid_input("renaming undefined for vertex " + std::to_string(v));
    return newid[v];
  };
  for (int i = 0; i < nd.node_count(); ++i) {
    NiceNode node = nd.node(i);
    std::vector<int> bag;
    for (int v : node.bag) bag.push_back(map1(v));
    std::vector<int> norm = vs_normalized(bag);
    if (norm.size() != bag.size()) throw invalid_input("renaming is not injective on a bag");
    node.bag = std::move(norm);
    if (node.kind == NodeKind::Introduce || node.kind == NodeKind::Forget)
      node.vertex = map1(node.vertex);
    out.push_back(std::move(node));
  }
  return NiceTreeDecomposition::build(std::move(out), nd.root());
}

// Replaces every occurrence of the vertices in old by the single vertex z,
// collapsing duplicates inside bags and splicing out unary nodes whose bag
// becomes identical to their child's. With old empty, z is covered by a
// fresh introduce/forget pair above the root instead. Kinds are recomputed
// from the surviving bag relations.
inline NiceTreeDecomposition substitute_bag_vertices(const NiceTreeDecomposition& nd,
                                                     const VertexSet& old, int z) {
  int nn = nd.node_count();
  if (z < 0) throw invalid_input("replacement vertex must be nonnegative");
  for (int i = 0; i < nn; ++i)
    if (vs_has(nd.node(i).bag, z))
      throw invalid_input("replacement vertex already occurs in a bag");

  if (old.empty()) {
    std::vector<NiceNode> out;
    for (int i = 0; i < nn; ++i) out.push_back(nd.node(i));
    NiceNode intro;
    intro.kind = NodeKind::Introduce;
    intro.vertex = z;
    intro.bag = {z};
    intro.children = {nd.root()};
    out.push_back(intro);
    NiceNode forget;
    forget.kind = NodeKind::Forget;
    forget.vertex = z;
    forget.bag = {};
    forget.children = {static_cast<int>(out.size()) - 1};
    out.push_back(forget);
    return NiceTreeDecomposition::build(std::move(out), static_cast<int>(out.size()) - 1);
  }

  std::vector<std::vector<int>> nb(nn);
  for (int i = 0; i < nn; ++i) {
    std::vector<int> bag;
    for (int v : nd.node(i).bag) bag.push_back(vs_has(old, v) ? z : v);
    nb[i] = vs_normalized(bag);
  }
  auto resolve = [&](int i) {
    while (nd.node(i).children.size() == 1 && nb[i] == nb[nd.node(i).children[0]])
      i = nd.node(i).children[0];
    return i;
  };

  std::vector<NiceNode> out;
  std::vector<std::pair<int, int>> work;  // (resolved original id, new id)
  auto clone = [&](int orig) {
    NiceNode node;
    node.bag = nb[orig];
    out.push_back(node);
    return static_cast<int>(out.size()) - 1;
  };
  int new_root = clone(resolve(nd.root()));
  work.emplace_back(resolve(nd.root()), new_root);
  for (std::size_t w = 0; w < work.size(); ++w) {
    auto [orig, id] = work[w];
    for (int c : nd.node(orig).children) {
      int rc = resolve(c);
      int nc = clone(rc);
      out[id].children.push_back(nc);
      work.emplace_back(rc, nc);
    }
  }
  // recompute kinds from the new bag relations
  for (auto& node : out) {
    if (node.children.empty()) {
      node.kind = NodeKind::Leaf;
      node.vertex = -1;
    } else if (node.children.size() == 2) {
      node.kind = NodeKind::Join;
      node.vertex = -1;
    } else {
      const auto& cb = out[node.children[0]].bag;
      std::vector<int> gained = vs_diff(node.bag, cb);
      std::vector<int> lost = vs_diff(cb, node.bag);
      if (gained.size() == 1 && lost.empty()) {
        node.kind = NodeKind::Introduce;
        node.vertex = gained[0];
      } else if (lost.size() == 1 && gained.empty()) {
        node.kind = NodeKind::Forget;
        node.vertex = lost[0];
      } else {
        throw contract_violation("substitution left a unary node with an unusable bag step");
      }
    }
  }
  return NiceTreeDecomposition::build(std::move(out), new_root);
}

}  // namespace domkern
