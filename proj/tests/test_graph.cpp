#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "domkern/graph.hpp"

using namespace domkern;

namespace {
Graph path4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
Graph cycle6() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}); }
}  // namespace

TEST_CASE("graph construction validates its edge list") {
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), invalid_input);
  CHECK_THROWS_AS(Graph(3, {{-1, 0}}), invalid_input);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), invalid_input);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), invalid_input);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {0, 1}}), invalid_input);
  CHECK_NOTHROW(Graph(0, {}));
  CHECK_NOTHROW(Graph(1, {}));
}

TEST_CASE("graph accessors") {
  Graph g = path4();
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.neighbors(1) == VertexSet{0, 2});
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  CHECK(g.max_degree() == 2);
  CHECK(g.has_edge(2, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(Graph(5, {}).max_degree() == 0);
}

TEST_CASE("vertex set helpers keep sorted unique order") {
  CHECK(vs_normalized({3, 1, 2, 1}) == VertexSet{1, 2, 3});
  CHECK(vs_union({1, 3}, {2, 3}) == VertexSet{1, 2, 3});
  CHECK(vs_diff({1, 2, 3}, {2}) == VertexSet{1, 3});
  CHECK(vs_inter({1, 2, 3}, {2, 3, 4}) == VertexSet{2, 3});
  CHECK(vs_has({1, 4, 6}, 4));
  CHECK_FALSE(vs_has({1, 4, 6}, 5));
}

TEST_CASE("dominating set checking reports the smallest undominated vertex") {
  Graph g = path4();
  CHECK(check_solution(g, ProblemKind::DS, {1, 2}).ok);
  CHECK(check_solution(g, ProblemKind::DS, {1, 3}).ok);
  auto bad = check_solution(g, ProblemKind::DS, {0});
  CHECK_FALSE(bad.ok);
  CHECK(bad.violation == "vertex 2 undominated");
  CHECK(check_solution(Graph(0, {}), ProblemKind::DS, {}).ok);
}

TEST_CASE("independent dominating set checking orders its complaints") {
  Graph g = path4();
  CHECK(check_solution(g, ProblemKind::IDS, {0, 2}).ok);
  CHECK(check_solution(g, ProblemKind::IDS, {1, 3}).ok);
  auto dep = check_solution(g, ProblemKind::IDS, {0, 1});
  CHECK_FALSE(dep.ok);
  CHECK(dep.violation.find("vertex 3 undominated") != std::string::npos);
  auto edge = check_solution(g, ProblemKind::IDS, {0, 1, 3});
  CHECK_FALSE(edge.ok);
  CHECK(edge.violation == "edge {0,1} inside solution");
}

TEST_CASE("connected dominating set checking catches split solutions") {
  Graph g = path4();
  CHECK(check_solution(g, ProblemKind::CDS, {1, 2}).ok);
  auto split = check_solution(g, ProblemKind::CDS, {0, 2});
  CHECK_FALSE(split.ok);
  CHECK(split.violation.find("unreachable") != std::string::npos);
  CHECK_FALSE(check_solution(g, ProblemKind::CDS, {0, 3}).ok);
}

TEST_CASE("set system kinds are rejected by the graph checker") {
  Graph g = path4();
  CHECK_THROWS_AS(check_solution(g, ProblemKind::HS, {0}), invalid_input);
  CHECK_THROWS_AS(check_solution(g, ProblemKind::NST, {0}), invalid_input);
  CHECK_THROWS_AS(check_solution(g, ProblemKind::CapDS, {0}), invalid_input);
}

TEST_CASE("capacitated checking walks the assignment") {
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CapacitatedGraph cg(star, {3, 0, 0, 0});
  CapacitatedSolution good{{0}, {{1, 0}, {2, 0}, {3, 0}}};
  CHECK(check_solution(cg, good).ok);

  CapacitatedGraph tight(star, {2, 0, 0, 0});
  auto over = check_solution(tight, good);
  CHECK_FALSE(over.ok);
  CHECK(over.violation.find("capacity") != std::string::npos);

  CapacitatedSolution missing{{0}, {{1, 0}, {2, 0}}};
  CHECK_FALSE(check_solution(cg, missing).ok);

  CapacitatedSolution wrongtarget{{0, 1}, {{2, 0}, {3, 1}}};
  auto nonadj = check_solution(cg, wrongtarget);
  CHECK_FALSE(nonadj.ok);

  CapacitatedSolution selfassigned{{0, 1}, {{1, 0}, {2, 0}, {3, 0}}};
  CHECK_FALSE(check_solution(cg, selfassigned).ok);
}

TEST_CASE("components and connectivity") {
  Graph two(5, {{0, 1}, {2, 3}});
  auto comps = components(two);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == VertexSet{0, 1});
  CHECK(comps[1] == VertexSet{2, 3});
  CHECK(comps[2] == VertexSet{4});
  CHECK_FALSE(is_connected(two));
  CHECK(is_connected(path4()));
  CHECK(is_connected(Graph(0, {})));
  CHECK(is_connected(Graph(1, {})));
}

TEST_CASE("induced subgraphs renumber but remember") {
  Graph g = path4();
  auto sub = induced_subgraph(g, {0, 2, 3});
  CHECK(sub.graph.vertex_count() == 3);
  CHECK(sub.graph.edge_count() == 1);
  CHECK(sub.graph.has_edge(1, 2));
  CHECK(sub.to_original == std::vector<int>{0, 2, 3});
  CHECK_THROWS_AS(induced_subgraph(g, {2, 0}), invalid_input);
  CHECK_THROWS_AS(induced_subgraph(g, {0, 9}), invalid_input);

  CapacitatedGraph cg(g, {5, 6, 7, 8});
  auto csub = induced_subgraph(cg, {1, 3});
  CHECK(csub.graph.cap == std::vector<int>{6, 8});
}

TEST_CASE("separator contraction wires the fresh vertex to the boundary") {
  Graph g = path4();
  auto gad = attach_separator_vertex(g, {1});
  CHECK(gad.z == 3);
  CHECK(gad.graph.vertex_count() == 4);
  CHECK(gad.to_original == std::vector<int>{0, 2, 3, -1});
  CHECK(gad.graph.has_edge(0, 3));   // old 0 touched the separator
  CHECK(gad.graph.has_edge(1, 3));   // old 2 touched the separator
  CHECK_FALSE(gad.graph.has_edge(2, 3));  // old 3 did not
  CHECK(gad.graph.has_edge(1, 2));   // the surviving path edge
  CHECK(gad.graph.edge_count() == 3);
}

TEST_CASE("domination lower bound") {
  CHECK(ds_lower_bound(path4()) == 2);
  CHECK(ds_lower_bound(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})) == 1);
  CHECK(ds_lower_bound(Graph(0, {})) == 0);
  CHECK(ds_lower_bound(Graph(7, {})) == 7);
}

TEST_CASE("greedy completion to an independent dominating set") {
  Graph g = path4();
  CHECK(complete_independent(g, {}) == VertexSet{0, 2});
  CHECK(complete_independent(g, {1}) == VertexSet{1, 3});
  CHECK(complete_independent(g, {0, 2}) == VertexSet{0, 2});
  CHECK_THROWS_AS(complete_independent(g, {0, 1}), invalid_input);
}

TEST_CASE("connecting a dominating set adds shortest path interiors") {
  Graph g = cycle6();
  CHECK(connect_dominating_set(g, {0, 3}) == VertexSet{0, 1, 2, 3});
  CHECK(connect_dominating_set(g, {0, 1, 2, 3}) == VertexSet{0, 1, 2, 3});
  CHECK(connect_dominating_set(path4(), {1, 2}) == VertexSet{1, 2});
  CHECK_THROWS_AS(connect_dominating_set(g, {0}), invalid_input);  // not dominating
  Graph two(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(connect_dominating_set(two, {0, 2}), invalid_input);  // disconnected graph
}

TEST_CASE("closed neighborhoods") {
  Graph g = path4();
  CHECK(closed_neighborhood(g, {1}) == VertexSet{0, 1, 2});
  CHECK(closed_neighborhood(g, {0, 3}) == VertexSet{0, 1, 2, 3});
  CHECK(closed_neighborhood(g, {}) == VertexSet{});
}
