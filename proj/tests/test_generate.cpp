#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "domkern/generate.hpp"

using namespace domkern;

TEST_CASE("generator randomness is reproducible and spread out") {
  Rng a(42), b(42), c(43);
  std::vector<std::uint64_t> va, vb;
  for (int i = 0; i < 50; ++i) {
    va.push_back(a.next());
    vb.push_back(b.next());
  }
  CHECK(va == vb);
  bool differs = false;
  for (int i = 0; i < 50; ++i)
    if (c.next() != va[i]) differs = true;
  CHECK(differs);

  Rng r(7);
  std::set<int> seen;
  for (int i = 0; i < 400; ++i) {
    int v = r.below(10);
    CHECK(v >= 0);
    CHECK(v < 10);
    seen.insert(v);
  }
  CHECK(seen.size() == 10);
  CHECK_THROWS_AS(r.below(0), invalid_input);
  CHECK(r.range(5, 5) == 5);
  CHECK_THROWS_AS(r.range(5, 4), invalid_input);
  CHECK_FALSE(r.chance(0, 3));
  CHECK(r.chance(3, 3));
}

TEST_CASE("shuffle is a permutation and seed determined") {
  std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7};
  Rng a(5), b(5);
  std::vector<int> va = v, vb = v;
  a.shuffle(va);
  b.shuffle(vb);
  CHECK(va == vb);
  std::vector<int> sorted = va;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == v);
}

TEST_CASE("structured families have the advertised shape") {
  Graph p = gen_path(5);
  CHECK(p.edge_count() == 4);
  CHECK(p.degree(0) == 1);
  CHECK(p.degree(2) == 2);
  CHECK(gen_path(0).vertex_count() == 0);
  CHECK(gen_path(1).edge_count() == 0);

  Graph cy = gen_cycle(5);
  CHECK(cy.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(cy.degree(v) == 2);
  CHECK_THROWS_AS(gen_cycle(2), invalid_input);

  Graph gr = gen_grid(3, 4);
  CHECK(gr.vertex_count() == 12);
  CHECK(gr.edge_count() == 17);
  CHECK(gr.max_degree() == 4);
  CHECK(is_connected(gr));

  Graph st = gen_star(6);
  CHECK(st.degree(0) == 5);
  CHECK(st.degree(3) == 1);

  Graph cc = gen_clique_chain(3, 4);
  CHECK(cc.vertex_count() == 12);
  CHECK(cc.edge_count() == 3 * 6 + 2);
  CHECK(is_connected(cc));
  CHECK_THROWS_AS(gen_clique_chain(0, 3), invalid_input);
}

TEST_CASE("random bounded graphs respect the degree bound and the seed") {
  Rng a(11), b(11);
  for (int round = 0; round < 20; ++round) {
    int n = 5 + a.below(40);
    int cap = 1 + a.below(6);
    (void)b.below(40);
    (void)b.below(6);
    Graph ga = gen_random_bounded(a, n, cap);
    Graph gb = gen_random_bounded(b, n, cap);
    CHECK(ga.edges() == gb.edges());
    CHECK(ga.max_degree() <= cap);
  }
  CHECK(gen_random_bounded(a, 10, 0).edge_count() == 0);
}

TEST_CASE("connected bounded graphs connect and respect the degree bound") {
  Rng rng(13);
  for (int round = 0; round < 25; ++round) {
    int n = 2 + rng.below(50);
    int cap = 2 + rng.below(4);
    Graph g = gen_connected_bounded(rng, n, cap);
    INFO("n=" << n << " cap=" << cap);
    CHECK(is_connected(g));
    CHECK(g.max_degree() <= cap);
  }
  CHECK(gen_connected_bounded(rng, 1, 0).vertex_count() == 1);
  CHECK(gen_connected_bounded(rng, 2, 1).edge_count() == 1);
  CHECK_THROWS_AS(gen_connected_bounded(rng, 3, 1), invalid_input);
}

TEST_CASE("planted separators really separate") {
  Rng rng(17);
  for (int round = 0; round < 25; ++round) {
    int na = 1 + rng.below(6), nb = 1 + rng.below(3), nc = 1 + rng.below(6);
    SeparatedInstance inst = gen_separated(rng, na, nb, nc, 4);
    CHECK(static_cast<int>(inst.a.size()) == na);
    CHECK(static_cast<int>(inst.b.size()) == nb);
    CHECK(static_cast<int>(inst.c.size()) == nc);
    CHECK(inst.graph.vertex_count() == na + nb + nc);
    CHECK(inst.graph.max_degree() <= 4);
    CHECK(is_connected(inst.graph));
    for (auto [u, v] : inst.graph.edges()) {
      bool ua = vs_has(inst.a, u), uc = vs_has(inst.c, u);
      bool va = vs_has(inst.a, v), vc = vs_has(inst.c, v);
      bool crosses = (ua && vc) || (uc && va);
      CHECK_FALSE(crosses);
    }
  }
}

TEST_CASE("capacity vectors stay inside the requested range") {
  Rng rng(19);
  Graph g = gen_path(30);
  std::vector<int> cap = gen_caps(rng, g, 3);
  REQUIRE(cap.size() == 30);
  for (int c : cap) {
    CHECK(c >= 0);
    CHECK(c <= 3);
  }
  std::vector<int> zero = gen_caps(rng, g, 0);
  for (int c : zero) CHECK(c == 0);
}

TEST_CASE("set family generator emits valid nonempty sets") {
  Rng rng(23);
  for (int round = 0; round < 20; ++round) {
    int u = 1 + rng.below(8);
    HittingSetInstance inst = gen_hitting_set(rng, u, 1 + rng.below(10), 4);
    CHECK(inst.universe == u);
    for (const auto& s : inst.sets) {
      CHECK(!s.empty());
      CHECK(static_cast<int>(s.size()) <= 4);
      CHECK(s == vs_normalized(s));
      for (int e : s) {
        CHECK(e >= 0);
        CHECK(e < u);
      }
    }
  }
}

TEST_CASE("formula generator emits well formed clauses") {
  Rng rng(29);
  for (int round = 0; round < 20; ++round) {
    int vars = 1 + rng.below(6);
    CnfFormula f = gen_cnf(rng, vars, 1 + rng.below(8), 3);
    CHECK(f.variables == vars);
    for (const auto& cl : f.clauses) {
      CHECK(!cl.empty());
      CHECK(static_cast<int>(cl.size()) <= 3);
      for (int lit : cl) {
        CHECK(lit != 0);
        CHECK(std::abs(lit) <= vars);
      }
    }
  }
}
