#include <catch2/catch_amalgamated.hpp>

#include "domkern/generate.hpp"
#include "domkern/oracle.hpp"
#include "test_support.hpp"

using namespace domkern;

namespace {

// answers everything with the empty set, so the handle must reject it
class HollowBackend : public OracleBackend {
 public:
  std::string name() const override { return "hollow"; }
  VertexSet solve(ProblemKind, const Graph&) override { return {}; }
  CapacitatedSolution solve(const CapacitatedGraph&) override { return {}; }
  VertexSet solve(const HittingSetInstance&) override { return {}; }
  VertexSet solve(const SteinerInstance&) override { return {}; }
};

}  // namespace

TEST_CASE("exact backend answers are optimal for each kind") {
  ExactBackend backend{ExactBudget{}};
  Graph g = gen_cycle(7);
  CHECK(static_cast<int>(backend.solve(ProblemKind::DS, g).size()) == ts::brute_min_ds(g));
  CHECK(static_cast<int>(backend.solve(ProblemKind::IDS, g).size()) == ts::brute_min_ids(g));
  CHECK(static_cast<int>(backend.solve(ProblemKind::CDS, g).size()) == ts::brute_min_cds(g));

  CapacitatedGraph cg{gen_path(4), {1, 2, 2, 1}};
  CHECK(static_cast<int>(backend.solve(cg).chosen.size()) == ts::brute_min_capds(cg));

  HittingSetInstance hs{5, {{0, 1}, {2, 3}, {1, 4}}};
  CHECK(static_cast<int>(backend.solve(hs).size()) == ts::brute_min_hs(hs));

  SteinerInstance st{gen_path(5), {0, 4}};
  CHECK(static_cast<int>(backend.solve(st).size()) == ts::brute_min_nst(st));
}

TEST_CASE("exact backend enforces its per problem budget") {
  ExactBudget tiny;
  tiny.ds = 5;
  tiny.capds = 4;
  tiny.hs = 3;
  tiny.nst = 4;
  ExactBackend backend{tiny};
  CHECK_NOTHROW(backend.solve(ProblemKind::DS, gen_path(5)));
  CHECK_THROWS_MATCHES(backend.solve(ProblemKind::DS, gen_path(6)), size_error,
                       Catch::Matchers::Message("exact backend budget for ds is 5, instance has 6"));
  CHECK_THROWS_AS(backend.solve(CapacitatedGraph{gen_path(5), {1, 1, 1, 1, 1}}), size_error);
  CHECK_THROWS_AS(backend.solve(HittingSetInstance{4, {{0}}}), size_error);
  CHECK_THROWS_AS(backend.solve(SteinerInstance{gen_path(5), {0, 4}}), size_error);
}

TEST_CASE("plain graph queries only cover the three uncapacitated kinds") {
  ExactBackend backend{ExactBudget{}};
  CHECK_THROWS_AS(backend.solve(ProblemKind::HS, gen_path(3)), invalid_input);
  CHECK_THROWS_AS(backend.solve(ProblemKind::CapDS, gen_path(3)), invalid_input);
}

TEST_CASE("greedy backend stays feasible on graphs of any size") {
  GreedyBackend backend;
  Rng rng(7);
  for (int round = 0; round < 15; ++round) {
    Graph g = gen_connected_bounded(rng, 20 + static_cast<int>(rng.below(60)), 5);
    CHECK(check_solution(g, ProblemKind::DS, backend.solve(ProblemKind::DS, g)).ok);
    CHECK(check_solution(g, ProblemKind::IDS, backend.solve(ProblemKind::IDS, g)).ok);
    CHECK(check_solution(g, ProblemKind::CDS, backend.solve(ProblemKind::CDS, g)).ok);
    CapacitatedGraph cg{g, gen_caps(rng, g, 4)};
    CHECK(check_solution(cg, backend.solve(cg)).ok);
  }
  CHECK_THROWS_AS(backend.solve(HittingSetInstance{2, {{0}}}), invalid_input);
  CHECK_THROWS_AS(backend.solve(SteinerInstance{gen_path(3), {0, 2}}), invalid_input);
}

TEST_CASE("handle rejects queries over the declared cap") {
  ExactBackend backend{ExactBudget{}};
  OracleHandle oracle = wrap_as_oracle(backend, 6);
  CHECK_NOTHROW(oracle.query(ProblemKind::DS, gen_path(6)));
  CHECK_THROWS_MATCHES(
      oracle.query(ProblemKind::DS, gen_path(7)), contract_violation,
      Catch::Matchers::Message("oracle query of size 7 exceeds the declared cap 6"));
  CHECK_THROWS_AS(oracle.query(CapacitatedGraph{gen_path(7), std::vector<int>(7, 2)}),
                  contract_violation);
  CHECK_THROWS_AS(oracle.query(HittingSetInstance{7, {{0}}}), contract_violation);
  CHECK_THROWS_AS(oracle.query(SteinerInstance{gen_path(7), {0, 6}}), contract_violation);
  CHECK(oracle.log().size() == 1);  // only the admitted query was recorded
}

TEST_CASE("handle validates every answer before returning it") {
  HollowBackend hollow;
  OracleHandle oracle = wrap_as_oracle(hollow, 100);
  CHECK_THROWS_MATCHES(oracle.query(ProblemKind::DS, gen_path(3)), contract_violation,
                       Catch::Matchers::Message("oracle answer rejected: vertex 0 undominated"));
  CHECK_THROWS_AS(oracle.query(CapacitatedGraph{gen_path(3), {1, 1, 1}}), contract_violation);
  CHECK_THROWS_AS(oracle.query(HittingSetInstance{3, {{0, 1}}}), contract_violation);
  CHECK_THROWS_AS(oracle.query(SteinerInstance{gen_path(3), {0, 2}}), contract_violation);
  CHECK(oracle.log().empty());

  // the empty answer is fine when it is actually feasible
  CHECK(oracle.query(ProblemKind::DS, Graph(0, {})).empty());
  CHECK(oracle.query(HittingSetInstance{3, {}}).empty());
  CHECK(oracle.query(SteinerInstance{gen_path(3), {1, 2}}).empty());
}

TEST_CASE("handle log captures each admitted exchange") {
  ExactBackend backend{ExactBudget{}};
  OracleHandle oracle = wrap_as_oracle(backend, 50);
  oracle.query(ProblemKind::DS, gen_path(6));
  oracle.query(ProblemKind::IDS, gen_cycle(5));
  oracle.query(CapacitatedGraph{gen_path(4), {2, 2, 2, 2}});
  oracle.query(HittingSetInstance{3, {{0, 2}}});
  oracle.query(SteinerInstance{gen_path(5), {0, 4}});
  REQUIRE(oracle.log().size() == 5);
  CHECK(oracle.log()[0].kind == ProblemKind::DS);
  CHECK(oracle.log()[0].instance_size == 6);
  CHECK(oracle.log()[0].answer_size == 2);
  CHECK(oracle.log()[1].kind == ProblemKind::IDS);
  CHECK(oracle.log()[2].kind == ProblemKind::CapDS);
  CHECK(oracle.log()[3].kind == ProblemKind::HS);
  CHECK(oracle.log()[3].instance_size == 3);
  CHECK(oracle.log()[3].answer_size == 1);
  CHECK(oracle.log()[4].kind == ProblemKind::NST);
  CHECK(oracle.log()[4].answer_size == 3);
  CHECK(oracle.size_cap() == 50);
  CHECK(oracle.backend().name() == "exact");
}

TEST_CASE("steiner answers may not contain terminals") {
  // a backend that pads its answer with a terminal must be caught
  class Padded : public OracleBackend {
   public:
    std::string name() const override { return "padded"; }
    VertexSet solve(ProblemKind, const Graph&) override { return {}; }
    CapacitatedSolution solve(const CapacitatedGraph&) override { return {}; }
    VertexSet solve(const HittingSetInstance&) override { return {}; }
    VertexSet solve(const SteinerInstance& inst) override {
      VertexSet all;
      for (int v = 0; v < inst.graph.vertex_count(); ++v) all.push_back(v);
      return all;
    }
  } padded;
  OracleHandle oracle = wrap_as_oracle(padded, 100);
  CHECK_THROWS_MATCHES(
      oracle.query(SteinerInstance{gen_path(4), {0, 3}}), contract_violation,
      Catch::Matchers::Message("oracle answer rejected: connector contains a terminal"));
}
