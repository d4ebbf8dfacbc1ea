#pragma once

// The oracle seam. Kernelization code only sees OracleHandle, which enforces
// the declared instance size cap on every call, validates every answer, and
// logs the exchange. Backends supply the answers: the exact one within its
// per-problem budget, the greedy one at any size (with no quality promise
// beyond feasibility, which is all the kernelization may assume anyway).

#include <string>
#include <utility>
#include <vector>

#include "domkern/errors.hpp"
#include "domkern/graph.hpp"
#include "domkern/solvers.hpp"

namespace domkern {

class OracleBackend {
 public:
  virtual ~OracleBackend() = default;
  virtual std::string name() const = 0;
  virtual VertexSet solve(ProblemKind kind, const Graph& g) = 0;
  virtual CapacitatedSolution solve(const CapacitatedGraph& cg) = 0;
  virtual VertexSet solve(const HittingSetInstance& inst) = 0;
  virtual VertexSet solve(const SteinerInstance& inst) = 0;
};

class ExactBackend : public OracleBackend {
 public:
  explicit ExactBackend(ExactBudget budget = ExactBudget::from_env()) : budget_(budget) {}

  std::string name() const override { return "exact"; }

  VertexSet solve(ProblemKind kind, const Graph& g) override {
    admit(kind, g.vertex_count());
    switch (kind) {
      case ProblemKind::DS: return exact_dominating_set(g);
      case ProblemKind::IDS: return exact_independent_dominating_set(g);
      case ProblemKind::CDS: return exact_connected_dominating_set(g);
      default: break;
    }
    throw invalid_input("plain graph query only answers ds, ids, or cds");
  }

  CapacitatedSolution solve(const CapacitatedGraph& cg) override {
    admit(ProblemKind::CapDS, cg.graph.vertex_count());
    return exact_capacitated_dominating_set(cg);
  }

  VertexSet solve(const HittingSetInstance& inst) override {
    admit(ProblemKind::HS, inst.universe);
    return exact_hitting_set(inst);
  }

  VertexSet solve(const SteinerInstance& inst) override {
    admit(ProblemKind::NST, inst.graph.vertex_count());
    return exact_steiner_tree_vertices(inst);
  }

  const ExactBudget& budget() const { return budget_; }

 private:
  void admit(ProblemKind kind, int n) const {
    int cap = budget_.for_kind(kind);
    if (n > cap)
      throw size_error(std::string("exact backend budget for ") + problem_name(kind) + " is " +
                       std::to_string(cap) + ", instance has " + std::to_string(n));
  }

  ExactBudget budget_;
};

class GreedyBackend : public OracleBackend {
 public:
  std::string name() const override { return "greedy"; }

  VertexSet solve(ProblemKind kind, const Graph& g) override {
    switch (kind) {
      case ProblemKind::DS: return greedy_dominating_set(g);
      case ProblemKind::IDS: return complete_independent(g, {});
      case ProblemKind::CDS: return connect_dominating_set(g, greedy_dominating_set(g));
      default: break;
    }
    throw invalid_input("plain graph query only answers ds, ids, or cds");
  }

  CapacitatedSolution solve(const CapacitatedGraph& cg) override {
    int n = cg.graph.vertex_count();
    VertexSet chosen = greedy_dominating_set(cg.graph);
    // grow until the assignment matching goes through; V itself always does
    while (true) {
      if (auto asg = capacitated_assignment(cg, chosen)) return {chosen, std::move(*asg)};
      int added = -1;
      for (int v = 0; v < n; ++v)
        if (!vs_has(chosen, v)) {
          added = v;
          break;
        }
      if (added < 0) throw contract_violation("full vertex set has no capacitated assignment");
      chosen = vs_union(chosen, {added});
    }
  }

  VertexSet solve(const HittingSetInstance&) override {
    throw invalid_input("greedy backend does not answer hitting set queries");
  }

  VertexSet solve(const SteinerInstance&) override {
    throw invalid_input("greedy backend does not answer steiner queries");
  }
};

struct QueryRecord {
  ProblemKind kind = ProblemKind::DS;
  int instance_size = 0;
  int answer_size = 0;
};

// Size-capped front of a backend. Exceeding the cap means the calling
// algorithm broke its own promise, hence contract_violation rather than a
// size complaint. Every answer is feasibility-checked before it is returned.
class OracleHandle {
 public:
  OracleHandle(OracleBackend& backend, long long size_cap)
      : backend_(&backend), cap_(size_cap) {}

  VertexSet query(ProblemKind kind, const Graph& g) {
    admit(g.vertex_count());
    VertexSet ans = vs_normalized(backend_->solve(kind, g));
    CheckResult chk = check_solution(g, kind, ans);
    if (!chk.ok) throw contract_violation("oracle answer rejected: " + chk.violation);
    log_.push_back({kind, g.vertex_count(), static_cast<int>(ans.size())});
    return ans;
  }

  CapacitatedSolution query(const CapacitatedGraph& cg) {
    admit(cg.graph.vertex_count());
    CapacitatedSolution ans = backend_->solve(cg);
    ans.chosen = vs_normalized(ans.chosen);
    CheckResult chk = check_solution(cg, ans);
    if (!chk.ok) throw contract_violation("oracle answer rejected: " + chk.violation);
    log_.push_back({ProblemKind::CapDS, cg.graph.vertex_count(), static_cast<int>(ans.chosen.size())});
    return ans;
  }

  VertexSet query(const HittingSetInstance& inst) {
    admit(inst.universe);
    VertexSet ans = vs_normalized(backend_->solve(inst));
    for (int e : ans)
      if (e < 0 || e >= inst.universe)
        throw contract_violation("oracle answer rejected: element " + std::to_string(e) +
                                 " outside the universe");
    for (std::size_t i = 0; i < inst.sets.size(); ++i) {
      bool hit = false;
      for (int e : inst.sets[i])
        if (vs_has(ans, e)) {
          hit = true;
          break;
        }
      if (!hit)
        throw contract_violation("oracle answer rejected: set " + std::to_string(i) + " not hit");
    }
    log_.push_back({ProblemKind::HS, inst.universe, static_cast<int>(ans.size())});
    return ans;
  }

  VertexSet query(const SteinerInstance& inst) {
    admit(inst.graph.vertex_count());
    VertexSet ans = vs_normalized(backend_->solve(inst));
    detail::require_vertex_set(inst.graph, ans, "oracle answer");
    if (!vs_inter(ans, inst.terminals).empty())
      throw contract_violation("oracle answer rejected: connector contains a terminal");
    if (!inst.terminals.empty() &&
        !is_connected(induced_subgraph(inst.graph, vs_union(inst.terminals, ans)).graph))
      throw contract_violation("oracle answer rejected: terminals stay disconnected");
    log_.push_back({ProblemKind::NST, inst.graph.vertex_count(), static_cast<int>(ans.size())});
    return ans;
  }

  const std::vector<QueryRecord>& log() const { return log_; }
  long long size_cap() const { return cap_; }
  OracleBackend& backend() const { return *backend_; }

 private:
  void admit(long long size) const {
    if (size > cap_)
      throw contract_violation("oracle query of size " + std::to_string(size) +
                               " exceeds the declared cap " + std::to_string(cap_));
  }

  OracleBackend* backend_;
  long long cap_;
  std::vector<QueryRecord> log_;
};

inline OracleHandle wrap_as_oracle(OracleBackend& backend, long long size_cap) {
  return OracleHandle(backend, size_cap);
}

}  // namespace domkern
