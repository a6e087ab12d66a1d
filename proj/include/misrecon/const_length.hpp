#pragma once

#include <map>
#include <optional>
#include <string>

#include "misrecon/graph.hpp"
#include "misrecon/schedule.hpp"
#include "misrecon/sim.hpp"

namespace misrecon {

// ── Reduction ──

// Nodes in both MISes stay in every step, so they and their neighbours are
// stripped before anything else is computed.
struct ReductionResult {
  VertexSet kept_nodes;          // V'
  VertexSet stripped_always_in;  // alpha ∩ beta
  VertexSet stripped_never_in;   // N(alpha ∩ beta)
  ReconfigInstance reduced_instance;
};

ReductionResult reduce_alpha_beta(const ReconfigInstance& inst);

// S_i = S'_i ∪ (alpha ∩ beta)
Schedule lift_schedule(const Schedule& reduced, const ReductionResult& red);

// ── MIS source ──

// Every MIS the pipeline needs goes through here. Centralized mode with the
// deterministic-id subroutine runs a plain greedy; otherwise the simulator is
// used, and in simulated mode each call is charged as a phase of the report.
class MisEngine {
 public:
  MisEngine(Subroutine sub, bool simulated) : sub_(sub), simulated_(simulated) {}

  VertexSet mis(const Graph& g, const std::string& phase, int round_factor);
  SimReport& report() { return report_; }
  const Subroutine& subroutine() const { return sub_; }

 private:
  Subroutine sub_;
  bool simulated_;
  SimReport report_;
};

// ── Big components ──

struct LayeredPartition {
  std::map<int, VertexSet> layers;  // keys -2..5

  const VertexSet& at(int i) const;
};

// Layers R_-2..R_5 of a component of diameter >= 5 around a ruling set r.
// Throws InternalError when the result violates the partition, parity or
// adjacency invariants (see layer_violation).
LayeredPartition layer_component(const Graph& g, const VertexSet& comp, const VertexSet& alpha,
                                 const VertexSet& beta, const VertexSet& r);

// Empty string when the layering is sound. Adjacent layers must have
// consecutive indices, except that R_2 may touch R_-1: a node can be a
// neighbour of both R_1 and R_-1, and it is then kept in R_2.
std::string layer_violation(const Graph& g, const VertexSet& comp, const VertexSet& alpha,
                            const LayeredPartition& lp);

enum class BigCase { diameter_3_4, diameter_5_plus };

struct BigFragment {
  Schedule steps;  // always 9 sets, first comp ∩ alpha, last comp ∩ beta
  BigCase kind = BigCase::diameter_3_4;
  NodeId pivot = -1;  // v for the 3-4 case
  VertexSet ruling;   // R for the >= 5 case
};

// 8-step schedule for one component of alpha ∪ beta with diameter >= 3.
// For diameter >= 5 the ruling set is r if given, else an MIS of the square
// of the virtual alpha graph computed greedily by id.
BigFragment schedule_big_component(const Graph& g, const VertexSet& comp, const VertexSet& alpha,
                                   const VertexSet& beta, const std::optional<VertexSet>& r = std::nullopt);

// ── Component classes ──

enum class CompClass { big, c_alpha, c_beta, c_alpha_beta, isolated };
const char* comp_class_name(CompClass c);

struct Classification {
  ComponentLabels labels;
  std::vector<CompClass> cls;
  std::vector<VertexSet> augmented;  // isolated ones: vertices ∪ eps neighbours
  std::vector<int> augmented_diameter;
};

// alpha and beta must be disjoint here (i.e. after the reduction).
Classification classify(const Graph& g, const VertexSet& alpha, const VertexSet& beta);

// 18-step fragment over the non-isolated part (everything but isolated small
// components). First set is that part ∩ alpha.
Schedule schedule_non_isolated(const Graph& g, const VertexSet& alpha, const VertexSet& beta,
                               const Subroutine& sub = {});

// 10-step fragment over the isolated small components, ε-neighbours absorbed.
Schedule schedule_isolated(const Graph& g, const VertexSet& alpha, const VertexSet& beta,
                           const Subroutine& sub = {});

// ── Full construction ──

constexpr std::size_t kTheorem2Length = 28;
constexpr int kCollectRadius = 8;

struct Theorem2Result {
  std::optional<Schedule> schedule;  // absent only when blocked
  bool fallback = false;             // diameter <= 3, small-diameter path used
  SimReport report;                  // filled by the distributed variant
};

// Requires a connected graph. Diameter > 3 gives exactly 28 steps; smaller
// diameters go through small_diameter_fallback.
Theorem2Result schedule_theorem2(const ReconfigInstance& inst, const Subroutine& sub = {});

// Same schedule, computed with simulated node programs and the subroutine
// in `sub`. Local classification from collected balls is cross-checked
// against the centralized one.
Theorem2Result schedule_theorem2_distributed(const ReconfigInstance& inst, const Subroutine& sub = {});

}  // namespace misrecon
