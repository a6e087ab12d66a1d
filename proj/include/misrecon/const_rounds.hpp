#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "misrecon/graph.hpp"
#include "misrecon/schedule.hpp"
#include "misrecon/sim.hpp"

namespace misrecon {

// Everything an insertion touches lies within these radii of the target v.
constexpr int kGreedyRadius = 6;     // GC only considers nodes this close
constexpr int kCheckRadius = 8;      // nodes whose domination can change
constexpr int kStateRadius = 12;     // set members that can dominate them
constexpr int kInsertionRadius = 15; // ball needed to rebuild the state locally

// Greedy completion: beta nodes first, then alpha nodes, ascending id within
// each; only alpha ∪ beta nodes are candidates. Throws InputError when
// partial is not independent.
VertexSet greedy_complete(const Graph& g, const VertexSet& partial, const VertexSet& alpha, const VertexSet& beta);

enum class InsertionCase { alpha_at_2, case1, case2, case3, case4, case4_lean, pivot };
const char* insertion_case_name(InsertionCase c);

struct InsertionPlan {
  NodeId target = -1;
  InsertionCase case_tag = InsertionCase::alpha_at_2;
  std::vector<VertexSet> six_steps;  // S_1..S_6; S_0 is the current set
  VertexSet resulting_mis;           // S_6

  // S_i ∖ current and current ∖ S_i
  std::vector<std::pair<VertexSet, VertexSet>> diffs(const VertexSet& current) const;
};

// Six steps that bring v ∈ beta into the current set. Candidates are tried
// in a fixed order (alpha_at_2, case1, case2, case3, case4, case4_lean,
// pivot) and the first one whose steps keep independence, flip-independence
// and 4-domination around v wins. current must be an independent
// 4-dominating set.
InsertionPlan plan_insertion(const Graph& g, const VertexSet& current, const VertexSet& alpha, const VertexSet& beta,
                             NodeId v);

// The set reached once every beta∖alpha node in `done` has had its slot:
// B = P ∪ {b ∈ beta : N_alpha(b) ⊆ N(P)} with P = (alpha ∩ beta) ∪ done,
// then B ∪ (alpha ∖ N(B)).
VertexSet insertion_state(const Graph& g, const VertexSet& alpha, const VertexSet& beta, const VertexSet& done);

struct Theorem3Result {
  Schedule schedule;
  SimReport report;
  std::map<NodeId, InsertionCase> cases;  // per inserted node
};

// Node with id k owns steps 6k+1..6k+6. Needs a connected graph with
// diameter > 5. Plans are computed from simulated radius-15 balls.
Theorem3Result schedule_theorem3(const ReconfigInstance& inst);

// Same slots with plans computed on the whole graph, one after the other.
Theorem3Result schedule_theorem3_centralized(const ReconfigInstance& inst);

// ── Coloring-driven variant ──

constexpr int kColoringDistance = 10;

// Smallest color >= 1 not used within distance r, nodes by ascending id.
std::map<NodeId, int> greedy_power_coloring(const Graph& g, int r = kColoringDistance);

// First pair (by ids) at distance <= r sharing a color; also reports
// uncolored nodes as (v, v).
std::optional<Edge> coloring_conflict(const Graph& g, const std::map<NodeId, int>& coloring,
                                      int r = kColoringDistance);

// Color c owns steps 6c+1..6c+6; all nodes of one color insert at once.
Schedule schedule_corollary8(const ReconfigInstance& inst, const std::map<NodeId, int>& coloring);

}  // namespace misrecon
