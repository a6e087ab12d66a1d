#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "misrecon/graph.hpp"
#include "misrecon/schedule.hpp"

namespace misrecon {

// ── Existence characterization ──

struct BlockerReport {
  bool blocked = false;
  bool cond1_fully_connected = false;
  bool cond2_eps_covered = false;
  bool cond3_no_complement_path = false;

  VertexSet eps_alpha;  // epsilon nodes adjacent to every alpha node
  VertexSet eps_beta;
  std::optional<Edge> loose_pair;          // (a, b) not adjacent, when cond 1 fails
  std::optional<NodeId> free_eps;          // when cond 2 fails
  std::vector<NodeId> complement_path;     // eps_beta∖eps_alpha ... eps_alpha∖eps_beta, when cond 3 fails
  std::string witness;

  std::string to_text() const;
};

BlockerReport check_blocker(const ReconfigInstance& inst);

// ── Exhaustive search ──

struct OracleResult {
  bool exists = false;
  bool inconclusive = false;  // cap hit before the search finished
  std::optional<std::size_t> min_length;
  std::optional<Schedule> witness;
  std::uint64_t states_explored = 0;

  std::string to_text() const;
};

constexpr int kOracleMaxNodes = 40;

// BFS over independent d-dominating sets; an edge joins S and T whenever
// S ⊕ T is independent. cap_states bounds both the enumerated independent
// sets and the states expanded.
OracleResult brute_force_oracle(const ReconfigInstance& inst, PropertySpec p = {},
                                std::uint64_t cap_states = 2'000'000);

// Schedules for diameter <= 3 built from the characterization's explicit
// moves. Absent when the instance is blocked.
std::optional<Schedule> small_diameter_fallback(const ReconfigInstance& inst);

// ── Instance families ──

struct GadgetParams {
  int n = 0;
  int k = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

// families: threedom-blocker, threedom-linear, logstar, star, random,
// alt-path, alt-cycle
ReconfigInstance gen_gadget(const std::string& family, const GadgetParams& params);
std::vector<std::string> gadget_families();

// ── Small-graph enumeration ──

// One representative per isomorphism class of connected graphs on exactly n
// nodes (ids 0..n-1).
std::vector<Graph> enumerate_connected_graphs(int n);

// Canonical code of a graph on ids 0..n-1 (n <= 8), invariant under
// relabelling.
std::uint64_t canonical_code(const Graph& g);

std::vector<VertexSet> all_mis(const Graph& g);

}  // namespace misrecon
