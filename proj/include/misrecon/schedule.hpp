#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "misrecon/graph.hpp"

namespace misrecon {

struct ReconfigInstance {
  Graph graph;
  VertexSet alpha;
  VertexSet beta;
};

// Throws InputError unless alpha and beta are maximal independent sets of
// the graph.
void check_instance(const ReconfigInstance& inst);

struct Schedule {
  std::vector<VertexSet> steps;

  // number of transitions, i.e. steps.size() - 1
  std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
  bool operator==(const Schedule& o) const { return steps == o.steps; }
};

// Target property P: independent and d-dominating.
struct PropertySpec {
  int d = 4;
};

enum class Condition { endpoints, independence, domination, flip_independence };

const char* condition_name(Condition c);

struct Violation {
  std::size_t step = 0;
  Condition condition = Condition::endpoints;
  std::optional<NodeId> node;
  std::optional<Edge> edge;
};

struct ValidationReport {
  bool valid = true;
  std::optional<Violation> first_violation;

  // one-line text such as "flip-independence violated at step 1: edge 0-1"
  std::string describe() const;
};

ValidationReport validate(const ReconfigInstance& inst, const Schedule& sched, PropertySpec p = {});

// Removal step then addition step for one component or a union of them:
// first = current ∖ (alpha ∩ comp), second = first ∪ (beta ∩ comp).
std::pair<VertexSet, VertexSet> update_component(const VertexSet& current, const VertexSet& comp,
                                                 const VertexSet& alpha, const VertexSet& beta);

// Appends the two update steps to a schedule under construction.
void append_update(std::vector<VertexSet>& steps, const VertexSet& comp, const VertexSet& alpha,
                   const VertexSet& beta);

// Repeats the final set until the schedule has the requested length.
void pad_to_length(Schedule& s, std::size_t length);

}  // namespace misrecon
