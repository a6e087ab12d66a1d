#include "misrecon/schedule.hpp"

#include <string>

#include "misrecon/errors.hpp"

namespace misrecon {

void check_instance(const ReconfigInstance& inst) {
  for (const VertexSet* s : {&inst.alpha, &inst.beta})
    for (NodeId v : *s)
      if (!inst.graph.has_node(v)) throw InputError("set member " + std::to_string(v) + " is not a node");
  if (!is_mis(inst.graph, inst.alpha)) throw InputError("alpha is not a maximal independent set");
  if (!is_mis(inst.graph, inst.beta)) throw InputError("beta is not a maximal independent set");
}

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::endpoints: return "endpoints";
    case Condition::independence: return "independence";
    case Condition::domination: return "domination";
    case Condition::flip_independence: return "flip-independence";
  }
  return "?";
}

std::string ValidationReport::describe() const {
  if (valid) return "valid";
  const Violation& v = *first_violation;
  std::string s = std::string(condition_name(v.condition)) + " violated at step " + std::to_string(v.step);
  if (v.edge) s += ": edge " + std::to_string(v.edge->first) + "-" + std::to_string(v.edge->second);
  else if (v.node) s += ": node " + std::to_string(*v.node);
  return s;
}

namespace {

std::optional<Edge> find_internal_edge(const Graph& g, const VertexSet& s) {
  auto in = membership(g, s);
  for (NodeId v : s)
    for (int j : g.adj(g.index_of(v)))
      if (in[j]) return Edge{v, g.id_at(j)};
  return std::nullopt;
}

std::optional<NodeId> find_undominated(const Graph& g, const VertexSet& s, int d) {
  std::vector<int> src;
  for (NodeId v : s) src.push_back(g.index_of(v));
  auto dist = bfs_indices(g, src, nullptr, d);
  for (std::size_t i = 0; i < dist.size(); ++i)
    if (dist[i] < 0) return g.id_at(static_cast<int>(i));
  return std::nullopt;
}

ValidationReport fail(std::size_t step, Condition c, std::optional<NodeId> node = {},
                      std::optional<Edge> edge = {}) {
  ValidationReport r;
  r.valid = false;
  r.first_violation = Violation{step, c, node, edge};
  return r;
}

}  // namespace

ValidationReport validate(const ReconfigInstance& inst, const Schedule& sched, PropertySpec p) {
  if (sched.steps.empty()) throw InputError("empty schedule");
  if (p.d < 1) throw InputError("domination radius must be positive");
  const Graph& g = inst.graph;
  for (const auto& s : sched.steps)
    for (NodeId v : s)
      if (!g.has_node(v)) throw InputError("schedule names unknown node " + std::to_string(v));

  const std::size_t last = sched.steps.size() - 1;
  if (sched.steps.front() != inst.alpha) return fail(0, Condition::endpoints);
  if (!is_mis(g, inst.alpha)) return fail(0, Condition::endpoints);
  for (std::size_t i = 1; i <= last; ++i) {
    const VertexSet& cur = sched.steps[i];
    if (i < last) {
      if (auto e = find_internal_edge(g, cur)) return fail(i, Condition::independence, {}, e);
      if (auto v = find_undominated(g, cur, p.d)) return fail(i, Condition::domination, v);
    }
    if (auto e = find_internal_edge(g, set_xor(cur, sched.steps[i - 1])))
      return fail(i, Condition::flip_independence, {}, e);
  }
  if (sched.steps.back() != inst.beta || !is_mis(g, inst.beta)) return fail(last, Condition::endpoints);
  return {};
}

std::pair<VertexSet, VertexSet> update_component(const VertexSet& current, const VertexSet& comp,
                                                 const VertexSet& alpha, const VertexSet& beta) {
  VertexSet removed = set_minus(current, set_intersection(alpha, comp));
  VertexSet added = set_union(removed, set_intersection(beta, comp));
  return {removed, added};
}

void append_update(std::vector<VertexSet>& steps, const VertexSet& comp, const VertexSet& alpha,
                   const VertexSet& beta) {
  auto [a, b] = update_component(steps.back(), comp, alpha, beta);
  steps.push_back(std::move(a));
  steps.push_back(std::move(b));
}

void pad_to_length(Schedule& s, std::size_t length) {
  if (s.steps.empty()) throw InputError("cannot pad an empty schedule");
  while (s.length() < length) s.steps.push_back(s.steps.back());
}

}  // namespace misrecon
