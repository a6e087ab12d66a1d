#include "misrecon/const_rounds.hpp"

#include <algorithm>
#include <string>

#include "misrecon/errors.hpp"

namespace misrecon {

namespace {

VertexSet complete(const Graph& g, const VertexSet& partial, const VertexSet& alpha, const VertexSet& beta,
                   const VertexSet* pool) {
  VertexSet s = partial;
  auto in = membership(g, s);
  auto consider = [&](NodeId x) {
    if (!g.has_node(x) || (pool && !pool->count(x))) return;
    int i = g.index_of(x);
    if (in[i]) return;
    for (int j : g.adj(i))
      if (in[j]) return;
    in[i] = 1;
    s.insert(x);
  };
  for (NodeId x : beta) consider(x);
  for (NodeId x : alpha)
    if (!beta.count(x)) consider(x);
  return s;
}

VertexSet within(const std::vector<int>& dist, const Graph& g, int lo, int hi) {
  VertexSet out;
  for (std::size_t i = 0; i < dist.size(); ++i)
    if (dist[i] >= lo && dist[i] <= hi) out.insert(g.id_at(static_cast<int>(i)));
  return out;
}

struct Local {
  const Graph& g;
  const VertexSet& x;
  const VertexSet& alpha;
  const VertexSet& beta;
  NodeId v;
  std::vector<int> dist;  // from v, capped at kStateRadius
  VertexSet pool;         // GC candidates
  VertexSet check;        // nodes whose domination is re-checked
  VertexSet sources;      // nodes allowed to dominate them

  Local(const Graph& g_, const VertexSet& x_, const VertexSet& a_, const VertexSet& b_, NodeId v_)
      : g(g_), x(x_), alpha(a_), beta(b_), v(v_) {
    dist = bfs_indices(g, {g.index_of(v)}, nullptr, kStateRadius);
    pool = set_intersection(within(dist, g, 0, kGreedyRadius), set_union(alpha, beta));
    check = within(dist, g, 0, kCheckRadius);
    sources = within(dist, g, 0, kStateRadius);
  }

  int d(NodeId y) const { return dist[g.index_of(y)]; }
  VertexSet nx(NodeId y) const { return neighbors_in(g, y, x); }
  VertexSet gc(const VertexSet& part) const { return complete(g, part, alpha, beta, &pool); }

  bool independent_additions(const VertexSet& s) const {
    for (NodeId y : set_minus(s, x))
      if (!neighbors_in(g, y, s).empty()) return false;
    return true;
  }

  bool dominated_near_v(const VertexSet& s) const {
    std::vector<int> src;
    for (NodeId y : set_intersection(s, sources)) src.push_back(g.index_of(y));
    auto dd = bfs_indices(g, src, nullptr, 4);
    return std::all_of(check.begin(), check.end(), [&](NodeId y) { return dd[g.index_of(y)] >= 0; });
  }

  bool fragment_ok(const std::vector<VertexSet>& f) const {
    for (std::size_t i = 1; i < f.size(); ++i) {
      if (!independent_additions(f[i])) return false;
      if (!is_independent(g, set_xor(f[i], f[i - 1]))) return false;
      if (!dominated_near_v(f[i])) return false;
    }
    return true;
  }
};

using Candidate = std::pair<InsertionCase, std::vector<VertexSet>>;

std::vector<Candidate> candidates(const Local& L) {
  const Graph& g = L.g;
  const VertexSet& x = L.x;
  const NodeId v = L.v;
  std::vector<NodeId> d2;
  VertexSet d3;
  for (std::size_t i = 0; i < L.dist.size(); ++i) {
    if (L.dist[i] == 2) d2.push_back(g.id_at(static_cast<int>(i)));
    if (L.dist[i] == 3) d3.insert(g.id_at(static_cast<int>(i)));
  }
  const VertexSet nav = L.nx(v);
  const VertexSet vs{v};
  std::vector<Candidate> out;

  // an X node two hops away keeps everything around v dominated
  for (NodeId u : d2)
    if (x.count(u)) {
      VertexSet s1 = set_minus(x, nav);
      VertexSet s2 = L.gc(set_union(s1, vs));
      out.push_back({InsertionCase::alpha_at_2, {x, s1, s2, s2, s2, s2, s2}});
      return out;
    }

  auto third_hops = [&](NodeId u) {
    std::vector<NodeId> ys;
    for (NodeId y : neighbors_in(g, u, d3)) ys.push_back(y);
    std::stable_sort(ys.begin(), ys.end(), [&](NodeId a, NodeId b) { return x.count(a) > x.count(b); });
    return ys;
  };
  auto pivot_through = [&](const VertexSet& mid, const VertexSet& parked, const VertexSet& restore) {
    VertexSet s1 = set_minus(x, parked);
    VertexSet s2 = set_union(s1, mid);
    VertexSet s3 = set_minus(s2, nav);
    VertexSet s4 = set_union(s3, vs);
    VertexSet s5 = set_minus(s4, set_minus(mid, x));
    VertexSet s6 = L.gc(set_union(s5, restore));
    return std::vector<VertexSet>{x, s1, s2, s3, s4, s5, s6};
  };

  for (NodeId u : d2)
    if (neighbors_in(g, u, nav).empty()) {
      VertexSet nu = L.nx(u);
      out.push_back({InsertionCase::case1, pivot_through({u}, nu, nu)});
    }
  for (NodeId u : d2)
    if (is_subset(nav, neighbors_in(g, u, nav)))
      for (NodeId u3 : third_hops(u)) {
        VertexSet n3 = L.nx(u3);
        out.push_back({InsertionCase::case2, pivot_through({u3}, n3, n3)});
      }
  for (NodeId u : d2)
    if (neighbors_in(g, u, d3).empty() && !set_minus(nav, neighbors_in(g, u, nav)).empty()) {
      VertexSet nu = L.nx(u);
      out.push_back({InsertionCase::case3, pivot_through({u}, nu, set_minus(nu, nav))});
    }

  std::vector<NodeId> u2;
  for (NodeId u : d2)
    if (!neighbors_in(g, u, d3).empty()) u2.push_back(u);
  if (!u2.empty()) {
    for (bool lean : {false, true}) {
      VertexSet u3;
      for (NodeId u : u2) {
        if (!lean && !neighbors_in(g, u, u3).empty()) continue;
        if (lean) {
          auto du = bfs_indices(g, {g.index_of(u)}, nullptr, 2);
          if (std::any_of(u3.begin(), u3.end(), [&](NodeId y) { return du[g.index_of(y)] >= 0; })) continue;
        }
        for (NodeId y : third_hops(u))
          if (neighbors_in(g, y, u3).empty()) {
            u3.insert(y);
            break;
          }
      }
      VertexSet n3;
      for (NodeId y : u3) {
        auto n = L.nx(y);
        n3.insert(n.begin(), n.end());
      }
      out.push_back({lean ? InsertionCase::case4_lean : InsertionCase::case4, pivot_through(u3, n3, n3)});
    }
  }

  for (NodeId u : d2) {
    VertexSet nu = L.nx(u);
    out.push_back({InsertionCase::pivot, pivot_through({u}, nu, set_minus(nu, nav))});
  }
  return out;
}

std::string describe_neighbourhood(const Graph& g, const VertexSet& x, NodeId v) {
  std::string s = "v=" + std::to_string(v) + " N(v)=";
  for (NodeId w : g.neighbors(v)) s += std::to_string(w) + (x.count(w) ? "*" : "") + ",";
  return s;
}

void require_instance(const ReconfigInstance& inst) {
  check_instance(inst);
  if (!is_connected(inst.graph)) throw InputError("the construction needs a connected graph");
  int dm = diameter(inst.graph);
  if (dm <= 5)
    throw InputError("graph diameter " + std::to_string(dm) +
                     " is at most 5; use const-length or the small-diameter fallback");
}

VertexSet apply_diff(const VertexSet& x, const std::pair<VertexSet, VertexSet>& diff) {
  return set_union(set_minus(x, diff.second), diff.first);
}

void finish(const ReconfigInstance& inst, const VertexSet& x, const Schedule& s, const char* what) {
  if (x != inst.beta) throw InternalError(std::string(what) + " did not end at beta");
  auto rep = validate(inst, s);
  if (!rep.valid) throw InternalError(std::string(what) + " schedule invalid: " + rep.describe());
}

}  // namespace

VertexSet greedy_complete(const Graph& g, const VertexSet& partial, const VertexSet& alpha, const VertexSet& beta) {
  if (!is_independent(g, partial)) throw InputError("greedy completion needs an independent partial set");
  return complete(g, partial, alpha, beta, nullptr);
}

const char* insertion_case_name(InsertionCase c) {
  switch (c) {
    case InsertionCase::alpha_at_2: return "alpha-at-2";
    case InsertionCase::case1: return "case1";
    case InsertionCase::case2: return "case2";
    case InsertionCase::case3: return "case3";
    case InsertionCase::case4: return "case4";
    case InsertionCase::case4_lean: return "case4-lean";
    case InsertionCase::pivot: return "pivot";
  }
  return "?";
}

std::vector<std::pair<VertexSet, VertexSet>> InsertionPlan::diffs(const VertexSet& current) const {
  std::vector<std::pair<VertexSet, VertexSet>> out;
  for (const auto& s : six_steps) out.emplace_back(set_minus(s, current), set_minus(current, s));
  return out;
}

InsertionPlan plan_insertion(const Graph& g, const VertexSet& current, const VertexSet& alpha, const VertexSet& beta,
                             NodeId v) {
  if (!g.has_node(v)) throw InputError("unknown target node " + std::to_string(v));
  if (!beta.count(v)) throw InputError("target " + std::to_string(v) + " is not a beta node");
  if (current.count(v)) throw InputError("target " + std::to_string(v) + " is already in the set");
  Local L(g, current, alpha, beta, v);
  for (auto& [tag, f] : candidates(L)) {
    if (!L.fragment_ok(f)) continue;
    InsertionPlan p;
    p.target = v;
    p.case_tag = tag;
    p.six_steps.assign(f.begin() + 1, f.end());
    p.resulting_mis = f.back();
    if (!is_subset(set_minus(current, p.resulting_mis), neighbors_in(g, v, current)))
      throw InternalError("insertion of " + std::to_string(v) + " removes more than N(v)");
    if (!p.resulting_mis.count(v)) throw InternalError("insertion of " + std::to_string(v) + " lost the target");
    return p;
  }
  throw InternalError("no insertion case applies: " + describe_neighbourhood(g, current, v));
}

VertexSet insertion_state(const Graph& g, const VertexSet& alpha, const VertexSet& beta, const VertexSet& done) {
  VertexSet p = set_union(set_intersection(alpha, beta), done);
  VertexSet np = neighborhood(g, p);
  VertexSet b = p;
  for (NodeId x : beta)
    if (is_subset(neighbors_in(g, x, alpha), np)) b.insert(x);
  return set_union(b, set_minus(alpha, neighborhood(g, b)));
}

// ── Id-slot schedule ──

Theorem3Result schedule_theorem3_centralized(const ReconfigInstance& inst) {
  require_instance(inst);
  const Graph& g = inst.graph;
  Theorem3Result res;
  VertexSet x = inst.alpha, done;
  res.schedule.steps = {x};
  for (NodeId k = 0; k <= g.max_id(); ++k) {
    bool mine = g.has_node(k) && inst.beta.count(k) && !inst.alpha.count(k);
    if (mine && !x.count(k)) {
      auto plan = plan_insertion(g, x, inst.alpha, inst.beta, k);
      res.cases[k] = plan.case_tag;
      for (const auto& s : plan.six_steps) res.schedule.steps.push_back(s);
      x = plan.resulting_mis;
    } else {
      for (int i = 0; i < 6; ++i) res.schedule.steps.push_back(x);
    }
    if (mine) {
      done.insert(k);
      if (x != insertion_state(g, inst.alpha, inst.beta, done))
        throw InternalError("running set after slot " + std::to_string(k) + " differs from its local description");
    }
  }
  finish(inst, x, res.schedule, "id-slot schedule");
  return res;
}

Theorem3Result schedule_theorem3(const ReconfigInstance& inst) {
  require_instance(inst);
  const Graph& g = inst.graph;
  Theorem3Result res;

  std::map<NodeId, std::int64_t> labels;
  for (NodeId v : g.nodes()) labels[v] = (inst.alpha.count(v) ? 1 : 0) | (inst.beta.count(v) ? 2 : 0);
  auto balls = collect_balls(g, labels, kInsertionRadius);
  res.report.add_phase("collect", balls.rounds_used, balls.messages_sent);

  // each beta∖alpha node plans its own slot from its ball
  std::map<NodeId, std::vector<std::pair<VertexSet, VertexSet>>> plans;
  for (NodeId v : g.nodes()) {
    if (!inst.beta.count(v) || inst.alpha.count(v)) continue;
    auto view = decode_ball(balls.outputs.at(v));
    VertexSet a, b, done;
    for (const auto& [id, lab] : view.labels) {
      if (lab & 1) a.insert(id);
      if (lab & 2) b.insert(id);
      if (lab == 2 && id < v) done.insert(id);
    }
    VertexSet x = insertion_state(view.graph, a, b, done);
    if (x.count(v)) continue;
    auto plan = plan_insertion(view.graph, x, a, b, v);
    res.cases[v] = plan.case_tag;
    plans[v] = plan.diffs(x);
  }

  VertexSet x = inst.alpha;
  res.schedule.steps = {x};
  for (NodeId k = 0; k <= g.max_id(); ++k) {
    auto it = plans.find(k);
    if (it == plans.end()) {
      for (int i = 0; i < 6; ++i) res.schedule.steps.push_back(x);
      continue;
    }
    for (const auto& d : it->second) res.schedule.steps.push_back(apply_diff(x, d));
    x = res.schedule.steps.back();
  }
  finish(inst, x, res.schedule, "id-slot schedule");
  return res;
}

// ── Color-slot schedule ──

std::map<NodeId, int> greedy_power_coloring(const Graph& g, int r) {
  std::map<NodeId, int> col;
  for (NodeId v : g.nodes()) {
    std::set<int> used;
    for (NodeId w : ball(g, v, r))
      if (auto it = col.find(w); it != col.end()) used.insert(it->second);
    int c = 1;
    while (used.count(c)) ++c;
    col[v] = c;
  }
  return col;
}

std::optional<Edge> coloring_conflict(const Graph& g, const std::map<NodeId, int>& coloring, int r) {
  for (NodeId v : g.nodes())
    if (!coloring.count(v)) return Edge{v, v};
  for (NodeId v : g.nodes())
    for (NodeId w : ball(g, v, r))
      if (w > v && coloring.at(v) == coloring.at(w)) return Edge{v, w};
  return std::nullopt;
}

Schedule schedule_corollary8(const ReconfigInstance& inst, const std::map<NodeId, int>& coloring) {
  require_instance(inst);
  const Graph& g = inst.graph;
  for (const auto& [v, c] : coloring) {
    if (!g.has_node(v)) throw InputError("coloring names unknown node " + std::to_string(v));
    if (c < 0) throw InputError("negative color for node " + std::to_string(v));
  }
  if (auto bad = coloring_conflict(g, coloring)) {
    if (bad->first == bad->second) throw InputError("node " + std::to_string(bad->first) + " has no color");
    throw InputError("coloring is not proper on the 10th power: nodes " + std::to_string(bad->first) + " and " +
                     std::to_string(bad->second) + " share color " + std::to_string(coloring.at(bad->first)));
  }
  int top = 0;
  for (const auto& [v, c] : coloring) top = std::max(top, c);

  Schedule s{{inst.alpha}};
  VertexSet x = inst.alpha;
  for (int c = 0; c <= top; ++c) {
    std::vector<std::vector<std::pair<VertexSet, VertexSet>>> ds;
    for (const auto& [v, col] : coloring)
      if (col == c && inst.beta.count(v) && !x.count(v)) ds.push_back(plan_insertion(g, x, inst.alpha, inst.beta, v).diffs(x));
    for (int i = 0; i < 6; ++i) {
      std::pair<VertexSet, VertexSet> merged;
      for (const auto& d : ds) {
        merged.first.insert(d[i].first.begin(), d[i].first.end());
        merged.second.insert(d[i].second.begin(), d[i].second.end());
      }
      s.steps.push_back(apply_diff(x, merged));
    }
    x = s.steps.back();
  }
  finish(inst, x, s, "color-slot schedule");
  return s;
}

}  // namespace misrecon
