#include "misrecon/const_length.hpp"

#include <algorithm>

#include "misrecon/analysis.hpp"
#include "misrecon/errors.hpp"

namespace misrecon {

namespace {

// leader-to-leader hop length of one virtual edge
constexpr int kComponentRoundFactor = 6;  // comp (2) + eps (2) + comp (2)
constexpr int kIsolatedRoundFactor = 7;   // leader -> eps (3) -> eps (1) -> leader (3)
constexpr int kInsertionRoundFactor = 1;  // the u_i are plain graph nodes

VertexSet unite(const std::vector<ComponentInfo>& comps, const std::vector<int>& idx) {
  VertexSet out;
  for (int i : idx) out.insert(comps[i].vertices.begin(), comps[i].vertices.end());
  return out;
}

int eccentricity_in(const Graph& g, NodeId v, const VertexSet& s) {
  auto d = distances_from(g, v, s);
  if (d.size() != s.size()) return kInfinity;
  int e = 0;
  for (const auto& [w, x] : d) e = std::max(e, x);
  return e;
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (NodeId v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

}  // namespace

// ── Reduction ──

ReductionResult reduce_alpha_beta(const ReconfigInstance& inst) {
  ReductionResult r;
  r.stripped_always_in = set_intersection(inst.alpha, inst.beta);
  r.stripped_never_in = set_minus(neighborhood(inst.graph, r.stripped_always_in), r.stripped_always_in);
  for (NodeId v : inst.graph.nodes())
    if (!r.stripped_always_in.count(v) && !r.stripped_never_in.count(v)) r.kept_nodes.insert(v);
  r.reduced_instance.graph = inst.graph.induced(r.kept_nodes);
  r.reduced_instance.alpha = set_intersection(inst.alpha, r.kept_nodes);
  r.reduced_instance.beta = set_intersection(inst.beta, r.kept_nodes);
  return r;
}

Schedule lift_schedule(const Schedule& reduced, const ReductionResult& red) {
  Schedule out;
  for (const auto& s : reduced.steps) out.steps.push_back(set_union(s, red.stripped_always_in));
  return out;
}

// ── MIS source ──

VertexSet MisEngine::mis(const Graph& g, const std::string& phase, int round_factor) {
  if (!simulated_ && sub_.mode == MisMode::deterministic_id) return greedy_mis_by_id(g);
  auto r = dist_mis(g, sub_);
  if (simulated_)
    report_.add_phase(phase, round_factor * r.report.rounds_used,
                      static_cast<std::uint64_t>(round_factor) * r.report.messages_sent);
  return r.set;
}

// ── Layers ──

const VertexSet& LayeredPartition::at(int i) const {
  static const VertexSet empty;
  auto it = layers.find(i);
  return it == layers.end() ? empty : it->second;
}

std::string layer_violation(const Graph& g, const VertexSet& comp, const VertexSet& alpha,
                            const LayeredPartition& lp) {
  std::map<NodeId, int> where;
  for (const auto& [i, s] : lp.layers) {
    if (i < -2 || i > 5) return "layer index " + std::to_string(i) + " out of range";
    for (NodeId v : s) {
      if (!comp.count(v)) return "node " + std::to_string(v) + " outside the component";
      if (where.count(v)) return "node " + std::to_string(v) + " in two layers";
      where[v] = i;
      bool even = (i % 2 == 0);
      if (even != (alpha.count(v) != 0))
        return "node " + std::to_string(v) + " has the wrong side for layer " + std::to_string(i);
    }
  }
  if (where.size() != comp.size()) return "layers do not cover the component";
  for (NodeId v : comp)
    for (NodeId w : neighbors_in(g, v, comp)) {
      int i = where[v], j = where[w];
      if (std::abs(i - j) == 1) continue;
      if (std::min(i, j) == -1 && std::max(i, j) == 2) continue;
      return "R_" + std::to_string(i) + " adjacent to R_" + std::to_string(j) + " via edge " +
             std::to_string(v) + "-" + std::to_string(w);
    }
  return {};
}

LayeredPartition layer_component(const Graph& g, const VertexSet& comp, const VertexSet& alpha,
                                 const VertexSet& beta, const VertexSet& r) {
  (void)beta;
  auto allowed = membership(g, comp);
  auto dist_to = [&](const VertexSet& src) {
    std::vector<int> s;
    for (NodeId v : src) s.push_back(g.index_of(v));
    return bfs_indices(g, s, &allowed);
  };
  auto d_r = dist_to(r);
  std::map<int, VertexSet> by_dist;
  for (NodeId v : comp) {
    int d = d_r[g.index_of(v)];
    if (d < 0 || d > 5)
      throw InternalError("ruling set leaves node " + std::to_string(v) + " farther than 5 in its component");
    by_dist[d].insert(v);
  }
  auto d_r3 = dist_to(by_dist[3]);

  VertexSet r1, rm1, r2, rm2;
  for (NodeId v : by_dist[1]) {
    bool far_side = d_r3[g.index_of(v)] == 2;
    bool enclosed = is_subset(neighbors_in(g, v, comp), r);
    (far_side || enclosed ? r1 : rm1).insert(v);
  }
  for (NodeId v : r1) {
    auto n = neighbors_in(g, v, comp);
    r2.insert(n.begin(), n.end());
  }
  r2 = set_minus(r2, r);
  for (NodeId v : rm1) {
    auto n = neighbors_in(g, v, comp);
    rm2.insert(n.begin(), n.end());
  }
  rm2 = set_minus(set_minus(rm2, r), r2);

  LayeredPartition lp;
  lp.layers = {{-2, rm2}, {-1, rm1}, {0, set_intersection(r, comp)}, {1, r1},
               {2, r2},   {3, by_dist[3]}, {4, by_dist[4]}, {5, by_dist[5]}};
  if (auto err = layer_violation(g, comp, alpha, lp); !err.empty())
    throw InternalError("layering invariant broken: " + err);
  return lp;
}

// ── Big components ──

BigFragment schedule_big_component(const Graph& g, const VertexSet& comp, const VertexSet& alpha,
                                   const VertexSet& beta, const std::optional<VertexSet>& r) {
  if (comp.empty()) throw InputError("empty component");
  for (NodeId v : comp) {
    if (!g.has_node(v)) throw InputError("component names unknown node " + std::to_string(v));
    bool a = alpha.count(v) != 0, b = beta.count(v) != 0;
    if (a == b) throw InputError("component node " + std::to_string(v) + " must be in exactly one of alpha, beta");
  }
  const int dm = induced_diameter(g, comp);
  if (dm == kInfinity) throw InputError("component is not connected");
  if (dm < 3) throw InputError("component diameter " + std::to_string(dm) + " is below 3");

  const VertexSet A = set_intersection(comp, alpha), B = set_intersection(comp, beta);
  BigFragment f;
  if (dm <= 4) {
    // The 4-step move sits in the middle of the 8-step budget.
    f.kind = BigCase::diameter_3_4;
    for (NodeId a : A)
      if (eccentricity_in(g, a, comp) >= 3) {
        f.pivot = a;
        break;
      }
    if (f.pivot < 0) throw InternalError("no alpha node with eccentricity >= 3");
    VertexSet nv = neighbors_in(g, f.pivot, B);
    VertexSet rest = set_minus(B, nv);
    VertexSet v{f.pivot};
    f.steps.steps = {A, A, A, v, set_union(v, rest), rest, B, B, B};
    return f;
  }

  f.kind = BigCase::diameter_5_plus;
  f.ruling = r ? set_intersection(*r, comp) : greedy_mis_by_id(square(virtual_alpha_graph(g, comp, alpha, beta)));
  auto lp = layer_component(g, comp, alpha, beta, f.ruling);
  auto& s = f.steps.steps;
  s = {A};
  for (int i = 0; i < 4; ++i) {
    s.push_back(set_minus(s.back(), lp.at(4 - 2 * i)));
    s.push_back(set_union(s.back(), lp.at(5 - 2 * i)));
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    VertexSet gone = set_minus(s[i - 1], s[i]), came = set_minus(s[i], s[i - 1]);
    bool removal = (i % 2 == 1);
    if (removal && (!came.empty() || !is_subset(gone, alpha)))
      throw InternalError("cascade step " + std::to_string(i) + " does more than remove alpha nodes");
    if (!removal && (!gone.empty() || !is_subset(came, beta)))
      throw InternalError("cascade step " + std::to_string(i) + " does more than add beta nodes");
  }
  if (s.back() != B) throw InternalError("cascade does not end at the beta side of the component");
  return f;
}

// ── Classification ──

const char* comp_class_name(CompClass c) {
  switch (c) {
    case CompClass::big: return "big";
    case CompClass::c_alpha: return "C_alpha";
    case CompClass::c_beta: return "C_beta";
    case CompClass::c_alpha_beta: return "C_alpha_beta";
    case CompClass::isolated: return "isolated";
  }
  return "?";
}

Classification classify(const Graph& g, const VertexSet& alpha, const VertexSet& beta) {
  if (!set_intersection(alpha, beta).empty()) throw InputError("classification needs disjoint alpha and beta");
  Classification c;
  c.labels = label_components(g, set_union(alpha, beta), alpha, beta);
  for (const auto& ci : c.labels.comps) {
    CompClass k;
    if (!ci.small()) k = CompClass::big;
    else if (ci.alpha_covered && ci.beta_covered) k = CompClass::c_alpha_beta;
    else if (ci.alpha_covered) k = CompClass::c_alpha;
    else if (ci.beta_covered) k = CompClass::c_beta;
    else {
      if (!ci.isolated) throw InternalError("uncovered small component at " + std::to_string(ci.representative()) +
                                            " is not isolated");
      k = CompClass::isolated;
    }
    c.cls.push_back(k);
    if (k == CompClass::isolated) {
      c.augmented.push_back(set_union(ci.vertices, ci.eps_neighbors));
      c.augmented_diameter.push_back(induced_diameter(g, c.augmented.back()));
    } else {
      c.augmented.emplace_back();
      c.augmented_diameter.push_back(0);
    }
  }
  return c;
}

// ── Pipeline ──

namespace {

struct Parts {
  std::vector<VertexSet> non_isolated;  // 19 sets
  std::vector<VertexSet> isolated;      // 11 sets
  VertexSet y_wide;                     // union of diameter >= 5 components
  VertexSet ruling;
};

std::vector<int> of_class(const Classification& c, CompClass k) {
  std::vector<int> out;
  for (std::size_t i = 0; i < c.cls.size(); ++i)
    if (c.cls[i] == k) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<VertexSet> part_non_isolated(const Graph& g, const Classification& cl, const VertexSet& a,
                                         const VertexSet& b, MisEngine& eng, VertexSet& y_wide,
                                         VertexSet& ruling) {
  const auto& comps = cl.labels.comps;
  auto ca = of_class(cl, CompClass::c_alpha), cb = of_class(cl, CompClass::c_beta),
       cab = of_class(cl, CompClass::c_alpha_beta), big = of_class(cl, CompClass::big);

  // component graph restricted to C_alpha_beta, components named by min node
  std::set<int> in_cab(cab.begin(), cab.end());
  std::vector<NodeId> reps;
  std::map<NodeId, int> by_rep;
  for (int i : cab) {
    reps.push_back(comps[i].representative());
    by_rep[comps[i].representative()] = i;
  }
  std::vector<Edge> ges;
  for (auto [i, j] : cl.labels.covering)
    if (in_cab.count(i) && in_cab.count(j)) ges.emplace_back(comps[i].representative(), comps[j].representative());
  VertexSet m_reps = eng.mis(Graph(reps, ges), "component_mis", kComponentRoundFactor);
  std::set<int> m;
  for (NodeId r : m_reps) m.insert(by_rep.at(r));
  std::set<int> z2;
  for (auto [i, j] : cl.labels.covering)
    if (m.count(i) && in_cab.count(j) && !m.count(j)) z2.insert(j);
  std::vector<int> mv(m.begin(), m.end()), z2v(z2.begin(), z2.end()), rest;
  for (int i : cab)
    if (!m.count(i) && !z2.count(i)) rest.push_back(i);

  VertexSet noniso;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (cl.cls[i] != CompClass::isolated) noniso.insert(comps[i].vertices.begin(), comps[i].vertices.end());

  std::vector<VertexSet> s{set_intersection(noniso, a)};
  append_update(s, unite(comps, ca), a, b);
  append_update(s, unite(comps, z2v), a, b);

  // all big components move together; the >= 5 ones share one ruling-set run
  std::vector<int> wide;
  for (int i : big)
    if (comps[i].diameter >= 5) wide.push_back(i);
  y_wide = unite(comps, wide);
  ruling = eng.mis(square(virtual_alpha_graph(g, y_wide, a, b)), "ruling_set_32", kRulingRoundFactor);
  std::vector<BigFragment> frags;
  for (int i : big) {
    std::optional<VertexSet> r;
    if (comps[i].diameter >= 5) r = set_intersection(ruling, comps[i].vertices);
    frags.push_back(schedule_big_component(g, comps[i].vertices, a, b, r));
  }
  VertexSet base = set_minus(s.back(), unite(comps, big));
  for (int t = 1; t <= 8; ++t) {
    VertexSet x = base;
    for (const auto& f : frags) x.insert(f.steps.steps[t].begin(), f.steps.steps[t].end());
    s.push_back(std::move(x));
  }
  append_update(s, unite(comps, mv), a, b);
  append_update(s, unite(comps, rest), a, b);
  append_update(s, unite(comps, cb), a, b);
  if (s.size() != 19) throw InternalError("non-isolated part has wrong length");
  return s;
}

std::vector<VertexSet> part_isolated(const Graph& g, const Classification& cl, const VertexSet& a,
                                     const VertexSet& b, MisEngine& eng) {
  const auto& comps = cl.labels.comps;
  auto iso = of_class(cl, CompClass::isolated);
  std::vector<int> p1, p2;
  for (int i : iso) (cl.augmented_diameter[i] <= 2 ? p1 : p2).push_back(i);

  std::vector<VertexSet> s{set_intersection(unite(comps, iso), a)};

  // part 1: components are adjacent when two of their eps nodes are
  std::vector<NodeId> reps;
  std::map<NodeId, int> by_rep;
  for (int i : p1) {
    reps.push_back(comps[i].representative());
    by_rep[comps[i].representative()] = i;
  }
  std::vector<Edge> pes;
  for (std::size_t x = 0; x < p1.size(); ++x)
    for (std::size_t y = x + 1; y < p1.size(); ++y) {
      const auto& ei = comps[p1[x]].eps_neighbors;
      const auto& ej = comps[p1[y]].eps_neighbors;
      bool touch = std::any_of(ei.begin(), ei.end(), [&](NodeId e) { return !neighbors_in(g, e, ej).empty(); });
      if (touch) pes.emplace_back(comps[p1[x]].representative(), comps[p1[y]].representative());
    }
  VertexSet m1_reps = eng.mis(Graph(reps, pes), "isolated_mis", kIsolatedRoundFactor);
  std::vector<int> m1, others;
  for (int i : p1) (m1_reps.count(comps[i].representative()) ? m1 : others).push_back(i);
  append_update(s, unite(comps, m1), a, b);
  append_update(s, unite(comps, others), a, b);

  // part 2: one (u, a, b) triple per component, smallest ids first
  struct Triple {
    NodeId u, a, b;
  };
  std::map<int, Triple> trip;
  std::vector<NodeId> us;
  for (int i : p2) {
    VertexSet ai = set_intersection(comps[i].vertices, a), bi = set_intersection(comps[i].vertices, b);
    std::optional<Triple> t;
    for (NodeId u : comps[i].eps_neighbors) {
      auto na = set_minus(ai, neighbors_in(g, u, ai));
      auto nb = set_minus(bi, neighbors_in(g, u, bi));
      if (!na.empty() && !nb.empty()) {
        t = Triple{u, *na.begin(), *nb.begin()};
        break;
      }
    }
    if (!t)
      throw InternalError("no (u, a, b) triple for isolated component " + set_text(comps[i].vertices));
    trip[i] = *t;
    us.push_back(t->u);
  }
  VertexSet mp = eng.mis(g.induced(VertexSet(us.begin(), us.end())), "insertion_mis", kInsertionRoundFactor);
  VertexSet p2y = unite(comps, p2);
  VertexSet na_mp;
  for (NodeId u : mp) {
    auto n = neighbors_in(g, u, a);
    na_mp.insert(n.begin(), n.end());
  }
  VertexSet s1 = set_minus(s.back(), na_mp);
  VertexSet s2 = set_union(s1, mp);
  VertexSet s3 = set_minus(s2, set_intersection(a, p2y));
  VertexSet add;
  for (int i : p2) {
    if (mp.count(trip[i].u)) add.insert(trip[i].b);
    else {
      auto bi = set_intersection(comps[i].vertices, b);
      add.insert(bi.begin(), bi.end());
    }
  }
  VertexSet s4 = set_union(s3, add);
  VertexSet s5 = set_minus(s4, mp);
  VertexSet s6 = set_union(s5, set_intersection(b, p2y));
  for (auto* x : {&s1, &s2, &s3, &s4, &s5, &s6}) s.push_back(*x);
  if (s.size() != 11) throw InternalError("isolated part has wrong length");
  return s;
}

void assert_valid_if_whole(const Graph& g, const VertexSet& alpha, const VertexSet& beta, const Schedule& s) {
  if (s.steps.front() != alpha || s.steps.back() != beta) return;
  if (!is_mis(g, alpha) || !is_mis(g, beta)) return;
  auto rep = validate({g, alpha, beta}, s);
  if (!rep.valid) throw InternalError("constructed fragment invalid: " + rep.describe());
}

struct Assembly {
  ReductionResult red;
  Classification cl;
  Parts parts;
  Schedule schedule;
};

Assembly assemble(const ReconfigInstance& inst, MisEngine& eng) {
  Assembly as;
  as.red = reduce_alpha_beta(inst);
  const auto& ri = as.red.reduced_instance;
  as.cl = classify(ri.graph, ri.alpha, ri.beta);
  as.parts.non_isolated = part_non_isolated(ri.graph, as.cl, ri.alpha, ri.beta, eng, as.parts.y_wide, as.parts.ruling);
  as.parts.isolated = part_isolated(ri.graph, as.cl, ri.alpha, ri.beta, eng);
  const auto& sp = as.parts.non_isolated;
  const auto& spp = as.parts.isolated;
  const auto& vab = as.red.stripped_always_in;
  auto& steps = as.schedule.steps;
  for (int i = 0; i <= 18; ++i) steps.push_back(set_union(set_union(spp[0], sp[i]), vab));
  for (int i = 1; i <= 10; ++i) steps.push_back(set_union(set_union(spp[i], sp[18]), vab));
  auto rep = validate(inst, as.schedule);
  if (!rep.valid) throw InternalError("constructed 28-step schedule invalid: " + rep.describe());
  return as;
}

void check_connected(const ReconfigInstance& inst) {
  check_instance(inst);
  if (!is_connected(inst.graph)) throw InputError("the construction needs a connected graph");
}

}  // namespace

Schedule schedule_non_isolated(const Graph& g, const VertexSet& alpha, const VertexSet& beta, const Subroutine& sub) {
  MisEngine eng(sub, false);
  auto cl = classify(g, alpha, beta);
  VertexSet y_wide, ruling;
  Schedule s{part_non_isolated(g, cl, alpha, beta, eng, y_wide, ruling)};
  assert_valid_if_whole(g, alpha, beta, s);
  return s;
}

Schedule schedule_isolated(const Graph& g, const VertexSet& alpha, const VertexSet& beta, const Subroutine& sub) {
  MisEngine eng(sub, false);
  auto cl = classify(g, alpha, beta);
  Schedule s{part_isolated(g, cl, alpha, beta, eng)};
  assert_valid_if_whole(g, alpha, beta, s);
  return s;
}

Theorem2Result schedule_theorem2(const ReconfigInstance& inst, const Subroutine& sub) {
  check_connected(inst);
  Theorem2Result res;
  if (diameter(inst.graph) <= 3) {
    res.fallback = true;
    res.schedule = small_diameter_fallback(inst);
    return res;
  }
  MisEngine eng(sub, false);
  res.schedule = assemble(inst, eng).schedule;
  return res;
}

// ── Distributed variant ──

namespace {

// Round 1 tells neighbours "I am in alpha ∩ beta"; round 2 tells them
// whether the sender survived the reduction.
class ReductionProgram : public NodeProgram {
 public:
  void init(const NodeContext& ctx, const Payload& input) override {
    both_ = input.at(0) && input.at(1);
    nbrs_ = ctx.neighbors;
  }
  Outbox send(int round) override {
    Outbox out;
    std::int64_t bit = round == 1 ? both_ : kept_;
    for (NodeId w : nbrs_) out[w] = {bit};
    return out;
  }
  void receive(int round, const Inbox& inbox) override {
    if (round == 1) {
      bool near = std::any_of(inbox.begin(), inbox.end(), [](const auto& m) { return m.second.at(0) == 1; });
      kept_ = !both_ && !near;
      return;
    }
    emit({both_ ? 1 : 0, kept_ ? 1 : 0});
  }

 private:
  bool both_ = false, kept_ = false;
  std::vector<NodeId> nbrs_;
};

// Hop distance to the source set, learned by flooding for `depth` rounds.
class DistanceProgram : public NodeProgram {
 public:
  explicit DistanceProgram(int depth) : depth_(depth) {}
  void init(const NodeContext& ctx, const Payload& input) override {
    nbrs_ = ctx.neighbors;
    dist_ = input.at(0) ? 0 : -1;
    if (depth_ == 0) emit({dist_});
  }
  Outbox send(int round) override {
    Outbox out;
    if (dist_ == round - 1)
      for (NodeId w : nbrs_) out[w] = {dist_};
    return out;
  }
  void receive(int round, const Inbox& inbox) override {
    if (dist_ < 0 && !inbox.empty()) dist_ = round;
    if (round >= depth_) emit({dist_});
  }

 private:
  int depth_;
  int dist_ = -1;
  std::vector<NodeId> nbrs_;
};

std::map<NodeId, int> simulate_distances(const Graph& g, const VertexSet& sources, int depth, SimReport& acc,
                                         const Subroutine& sub) {
  std::map<NodeId, Payload> in;
  for (NodeId v : g.nodes()) in[v] = {sources.count(v) ? 1 : 0};
  auto rep = run(g, [&](NodeId) { return std::make_unique<DistanceProgram>(depth); }, in, sub.round_cap, sub.seed);
  if (rep.timed_out) throw SimTimeout("layering exceeded the round cap");
  acc.rounds_used += rep.rounds_used;
  acc.messages_sent += rep.messages_sent;
  std::map<NodeId, int> out;
  for (const auto& [v, p] : rep.outputs) out[v] = static_cast<int>(p.at(0));
  return out;
}

// Class of the component holding v, as v sees it from its collected ball.
// Components near the rim of the ball may look wrong; v's own never does.
std::pair<CompClass, int> local_class(const BallView& view, NodeId v) {
  VertexSet a, b;
  for (const auto& [id, lab] : view.labels) {
    if (lab == 1) a.insert(id);
    if (lab == 2) b.insert(id);
  }
  auto labels = label_components(view.graph, set_union(a, b), a, b);
  for (const auto& ci : labels.comps) {
    if (!ci.vertices.count(v)) continue;
    if (!ci.small()) return {CompClass::big, 0};
    if (ci.alpha_covered && ci.beta_covered) return {CompClass::c_alpha_beta, 0};
    if (ci.alpha_covered) return {CompClass::c_alpha, 0};
    if (ci.beta_covered) return {CompClass::c_beta, 0};
    int aug = induced_diameter(view.graph, set_union(ci.vertices, ci.eps_neighbors));
    return {CompClass::isolated, aug <= 2 ? 1 : 2};
  }
  throw InternalError("node " + std::to_string(v) + " missing from its own ball");
}

}  // namespace

Theorem2Result schedule_theorem2_distributed(const ReconfigInstance& inst, const Subroutine& sub) {
  check_connected(inst);
  const Graph& g = inst.graph;
  Theorem2Result res;
  int dm = diameter(g);
  if (dm <= 3) {
    // small diameter: every node learns the whole graph, then decides alone
    auto rep = collect_balls(g, {}, dm, sub.round_cap);
    res.report.add_phase("collect_all", rep.rounds_used, rep.messages_sent);
    res.fallback = true;
    res.schedule = small_diameter_fallback(inst);
    return res;
  }

  MisEngine eng(sub, true);
  SimReport& rp = eng.report();
  auto red = reduce_alpha_beta(inst);

  std::map<NodeId, Payload> in;
  for (NodeId v : g.nodes()) in[v] = {inst.alpha.count(v) ? 1 : 0, inst.beta.count(v) ? 1 : 0};
  auto r2 = run(g, [](NodeId) { return std::make_unique<ReductionProgram>(); }, in, sub.round_cap, sub.seed);
  if (r2.timed_out) throw SimTimeout("reduction exceeded the round cap");
  rp.add_phase("reduction", r2.rounds_used, r2.messages_sent);
  for (const auto& [v, out] : r2.outputs)
    if ((out[0] == 1) != (red.stripped_always_in.count(v) != 0) || (out[1] == 1) != (red.kept_nodes.count(v) != 0))
      throw InternalError("simulated reduction disagrees at node " + std::to_string(v));

  const auto& ri = red.reduced_instance;
  if (ri.graph.empty()) {
    // alpha = beta: nothing left to reconfigure
    res.schedule = Schedule{std::vector<VertexSet>(kTheorem2Length + 1, inst.alpha)};
    res.report = rp;
    return res;
  }

  std::map<NodeId, std::int64_t> labels;
  for (NodeId v : ri.graph.nodes()) labels[v] = ri.alpha.count(v) ? 1 : ri.beta.count(v) ? 2 : 0;
  auto balls = collect_balls(ri.graph, labels, kCollectRadius, sub.round_cap);
  rp.add_phase("collect", balls.rounds_used, balls.messages_sent);

  auto as = assemble(inst, eng);

  // every alpha/beta node re-derives its component class from its own ball
  for (std::size_t i = 0; i < as.cl.cls.size(); ++i)
    for (NodeId v : as.cl.labels.comps[i].vertices) {
      auto [k, aug] = local_class(decode_ball(balls.outputs.at(v)), v);
      int want_aug = as.cl.cls[i] != CompClass::isolated ? 0 : as.cl.augmented_diameter[i] <= 2 ? 1 : 2;
      if (k != as.cl.cls[i] || aug != want_aug)
        throw InternalError("local classification at node " + std::to_string(v) + " disagrees: " +
                            comp_class_name(k) + " vs " + comp_class_name(as.cl.cls[i]));
    }

  // layering of the wide components by two bounded floods
  SimReport lay;
  Graph gy = ri.graph.induced(as.parts.y_wide);
  auto d_r = simulate_distances(gy, as.parts.ruling, 5, lay, sub);
  VertexSet third;
  for (const auto& [v, d] : d_r)
    if (d == 3) third.insert(v);
  auto d_r3 = simulate_distances(gy, third, 2, lay, sub);
  for (const auto& ci : as.cl.labels.comps) {
    if (ci.diameter < 5) continue;
    auto lp = layer_component(ri.graph, ci.vertices, ri.alpha, ri.beta, set_intersection(as.parts.ruling, ci.vertices));
    for (int i = 3; i <= 5; ++i)
      for (NodeId v : lp.at(i))
        if (d_r.at(v) != i) throw InternalError("simulated layering disagrees at node " + std::to_string(v));
    for (NodeId v : lp.at(1))
      if (d_r3.at(v) != 2 && !is_subset(neighbors_in(ri.graph, v, ci.vertices), as.parts.ruling))
        throw InternalError("simulated layering disagrees at node " + std::to_string(v));
  }
  rp.add_phase("layering", lay.rounds_used, lay.messages_sent);

  res.schedule = as.schedule;
  res.report = rp;
  return res;
}

}  // namespace misrecon
