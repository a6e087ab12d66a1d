// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "misrecon/analysis.hpp"
#include "misrecon/const_length.hpp"
#include "misrecon/const_rounds.hpp"

using namespace misrecon;

namespace {

// ── Pinned limits ──
constexpr int kRandomInstances = 200;
constexpr int kMaxRandomN = 60;
constexpr double kCriterion1Seconds = 10.0;
constexpr double kCriterion3Seconds = 300.0;
constexpr std::size_t kBigBudget = 8, kNonIsolatedBudget = 18, kIsolatedBudget = 10;
constexpr int kEnumerationMaxN = 7;
constexpr int kNetRemovalInstances = 100;
constexpr int kOracleMaxN = 12;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const Outcome& o) {
  std::printf("criterion %d: %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

// Seeded random instance with the requested diameter, from two greedy
// id-orders. Walks seeds from `seed` until the graph qualifies.
ReconfigInstance random_instance(std::uint64_t seed, int n, int min_diameter) {
  for (std::uint64_t s = seed;; ++s) {
    auto inst = gen_gadget("random", GadgetParams{n, 0, 2.5 / n, s});
    int d = diameter(inst.graph);
    if (d != kInfinity && d > min_diameter) return inst;
  }
}

ReconfigInstance family(const char* name, int n, int k = 0) { return gen_gadget(name, GadgetParams{n, k, 0.0, 0}); }

// ── Criteria ──

Outcome criterion1() {
  std::vector<ReconfigInstance> insts;
  for (int i = 0; i < kRandomInstances; ++i)
    insts.push_back(random_instance(10'000 + 97 * static_cast<std::uint64_t>(i), 12 + i % (kMaxRandomN - 11), 3));
  int bad = 0;
  auto t0 = Clock::now();
  for (const auto& inst : insts) {
    auto r = schedule_theorem2(inst);
    if (!r.schedule || r.schedule->length() != kTheorem2Length || !validate(inst, *r.schedule).valid) ++bad;
  }
  double secs = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/%d random instances give a valid 28-step schedule, %.2f s (limit %.0f s)",
                kRandomInstances - bad, kRandomInstances, secs, kCriterion1Seconds);
  return {bad == 0 && secs < kCriterion1Seconds, buf};
}

// m copies of an alpha-beta edge plus an epsilon node seeing both, epsilons
// chained; every component is isolated.
ReconfigInstance isolated_chain(int m, bool fork) {
  ReconfigInstance inst;
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    NodeId a = 4 * i, b = 4 * i + 1, e = 4 * i + 2, b2 = 4 * i + 3;
    nodes.insert(nodes.end(), {a, b, e});
    edges.insert(edges.end(), {{a, b}, {a, e}, {b, e}});
    inst.alpha.insert(a);
    inst.beta.insert(b);
    if (fork) {
      nodes.push_back(b2);
      edges.insert(edges.end(), {{a, b2}, {e, b2}});
      inst.beta.insert(b2);
    }
    if (i > 0) edges.emplace_back(e - 4, e);
  }
  inst.graph = Graph(nodes, edges);
  return inst;
}

Outcome criterion2() {
  int n3 = 0, n4 = 0, n5 = 0, bad = 0;
  // big components: whole graph is one component of alpha ∪ beta
  std::vector<ReconfigInstance> big;
  for (int n = 4; n <= 40; ++n) big.push_back(family("alt-path", n));
  for (int n = 6; n <= 40; n += 2) big.push_back(family("alt-cycle", n));
  for (const auto& inst : big) {
    VertexSet comp = set_union(inst.alpha, inst.beta);
    auto f = schedule_big_component(inst.graph, comp, inst.alpha, inst.beta);
    bad += f.steps.length() > kBigBudget || !validate(inst, f.steps).valid;
    ++n3;
  }
  // non-isolated part: random reduced instances with no isolated component
  for (std::uint64_t s = 0; n4 < 50; ++s) {
    auto inst = random_instance(50'000 + s * 13, 36, 3);
    auto red = reduce_alpha_beta(inst).reduced_instance;
    if (red.graph.empty()) continue;
    auto cl = classify(red.graph, red.alpha, red.beta);
    bool iso = false;
    for (auto k : cl.cls) iso |= k == CompClass::isolated;
    if (iso) continue;
    auto sch = schedule_non_isolated(red.graph, red.alpha, red.beta);
    bad += sch.length() > kNonIsolatedBudget || !validate(red, sch).valid;
    ++n4;
  }
  // isolated part
  for (int m = 2; m <= 8; ++m)
    for (bool fork : {false, true}) {
      auto inst = isolated_chain(m, fork);
      auto sch = schedule_isolated(inst.graph, inst.alpha, inst.beta);
      bad += sch.length() > kIsolatedBudget || !validate(inst, sch).valid;
      ++n5;
    }
  return {bad == 0, std::to_string(n3) + " big-component, " + std::to_string(n4) + " non-isolated, " +
                        std::to_string(n5) + " isolated fragments; " + std::to_string(bad) +
                        " over budget or invalid (budgets 8/18/10)"};
}

Outcome criterion3() {
  auto t0 = Clock::now();
  long graphs = 0, pairs = 0, blocked = 0, mismatches = 0, inconclusive = 0;
  for (int n = 1; n <= kEnumerationMaxN; ++n)
    for (const auto& g : enumerate_connected_graphs(n)) {
      ++graphs;
      auto ms = all_mis(g);
      for (const auto& a : ms)
        for (const auto& b : ms) {
          ReconfigInstance inst{g, a, b};
          bool bl = check_blocker(inst).blocked;
          auto o = brute_force_oracle(inst, PropertySpec{4});
          inconclusive += o.inconclusive;
          mismatches += bl != !o.exists;
          blocked += bl;
          ++pairs;
        }
    }
  double secs = seconds_since(t0);
  char buf[200];
  std::snprintf(buf, sizeof buf, "%ld graphs, %ld ordered MIS pairs, %ld blocked, %ld mismatches, %.1f s", graphs,
                pairs, blocked, mismatches, secs);
  return {mismatches == 0 && inconclusive == 0 && secs < kCriterion3Seconds, buf};
}

Outcome criterion4() {
  auto inst = gen_gadget("threedom-blocker", {});
  auto d3 = brute_force_oracle(inst, PropertySpec{3});
  auto d4 = brute_force_oracle(inst, PropertySpec{4});
  bool ok = !d3.exists && !d3.inconclusive && d4.exists;
  return {ok, std::string("d=3 exists=") + (d3.exists ? "true" : "false") +
                  ", d=4 exists=" + (d4.exists ? "true" : "false") +
                  (d4.min_length ? " (min length " + std::to_string(*d4.min_length) + ")" : "")};
}

Outcome criterion5() {
  // the n/4 floor is a desk-scale proxy for the linear lower bound
  std::string detail = "d=3 min lengths";
  bool ok = true;
  std::size_t prev = 0;
  for (int n : {8, 12, 16}) {
    auto r = brute_force_oracle(gen_gadget("threedom-linear", GadgetParams{n, 0, 0.0, 0}), PropertySpec{3});
    if (!r.min_length) {
      detail += " n=" + std::to_string(n) + ":none";
      ok = false;
      continue;
    }
    std::size_t m = *r.min_length;
    detail += " n=" + std::to_string(n) + ":" + std::to_string(m);
    ok = ok && m > prev && 4 * m >= static_cast<std::size_t>(n);
    prev = m;
  }
  return {ok, detail + " (strictly increasing, >= n/4)"};
}

Outcome criterion6() {
  std::string detail = "rounds_used";
  bool ok = true;
  int rounds = -1;
  for (int n : {20, 40, 80}) {
    auto inst = family("alt-path", n);
    auto r = schedule_theorem3(inst);
    std::size_t limit = 6 * static_cast<std::size_t>(inst.graph.max_id() + 1) + 6;
    ok = ok && validate(inst, r.schedule).valid && r.schedule.length() <= limit;
    if (rounds < 0) rounds = r.report.rounds_used;
    ok = ok && r.report.rounds_used == rounds;
    detail += " n=" + std::to_string(n) + ":" + std::to_string(r.report.rounds_used) + " (len " +
              std::to_string(r.schedule.length()) + " <= " + std::to_string(limit) + ")";
  }
  return {ok, detail};
}

Outcome criterion7() {
  auto inst = family("alt-cycle", 60);
  auto col = greedy_power_coloring(inst.graph);
  std::set<int> colors;
  for (auto [v, c] : col) colors.insert(c);
  auto s = schedule_corollary8(inst, col);
  std::size_t c = colors.size();
  bool ok = s.length() <= 6 * c + 6 && validate(inst, s).valid;
  return {ok, std::to_string(c) + " colors, length " + std::to_string(s.length()) + " <= " + std::to_string(6 * c + 6)};
}

Outcome criterion8() {
  long fragments = 0, bad = 0;
  for (int i = 0; i < kNetRemovalInstances; ++i) {
    auto inst = random_instance(70'000 + 101 * static_cast<std::uint64_t>(i), 24 + i % 30, 5);
    VertexSet common = set_intersection(inst.alpha, inst.beta);
    VertexSet done;
    for (NodeId v : set_minus(inst.beta, inst.alpha)) {
      VertexSet x = insertion_state(inst.graph, inst.alpha, inst.beta, done);
      done.insert(v);
      if (x.count(v)) continue;
      auto plan = plan_insertion(inst.graph, x, inst.alpha, inst.beta, v);
      const VertexSet& gamma = plan.resulting_mis;
      bool ok = is_subset(set_minus(x, gamma), neighbors_in(inst.graph, v, inst.alpha)) &&
                is_subset(common, gamma) && gamma.count(v);
      bad += !ok;
      ++fragments;
    }
  }
  return {bad == 0, std::to_string(fragments) + " insertion fragments over " + std::to_string(kNetRemovalInstances) +
                        " instances, " + std::to_string(bad) + " violations"};
}

Outcome criterion9() {
  long checked = 0, bad = 0;
  auto confirm = [&](const ReconfigInstance& inst, const Schedule& s) {
    if (!validate(inst, s).valid) {
      ++bad;
      return;
    }
    auto o = brute_force_oracle(inst);
    if (!o.exists || !o.min_length || *o.min_length > s.length()) ++bad;
    ++checked;
  };
  std::vector<ReconfigInstance> pool;
  for (int n = 4; n <= kOracleMaxN; ++n) {
    pool.push_back(family("alt-path", n));
    if (n % 2 == 0) pool.push_back(family("alt-cycle", n));
    for (std::uint64_t s = 0; s < 8; ++s) {
      auto inst = gen_gadget("random", GadgetParams{n, 0, 0.3, 900 + 31 * s + n});
      if (is_connected(inst.graph)) pool.push_back(inst);
    }
  }
  pool.push_back(gen_gadget("threedom-blocker", {}));
  pool.push_back(gen_gadget("threedom-linear", GadgetParams{12, 0, 0.0, 0}));
  for (const auto& inst : pool) {
    auto t2 = schedule_theorem2(inst);
    if (t2.schedule) confirm(inst, *t2.schedule);
    if (diameter(inst.graph) > 5) {
      confirm(inst, schedule_theorem3(inst).schedule);
      confirm(inst, schedule_corollary8(inst, greedy_power_coloring(inst.graph)));
    }
    if (auto fb = diameter(inst.graph) <= 3 ? small_diameter_fallback(inst) : std::nullopt) confirm(inst, *fb);
  }
  return {bad == 0 && checked > 0,
          std::to_string(checked) + " emitted schedules on " + std::to_string(pool.size()) + " instances, " +
              std::to_string(bad) + " not confirmed"};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    report(static_cast<int>(i + 1), o);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
