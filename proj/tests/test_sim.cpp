#include <doctest.h>

#include <deque>
#include <random>

#include "misrecon/analysis.hpp"
#include "misrecon/errors.hpp"
#include "misrecon/sim.hpp"
#include "support.hpp"

using namespace misrecon;
using testing_support::Dense;
using testing_support::path_graph;

namespace {

Graph gnp(int n, double p, std::uint64_t seed) { return gen_gadget("random", GadgetParams{n, 0, p, seed}).graph; }

Graph complete(int n) {
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    nodes.push_back(i);
    for (int j = 0; j < i; ++j) edges.emplace_back(j, i);
  }
  return Graph(nodes, edges);
}

// A program that never finishes.
struct Idle : NodeProgram {
  void init(const NodeContext&, const Payload&) override {}
  Outbox send(int) override { return {}; }
  void receive(int, const Inbox&) override {}
};

// Sends its id to everyone once, then outputs what it heard.
struct Hello : NodeProgram {
  NodeContext ctx;
  void init(const NodeContext& c, const Payload&) override { ctx = c; }
  Outbox send(int) override {
    Outbox o;
    for (NodeId w : ctx.neighbors) o[w] = {ctx.self};
    return o;
  }
  void receive(int, const Inbox& in) override {
    Payload p;
    for (const auto& [from, msg] : in) p.push_back(msg.at(0) + 0 * from);
    emit(p);
  }
};

}  // namespace

TEST_CASE("run counts rounds and messages") {
  Graph g = path_graph(3);
  std::map<NodeId, Payload> in{{0, {}}, {1, {}}, {2, {}}};
  auto rep = run(g, [](NodeId) { return std::make_unique<Hello>(); }, in, 10, 0);
  CHECK(rep.rounds_used == 1);
  CHECK(rep.messages_sent == 4);
  CHECK_FALSE(rep.timed_out);
  CHECK(rep.outputs.at(1) == Payload{0, 2});

  auto idle = run(g, [](NodeId) { return std::make_unique<Idle>(); }, in, 7, 0);
  CHECK(idle.timed_out);
  CHECK(idle.rounds_used == 7);
  CHECK(idle.outputs.empty());

  CHECK_THROWS_AS(run(g, [](NodeId) { return std::make_unique<Idle>(); }, {{0, {}}}, 5, 0), InputError);
}

TEST_CASE("report text block") {
  SimReport r;
  r.outputs[4] = {1};
  r.add_phase("collect", 2, 5);
  r.add_phase("layering", 1, 4);
  auto t = r.to_text();
  CHECK(t.find("rounds_used: 3\n") != std::string::npos);
  CHECK(t.find("messages_sent: 9\n") != std::string::npos);
  CHECK(t.find("phase.collect.rounds: 2\n") != std::string::npos);
  CHECK(t.find("output.4: 1\n") != std::string::npos);
}

TEST_CASE("counter randomness depends only on its key") {
  CHECK(counter_random(1, 2, 3) == counter_random(1, 2, 3));
  CHECK(counter_random(1, 2, 3) != counter_random(1, 2, 4));
  CHECK(counter_random(1, 2, 3) != counter_random(2, 2, 3));
}

TEST_CASE("dist_mis on small graphs") {
  CHECK(dist_mis(path_graph(3)).set == VertexSet{0, 2});
  CHECK(dist_mis(complete(4)).set.size() == 1);
  Graph g = gnp(20, 0.2, 3);
  Dense dn(g);
  for (auto mode : {MisMode::deterministic_id, MisMode::luby}) {
    auto r = dist_mis(g, Subroutine{mode, 3});
    CHECK(dn.maximal_independent(r.set));
    CHECK_FALSE(r.report.timed_out);
  }
  CHECK(dist_mis(Graph()).set.empty());
}

TEST_CASE("deterministic mode matches greedy by id, luby is reproducible") {
  for (std::uint64_t s = 0; s < 25; ++s) {
    Graph g = gnp(30, 0.15, s);
    CHECK(dist_mis(g).set == greedy_mis_by_id(g));
    auto a = dist_mis(g, Subroutine{MisMode::luby, s});
    auto b = dist_mis(g, Subroutine{MisMode::luby, s});
    CHECK(a.set == b.set);
    CHECK(a.report.rounds_used == b.report.rounds_used);
    CHECK(Dense(g).maximal_independent(a.set));
  }
}

TEST_CASE("round cap surfaces as SimTimeout") {
  // deterministic mode on a path needs about n/2 phases
  Subroutine s;
  s.round_cap = 2;
  CHECK_THROWS_AS(dist_mis(path_graph(40), s), SimTimeout);
}

TEST_CASE("ruling set on an alternating path") {
  Graph g = path_graph(11);
  VertexSet a, b, y;
  for (int i = 0; i < 11; ++i) {
    (i % 2 ? b : a).insert(i);
    y.insert(i);
  }
  auto r = ruling_set_32(g, y, a, b);
  CHECK(r.set == VertexSet{0, 6});
  CHECK(r.report.phases.size() == 1);
  CHECK(r.report.phases[0].name == "ruling_set_32");
  CHECK(r.report.rounds_used % kRulingRoundFactor == 0);
}

TEST_CASE("ruling set property against an independent virtual-graph oracle") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto inst = testing_support::random_connected(100 + s * 7, 30, 0.1, 3);
    VertexSet a = set_minus(inst.alpha, inst.beta), b = set_minus(inst.beta, inst.alpha);
    VertexSet y = set_union(a, b);
    // virtual graph by hand: alpha nodes sharing a beta neighbour
    std::map<NodeId, VertexSet> vadj;
    for (NodeId u : a)
      for (NodeId w : a)
        if (u != w)
          for (NodeId x : b)
            if (inst.graph.adjacent(u, x) && inst.graph.adjacent(w, x)) vadj[u].insert(w);
    auto vdist = [&](NodeId src) {
      std::map<NodeId, int> d{{src, 0}};
      std::deque<NodeId> q{src};
      while (!q.empty()) {
        NodeId u = q.front();
        q.pop_front();
        for (NodeId w : vadj[u])
          if (!d.count(w)) {
            d[w] = d[u] + 1;
            q.push_back(w);
          }
      }
      return d;
    };
    for (auto mode : {MisMode::deterministic_id, MisMode::luby}) {
      auto r = ruling_set_32(inst.graph, y, a, b, Subroutine{mode, s});
      CHECK(is_subset(r.set, a));
      for (NodeId u : r.set) {
        auto d = vdist(u);
        for (NodeId w : r.set)
          if (w != u && d.count(w)) CHECK(d[w] >= 3);
      }
      for (NodeId v : a) {
        auto d = vdist(v);
        bool ruled = false;
        for (NodeId u : r.set)
          if (d.count(u) && d[u] <= 2) ruled = true;
        CHECK(ruled);
      }
    }
  }
}

TEST_CASE("collected balls are the induced radius-r neighbourhoods") {
  Graph g = gnp(25, 0.12, 8);
  Dense dn(g);
  std::map<NodeId, std::int64_t> labels;
  for (NodeId v : g.nodes()) labels[v] = v % 3;
  for (int r : {0, 1, 3}) {
    auto rep = collect_balls(g, labels, r);
    CHECK(rep.rounds_used == r);
    for (NodeId v : g.nodes()) {
      VertexSet expect;
      for (NodeId w : g.nodes())
        if (dn.d(v, w) >= 0 && dn.d(v, w) <= r) expect.insert(w);
      auto view = decode_ball(rep.outputs.at(v));
      CHECK(view.graph == g.induced(expect));
      for (NodeId w : expect) CHECK(view.labels.at(w) == w % 3);
    }
  }
}

TEST_CASE("virtual graph and square") {
  Graph g = path_graph(5);
  Graph v = virtual_alpha_graph(g, {0, 1, 2, 3, 4}, {0, 2, 4}, {1, 3});
  CHECK(v.nodes() == std::vector<NodeId>{0, 2, 4});
  CHECK(v.adjacent(0, 2));
  CHECK_FALSE(v.adjacent(0, 4));
  Graph sq = square(g);
  CHECK(sq.adjacent(0, 2));
  CHECK_FALSE(sq.adjacent(0, 3));
  CHECK(parse_mis_mode("luby") == MisMode::luby);
  CHECK_THROWS_AS(parse_mis_mode("ghaffari"), InputError);
}
