#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "misrecon/graph.hpp"

namespace misrecon {

// LOCAL model messages are unbounded; a flat integer vector is enough to
// carry any structured value the programs here need.
using Payload = std::vector<std::int64_t>;
using Inbox = std::map<NodeId, Payload>;
using Outbox = std::map<NodeId, Payload>;

// Counter-based randomness: the value depends only on (seed, node, round),
// never on the order in which nodes are stepped.
std::uint64_t counter_random(std::uint64_t seed, NodeId node, int round);

struct NodeContext {
  NodeId self;
  std::vector<NodeId> neighbors;
  std::uint64_t seed;
};

// One synchronous round is: every active node composes its messages (send),
// the engine delivers them, then every active node processes what it got
// (receive). A node that has produced output is no longer stepped.
class NodeProgram {
 public:
  virtual ~NodeProgram() = default;
  virtual void init(const NodeContext& ctx, const Payload& input) = 0;
  virtual Outbox send(int round) = 0;
  virtual void receive(int round, const Inbox& inbox) = 0;

  bool has_output() const { return output_.has_value(); }
  const Payload& output() const { return *output_; }

 protected:
  void emit(Payload p) { output_ = std::move(p); }

 private:
  std::optional<Payload> output_;
};

using ProgramFactory = std::function<std::unique_ptr<NodeProgram>(NodeId)>;

struct PhaseStat {
  std::string name;
  int rounds = 0;
  std::uint64_t messages = 0;
};

struct SimReport {
  std::map<NodeId, Payload> outputs;
  int rounds_used = 0;
  std::uint64_t messages_sent = 0;
  bool timed_out = false;
  std::vector<PhaseStat> phases;

  void add_phase(const std::string& name, int rounds, std::uint64_t messages);
  std::string to_text() const;
};

SimReport run(const Graph& g, const ProgramFactory& make, const std::map<NodeId, Payload>& inputs,
              int round_cap, std::uint64_t seed);

// ── Subroutines ──

enum class MisMode { deterministic_id, luby };

struct Subroutine {
  MisMode mode = MisMode::deterministic_id;
  std::uint64_t seed = 0;
  int round_cap = 100000;
};

const char* mis_mode_name(MisMode m);
MisMode parse_mis_mode(const std::string& s);

struct SetResult {
  VertexSet set;
  SimReport report;
};

// Deterministic mode: a node joins when its id is smaller than the ids of
// all undecided neighbours; this selects exactly the greedy-by-ascending-id
// MIS. Luby mode uses fresh random priorities every round.
SetResult dist_mis(const Graph& g, const Subroutine& sub = {});

// Virtual graph on the alpha nodes of y: two alpha nodes are adjacent when
// they share a beta neighbour inside y.
Graph virtual_alpha_graph(const Graph& g, const VertexSet& y, const VertexSet& alpha, const VertexSet& beta);

// (3,2)-ruling set of the virtual graph, obtained as an MIS of its square.
// Rounds are charged at kRulingRoundFactor real rounds per virtual round.
SetResult ruling_set_32(const Graph& g, const VertexSet& y, const VertexSet& alpha, const VertexSet& beta,
                        const Subroutine& sub = {});

constexpr int kRulingRoundFactor = 4;

Graph square(const Graph& g);

// ── Neighbourhood collection ──

// Every node floods what it knows for `radius` rounds and outputs its view:
// the subgraph induced by the nodes within distance radius, with labels.
// After r rounds a node holds the adjacency list of everything within r.
SimReport collect_balls(const Graph& g, const std::map<NodeId, std::int64_t>& labels, int radius,
                        int round_cap = 100000);

struct BallView {
  Graph graph;
  std::map<NodeId, std::int64_t> labels;
};

BallView decode_ball(const Payload& p);

}  // namespace misrecon
