#include "misrecon/sim.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "misrecon/errors.hpp"

namespace misrecon {

std::uint64_t counter_random(std::uint64_t seed, NodeId node, int round) {
  // splitmix64 finaliser over a mixed counter
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(node) + 1) +
                    0xbf58476d1ce4e5b9ULL * (static_cast<std::uint64_t>(round) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void SimReport::add_phase(const std::string& name, int rounds, std::uint64_t messages) {
  phases.push_back({name, rounds, messages});
  rounds_used += rounds;
  messages_sent += messages;
}

std::string SimReport::to_text() const {
  std::ostringstream os;
  os << "rounds_used: " << rounds_used << "\n";
  os << "messages_sent: " << messages_sent << "\n";
  os << "timed_out: " << (timed_out ? "true" : "false") << "\n";
  for (const auto& ph : phases) {
    os << "phase." << ph.name << ".rounds: " << ph.rounds << "\n";
    os << "phase." << ph.name << ".messages: " << ph.messages << "\n";
  }
  for (const auto& [id, out] : outputs) {
    os << "output." << id << ":";
    for (auto x : out) os << " " << x;
    os << "\n";
  }
  return os.str();
}

SimReport run(const Graph& g, const ProgramFactory& make, const std::map<NodeId, Payload>& inputs,
              int round_cap, std::uint64_t seed) {
  if (inputs.size() != g.size()) throw InputError("simulator inputs must cover exactly the graph nodes");
  const std::size_t n = g.size();
  std::vector<std::unique_ptr<NodeProgram>> prog(n);
  for (std::size_t i = 0; i < n; ++i) {
    NodeId id = g.id_at(static_cast<int>(i));
    auto it = inputs.find(id);
    if (it == inputs.end()) throw InputError("missing simulator input for node " + std::to_string(id));
    prog[i] = make(id);
    prog[i]->init(NodeContext{id, g.neighbors(id), seed}, it->second);
  }

  SimReport rep;
  int round = 0;
  auto any_active = [&] {
    return std::any_of(prog.begin(), prog.end(), [](const auto& p) { return !p->has_output(); });
  };
  while (any_active()) {
    if (round >= round_cap) {
      rep.timed_out = true;
      break;
    }
    ++round;
    std::vector<char> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = !prog[i]->has_output();
    std::vector<Inbox> inbox(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      NodeId from = g.id_at(static_cast<int>(i));
      for (auto& [to, msg] : prog[i]->send(round)) {
        if (!g.has_node(to) || !g.adjacent(from, to))
          throw InternalError("node " + std::to_string(from) + " sent to non-neighbour " + std::to_string(to));
        inbox[g.index_of(to)][from] = std::move(msg);
        ++rep.messages_sent;
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (active[i]) prog[i]->receive(round, inbox[i]);
  }
  rep.rounds_used = round;
  for (std::size_t i = 0; i < n; ++i)
    if (prog[i]->has_output()) rep.outputs[g.id_at(static_cast<int>(i))] = prog[i]->output();
  return rep;
}

const char* mis_mode_name(MisMode m) { return m == MisMode::luby ? "luby" : "deterministic-id"; }

MisMode parse_mis_mode(const std::string& s) {
  if (s == "deterministic-id") return MisMode::deterministic_id;
  if (s == "luby") return MisMode::luby;
  throw InputError("unknown subroutine '" + s + "'");
}

namespace {

enum : std::int64_t { kPriority = 0, kJoin = 1 };

class MisProgram : public NodeProgram {
 public:
  explicit MisProgram(MisMode mode) : mode_(mode) {}

  void init(const NodeContext& ctx, const Payload&) override {
    ctx_ = ctx;
    if (ctx.neighbors.empty()) emit({1});
  }

  Outbox send(int round) override {
    Outbox out;
    Payload msg = pending_ ? Payload{kJoin} : Payload{kPriority, static_cast<std::int64_t>(key(round))};
    for (NodeId w : ctx_.neighbors) out[w] = msg;
    return out;
  }

  void receive(int round, const Inbox& inbox) override {
    if (pending_) {
      emit({1});
      return;
    }
    bool local_min = true, any_undecided = false;
    const std::uint64_t mine = key(round);
    for (const auto& [from, msg] : inbox) {
      if (msg[0] == kJoin) {
        emit({0});
        return;
      }
      any_undecided = true;
      auto theirs = static_cast<std::uint64_t>(msg[1]);
      if (theirs < mine || (theirs == mine && from < ctx_.self)) local_min = false;
    }
    if (!any_undecided) emit({1});
    else if (local_min) pending_ = true;
  }

 private:
  std::uint64_t key(int round) const {
    if (mode_ == MisMode::deterministic_id) return static_cast<std::uint64_t>(ctx_.self);
    return counter_random(ctx_.seed, ctx_.self, round);
  }

  MisMode mode_;
  NodeContext ctx_;
  bool pending_ = false;
};

}  // namespace

SetResult dist_mis(const Graph& g, const Subroutine& sub) {
  std::map<NodeId, Payload> inputs;
  for (NodeId v : g.nodes()) inputs[v] = {};
  auto rep = run(
      g, [&](NodeId) { return std::make_unique<MisProgram>(sub.mode); }, inputs, sub.round_cap, sub.seed);
  if (rep.timed_out) throw SimTimeout("MIS subroutine exceeded round cap " + std::to_string(sub.round_cap));
  SetResult r;
  for (const auto& [id, out] : rep.outputs)
    if (out.at(0) == 1) r.set.insert(id);
  r.report = std::move(rep);
  return r;
}

Graph virtual_alpha_graph(const Graph& g, const VertexSet& y, const VertexSet& alpha, const VertexSet& beta) {
  VertexSet a = set_intersection(alpha, y);
  std::vector<Edge> es;
  for (NodeId b : set_intersection(beta, y)) {
    auto na = neighbors_in(g, b, a);
    std::vector<NodeId> l(na.begin(), na.end());
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j) es.emplace_back(l[i], l[j]);
  }
  return Graph(std::vector<NodeId>(a.begin(), a.end()), es);
}

Graph square(const Graph& g) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto d = bfs_indices(g, {static_cast<int>(i)}, nullptr, 2);
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (d[j] > 0) es.emplace_back(g.id_at(static_cast<int>(i)), g.id_at(static_cast<int>(j)));
  }
  return Graph(g.nodes(), es);
}

SetResult ruling_set_32(const Graph& g, const VertexSet& y, const VertexSet& alpha, const VertexSet& beta,
                        const Subroutine& sub) {
  for (NodeId v : y) {
    if (!g.has_node(v)) throw InputError("ruling set: unknown node " + std::to_string(v));
    bool a = alpha.count(v) != 0, b = beta.count(v) != 0;
    if (a == b) throw InputError("ruling set: alpha and beta must partition y");
  }
  auto virt = square(virtual_alpha_graph(g, y, alpha, beta));
  auto r = dist_mis(virt, sub);
  SimReport rep;
  rep.outputs = r.report.outputs;
  rep.add_phase("ruling_set_32", kRulingRoundFactor * r.report.rounds_used,
                static_cast<std::uint64_t>(kRulingRoundFactor) * r.report.messages_sent);
  return {std::move(r.set), std::move(rep)};
}

// ── Ball collection ──

namespace {

struct Known {
  std::int64_t label = 0;
  std::vector<NodeId> nbrs;
};

void encode_entry(Payload& p, NodeId id, const Known& k) {
  p.push_back(id);
  p.push_back(k.label);
  p.push_back(static_cast<std::int64_t>(k.nbrs.size()));
  for (NodeId w : k.nbrs) p.push_back(w);
}

std::map<NodeId, Known> decode_entries(const Payload& p) {
  std::map<NodeId, Known> out;
  std::size_t i = 0;
  while (i < p.size()) {
    NodeId id = static_cast<NodeId>(p[i]);
    Known k;
    k.label = p[i + 1];
    auto deg = static_cast<std::size_t>(p[i + 2]);
    i += 3;
    for (std::size_t j = 0; j < deg; ++j) k.nbrs.push_back(static_cast<NodeId>(p[i + j]));
    i += deg;
    out[id] = std::move(k);
  }
  return out;
}

class CollectProgram : public NodeProgram {
 public:
  explicit CollectProgram(int radius) : radius_(radius) {}

  void init(const NodeContext& ctx, const Payload& input) override {
    self_ = ctx.self;
    known_[self_] = Known{input.empty() ? 0 : input[0], ctx.neighbors};
    fresh_ = {self_};
    nbrs_ = ctx.neighbors;
    if (radius_ == 0) finish();
  }

  Outbox send(int) override {
    Payload msg;
    for (NodeId id : fresh_) encode_entry(msg, id, known_.at(id));
    Outbox out;
    for (NodeId w : nbrs_) out[w] = msg;
    return out;
  }

  void receive(int round, const Inbox& inbox) override {
    fresh_.clear();
    for (const auto& [from, msg] : inbox)
      for (auto& [id, k] : decode_entries(msg))
        if (!known_.count(id)) {
          known_[id] = std::move(k);
          fresh_.push_back(id);
        }
    if (round >= radius_) finish();
  }

 private:
  void finish() {
    std::map<NodeId, int> dist{{self_, 0}};
    std::deque<NodeId> q{self_};
    while (!q.empty()) {
      NodeId x = q.front();
      q.pop_front();
      if (dist[x] >= radius_) continue;
      for (NodeId y : known_.at(x).nbrs)
        if (!dist.count(y)) {
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
    }
    Payload p;
    for (const auto& [id, d] : dist) {
      Known k = known_.at(id);
      std::vector<NodeId> inside;
      for (NodeId w : k.nbrs)
        if (dist.count(w)) inside.push_back(w);
      k.nbrs = inside;
      encode_entry(p, id, k);
    }
    emit(std::move(p));
  }

  int radius_;
  NodeId self_ = 0;
  std::vector<NodeId> nbrs_;
  std::map<NodeId, Known> known_;
  std::vector<NodeId> fresh_;
};

}  // namespace

SimReport collect_balls(const Graph& g, const std::map<NodeId, std::int64_t>& labels, int radius,
                        int round_cap) {
  std::map<NodeId, Payload> inputs;
  for (NodeId v : g.nodes()) {
    auto it = labels.find(v);
    inputs[v] = {it == labels.end() ? 0 : it->second};
  }
  auto rep = run(
      g, [&](NodeId) { return std::make_unique<CollectProgram>(radius); }, inputs, round_cap, 0);
  if (rep.timed_out) throw SimTimeout("neighbourhood collection exceeded round cap");
  return rep;
}

BallView decode_ball(const Payload& p) {
  auto entries = decode_entries(p);
  std::vector<NodeId> ns;
  std::vector<Edge> es;
  BallView view;
  for (const auto& [id, k] : entries) {
    ns.push_back(id);
    view.labels[id] = k.label;
    for (NodeId w : k.nbrs)
      if (id < w) es.emplace_back(id, w);
  }
  view.graph = Graph(ns, es);
  return view;
}

}  // namespace misrecon
