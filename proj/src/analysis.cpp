#include "misrecon/analysis.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "misrecon/errors.hpp"

namespace misrecon {

namespace {

using Mask = std::uint64_t;

Mask bit(int i) { return Mask{1} << i; }

Mask to_mask(const Graph& g, const VertexSet& s) {
  Mask m = 0;
  for (NodeId v : s) m |= bit(g.index_of(v));
  return m;
}

VertexSet from_mask(const Graph& g, Mask m) {
  VertexSet s;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (m & bit(static_cast<int>(i))) s.insert(g.id_at(static_cast<int>(i)));
  return s;
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (int j : g.adj(static_cast<int>(i))) adj[i] |= bit(j);
  return adj;
}

// all independent sets, or false if there are more than cap of them
bool independent_sets(const std::vector<Mask>& adj, std::uint64_t cap, std::vector<Mask>& out) {
  const int n = static_cast<int>(adj.size());
  bool overflow = false;
  std::function<void(int, Mask, Mask)> rec = [&](int i, Mask cur, Mask forbid) {
    if (overflow) return;
    if (i == n) {
      out.push_back(cur);
      if (out.size() > cap) overflow = true;
      return;
    }
    rec(i + 1, cur, forbid);
    if (!(forbid & bit(i))) rec(i + 1, cur | bit(i), forbid | adj[i]);
  };
  rec(0, 0, 0);
  return !overflow;
}

std::string join(const std::vector<NodeId>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

// ── Characterization ──

std::string BlockerReport::to_text() const {
  std::ostringstream os;
  auto b = [](bool x) { return x ? "true" : "false"; };
  os << "blocked: " << b(blocked) << "\n";
  os << "cond1_fully_connected: " << b(cond1_fully_connected) << "\n";
  os << "cond2_eps_covered: " << b(cond2_eps_covered) << "\n";
  os << "cond3_no_complement_path: " << b(cond3_no_complement_path) << "\n";
  os << "witness: " << witness << "\n";
  return os.str();
}

BlockerReport check_blocker(const ReconfigInstance& inst) {
  const Graph& g = inst.graph;
  BlockerReport r;
  r.cond1_fully_connected = true;
  for (NodeId a : inst.alpha) {
    for (NodeId b : inst.beta)
      if (a == b || !g.adjacent(a, b)) {
        r.cond1_fully_connected = false;
        r.loose_pair = Edge{a, b};
        break;
      }
    if (r.loose_pair) break;
  }

  // computed straight from the definitions, not from component labels
  VertexSet eps;
  for (NodeId v : g.nodes())
    if (!inst.alpha.count(v) && !inst.beta.count(v)) eps.insert(v);
  auto fully = [&](NodeId e, const VertexSet& s) {
    return std::all_of(s.begin(), s.end(), [&](NodeId x) { return g.adjacent(e, x); });
  };
  for (NodeId e : eps) {
    if (fully(e, inst.alpha)) r.eps_alpha.insert(e);
    if (fully(e, inst.beta)) r.eps_beta.insert(e);
  }
  r.cond2_eps_covered = true;
  for (NodeId e : eps)
    if (!r.eps_alpha.count(e) && !r.eps_beta.count(e)) {
      r.cond2_eps_covered = false;
      r.free_eps = e;
      break;
    }

  // shortest complement path from eps_beta∖eps_alpha to eps_alpha∖eps_beta
  VertexSet vp = set_union(r.eps_alpha, r.eps_beta);
  VertexSet from = set_minus(r.eps_beta, r.eps_alpha), to = set_minus(r.eps_alpha, r.eps_beta);
  Graph gc = complement_restricted(g, vp);
  std::map<NodeId, NodeId> parent;
  std::deque<NodeId> q;
  for (NodeId s : from) {
    parent[s] = s;
    q.push_back(s);
  }
  std::optional<NodeId> hit;
  while (!q.empty() && !hit) {
    NodeId x = q.front();
    q.pop_front();
    if (to.count(x)) {
      hit = x;
      break;
    }
    for (NodeId y : gc.neighbors(x))
      if (!parent.count(y)) {
        parent[y] = x;
        q.push_back(y);
      }
  }
  r.cond3_no_complement_path = !hit;
  if (hit) {
    for (NodeId x = *hit;; x = parent[x]) {
      r.complement_path.push_back(x);
      if (parent[x] == x) break;
    }
    std::reverse(r.complement_path.begin(), r.complement_path.end());
  }

  r.blocked = r.cond1_fully_connected && r.cond2_eps_covered && r.cond3_no_complement_path;
  if (!r.cond1_fully_connected)
    r.witness = "alpha " + std::to_string(r.loose_pair->first) + " and beta " + std::to_string(r.loose_pair->second) +
                " are not adjacent";
  else if (!r.cond2_eps_covered)
    r.witness = "epsilon node " + std::to_string(*r.free_eps) + " misses an alpha and a beta node";
  else if (!r.cond3_no_complement_path)
    r.witness = "complement path " + join(r.complement_path);
  else
    r.witness = "all three conditions hold";
  return r;
}

// ── Oracle ──

std::string OracleResult::to_text() const {
  std::ostringstream os;
  os << "exists: " << (exists ? "true" : "false") << "\n";
  os << "inconclusive: " << (inconclusive ? "true" : "false") << "\n";
  os << "min_length: " << (min_length ? std::to_string(*min_length) : "none") << "\n";
  os << "states_explored: " << states_explored << "\n";
  if (witness)
    for (std::size_t i = 0; i < witness->steps.size(); ++i) {
      os << "witness." << i << ":";
      for (NodeId v : witness->steps[i]) os << " " << v;
      os << "\n";
    }
  return os.str();
}

OracleResult brute_force_oracle(const ReconfigInstance& inst, PropertySpec p, std::uint64_t cap_states) {
  const Graph& g = inst.graph;
  if (p.d < 1) throw InputError("domination radius must be positive");
  if (g.size() > kOracleMaxNodes)
    throw InputError("oracle supports at most " + std::to_string(kOracleMaxNodes) + " nodes");
  check_instance(inst);
  OracleResult res;
  const Mask a = to_mask(g, inst.alpha), b = to_mask(g, inst.beta);
  if (a == b) {
    res.exists = true;
    res.min_length = 0;
    res.witness = Schedule{{inst.alpha}};
    return res;
  }

  auto adj = adjacency_masks(g);
  std::vector<Mask> ball(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto d = bfs_indices(g, {static_cast<int>(i)}, nullptr, p.d);
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d[j] >= 0) ball[i] |= bit(static_cast<int>(j));
  }
  const Mask full = g.size() == 64 ? ~Mask{0} : bit(static_cast<int>(g.size())) - 1;

  std::vector<Mask> indep;
  if (!independent_sets(adj, cap_states, indep)) {
    res.inconclusive = true;
    return res;
  }
  std::unordered_set<Mask> admissible;
  for (Mask s : indep) {
    Mask cov = 0;
    for (Mask x = s; x; x &= x - 1) cov |= ball[std::countr_zero(x)];
    if (cov == full) admissible.insert(s);
  }
  admissible.insert(a);
  admissible.insert(b);

  std::unordered_map<Mask, Mask> parent{{a, a}};
  std::deque<Mask> q{a};
  bool found = false;
  while (!q.empty()) {
    Mask s = q.front();
    q.pop_front();
    if (++res.states_explored > cap_states) {
      res.inconclusive = true;
      return res;
    }
    for (Mask dlt : indep) {
      if (!dlt) continue;
      Mask t = s ^ dlt;
      if (parent.count(t) || !admissible.count(t)) continue;
      parent[t] = s;
      if (t == b) {
        found = true;
        break;
      }
      q.push_back(t);
    }
    if (found) break;
  }
  if (!found) return res;

  std::vector<VertexSet> path;
  for (Mask x = b;; x = parent[x]) {
    path.push_back(from_mask(g, x));
    if (x == a) break;
  }
  std::reverse(path.begin(), path.end());
  res.exists = true;
  res.min_length = path.size() - 1;
  res.witness = Schedule{path};
  return res;
}

// ── Small diameter ──

std::optional<Schedule> small_diameter_fallback(const ReconfigInstance& inst) {
  check_instance(inst);
  const Graph& g = inst.graph;
  if (diameter(g) > 3) throw InputError("small-diameter fallback needs diameter <= 3");
  if (inst.alpha == inst.beta) return Schedule{{inst.alpha}};

  auto rep = check_blocker(inst);
  if (rep.blocked) return std::nullopt;

  // with diameter <= 3 any single node 4-dominates the graph
  auto first_loose = [&](NodeId e, const VertexSet& s) {
    for (NodeId x : s)
      if (!g.adjacent(e, x)) return x;
    throw InternalError("node " + std::to_string(e) + " unexpectedly adjacent to the whole set");
  };
  Schedule s;
  const VertexSet& al = inst.alpha;
  const VertexSet& be = inst.beta;
  if (!rep.cond1_fully_connected) {
    auto [a, b] = *rep.loose_pair;
    if (a == b) s.steps = {al, {a}, be};
    else s.steps = {al, {a}, {a, b}, {b}, be};
  } else if (!rep.cond2_eps_covered) {
    NodeId e = *rep.free_eps;
    NodeId a = first_loose(e, al), b = first_loose(e, be);
    s.steps = {al, {a}, {a, e}, {e}, {e, b}, {b}, be};
  } else {
    const auto& t = rep.complement_path;
    NodeId a = first_loose(t.front(), al), b = first_loose(t.back(), be);
    s.steps = {al, {a}, {a, t.front()}};
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      s.steps.push_back({t[i]});
      s.steps.push_back({t[i], t[i + 1]});
    }
    s.steps.push_back({t.back()});
    s.steps.push_back({t.back(), b});
    s.steps.push_back({b});
    s.steps.push_back(be);
  }
  auto v = validate(inst, s);
  if (!v.valid) throw InternalError("fallback schedule invalid: " + v.describe());
  return s;
}

// ── Enumeration ──

std::uint64_t canonical_code(const Graph& g) {
  const int n = static_cast<int>(g.size());
  if (n > 11) throw InputError("canonical_code supports at most 11 nodes");
  std::vector<int> deg(n);
  for (int i = 0; i < n; ++i) deg[i] = static_cast<int>(g.adj(i).size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return deg[x] < deg[y]; });
  // blocks of equal degree; only permutations inside blocks are tried
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg[order[j]] == deg[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  auto code_of = [&](const std::vector<int>& ord) {
    std::uint64_t c = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        c <<= 1;
        const auto& l = g.adj(ord[i]);
        if (std::binary_search(l.begin(), l.end(), ord[j])) c |= 1;
      }
    return c;
  };
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> rec = [&](std::size_t bi) {
    if (bi == blocks.size()) {
      best = std::min(best, code_of(order));
      return;
    }
    auto [lo, hi] = blocks[bi];
    std::sort(order.begin() + lo, order.begin() + hi);
    do rec(bi + 1);
    while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
  return best;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 8) throw InputError("graph enumeration supports 1..8 nodes");
  // all graphs up to isomorphism, grown one vertex at a time
  std::vector<Graph> level{Graph({0}, {})};
  for (int m = 2; m <= n; ++m) {
    std::vector<Graph> next;
    std::unordered_set<std::uint64_t> seen;
    std::vector<NodeId> ids(m);
    for (int i = 0; i < m; ++i) ids[i] = i;
    for (const Graph& h : level)
      for (Mask nb = 0; nb < bit(m - 1); ++nb) {
        auto es = h.edges();
        for (int i = 0; i < m - 1; ++i)
          if (nb & bit(i)) es.emplace_back(i, m - 1);
        Graph cand(ids, es);
        if (seen.insert(canonical_code(cand)).second) next.push_back(std::move(cand));
      }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& h : level)
    if (is_connected(h)) out.push_back(std::move(h));
  return out;
}

std::vector<VertexSet> all_mis(const Graph& g) {
  if (g.size() > kOracleMaxNodes) throw InputError("MIS enumeration supports at most 40 nodes");
  auto adj = adjacency_masks(g);
  std::vector<Mask> indep;
  independent_sets(adj, ~std::uint64_t{0} >> 1, indep);
  std::vector<VertexSet> out;
  for (Mask s : indep) {
    bool maximal = true;
    for (std::size_t i = 0; i < g.size() && maximal; ++i)
      if (!(s & bit(static_cast<int>(i))) && !(adj[i] & s)) maximal = false;
    if (maximal) out.push_back(from_mask(g, s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace misrecon
