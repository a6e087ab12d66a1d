#pragma once

// Test-side oracles. Everything here works from the raw node and edge lists
// with an adjacency matrix and Floyd-Warshall, independently of the library
// algorithms it is used to check.

#include <map>
#include <random>
#include <vector>

#include "misrecon/analysis.hpp"
#include "misrecon/graph.hpp"
#include "misrecon/schedule.hpp"

namespace testing_support {

using namespace misrecon;

struct Dense {
  std::vector<NodeId> ids;
  std::map<NodeId, int> at;
  std::vector<std::vector<int>> dist;  // -1 = unreachable

  explicit Dense(const Graph& g) {
    ids = g.nodes();
    const int n = static_cast<int>(ids.size());
    for (int i = 0; i < n; ++i) at[ids[i]] = i;
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (auto [u, v] : g.edges()) d[at[u]][at[v]] = d[at[v]][at[u]] = 1;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    dist.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][j] < inf) dist[i][j] = d[i][j];
  }

  int d(NodeId u, NodeId v) const { return dist[at.at(u)][at.at(v)]; }
  bool adj(NodeId u, NodeId v) const { return d(u, v) == 1; }

  bool independent(const VertexSet& s) const {
    for (NodeId u : s)
      for (NodeId v : s)
        if (u < v && adj(u, v)) return false;
    return true;
  }

  bool dominating(const VertexSet& s, int r) const {
    for (NodeId v : ids) {
      bool ok = false;
      for (NodeId u : s) {
        int x = d(u, v);
        if (x >= 0 && x <= r) ok = true;
      }
      if (!ok) return false;
    }
    return true;
  }

  bool maximal_independent(const VertexSet& s) const { return independent(s) && dominating(s, 1); }

  int diameter() const {
    int best = 0;
    for (const auto& row : dist)
      for (int x : row) {
        if (x < 0) return -1;
        best = std::max(best, x);
      }
    return best;
  }
};

// Straight from the definition: endpoints, every set independent and
// d-dominating, every symmetric difference independent.
inline bool naive_valid(const ReconfigInstance& inst, const std::vector<VertexSet>& steps, int d = 4) {
  Dense dn(inst.graph);
  if (steps.empty() || steps.front() != inst.alpha || steps.back() != inst.beta) return false;
  for (const auto& s : steps)
    if (!dn.independent(s) || !dn.dominating(s, d)) return false;
  for (std::size_t i = 1; i < steps.size(); ++i) {
    VertexSet x;
    for (NodeId v : steps[i])
      if (!steps[i - 1].count(v)) x.insert(v);
    for (NodeId v : steps[i - 1])
      if (!steps[i].count(v)) x.insert(v);
    if (!dn.independent(x)) return false;
  }
  return true;
}

inline Graph path_graph(int n) {
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    nodes.push_back(i);
    if (i + 1 < n) edges.emplace_back(i, i + 1);
  }
  return Graph(nodes, edges);
}

// Seeded random connected instance with diameter > min_diameter. Walks the
// seed sequence until one qualifies; returns the seed used through *used.
inline ReconfigInstance random_connected(std::uint64_t seed, int n, double p, int min_diameter,
                                         std::uint64_t* used = nullptr) {
  for (std::uint64_t s = seed;; ++s) {
    auto inst = gen_gadget("random", GadgetParams{n, 0, p, s});
    int dm = Dense(inst.graph).diameter();
    if (dm > min_diameter) {
      if (used) *used = s;
      return inst;
    }
  }
}

}  // namespace testing_support
