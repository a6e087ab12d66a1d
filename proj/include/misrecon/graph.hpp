#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

namespace misrecon {

using NodeId = int;
using VertexSet = std::set<NodeId>;
using Edge = std::pair<NodeId, NodeId>;

constexpr int kInfinity = std::numeric_limits<int>::max();

// Undirected simple graph over arbitrary non-negative ids. Immutable once
// built. Internally nodes are indexed 0..n-1 in ascending id order, so the
// index-based adjacency lists are also sorted by id.
class Graph {
 public:
  Graph() = default;
  Graph(const std::vector<NodeId>& nodes, const std::vector<Edge>& edges);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::size_t edge_count() const { return m_; }

  const std::vector<NodeId>& nodes() const { return ids_; }
  bool has_node(NodeId v) const { return pos_.count(v) != 0; }
  int index_of(NodeId v) const;
  NodeId id_at(int i) const { return ids_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& adj(int i) const { return adj_[static_cast<std::size_t>(i)]; }

  std::vector<NodeId> neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const { return adj(index_of(v)).size(); }
  bool adjacent(NodeId u, NodeId v) const;
  std::vector<Edge> edges() const;
  NodeId max_id() const;

  Graph induced(const VertexSet& keep) const;

  bool operator==(const Graph& o) const { return ids_ == o.ids_ && adj_ == o.adj_; }

 private:
  std::vector<NodeId> ids_;
  std::unordered_map<NodeId, int> pos_;
  std::vector<std::vector<int>> adj_;
  std::size_t m_ = 0;
};

// ── Set arithmetic ──

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
VertexSet set_xor(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

// ── Index-level helpers used by the algorithms ──

std::vector<char> membership(const Graph& g, const VertexSet& s);

// Multi-source BFS. allowed (if non-null) restricts the walk to the induced
// subgraph. max_depth < 0 means unbounded. Unreached entries are -1.
std::vector<int> bfs_indices(const Graph& g, const std::vector<int>& sources,
                             const std::vector<char>* allowed = nullptr, int max_depth = -1);

// ── Queries ──

std::map<NodeId, int> distances_from(const Graph& g, NodeId source);
std::map<NodeId, int> distances_from(const Graph& g, NodeId source, const VertexSet& restrict);

// d_Y(v, U): distance from v to the nearest member of u inside the subgraph
// induced by y. kInfinity when unreachable.
int set_distance(const Graph& g, NodeId v, const VertexSet& u, const VertexSet& y);

// Whole-graph diameter; kInfinity if disconnected, 0 for <= 1 node.
int diameter(const Graph& g);
int induced_diameter(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& u);

VertexSet neighbors_in(const Graph& g, NodeId v, const VertexSet& s);
VertexSet neighborhood(const Graph& g, const VertexSet& s);
VertexSet ball(const Graph& g, NodeId v, int radius);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_d_dominating(const Graph& g, const VertexSet& s, int d);
bool is_mis(const Graph& g, const VertexSet& s);

Graph complement_restricted(const Graph& g, const VertexSet& keep);

// Scans `order` and keeps every node with no neighbour already kept.
VertexSet greedy_mis(const Graph& g, const std::vector<NodeId>& order);
inline VertexSet greedy_mis_by_id(const Graph& g) { return greedy_mis(g, g.nodes()); }

// ── Components of alpha ∪ beta ──

struct ComponentInfo {
  VertexSet vertices;
  int diameter = 0;  // exact, induced
  bool isolated = true;
  bool alpha_covered = false;
  bool beta_covered = false;
  VertexSet eps_neighbors;  // epsilon nodes adjacent to the component

  NodeId representative() const { return *vertices.begin(); }
  bool small() const { return diameter <= 2; }
};

// Components of the subgraph induced by u, labelled from alpha and beta.
// The epsilon nodes considered are the graph nodes outside alpha ∪ beta.
// Covering pairs (i, j) mean "component j is alpha-covered by component i",
// i.e. some epsilon node sees an alpha node of i and a beta node of j.
struct ComponentLabels {
  std::vector<ComponentInfo> comps;
  std::vector<std::pair<int, int>> covering;
};

ComponentLabels label_components(const Graph& g, const VertexSet& u, const VertexSet& alpha,
                                 const VertexSet& beta);
std::vector<ComponentInfo> components_of(const Graph& g, const VertexSet& u, const VertexSet& alpha,
                                         const VertexSet& beta);

}  // namespace misrecon
