#include "misrecon/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "misrecon/errors.hpp"

namespace misrecon {

Graph::Graph(const std::vector<NodeId>& nodes, const std::vector<Edge>& edges) {
  ids_ = nodes;
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] < 0) throw InputError("negative node id " + std::to_string(ids_[i]));
    pos_[ids_[i]] = static_cast<int>(i);
  }
  adj_.assign(ids_.size(), {});
  for (auto [u, v] : edges) {
    if (u == v) throw InputError("self-loop on node " + std::to_string(u));
    int a = index_of(u), b = index_of(v);
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& l : adj_) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    m_ += l.size();
  }
  m_ /= 2;
}

int Graph::index_of(NodeId v) const {
  auto it = pos_.find(v);
  if (it == pos_.end()) throw InputError("unknown node id " + std::to_string(v));
  return it->second;
}

std::vector<NodeId> Graph::neighbors(NodeId v) const {
  std::vector<NodeId> out;
  for (int j : adj(index_of(v))) out.push_back(ids_[j]);
  return out;
}

bool Graph::adjacent(NodeId u, NodeId v) const {
  const auto& l = adj(index_of(u));
  return std::binary_search(l.begin(), l.end(), index_of(v));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < ids_.size(); ++i)
    for (int j : adj_[i])
      if (static_cast<std::size_t>(j) > i) out.emplace_back(ids_[i], ids_[j]);
  return out;
}

NodeId Graph::max_id() const { return ids_.empty() ? -1 : ids_.back(); }

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<NodeId> ns;
  for (NodeId v : keep) {
    index_of(v);
    ns.push_back(v);
  }
  std::vector<Edge> es;
  for (auto [u, v] : edges())
    if (keep.count(u) && keep.count(v)) es.emplace_back(u, v);
  return Graph(ns, es);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet r = a;
  r.insert(b.begin(), b.end());
  return r;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
  return r;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
  return r;
}

VertexSet set_xor(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
  return r;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<char> membership(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.size(), 0);
  for (NodeId v : s) in[g.index_of(v)] = 1;
  return in;
}

std::vector<int> bfs_indices(const Graph& g, const std::vector<int>& sources,
                             const std::vector<char>* allowed, int max_depth) {
  std::vector<int> dist(g.size(), -1);
  std::deque<int> q;
  for (int s : sources) {
    if (allowed && !(*allowed)[s]) continue;
    if (dist[s] == 0) continue;
    dist[s] = 0;
    q.push_back(s);
  }
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (max_depth >= 0 && dist[x] >= max_depth) continue;
    for (int y : g.adj(x)) {
      if (dist[y] != -1) continue;
      if (allowed && !(*allowed)[y]) continue;
      dist[y] = dist[x] + 1;
      q.push_back(y);
    }
  }
  return dist;
}

static std::map<NodeId, int> to_map(const Graph& g, const std::vector<int>& dist) {
  std::map<NodeId, int> out;
  for (std::size_t i = 0; i < dist.size(); ++i)
    if (dist[i] >= 0) out[g.id_at(static_cast<int>(i))] = dist[i];
  return out;
}

std::map<NodeId, int> distances_from(const Graph& g, NodeId source) {
  return to_map(g, bfs_indices(g, {g.index_of(source)}));
}

std::map<NodeId, int> distances_from(const Graph& g, NodeId source, const VertexSet& restrict) {
  if (!restrict.count(source)) throw InputError("source not inside the restricting set");
  auto allowed = membership(g, restrict);
  return to_map(g, bfs_indices(g, {g.index_of(source)}, &allowed));
}

int set_distance(const Graph& g, NodeId v, const VertexSet& u, const VertexSet& y) {
  auto allowed = membership(g, y);
  std::vector<int> src;
  for (NodeId x : u) src.push_back(g.index_of(x));
  auto d = bfs_indices(g, src, &allowed);
  int i = g.index_of(v);
  return d[i] < 0 ? kInfinity : d[i];
}

static int eccentricity_max(const Graph& g, const std::vector<int>& members,
                            const std::vector<char>* allowed) {
  int best = 0;
  for (int s : members) {
    auto d = bfs_indices(g, {s}, allowed);
    for (int t : members) {
      if (d[t] < 0) return kInfinity;
      best = std::max(best, d[t]);
    }
  }
  return best;
}

int diameter(const Graph& g) {
  std::vector<int> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return eccentricity_max(g, all, nullptr);
}

int induced_diameter(const Graph& g, const VertexSet& s) {
  auto allowed = membership(g, s);
  std::vector<int> members;
  for (NodeId v : s) members.push_back(g.index_of(v));
  return eccentricity_max(g, members, &allowed);
}

bool is_connected(const Graph& g) {
  if (g.size() <= 1) return true;
  auto d = bfs_indices(g, {0});
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& u) {
  auto allowed = membership(g, u);
  std::vector<char> seen(g.size(), 0);
  std::vector<VertexSet> out;
  for (NodeId s : u) {
    int si = g.index_of(s);
    if (seen[si]) continue;
    auto d = bfs_indices(g, {si}, &allowed);
    VertexSet comp;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] >= 0) {
        seen[i] = 1;
        comp.insert(g.id_at(static_cast<int>(i)));
      }
    out.push_back(std::move(comp));
  }
  return out;
}

VertexSet neighbors_in(const Graph& g, NodeId v, const VertexSet& s) {
  VertexSet out;
  for (int j : g.adj(g.index_of(v)))
    if (s.count(g.id_at(j))) out.insert(g.id_at(j));
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (NodeId v : s)
    for (int j : g.adj(g.index_of(v))) out.insert(g.id_at(j));
  return out;
}

VertexSet ball(const Graph& g, NodeId v, int radius) {
  auto d = bfs_indices(g, {g.index_of(v)}, nullptr, radius);
  VertexSet out;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] >= 0) out.insert(g.id_at(static_cast<int>(i)));
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  auto in = membership(g, s);
  for (NodeId v : s)
    for (int j : g.adj(g.index_of(v)))
      if (in[j]) return false;
  return true;
}

bool is_d_dominating(const Graph& g, const VertexSet& s, int d) {
  if (d <= 0) throw InputError("domination radius must be positive");
  std::vector<int> src;
  for (NodeId v : s) src.push_back(g.index_of(v));
  auto dist = bfs_indices(g, src, nullptr, d);
  return std::none_of(dist.begin(), dist.end(), [](int x) { return x < 0; });
}

bool is_mis(const Graph& g, const VertexSet& s) {
  return is_independent(g, s) && is_d_dominating(g, s, 1);
}

Graph complement_restricted(const Graph& g, const VertexSet& keep) {
  std::vector<NodeId> ns(keep.begin(), keep.end());
  std::vector<Edge> es;
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = i + 1; j < ns.size(); ++j)
      if (!g.adjacent(ns[i], ns[j])) es.emplace_back(ns[i], ns[j]);
  return Graph(ns, es);
}

VertexSet greedy_mis(const Graph& g, const std::vector<NodeId>& order) {
  std::vector<char> in(g.size(), 0), blocked(g.size(), 0);
  VertexSet out;
  for (NodeId v : order) {
    int i = g.index_of(v);
    if (in[i] || blocked[i]) continue;
    in[i] = 1;
    out.insert(v);
    for (int j : g.adj(i)) blocked[j] = 1;
  }
  return out;
}

ComponentLabels label_components(const Graph& g, const VertexSet& u, const VertexSet& alpha,
                                 const VertexSet& beta) {
  ComponentLabels out;
  auto parts = connected_components(g, u);
  std::unordered_map<NodeId, int> cid;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (NodeId v : parts[i]) cid[v] = static_cast<int>(i);
    ComponentInfo c;
    c.vertices = parts[i];
    c.diameter = induced_diameter(g, parts[i]);
    out.comps.push_back(std::move(c));
  }
  std::set<std::pair<int, int>> pairs;
  for (NodeId e : g.nodes()) {
    if (alpha.count(e) || beta.count(e)) continue;
    std::set<int> ca, cb, touched;
    for (int j : g.adj(g.index_of(e))) {
      NodeId w = g.id_at(j);
      auto it = cid.find(w);
      if (it == cid.end()) continue;
      touched.insert(it->second);
      if (alpha.count(w)) ca.insert(it->second);
      if (beta.count(w)) cb.insert(it->second);
    }
    for (int c : touched) out.comps[c].eps_neighbors.insert(e);
    // an epsilon node reaching into a second component breaks isolation of
    // every component it touches
    if (touched.size() > 1)
      for (int c : touched) out.comps[c].isolated = false;
    for (int i : ca)
      for (int j : cb) {
        if (i == j) continue;
        out.comps[j].alpha_covered = true;
        out.comps[i].beta_covered = true;
        pairs.emplace(i, j);
      }
  }
  out.covering.assign(pairs.begin(), pairs.end());
  return out;
}

std::vector<ComponentInfo> components_of(const Graph& g, const VertexSet& u, const VertexSet& alpha,
                                         const VertexSet& beta) {
  return label_components(g, u, alpha, beta).comps;
}

}  // namespace misrecon
