#include <random>
#include <string>

#include "misrecon/analysis.hpp"
#include "misrecon/errors.hpp"

namespace misrecon {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

// Caterpillar: spine b_0 c_0 b_1 c_1 ... b_{k-1}, one leaf t_i per b_i.
// alpha holds the c's and t's, beta the b's. Putting any b_i into the set
// forces its alpha neighbours out.
ReconfigInstance caterpillar(int k, bool first_leaf, int extra) {
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  ReconfigInstance inst;
  int next = 0;
  auto fresh = [&] {
    nodes.push_back(next);
    return next++;
  };
  NodeId prev_c = -1;
  NodeId last_b = -1;
  for (int i = 0; i < k; ++i) {
    NodeId b = fresh();
    inst.beta.insert(b);
    if (prev_c >= 0) edges.emplace_back(b, prev_c);
    prev_c = -1;
    if (i < k - 1) {
      prev_c = fresh();
      inst.alpha.insert(prev_c);
      edges.emplace_back(b, prev_c);
    }
    if (i > 0 || first_leaf) {
      NodeId t = fresh();
      inst.alpha.insert(t);
      edges.emplace_back(b, t);
    }
    last_b = b;
  }
  for (int j = 0; j < extra; ++j) {
    NodeId x = fresh();
    inst.alpha.insert(x);
    edges.emplace_back(last_b, x);
  }
  inst.graph = Graph(nodes, edges);
  return inst;
}

// Ring of n gadgets. Gadget i is a (k-1)-clique holding a_i (alpha), b_i
// (beta) and k-3 epsilon nodes, plus x_i and y_i joined to the whole clique;
// y_i links to x_{i+1}. Every node has degree k.
ReconfigInstance logstar(int n, int k) {
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  ReconfigInstance inst;
  const int width = k + 1;
  for (int i = 0; i < n; ++i) {
    const int base = i * width;
    std::vector<NodeId> clique;
    for (int j = 0; j < k - 1; ++j) clique.push_back(base + j);
    NodeId x = base + k - 1, y = base + k;
    for (NodeId v : clique) nodes.push_back(v);
    nodes.push_back(x);
    nodes.push_back(y);
    for (std::size_t p = 0; p < clique.size(); ++p) {
      for (std::size_t q = p + 1; q < clique.size(); ++q) edges.emplace_back(clique[p], clique[q]);
      edges.emplace_back(clique[p], x);
      edges.emplace_back(clique[p], y);
    }
    edges.emplace_back(y, ((i + 1) % n) * width + k - 1);
    inst.alpha.insert(base);
    inst.beta.insert(base + 1);
  }
  inst.graph = Graph(nodes, edges);
  return inst;
}

std::vector<NodeId> permutation(std::mt19937_64& rng, int n) {
  std::vector<NodeId> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng() % static_cast<std::uint64_t>(i + 1)]);
  return p;
}

}  // namespace

std::vector<std::string> gadget_families() {
  return {"threedom-blocker", "threedom-linear", "logstar", "star", "random", "alt-path", "alt-cycle"};
}

ReconfigInstance gen_gadget(const std::string& family, const GadgetParams& pr) {
  ReconfigInstance inst;
  if (family == "threedom-blocker") {
    inst = caterpillar(3, true, 0);
    // the defining property is checked, not taken from the drawing
    if (brute_force_oracle(inst, PropertySpec{3}).exists)
      throw InternalError("threedom-blocker candidate admits a 3-dominating schedule");
  } else if (family == "threedom-linear") {
    require(pr.n >= 4, "threedom-linear needs n >= 4");
    int k = (pr.n + 2) / 3;
    inst = caterpillar(k, false, pr.n - (3 * k - 2));
  } else if (family == "logstar") {
    require(pr.n >= 3, "logstar needs n >= 3 gadgets");
    require(pr.k >= 3, "logstar needs k >= 3");
    inst = logstar(pr.n, pr.k);
    for (NodeId v : inst.graph.nodes())
      if (inst.graph.degree(v) != static_cast<std::size_t>(pr.k))
        throw InternalError("logstar instance is not " + std::to_string(pr.k) + "-regular");
  } else if (family == "star") {
    require(pr.k >= 1, "star needs k >= 1");
    std::vector<NodeId> nodes{0};
    std::vector<Edge> edges;
    for (int i = 1; i <= pr.k; ++i) {
      nodes.push_back(i);
      edges.emplace_back(0, i);
      inst.beta.insert(i);
    }
    inst.graph = Graph(nodes, edges);
    inst.alpha = {0};
  } else if (family == "alt-path" || family == "alt-cycle") {
    bool cyc = family == "alt-cycle";
    require(pr.n >= 2, family + " needs n >= 2");
    require(!cyc || (pr.n >= 4 && pr.n % 2 == 0), "alt-cycle needs an even n >= 4");
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    for (int i = 0; i < pr.n; ++i) {
      nodes.push_back(i);
      if (i + 1 < pr.n) edges.emplace_back(i, i + 1);
      (i % 2 == 0 ? inst.alpha : inst.beta).insert(i);
    }
    if (cyc) edges.emplace_back(pr.n - 1, 0);
    inst.graph = Graph(nodes, edges);
  } else if (family == "random") {
    require(pr.n >= 1, "random needs n >= 1");
    require(pr.p >= 0.0 && pr.p <= 1.0, "random needs 0 <= p <= 1");
    std::mt19937_64 rng(pr.seed);
    const auto threshold = static_cast<std::uint64_t>(pr.p * 1'000'000.0);
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    for (int i = 0; i < pr.n; ++i) nodes.push_back(i);
    for (int i = 0; i < pr.n; ++i)
      for (int j = i + 1; j < pr.n; ++j)
        if (rng() % 1'000'000 < threshold) edges.emplace_back(i, j);
    inst.graph = Graph(nodes, edges);
    inst.alpha = greedy_mis(inst.graph, permutation(rng, pr.n));
    inst.beta = greedy_mis(inst.graph, permutation(rng, pr.n));
  } else {
    throw InputError("unknown gadget family '" + family + "'");
  }
  check_instance(inst);
  return inst;
}

}  // namespace misrecon
