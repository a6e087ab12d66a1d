#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "misrecon/analysis.hpp"
#include "misrecon/errors.hpp"
#include "support.hpp"

using namespace misrecon;
using testing_support::Dense;
using testing_support::naive_valid;
using testing_support::path_graph;

namespace {

// Isomorphism classes of connected graphs on n nodes by trying every
// permutation of every labelled graph.
std::size_t brute_force_class_count(int n) {
  std::vector<Edge> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<std::vector<char>> canon;
  std::vector<int> perm(n);
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<Edge> es;
    std::vector<NodeId> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 0);
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1) es.push_back(slots[b]);
    if (Dense(Graph(nodes, es)).diameter() < 0) continue;
    std::vector<char> best;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<char> m(n * n, 0);
      for (auto [u, v] : es) m[perm[u] * n + perm[v]] = m[perm[v] * n + perm[u]] = 1;
      if (best.empty() || m < best) best = m;
    } while (std::next_permutation(perm.begin(), perm.end()));
    canon.insert(best);
  }
  return canon.size();
}

std::vector<VertexSet> naive_all_mis(const Graph& g) {
  Dense dn(g);
  std::vector<VertexSet> out;
  auto ids = g.nodes();
  for (std::uint32_t m = 0; m < (1u << ids.size()); ++m) {
    VertexSet s;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (m >> i & 1) s.insert(ids[i]);
    if (dn.maximal_independent(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("oracle on P4 and the star") {
  ReconfigInstance p4{path_graph(4), {0, 2}, {1, 3}};
  auto r = brute_force_oracle(p4);
  CHECK(r.exists);
  CHECK_FALSE(r.inconclusive);
  // {0,2} {0} {3} {1,3}: flipping {0,3} is allowed and {3} 4-dominates P4.
  // Two steps are impossible: a middle set X with X⊕{0,2} and X⊕{1,3} both
  // independent cannot hold 1 or 2, then cannot hold 0 or 3, and ∅ does not
  // dominate.
  CHECK(r.min_length == 3u);
  REQUIRE(r.witness);
  CHECK(naive_valid(p4, r.witness->steps));
  CHECK(r.to_text().find("min_length: 3\n") != std::string::npos);

  auto star = gen_gadget("star", GadgetParams{0, 3, 0.0, 0});
  auto rs = brute_force_oracle(star);
  CHECK_FALSE(rs.exists);
  CHECK_FALSE(rs.inconclusive);
  auto br = check_blocker(star);
  CHECK(br.blocked);
  CHECK(br.cond1_fully_connected);
  CHECK(br.to_text().find("blocked: true") != std::string::npos);

  ReconfigInstance same{path_graph(3), {0, 2}, {0, 2}};
  CHECK(brute_force_oracle(same).min_length == 0u);
}

TEST_CASE("oracle cap gives inconclusive, never a false no") {
  auto inst = gen_gadget("alt-path", GadgetParams{14, 0, 0.0, 0});
  auto r = brute_force_oracle(inst, PropertySpec{4}, 5);
  CHECK(r.inconclusive);
  CHECK_FALSE(r.exists);
  CHECK(brute_force_oracle(inst).exists);
}

TEST_CASE("oracle rejects oversized instances") {
  auto inst = gen_gadget("alt-path", GadgetParams{kOracleMaxNodes + 2, 0, 0.0, 0});
  CHECK_THROWS_AS(brute_force_oracle(inst), InputError);
}

TEST_CASE("connected graph counts and canonical codes") {
  const std::size_t expect[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 5; ++n) CHECK(brute_force_class_count(n) == expect[n]);
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_connected_graphs(n).size() == expect[n]);

  std::mt19937_64 rng(4);
  for (const auto& g : enumerate_connected_graphs(6)) {
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> es;
    for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
    CHECK(canonical_code(Graph(g.nodes(), es)) == canonical_code(g));
  }
}

TEST_CASE("all_mis matches subset enumeration") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : enumerate_connected_graphs(n)) CHECK(all_mis(g) == naive_all_mis(g));
}

TEST_CASE("characterization agrees with the oracle up to 5 nodes") {
  int blocked = 0, pairs = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : enumerate_connected_graphs(n)) {
      auto ms = all_mis(g);
      for (const auto& a : ms)
        for (const auto& b : ms) {
          ReconfigInstance inst{g, a, b};
          bool bl = check_blocker(inst).blocked;
          auto o = brute_force_oracle(inst);
          REQUIRE_FALSE(o.inconclusive);
          CHECK(bl == !o.exists);
          blocked += bl;
          ++pairs;
          if (diameter(g) <= 3) {
            auto fb = small_diameter_fallback(inst);
            CHECK(fb.has_value() == !bl);
            if (fb) CHECK(naive_valid(inst, fb->steps));
          }
        }
    }
  CHECK(pairs > 0);
  CHECK(blocked > 0);
}

TEST_CASE("blocker witnesses") {
  // C4 with alpha and beta on opposite diagonals: every alpha-beta pair is adjacent
  Graph c4({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto r = check_blocker({c4, {0, 2}, {1, 3}});
  CHECK(r.cond1_fully_connected);
  // P4 has a loose pair (0, 3)
  auto p = check_blocker({path_graph(4), {0, 2}, {1, 3}});
  CHECK_FALSE(p.blocked);
  CHECK_FALSE(p.cond1_fully_connected);
  REQUIRE(p.loose_pair);
  CHECK_FALSE(path_graph(4).adjacent(p.loose_pair->first, p.loose_pair->second));
  CHECK_THROWS_AS(small_diameter_fallback(gen_gadget("alt-path", GadgetParams{6, 0, 0.0, 0})), InputError);
}

TEST_CASE("gadget families") {
  auto blk = gen_gadget("threedom-blocker", {});
  CHECK_FALSE(brute_force_oracle(blk, PropertySpec{3}).exists);
  CHECK(brute_force_oracle(blk, PropertySpec{4}).min_length == 3u);

  const std::size_t d3[] = {4, 5, 7};
  int i = 0;
  for (int n : {8, 12, 16}) {
    auto lin = gen_gadget("threedom-linear", GadgetParams{n, 0, 0.0, 0});
    CHECK(lin.graph.size() == static_cast<std::size_t>(n));
    CHECK(brute_force_oracle(lin, PropertySpec{3}).min_length == d3[i++]);
    CHECK(brute_force_oracle(lin, PropertySpec{4}).min_length == 3u);
  }

  auto ls = gen_gadget("logstar", GadgetParams{5, 4, 0.0, 0});
  CHECK(ls.graph.size() == 25);
  for (NodeId v : ls.graph.nodes()) CHECK(ls.graph.degree(v) == 4);
  Dense dn(ls.graph);
  CHECK(dn.maximal_independent(ls.alpha));
  CHECK(dn.maximal_independent(ls.beta));

  auto r1 = gen_gadget("random", GadgetParams{25, 0, 0.2, 9});
  auto r2 = gen_gadget("random", GadgetParams{25, 0, 0.2, 9});
  CHECK(r1.graph == r2.graph);
  CHECK(r1.alpha == r2.alpha);
  CHECK(r1.beta == r2.beta);

  CHECK_THROWS_AS(gen_gadget("nope", {}), InputError);
  CHECK_THROWS_AS(gen_gadget("logstar", GadgetParams{5, 2, 0.0, 0}), InputError);
  CHECK_THROWS_AS(gen_gadget("alt-cycle", GadgetParams{7, 0, 0.0, 0}), InputError);
  CHECK_THROWS_AS(gen_gadget("random", GadgetParams{5, 0, 1.5, 0}), InputError);
  CHECK_THROWS_AS(gen_gadget("threedom-linear", GadgetParams{3, 0, 0.0, 0}), InputError);
  CHECK(gadget_families().size() == 7);
}
