#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace statechrome;
using namespace testing_support;

namespace {

Multigraph graph_from(int v, std::vector<std::pair<int, int>> edges) {
  Multigraph g(v);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

// girth by edge-subset enumeration, independent of the BFS
int girth_by_subsets(const Multigraph& g) {
  for (int k = 1; k <= g.num_edges(); ++k)
    if (cycles_by_edge_subsets(g, k) > 0) return k;
  return 0;
}

bool bipartite_by_coloring(const Multigraph& g) { return count_colorings(g, 2) > 0; }

std::vector<Multigraph> sample_multigraphs(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Multigraph> out;
  for (int t = 0; t < count; ++t) {
    int v = 1 + static_cast<int>(rng() % 7);
    int m = static_cast<int>(rng() % 10);
    Multigraph g(v);
    for (int e = 0; e < m; ++e) g.add_edge(static_cast<int>(rng() % v), static_cast<int>(rng() % v));
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(Girth, Examples) {
  EXPECT_EQ(girth(path_graph(5)), 0);
  EXPECT_EQ(girth(graph_from(1, {{0, 0}})), 1);
  EXPECT_EQ(girth(theta_graph({3, 3, 5})), 6);
  EXPECT_EQ(girth(graph_from(2, {{0, 1}, {0, 1}})), 2);
  EXPECT_EQ(girth(cycle_graph(7)), 7);
  EXPECT_EQ(girth(complete_graph(4)), 3);
}

TEST(Girth, AgreesWithSubsetEnumeration) {
  for (const auto& g : sample_multigraphs(150, 5)) EXPECT_EQ(girth(g), girth_by_subsets(g)) << g.to_edge_list();
}

TEST(Cyclomatic, Examples) {
  EXPECT_EQ(cyclomatic(cycle_graph(6)), 1);
  Multigraph t = theta_graph({3, 3, 5});
  EXPECT_EQ(t.v(), 10);
  EXPECT_EQ(t.num_edges(), 11);
  EXPECT_EQ(cyclomatic(t), 2);
  EXPECT_EQ(cyclomatic(disjoint_union(path_graph(4), path_graph(3))), 0);
}

TEST(Bipartite, AgreesWithTwoColoring) {
  for (const auto& g : sample_multigraphs(150, 9)) EXPECT_EQ(is_bipartite(g), bipartite_by_coloring(g)) << g.to_edge_list();
}

TEST(CountCycles, ThetaGraph) {
  Multigraph t = theta_graph({3, 3, 5});
  EXPECT_TRUE(is_bipartite(t));
  EXPECT_EQ(count_cycles(t, 6), 1);
  EXPECT_EQ(count_cycles(t, 8), 2);
  for (int k : {1, 2, 3, 4, 5, 7, 9, 10}) EXPECT_EQ(count_cycles(t, k), 0) << k;
}

TEST(CountCycles, AgreesWithSubsetEnumeration) {
  for (const auto& g : sample_multigraphs(150, 13))
    for (int k = 1; k <= std::min(g.num_edges(), 8); ++k)
      EXPECT_EQ(count_cycles(g, k), cycles_by_edge_subsets(g, k)) << g.to_edge_list() << " k=" << k;
}

TEST(CountCycles, SingleCycleConcentrated) {
  for (int n = 3; n <= 9; ++n) {
    BigInt total = 0;
    for (int k = 1; k <= n; ++k) total += count_cycles(cycle_graph(n), k);
    EXPECT_EQ(total, 1);
    EXPECT_EQ(count_cycles(cycle_graph(n), n), 1);
  }
}

TEST(Census, CompleteGraphAndSquare) {
  auto k4 = small_subgraph_census(complete_graph(4));
  EXPECT_EQ(k4.t1, 4);
  EXPECT_EQ(k4.t2, 0);
  EXPECT_EQ(k4.t3, 1);
  auto c4 = small_subgraph_census(cycle_graph(4));
  EXPECT_EQ(c4.t1, 0);
  EXPECT_EQ(c4.t2, 1);
  EXPECT_EQ(c4.t3, 0);
}

TEST(Census, InducedSquaresByBruteForce) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    Multigraph g = random_simple_graph(7, 0.45, rng);
    auto adj = [&](int a, int b) {
      for (auto [x, y] : g.edges())
        if ((x == a && y == b) || (x == b && y == a)) return true;
      return false;
    };
    long tri = 0, sq = 0, k4 = 0;
    const int v = g.v();
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b)
        for (int c = b + 1; c < v; ++c) {
          if (adj(a, b) && adj(b, c) && adj(a, c)) ++tri;
          for (int d = c + 1; d < v; ++d) {
            int q[4] = {a, b, c, d};
            int e = 0;
            for (int i = 0; i < 4; ++i)
              for (int j = i + 1; j < 4; ++j) e += adj(q[i], q[j]);
            if (e == 6) ++k4;
            // induced 4-cycle: 4 edges, every vertex of degree 2
            if (e == 4) {
              bool deg2 = true;
              for (int i = 0; i < 4; ++i) {
                int dg = 0;
                for (int j = 0; j < 4; ++j) dg += i != j && adj(q[i], q[j]);
                deg2 = deg2 && dg == 2;
              }
              sq += deg2;
            }
          }
        }
    auto s = small_subgraph_census(g);
    EXPECT_EQ(s.t1, tri);
    EXPECT_EQ(s.t2, sq);
    EXPECT_EQ(s.t3, k4);
  }
}

TEST(Census, GirthPrefixProperty) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 80; ++t) {
    Multigraph g = random_simple_graph(8, 0.3, rng, true);
    GraphStats s = census(g);
    if (s.girth < 3) continue;
    for (int k = 2; k < s.girth; ++k) EXPECT_EQ(s.n_at(k), 0);
    EXPECT_GE(s.n_at(s.girth), 1);
  }
}

TEST(Simplify, Examples) {
  auto d = simplify(graph_from(2, {{0, 1}, {0, 1}}));
  EXPECT_EQ(d.graph.num_edges(), 1);
  EXPECT_EQ(d.mu, 1);
  auto c = simplify(cycle_graph(3));
  EXPECT_EQ(c.graph, cycle_graph(3));
  EXPECT_EQ(c.mu, 0);
  auto t = simplify(graph_from(2, {{0, 1}, {0, 1}, {0, 1}, {1, 1}}));
  EXPECT_EQ(t.graph.num_edges(), 1);
  EXPECT_FALSE(t.graph.has_loop());
  EXPECT_EQ(t.mu, 1);
}

TEST(Simplify, PreservesGirthAboveTwo) {
  for (const auto& g : sample_multigraphs(200, 29))
    if (girth(g) >= 3) {
      EXPECT_EQ(girth(simplify(g).graph), girth(g));
    }
}

TEST(Wedge, Examples) {
  Multigraph w = wedge(cycle_graph(3), cycle_graph(5));
  EXPECT_EQ(w.v(), 7);
  EXPECT_EQ(w.num_edges(), 8);
  EXPECT_EQ(girth(w), 3);
  Multigraph t = theta_graph({2, 3, 4});
  EXPECT_EQ(wedge(t, Multigraph(1)), t);
}

TEST(Wedge, GirthAndCyclomaticLaws) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    Multigraph a = random_simple_graph(6, 0.5, rng, true), b = random_simple_graph(5, 0.5, rng, true);
    if (girth(a) == 0 || girth(b) == 0) continue;
    Multigraph w = wedge(a, b);
    EXPECT_EQ(girth(w), std::min(girth(a), girth(b)));
    EXPECT_EQ(cyclomatic(w), cyclomatic(a) + cyclomatic(b));
  }
}

TEST(EdgeList, RoundTrip) {
  for (const auto& g : sample_multigraphs(30, 37)) EXPECT_EQ(Multigraph::from_edge_list(g.to_edge_list()), g);
  EXPECT_THROW(Multigraph::from_edge_list("2 1\n0 5\n"), std::exception);
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    Multigraph g = random_simple_graph(8, 0.4, rng);
    std::vector<int> perm(g.v());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Multigraph h(g.v());
    for (auto [a, b] : g.edges()) h.add_edge(perm[a], perm[b]);
    EXPECT_EQ(canonical_code(g), canonical_code(h));
  }
  EXPECT_NE(canonical_code(cycle_graph(6)), canonical_code(disjoint_union(cycle_graph(3), cycle_graph(3))));
  EXPECT_NE(canonical_code(theta_graph({3, 3, 5})), canonical_code(theta_graph({3, 4, 4})));
}
