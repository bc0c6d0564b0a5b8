#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace statechrome;
using namespace testing_support;

namespace {

IntPolynomial poly(std::vector<long> c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return IntPolynomial(b);
}

// (lambda - 1)^n + (-1)^n (lambda - 1)
IntPolynomial cycle_chromatic(int n) {
  IntPolynomial lm1 = IntPolynomial::linear_root(1), p = IntPolynomial::constant(1);
  for (int i = 0; i < n; ++i) p *= lm1;
  return n % 2 ? p - lm1 : p + lm1;
}

// interpolate from direct coloring counts
IntPolynomial interpolated_colorings(const Multigraph& g) {
  const int n = g.v();
  std::vector<BigRational> out(n + 1, BigRational(0));
  for (int i = 0; i <= n; ++i) {
    std::vector<BigRational> basis{BigRational(1)};
    BigRational denom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<BigRational> next(basis.size() + 1, BigRational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * j;
      }
      basis = next;
      denom *= i - j;
    }
    BigRational y = count_colorings(g, i);
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] += basis[k] * y / denom;
  }
  std::vector<BigInt> c;
  for (const auto& r : out) c.push_back(numerator(r));
  return IntPolynomial(c);
}

std::vector<Multigraph> random_graphs(int count, std::uint64_t seed, bool connected = false) {
  std::mt19937_64 rng(seed);
  std::vector<Multigraph> out;
  for (int t = 0; t < count; ++t) {
    int v = 1 + static_cast<int>(rng() % 9);
    double p = 0.15 + 0.7 * static_cast<double>(rng() % 1000) / 1000.0;
    out.push_back(random_simple_graph(v, p, rng, connected));
  }
  return out;
}

}  // namespace

TEST(ChromaticPolynomial, Examples) {
  EXPECT_EQ(chromatic_polynomial(cycle_graph(3)), poly({0, 2, -3, 1}));
  EXPECT_EQ(chromatic_polynomial(cycle_graph(6)), poly({0, -5, 15, -20, 15, -6, 1}));
  EXPECT_EQ(chromatic_polynomial(cycle_graph(6)), cycle_chromatic(6));
  Multigraph loop(2);
  loop.add_edge(0, 1);
  loop.add_edge(1, 1);
  EXPECT_TRUE(chromatic_polynomial(loop).is_zero());
  EXPECT_TRUE(brute_force_chromatic(loop).is_zero());
}

TEST(ChromaticPolynomial, IgnoresParallelEdges) {
  Multigraph g(3);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {0, 1}, {1, 2}, {2, 0}, {2, 0}, {2, 0}}) g.add_edge(a, b);
  EXPECT_EQ(chromatic_polynomial(g), chromatic_polynomial(cycle_graph(3)));
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_chromatic(path_graph(2)), poly({0, -1, 1}));
  EXPECT_EQ(brute_force_chromatic(Multigraph(3)), poly({0, 0, 0, 1}));
  EXPECT_EQ(brute_force_chromatic(complete_graph(4)), poly({0, -6, 11, -6, 1}));
  EXPECT_THROW(brute_force_chromatic(cycle_graph(13)), BudgetError);
}

TEST(BruteForce, AgreesWithDirectColoringCount) {
  for (const auto& g : random_graphs(40, 3)) {
    if (g.v() > 7) continue;
    EXPECT_EQ(brute_force_chromatic(g), interpolated_colorings(g)) << g.to_edge_list();
  }
}

TEST(ChromaticPolynomial, AgreesWithBruteForceOnRandomGraphs) {
  for (const auto& g : random_graphs(200, 7)) EXPECT_EQ(chromatic_polynomial(g), brute_force_chromatic(g)) << g.to_edge_list();
}

TEST(ChromaticPolynomial, LargeCycleStructures) {
  EXPECT_EQ(chromatic_polynomial(cycle_graph(20)), cycle_chromatic(20));
  // wedge factorizes: P(G1 * G2) = P(G1) P(G2) / lambda
  Multigraph w = wedge(cycle_graph(7), theta_graph({3, 3, 5}));
  IntPolynomial prod = chromatic_polynomial(cycle_graph(7)) * chromatic_polynomial(theta_graph({3, 3, 5}));
  std::vector<BigInt> c(prod.coeffs().begin() + 1, prod.coeffs().end());
  EXPECT_EQ(chromatic_polynomial(w), IntPolynomial(c));
}

TEST(ChromaticPolynomial, CacheAndWorkersDoNotChangeResults) {
  auto dir = std::filesystem::temp_directory_path() / "statechrome_chromatic_test_cache";
  std::filesystem::remove_all(dir);
  ChromaticCache memo;
  ChromaticCache disk(dir);
  ChromaticOptions cached{&memo, 1, 3}, on_disk{&disk, 1, 3}, parallel{&memo, 4, 3};
  for (const auto& g : random_graphs(60, 11)) {
    IntPolynomial plain = chromatic_polynomial(g);
    EXPECT_EQ(chromatic_polynomial(g, cached), plain);
    EXPECT_EQ(chromatic_polynomial(g, parallel), plain);
    EXPECT_EQ(chromatic_polynomial(g, on_disk), plain);
  }
  EXPECT_GT(memo.hits(), 0);
  // a fresh cache over the same directory reads the stored entries back
  ChromaticCache reread(dir);
  ChromaticOptions again{&reread, 1, 3};
  for (const auto& g : random_graphs(60, 11)) EXPECT_EQ(chromatic_polynomial(g, again), chromatic_polynomial(g));
  EXPECT_GT(reread.hits(), 0);
  std::filesystem::remove_all(dir);
}

TEST(ShiftToQ, Examples) {
  auto a = shift_to_q(poly({0, -1, 1}));
  EXPECT_EQ(a.at(2), 1);
  EXPECT_EQ(a.at(1), 1);
  EXPECT_EQ(a.at(0), 0);
  Multigraph t = theta_graph({3, 3, 5});
  auto at = shift_to_q(chromatic_polynomial(t));
  EXPECT_EQ(at.at(t.v()), 1);
  EXPECT_EQ(at.at(t.v() - 1), -1);
  for (const auto& g : random_graphs(30, 13)) {
    IntPolynomial p = chromatic_polynomial(g);
    EXPECT_EQ(shift_back(shift_to_q(p)), p);
  }
}

TEST(ShiftToQ, EvaluationProperties) {
  for (const auto& g : random_graphs(100, 17)) {
    IntPolynomial p = chromatic_polynomial(g);
    auto a = shift_to_q(p);
    if (g.num_edges() > 0) {
      EXPECT_EQ(a.at(0), 0);
    }
    EXPECT_EQ(a.at(g.v()), 1);
    EXPECT_EQ(p.eval(BigInt(2)) > 0, is_bipartite(g));
  }
}

TEST(Meredith, Examples) {
  auto c6 = meredith_coeffs(6, 6, 6, 1);
  ASSERT_EQ(c6.size(), 6u);
  EXPECT_EQ(c6.back(), -5);
  IntPolynomial p6 = chromatic_polynomial(cycle_graph(6));
  for (int i = 0; i < 6; ++i) EXPECT_EQ(c6[i], p6.coeff(6 - i));

  Multigraph t = theta_graph({3, 3, 5});
  IntPolynomial pt = chromatic_polynomial(t);
  auto ct = meredith_coeffs(10, 11, 6, 1);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(pt.coeff(10 - i), (i % 2 ? -1 : 1) * binomial(11, i));
  for (int i = 0; i < 6; ++i) EXPECT_EQ(ct[i], pt.coeff(10 - i));

  EXPECT_THROW(meredith_coeffs(6, 6, 2, 1), PreconditionError);
}

TEST(Meredith, MatchesChromaticPolynomial) {
  for (const auto& g : random_graphs(150, 19)) {
    int ell = girth(g);
    if (ell <= 2) continue;
    auto c = meredith_coeffs(g.v(), g.num_edges(), ell, count_cycles(g, ell));
    IntPolynomial p = chromatic_polynomial(g);
    for (int i = 0; i < ell; ++i) EXPECT_EQ(c[i], p.coeff(g.v() - i)) << g.to_edge_list() << " i=" << i;
  }
}

TEST(Farrell, Examples) {
  auto k4 = farrell_coeffs(4, 6, 4, 0, 1);
  EXPECT_EQ(k4[0], 1);
  EXPECT_EQ(k4[1], -6);
  EXPECT_EQ(k4[2], 11);
  EXPECT_EQ(k4[3], -6);
  EXPECT_EQ(farrell_coeffs(4, 4, 0, 1, 0)[3], -3);
  EXPECT_EQ(chromatic_polynomial(cycle_graph(4)).coeff(1), -3);
  auto empty = farrell_coeffs(5, 0, 0, 0, 0);
  EXPECT_EQ(empty[0], 1);
  EXPECT_EQ(empty[1], 0);
  EXPECT_EQ(empty[2], 0);
  EXPECT_EQ(empty[3], 0);
}

TEST(Farrell, MatchesChromaticPolynomial) {
  for (const auto& g : random_graphs(150, 23)) {
    auto s = small_subgraph_census(g);
    auto c = farrell_coeffs(g.v(), g.num_edges(), s.t1, s.t2, s.t3);
    IntPolynomial p = chromatic_polynomial(g);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(c[i], p.coeff(g.v() - i)) << g.to_edge_list() << " i=" << i;
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(a_coeff_closed(2, 1, 0), -1);
  EXPECT_EQ(a_coeff_closed(2, 5, 1), 0);
  auto at = shift_to_q(chromatic_polynomial(theta_graph({3, 3, 5})));
  EXPECT_EQ(at.at(10 - 5), 0);
  for (int i = 1; i < 6; ++i) EXPECT_EQ(a_coeff_closed(1, i, 0), 0) << i;
  EXPECT_EQ(binomial(-1, 0), 1);
  EXPECT_EQ(binomial(4, 5), 0);
}

TEST(ClosedForm, MatchesShiftedCoefficients) {
  int checked = 0;
  for (const auto& g : random_graphs(200, 29, true)) {
    int ell = girth(g);
    if (ell <= 2) continue;
    auto a = shift_to_q(chromatic_polynomial(g));
    for (int i = 1; i <= ell - 1; ++i) {
      EXPECT_EQ(a_coeff_closed(cyclomatic(g), i, count_cycles(g, i + 1)), a.at(g.v() - i)) << g.to_edge_list() << " i=" << i;
      ++checked;
    }
  }
  for (int n = 3; n <= 9; ++n) {
    auto a = shift_to_q(chromatic_polynomial(cycle_graph(n)));
    for (int i = 1; i <= n - 1; ++i) EXPECT_EQ(a_coeff_closed(1, i, i + 1 == n ? 1 : 0), a.at(n - i));
  }
  EXPECT_GT(checked, 50);
}

TEST(ClosedForm, FifthAndSixthCoefficientsThroughC) {
  for (const auto& g : random_graphs(80, 31)) {
    const long v = g.v();
    if (v < 6) continue;
    auto s = small_subgraph_census(g);
    IntPolynomial p = chromatic_polynomial(g);
    auto a = shift_to_q(p);
    EXPECT_EQ(a_v4_from_c(v, g.num_edges(), s.t1, p.coeff(v - 3), p.coeff(v - 4)), a.at(v - 4));
    EXPECT_EQ(a_v5_from_c(v, g.num_edges(), s.t1, p.coeff(v - 3), p.coeff(v - 4), p.coeff(v - 5)), a.at(v - 5));
  }
}
