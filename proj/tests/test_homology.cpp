#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace statechrome;
using namespace testing_support;

namespace {

SparseIntMatrix from_dense(const std::vector<std::vector<long>>& rows) {
  SparseIntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c]) m.add(static_cast<int>(r), static_cast<int>(c), BigInt(rows[r][c]));
  return m;
}

std::vector<BigInt> ints(std::vector<long> v) { return {v.begin(), v.end()}; }

// Kh of the mirror: free parts reflect (i,j) -> (-i,-j), torsion moves to (1-i,-j).
BigradedTable mirror_table(const BigradedTable& t) {
  BigradedTable m;
  for (const auto& [k, c] : t.cells()) {
    m.add(-k.first, -k.second, c.free, 0);
    m.add(1 - k.first, -k.second, 0, c.tor2);
  }
  return m;
}

std::string show(const BigradedTable& t) { return t.to_json().dump(); }

}  // namespace

TEST(Smith, Examples) {
  EXPECT_EQ(smith_invariants(from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), ints({1, 1, 1}));
  EXPECT_EQ(smith_invariants(from_dense({{2, 0}, {0, 0}})), ints({2}));
  EXPECT_EQ(smith_invariants(from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})), ints({2, 6, 12}));
  EXPECT_EQ(matrix_rank(SparseIntMatrix(3, 4)), 0);
}

TEST(Smith, AgreesWithDeterminantalDivisors) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 120; ++t) {
    int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<long>> a(r, std::vector<long>(c, 0));
    std::vector<std::vector<BigInt>> b(r, std::vector<BigInt>(c, 0));
    const bool sparse = t % 2;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        if (sparse && rng() % 3) continue;
        a[i][j] = static_cast<long>(rng() % 13) - 6;
        b[i][j] = a[i][j];
      }
    EXPECT_EQ(smith_invariants(from_dense(a)), smith_by_minors(b)) << "trial " << t;
  }
}

TEST(Smith, LargeSparseRank) {
  // incidence matrix of a cycle: rank n - 1, single invariant factor pattern 1..1
  const int n = 40;
  SparseIntMatrix m(n, n);
  for (int k = 0; k < n; ++k) {
    m.add(k, k, BigInt(1));
    m.add(k, (k + 1) % n, BigInt(-1));
  }
  auto inv = smith_invariants(m);
  EXPECT_EQ(inv.size(), static_cast<std::size_t>(n - 1));
  for (const auto& d : inv) EXPECT_EQ(d, 1);
}

TEST(Khovanov, Unknot) {
  BigradedTable kh = khovanov_homology(LinkDiagram::unknot());
  BigradedTable expect;
  expect.add(0, 1, 1);
  expect.add(0, -1, 1);
  EXPECT_EQ(kh, expect);
  EXPECT_EQ(euler_characteristic(kh), LaurentPolynomial::q_plus_qinv());
}

TEST(Khovanov, TrefoilAgainstTable) {
  const auto& ref = reference().at("3_1");
  EXPECT_EQ(khovanov_homology(corpus_entry("3_1").diagram()), ref.kh);
}

TEST(Khovanov, BudgetEnforced) {
  KhovanovOptions opt;
  opt.max_crossings = 5;
  EXPECT_THROW(khovanov_homology(corpus_entry("7_1").diagram(), opt), BudgetError);
}

TEST(Khovanov, AgreesWithTabulatedHomology) {
  int checked = 0;
  for (const auto& e : corpus()) {
    if (e.mirror) continue;
    auto it = reference().find(e.name);
    if (it == reference().end() || it->second.kh.empty()) continue;
    LinkDiagram d = e.diagram();
    if (d.num_crossings() > 10) continue;
    BigradedTable kh = khovanov_homology(d);
    EXPECT_FALSE(kh.has_other_torsion()) << e.name;
    EXPECT_EQ(kh, it->second.kh) << e.name << "\n ours " << show(kh) << "\n ref  " << show(it->second.kh);
    ++checked;
  }
  EXPECT_GE(checked, 200);
}

TEST(Khovanov, EulerCharacteristicIsStateSum) {
  for (const auto& e : corpus()) {
    LinkDiagram d = e.diagram();
    if (d.num_crossings() > 9) continue;
    EXPECT_EQ(euler_characteristic(khovanov_homology(d)), jones_state_sum(d)) << e.name;
  }
}

TEST(Khovanov, ReidemeisterOneInvariance) {
  for (const char* name : {"3_1", "4_1", "5_2", "6_1", "7_4"}) {
    LinkDiagram d = corpus_entry(name).diagram();
    BigradedTable kh = khovanov_homology(d);
    EXPECT_EQ(khovanov_homology(add_kink(d, +1)), kh) << name;
    EXPECT_EQ(khovanov_homology(add_kink(d, -1, 3)), kh) << name;
    EXPECT_EQ(khovanov_homology(detail::relabel_by_traversal(d)), kh) << name;
  }
}

TEST(Khovanov, MirrorReflectsTable) {
  for (const char* name : {"3_1", "5_1", "6_2", "7_7", "8_19"}) {
    LinkDiagram d = corpus_entry(name).diagram();
    EXPECT_EQ(khovanov_homology(mirror(d)), mirror_table(khovanov_homology(d))) << name;
  }
}

TEST(Khovanov, HopfLinkAndDisjointUnion) {
  LinkDiagram hopf = parse_pd("X[4,1,3,2] X[2,3,1,4]");
  BigradedTable kh = khovanov_homology(hopf);
  long total = 0;
  for (const auto& [k, c] : kh.cells()) total += c.free;
  EXPECT_EQ(total, 4);
  EXPECT_EQ(euler_characteristic(kh), jones_state_sum(hopf));
  // two free loops: (q + q^-1)^2 concentrated in degree 0
  BigradedTable two = khovanov_homology(parse_pd("O2"));
  EXPECT_EQ(two.free(0, 2), 1);
  EXPECT_EQ(two.free(0, 0), 2);
  EXPECT_EQ(two.free(0, -2), 1);
}

TEST(Khovanov, Table2IsATranslateOfTheOracle) {
  // KnotInfo's 11a362 has c+ = 11 and G+ = theta(3,3,5); the printed table is
  // the oracle table shifted by (-11, -33).
  LinkDiagram d = corpus_entry("11a362").diagram();
  ASSERT_EQ(d.c_plus(), 11);
  BigradedTable kh = khovanov_homology(d);
  EXPECT_EQ(kh, reference().at("11a362").kh);
  BigradedTable shifted = kh.translated(-11, -33);
  EXPECT_EQ(shifted, paper_table_kh_11a362()) << show(shifted);
  EXPECT_EQ(shifted.at(-11, -32).free, 1);
  EXPECT_EQ(shifted.at(-4, -18).free, 1);
  EXPECT_EQ(shifted.at(-4, -18).tor2, 3);
  EXPECT_EQ(shifted.at(0, -8).free, 1);
  EXPECT_EQ(euler_characteristic(shifted),
            LaurentPolynomial::parse("-q^{-32}+q^{-30}-q^{-28}+q^{-26}-q^{-24}-q^{-20}-2q^{-18}-q^{-14}+2q^{-12}+q^{-8}"));
}

TEST(ChromaticOracle, SmallExamples) {
  BigradedTable edge = chromatic_homology_bruteforce(path_graph(2));
  BigradedTable expect;
  expect.add(0, 2, 1);
  expect.add(0, 1, 1);
  EXPECT_EQ(edge, expect);

  BigradedTable c3 = chromatic_homology_bruteforce(cycle_graph(3));
  EXPECT_EQ(euler_characteristic(c3), LaurentPolynomial::parse("q^3-q"));
  for (const auto& [k, c] : c3.cells()) {
    int diag = 3 - k.first - k.second;
    EXPECT_TRUE(diag == 0 || diag == 1) << k.first << "," << k.second;
  }
}

TEST(ChromaticOracle, ThetaGraphIsTable4) {
  BigradedTable h = chromatic_homology_bruteforce(theta_graph({3, 3, 5}));
  EXPECT_EQ(h, paper_table_theta_335()) << show(h);
}

TEST(ChromaticOracle, BudgetEnforced) { EXPECT_THROW(chromatic_homology_bruteforce(complete_graph(6)), BudgetError); }

TEST(ChromaticOracle, DependsOnlyOnSimplification) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 25; ++t) {
    Multigraph g = random_simple_graph(5 + static_cast<int>(rng() % 3), 0.4, rng);
    if (g.num_edges() == 0 || g.num_edges() > 10) continue;
    Multigraph fat = g;
    for (int k = 0; k < 2; ++k) {
      auto [a, b] = g.edges()[rng() % g.edges().size()];
      fat.add_edge(a, b);
    }
    EXPECT_EQ(chromatic_homology_bruteforce(fat), chromatic_homology_bruteforce(g)) << g.to_edge_list();
  }
}

TEST(ChromaticOracle, TwoDiagonalsOnlyTwoTorsion) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    Multigraph g = random_simple_graph(3 + static_cast<int>(rng() % 5), 0.5, rng, true);
    if (g.num_edges() > 11) continue;
    BigradedTable h = chromatic_homology_bruteforce(g);
    EXPECT_FALSE(h.has_other_torsion());
    for (const auto& [k, c] : h.cells()) {
      int diag = g.v() - k.first - k.second;
      EXPECT_TRUE(diag == 0 || diag == 1) << g.to_edge_list();
    }
    LaurentPolynomial expect;
    auto a = shift_to_q(chromatic_polynomial(g));
    for (long k = 0; k <= a.degree(); ++k) expect.add_term(k, a.at(k));
    EXPECT_EQ(euler_characteristic(h), expect) << g.to_edge_list();
  }
}
