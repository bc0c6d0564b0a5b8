#pragma once

#include "statechrome/chromatic.hpp"
#include "statechrome/homology.hpp"
#include "statechrome/multigraph.hpp"

#include <vector>

namespace statechrome {

// Free ranks on the two diagonals of a connected graph's chromatic homology:
// r[i] at (i, v-i), s[i] at (i, v-i-1); tau[i] is the Z_2 rank at (i, v-i).
struct DiagonalRanks {
  std::vector<BigInt> r, s, tau;
};

// Knight-move reconstruction from the coefficients of P_G(q+1):
//   r0 = 1, s0 = d, s1 = 1 - d, s_i = r_{i-1} (i >= 2),
//   r_i = (-1)^i a_{v-i} + s_{i-1},  tau_i = s_i (i >= 1), tau_0 = 0.
inline DiagonalRanks diagonal_ranks(const QShiftedCoefficients& a, int v, int bipartite) {
  if (a.at(v) != 1) throw std::domain_error("leading coefficient of P(q+1) must be 1 for a nonempty loopless graph");
  DiagonalRanks d;
  const BigInt delta = bipartite ? 1 : 0;
  d.r.push_back(1);
  d.s.push_back(delta);
  d.tau.push_back(0);
  for (int i = 1; i <= v + 1; ++i) {
    BigInt s = (i == 1) ? BigInt(1) - delta : d.r[i - 1];
    BigInt r = (i % 2 ? -1 : 1) * a.at(v - i) + d.s[i - 1];
    if (r < 0 || s < 0)
      throw std::domain_error("knight-move recursion produced a negative rank at i=" + std::to_string(i) +
                              "; the polynomial does not come from a connected loopless graph");
    d.r.push_back(r);
    d.s.push_back(s);
    d.tau.push_back(s);
  }
  if (d.r.back() != 0 || d.s.back() != 0)
    throw std::domain_error("knight-move recursion does not terminate within v+1 steps");
  while (d.r.size() > 1 && d.r.back() == 0 && d.s.back() == 0 && d.tau.back() == 0) {
    d.r.pop_back();
    d.s.pop_back();
    d.tau.pop_back();
  }
  return d;
}

inline BigradedTable homology_from_polynomial(const QShiftedCoefficients& a, int v, int bipartite) {
  DiagonalRanks d = diagonal_ranks(a, v, bipartite);
  BigradedTable t;
  for (std::size_t i = 0; i < d.r.size(); ++i) {
    const int ii = static_cast<int>(i);
    t.add(ii, v - ii, static_cast<long>(d.r[i]), static_cast<long>(d.tau[i]));
    t.add(ii, v - ii - 1, static_cast<long>(d.s[i]), 0);
  }
  return t;
}

// Kunneth over Z for complexes whose homology has only Z and Z_2 summands.
// The differential raises i, so Tor(H^p, H^q) lands in degree p + q - 1.
inline BigradedTable kunneth_product(const BigradedTable& x, const BigradedTable& y) {
  if (x.has_other_torsion() || y.has_other_torsion()) throw std::domain_error("Kunneth product implemented for Z_2 torsion only");
  BigradedTable t;
  for (const auto& [k1, c1] : x.cells())
    for (const auto& [k2, c2] : y.cells()) {
      const int i = k1.first + k2.first, j = k1.second + k2.second;
      long free = c1.free * c2.free;
      long tor = c1.free * c2.tor2 + c1.tor2 * c2.free + c1.tor2 * c2.tor2;
      t.add(i, j, free, tor);
      if (c1.tor2 && c2.tor2) t.add(i - 1, j, 0, c1.tor2 * c2.tor2);
    }
  return t;
}

// Chromatic homology from the chromatic polynomial of each component.
inline BigradedTable chromatic_homology(const Multigraph& g, const ChromaticOptions& opt = {}) {
  if (g.has_loop()) return {};
  if (g.v() == 0) {
    BigradedTable t;
    t.set(0, 0, 1);
    return t;
  }
  const Multigraph s = simplify(g).graph;
  auto id = s.component_ids();
  const int k = *std::max_element(id.begin(), id.end()) + 1;
  BigradedTable total;
  for (int c = 0; c < k; ++c) {
    std::vector<int> pos(s.v(), -1);
    int nv = 0;
    for (int x = 0; x < s.v(); ++x)
      if (id[x] == c) pos[x] = nv++;
    Multigraph comp(nv);
    for (auto [a, b] : s.edges())
      if (id[a] == c) comp.add_edge(pos[a], pos[b]);
    BigradedTable part = homology_from_polynomial(shift_to_q(chromatic_polynomial(comp, opt)), nv, is_bipartite(comp) ? 1 : 0);
    total = (c == 0) ? part : kunneth_product(total, part);
  }
  return total;
}

// rk H^{i,v-i} for 0 < i < girth:
//   sum_{k = i-2r >= 0} binom(p1-2+k, k) - n_{i+1} + (-1)^{i+1} d
inline BigInt rank_girth_formula(long p1, long i, const BigInt& n_next, int bipartite) {
  BigInt sum = 0;
  for (long k = i; k >= 0; k -= 2) sum += binomial(p1 - 2 + k, k);
  return sum - n_next + ((i + 1) % 2 ? -1 : 1) * bipartite;
}

struct Rank45 {
  BigInt rank4, rank5;
};

// rk H^{4,v-4} and rk H^{5,v-5} of a simple connected graph.
inline Rank45 rank_grading_45(const Multigraph& g, const ChromaticOptions& opt = {}) {
  if (!g.is_simple() || !g.is_connected()) throw PreconditionError("rank_grading_45 needs a simple connected graph");
  const auto st = census(g, 0);
  const long v = g.v(), p1 = st.p1;
  const auto a = shift_to_q(chromatic_polynomial(g, opt));
  const BigInt a4 = a.at(v - 4), a5 = a.at(v - 5);
  Rank45 out;
  if (st.bipartite) {
    out.rank4 = binomial(p1, 2) + a4;
    out.rank5 = p1 + binomial(p1 + 1, 3) - st.t2 - a5;
  } else {
    out.rank4 = binomial(p1, 2) - st.t1 + 1 + a4;
    out.rank5 = p1 + binomial(p1 + 1, 3) - BigInt(st.t1) * (p1 - 1) - st.t2 + 2 * st.t3 - 1 - a5;
  }
  return out;
}

// First `count` power-series coefficients of 1 / ((1+x)(1-x)^p1).
inline std::vector<BigInt> genfun_ranks(long p1, int count) {
  if (p1 < 1) throw std::invalid_argument("genfun_ranks needs p1 >= 1");
  std::vector<BigInt> out;
  for (int n = 0; n < count; ++n) {
    BigInt c = 0;
    for (int k = 0; k <= n; ++k) c += ((n - k) % 2 ? -1 : 1) * binomial(p1 - 1 + k, k);
    out.push_back(c);
  }
  return out;
}

}  // namespace statechrome
