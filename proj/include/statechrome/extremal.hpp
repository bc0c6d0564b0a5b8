#pragma once

#include "statechrome/chromatic.hpp"
#include "statechrome/chromhom.hpp"
#include "statechrome/diagram.hpp"
#include "statechrome/homology.hpp"
#include "statechrome/multigraph.hpp"
#include "statechrome/polynomial.hpp"

#include <optional>
#include <set>

namespace statechrome {

namespace detail {

// Circle bookkeeping for one Gray-code run: circle id per arc, updated by a
// merge (relabel one circle) or a split (walk the new circle) per flip.
class CircleTracker {
 public:
  CircleTracker(const LinkDiagram& d, std::vector<Smoothing> choice) : d_(d), choice_(std::move(choice)) {
    const int arcs = d.n_arcs();
    cid_.assign(arcs + 1, -1);
    for (int l = 1; l <= arcs; ++l) {
      if (cid_[l] >= 0) continue;
      int id = fresh_id();
      walk(l, id);
      ++count_;
    }
  }

  int circles() const { return count_ + d_.free_loops(); }

  void flip(int k) {
    const auto& x = d_.crossings()[k];
    const Smoothing old = choice_[k];
    // slot 0 and its opposite slot 2 always lie on different junctions
    const int c1 = cid_[x.arc[0]], c2 = cid_[x.arc[2]];
    choice_[k] = old == Smoothing::A ? Smoothing::B : Smoothing::A;
    if (c1 != c2) {
      for (int l = 1; l <= d_.n_arcs(); ++l)
        if (cid_[l] == c2) cid_[l] = c1;
      free_.push_back(c2);
      --count_;
    } else {
      int id = fresh_id();
      walk(x.arc[0], id);
      if (cid_[x.arc[2]] == id) {
        // one-crossing circle re-entered itself; still one circle
        free_.push_back(id);
        for (int l = 1; l <= d_.n_arcs(); ++l)
          if (cid_[l] == id) cid_[l] = c1;
      } else {
        ++count_;
      }
    }
  }

 private:
  int fresh_id() {
    if (!free_.empty()) {
      int id = free_.back();
      free_.pop_back();
      return id;
    }
    return next_id_++;
  }

  // Marks every arc on the circle through `start` with `id`.
  void walk(int start, int id) {
    int l = start;
    int end = 1;  // leave through the head
    do {
      cid_[l] = id;
      auto [ci, slot] = d_.arc_ends(l)[end];
      int p = smoothing_partner(slot, choice_[ci]);
      int next = d_.crossings()[ci].arc[p];
      const auto& e = d_.arc_ends(next);
      // entered `next` at (ci, p); leave through its other end
      end = (e[0] == std::make_pair(ci, p)) ? 1 : 0;
      l = next;
    } while (!(l == start && end == 1) && cid_[l] != id);
  }

  const LinkDiagram& d_;
  std::vector<Smoothing> choice_;
  std::vector<int> cid_;
  std::vector<int> free_;
  int next_id_ = 0;
  int count_ = 0;
};

}  // namespace detail

struct JonesOptions {
  int max_crossings = 20;
  unsigned workers = 1;
  int split_bits = 0;  // states partitioned by the top bits; 0 picks from workers
};

// Unnormalized Jones polynomial
//   (-1)^{c-} q^{c+ - 2c-} sum_s (-1)^{r(s)} q^{r(s)} (q + q^{-1})^{|s|}.
inline LaurentPolynomial jones_state_sum(const LinkDiagram& d, const JonesOptions& opt = {}) {
  const int n = d.num_crossings();
  if (n > opt.max_crossings)
    throw BudgetError("state sum limited to " + std::to_string(opt.max_crossings) + " crossings, got " + std::to_string(n));
  int split = opt.split_bits;
  if (split == 0)
    while ((1u << split) < opt.workers && split < n) ++split;
  split = std::min(split, n);
  const int low = n - split;
  const int max_circles = d.n_arcs() + d.free_loops() + 1;
  // tally[r][k]: states with r B-smoothings and k circles
  using Tally = std::vector<std::vector<std::uint64_t>>;
  std::vector<Tally> parts(std::size_t(1) << split, Tally(n + 1, std::vector<std::uint64_t>(max_circles + 1, 0)));
  parallel_for(
      parts.size(),
      [&](std::size_t chunk) {
        std::vector<Smoothing> choice(n, Smoothing::A);
        int r = 0;
        for (int b = 0; b < split; ++b)
          if (chunk >> b & 1) {
            choice[low + b] = Smoothing::B;
            ++r;
          }
        detail::CircleTracker tr(d, choice);
        auto& tally = parts[chunk];
        ++tally[r][tr.circles()];
        const std::uint64_t steps = std::uint64_t(1) << low;
        for (std::uint64_t i = 1; i < steps; ++i) {
          int k = std::countr_zero(i);
          r += (choice[k] == Smoothing::A) ? 1 : -1;
          choice[k] = choice[k] == Smoothing::A ? Smoothing::B : Smoothing::A;
          tr.flip(k);
          ++tally[r][tr.circles()];
        }
      },
      opt.workers);
  LaurentPolynomial sum;
  std::vector<LaurentPolynomial> powers{LaurentPolynomial::monomial(0)};
  for (int k = 1; k <= max_circles; ++k) powers.push_back(powers.back() * LaurentPolynomial::q_plus_qinv());
  for (int r = 0; r <= n; ++r)
    for (int k = 0; k <= max_circles; ++k) {
      BigInt count = 0;
      for (const auto& t : parts) count += t[r][k];
      if (count == 0) continue;
      LaurentPolynomial term = powers[k].shifted(r);
      for (const auto& [e, a] : term.terms()) sum.add_term(e, (r % 2 ? -1 : 1) * count * a);
    }
  const int cp = d.c_plus(), cm = d.c_minus();
  LaurentPolynomial out = sum.shifted(cp - 2 * cm);
  return cm % 2 ? out.negated() : out;
}

inline LaurentPolynomial normalize_jones(const LaurentPolynomial& p) { return p.divided_by_q_plus_qinv(); }

// Coefficients of a polynomial in q supported in one parity class, lowest
// degree first, including interior zeros.
inline std::vector<BigInt> coefficient_run(const LaurentPolynomial& p, int step = 2) {
  std::vector<BigInt> out;
  if (p.is_zero()) return out;
  for (long e = p.min_degree(); e <= p.max_degree(); e += step) out.push_back(p.coeff(e));
  return out;
}

// Homologically thin: every group sits on one of two adjacent diagonals
// j - 2i = const.
inline bool is_thin(const BigradedTable& t) {
  if (t.empty()) return true;
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (const auto& [k, c] : t.cells()) {
    int diag = k.second - 2 * k.first;
    lo = std::min(lo, diag);
    hi = std::max(hi, diag);
  }
  return hi - lo <= 2;
}

// Predicted groups at some bidegrees. `full` keys predict free rank and Z_2
// rank; `torsion_only` keys predict only the Z_2 rank.
struct KhPrediction {
  BigradedTable table;
  std::set<std::pair<int, int>> full;
  std::set<std::pair<int, int>> torsion_only;
  int girth_used = 0;
  GraphStats stats;
  int N = 0;
  int c_minus = 0;

  void predict(int i, int j, long free, long tor2) {
    table.set(i, j, free, tor2);
    full.insert({i, j});
    torsion_only.erase({i, j});
  }
  void predict_torsion(int i, int j, long tor2) {
    if (full.count({i, j})) throw std::logic_error("torsion-only prediction over a full one");
    HomologyCell c = table.at(i, j);
    c.tor2 = tor2;
    table.set(i, j, c);
    torsion_only.insert({i, j});
  }

  nlohmann::json to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (auto [i, j] : full) rows.push_back({{"i", i}, {"j", j}, {"rank", table.free(i, j)}, {"tor2", table.tor2(i, j)}});
    for (auto [i, j] : torsion_only) rows.push_back({{"i", i}, {"j", j}, {"tor2", table.tor2(i, j)}});
    return {{"girth", girth_used}, {"N", N}, {"c_minus", c_minus}, {"stats", stats.to_json()}, {"groups", rows}};
  }
};

// Mismatches between a prediction and a full table.
inline std::vector<TableDiff> compare_prediction(const KhPrediction& p, const BigradedTable& oracle) {
  std::vector<TableDiff> out;
  for (auto [i, j] : p.full) {
    HomologyCell e = p.table.at(i, j), a = oracle.at(i, j);
    if (e.free != a.free || e.tor2 != a.tor2 || !a.other_torsion.empty()) out.push_back({i, j, e, a});
  }
  for (auto [i, j] : p.torsion_only) {
    HomologyCell e = p.table.at(i, j), a = oracle.at(i, j);
    if (e.tor2 != a.tor2 || !a.other_torsion.empty()) out.push_back({i, j, e, a});
  }
  return out;
}

// Knight-move ranks for 0 <= i < girth from the girth formula, plus the Z_2
// rank at i = girth. Only valid for girth > 2.
inline KhPrediction kh_extremal_prediction(const LinkDiagram& d) {
  const Multigraph g = g_plus(d);
  KhPrediction p;
  p.stats = census(g);
  p.girth_used = p.stats.girth;
  const int ell = p.girth_used;
  if (ell <= 2) throw PreconditionError("girth of G+ is " + std::to_string(ell) + "; the girth formula needs girth > 2");
  const int cm = d.c_minus(), N = n_grading(d), delta = p.stats.bipartite;
  p.N = N;
  p.c_minus = cm;
  const long p1 = p.stats.p1;
  std::vector<long> r(ell, 0);
  r[0] = 1;
  for (int i = 1; i < ell; ++i) r[i] = static_cast<long>(rank_girth_formula(p1, i, p.stats.n_at(i + 1), delta));
  for (int i = 0; i < ell; ++i) {
    long tor = (i == 0) ? 0 : (i == 1 ? 1 - delta : r[i - 1]);
    long second = (i == 0) ? delta : (i == 1 ? 1 - delta : r[i - 1]);
    p.predict(i - cm, N + 2 * i, r[i], tor);
    p.predict(i - cm, N + 2 * i + 2, second, 0);
  }
  p.predict_torsion(ell - cm, N + 2 * ell, r[ell - 1]);
  return p;
}

// Head-side groups of d from the tail-side prediction for mirror(d), through
// Kh^{i,j}(m L) = Hom(Kh^{-i,-j}(L)) + Ext(Kh^{1-i,-j}(L)).
inline KhPrediction kh_head_prediction(const LinkDiagram& d) {
  KhPrediction m = kh_extremal_prediction(mirror(d));
  KhPrediction p;
  p.girth_used = m.girth_used;
  p.stats = m.stats;
  p.N = m.N;
  p.c_minus = m.c_minus;
  std::map<std::pair<int, int>, long> free, tor;
  std::set<std::pair<int, int>> full_free, tor_keys;
  for (auto [i, j] : m.full) {
    free[{-i, -j}] = m.table.free(i, j);
    full_free.insert({-i, -j});
    tor[{1 - i, -j}] = m.table.tor2(i, j);
    tor_keys.insert({1 - i, -j});
  }
  for (auto [i, j] : m.torsion_only) {
    tor[{1 - i, -j}] = m.table.tor2(i, j);
    tor_keys.insert({1 - i, -j});
  }
  // a key is fully predicted only when both its free part and its torsion are
  for (auto key : full_free)
    if (tor_keys.count(key)) p.predict(key.first, key.second, free[key], tor[key]);
  for (auto key : tor_keys)
    if (!p.full.count(key)) p.predict_torsion(key.first, key.second, tor[key]);
  return p;
}

struct LowGradings {
  BigradedTable table;
  int girth = 0;
};

// Groups Kh^{-c,N}, Kh^{-c,N+2}, Kh^{1-c,N+2} (girth >= 2) and Kh^{2-c,N+4}
// (girth >= 3). p1 and t1 are taken on the simplification of G+.
inline LowGradings kh_low_gradings(const LinkDiagram& d) {
  const Multigraph g = g_plus(d);
  LowGradings out;
  out.girth = girth(g);
  if (out.girth < 2) throw PreconditionError("girth of G+ is " + std::to_string(out.girth) + "; need at least 2");
  const auto simple = simplify(g).graph;
  const long p1 = cyclomatic(simple);
  const long t1 = small_subgraph_census(simple).t1;
  const bool bip = is_bipartite(g);
  const int cm = d.c_minus(), N = n_grading(d);
  out.table.set(-cm, N, 1, 0);
  out.table.set(-cm, N + 2, bip ? 1 : 0, 0);
  if (bip)
    out.table.set(1 - cm, N + 2, p1, 0);
  else
    out.table.set(1 - cm, N + 2, p1 - 1, 1);
  if (out.girth >= 3) {
    if (bip)
      out.table.set(2 - cm, N + 4, static_cast<long>(binomial(p1, 2)), p1);
    else
      out.table.set(2 - cm, N + 4, static_cast<long>(binomial(p1, 2)) - t1 + 1, p1 - 1);
  }
  return out;
}

// rk Kh^{3-c,N+6}, girth >= 4.
inline BigInt kh_grading_3(const LinkDiagram& d) {
  const Multigraph g = g_plus(d);
  const int ell = girth(g);
  if (ell < 4) throw PreconditionError("grading 3 formula needs girth >= 4, got " + std::to_string(ell));
  const long p1 = cyclomatic(g);
  const long t2 = small_subgraph_census(g).t2;
  const int delta = is_bipartite(g) ? 1 : 0;
  return p1 + binomial(p1 + 1, 3) - t2 - (1 - delta);
}

struct Grading45 {
  BigInt rank4;                 // rk Kh^{4-c,N+8}, girth >= 5
  std::optional<BigInt> rank5;  // rk Kh^{5-c,N+10}, girth >= 6
};

inline Grading45 kh_grading_45(const LinkDiagram& d, const ChromaticOptions& opt = {}) {
  const Multigraph g = g_plus(d);
  const int ell = girth(g);
  if (ell < 5) throw PreconditionError("grading 4 formula needs girth >= 5, got " + std::to_string(ell));
  const long v = g.v(), p1 = cyclomatic(g);
  const bool bip = is_bipartite(g);
  const auto a = shift_to_q(chromatic_polynomial(g, opt));
  Grading45 out;
  out.rank4 = binomial(p1, 2) + a.at(v - 4) + (bip ? 0 : 1);
  if (ell >= 6) out.rank5 = p1 + binomial(p1 + 1, 3) - a.at(v - 5) - (bip ? 0 : 1);
  return out;
}

// First `ell` tail coefficients of the normalized Jones polynomial of a thin
// link whose G+ has girth ell > 2.
inline std::vector<BigInt> jones_tail(long p1, int ell, const BigInt& n_ell, int c_minus) {
  if (ell <= 2) throw PreconditionError("Jones tail formula needs girth > 2");
  std::vector<BigInt> beta;
  auto sgn = [&](long i) { return ((i - c_minus) % 2 == 0) ? 1 : -1; };
  for (long i = 0; i <= ell - 2; ++i) beta.push_back(sgn(i) * binomial(p1 - 1 + i, i));
  const long i = ell - 1;
  beta.push_back(sgn(i) * (binomial(p1 - 1 + i, i) - n_ell));
  return beta;
}

// Head coefficients, highest degree first, from G- data and c+.
inline std::vector<BigInt> jones_head(long p1_minus, int ell_minus, const BigInt& n_ell_minus, int c_plus) {
  return jones_tail(p1_minus, ell_minus, n_ell_minus, c_plus);
}

// (1, -p1, binom(p1+1,2) + mu - t1), up to overall sign.
inline std::array<BigInt, 3> dasbach_lin(const GraphStats& s) {
  return {BigInt(1), BigInt(-s.p1), binomial(s.p1 + 1, 2) + s.mu - s.t1};
}

// Mismatches in the chromatic-to-Khovanov correspondence for a diagram
// whose G+ has girth ell >= 2: H^{i,j}(G+) = Kh^{i-c_-, v-2j+c_+-2c_-} for
// 0 <= i < ell (every Kh group in those homological degrees is covered), and
// the Z_2 parts agree at i = ell.
inline std::vector<TableDiff> correspondence_diff(const LinkDiagram& d, const BigradedTable& kh, const Multigraph& g,
                                                  const BigradedTable& h) {
  const int ell = girth(g), v = g.v(), cp = d.c_plus(), cm = d.c_minus();
  if (ell < 2) throw PreconditionError("correspondence needs girth >= 2");
  BigradedTable image;
  std::set<std::pair<int, int>> keys;
  std::vector<TableDiff> out;
  for (const auto& [k, c] : h.cells()) {
    const int p = k.first - cm, q = v - 2 * k.second + cp - 2 * cm;
    if (k.first < ell) {
      image.set(p, q, c);
      keys.insert({p, q});
    } else if (k.first == ell && c.tor2 != kh.tor2(p, q)) {
      out.push_back({p, q, c, kh.at(p, q)});
    }
  }
  for (const auto& [k, c] : kh.cells()) {
    const int i = k.first + cm;
    if (i >= 0 && i < ell) keys.insert(k);
    if (i == ell && c.tor2 && !h.tor2(ell, (v + cp - 2 * cm - k.second) / 2)) out.push_back({k.first, k.second, {}, c});
  }
  auto main = diff_tables(image, kh, keys);
  out.insert(out.begin(), main.begin(), main.end());
  return out;
}

}  // namespace statechrome
