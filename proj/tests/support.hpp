#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include "statechrome/statechrome.hpp"

#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace testing_support {

using namespace statechrome;

inline std::string data_path(const std::string& file) { return std::string(STATECHROME_DATA_DIR) + "/" + file; }

inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = read_corpus_file(data_path("corpus.tsv"));
  return c;
}

inline const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw std::out_of_range("no corpus entry " + name);
}

struct Reference {
  bool alternating = false;
  LaurentPolynomial jones;  // normalized, variable q
  BigradedTable kh;
};

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// Tabulated Jones polynomials and Khovanov homology for the corpus knots.
inline const std::map<std::string, Reference>& reference() {
  static const std::map<std::string, Reference> ref = [] {
    std::map<std::string, Reference> out;
    std::ifstream in(data_path("knotinfo_reference.tsv"));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      auto cols = split(line, '\t');
      Reference r;
      r.alternating = cols.at(1) == "Y";
      for (const auto& term : split(cols.at(2), ',')) {
        auto pos = term.find(':');
        r.jones.add_term(std::stol(term.substr(0, pos)), BigInt(std::stol(term.substr(pos + 1))));
      }
      for (const auto& cell : split(cols.at(3), ';')) {
        auto f = split(cell, ',');
        r.kh.add(std::stoi(f.at(0)), std::stoi(f.at(1)), std::stol(f.at(2)), std::stol(f.at(3)));
      }
      out[cols.at(0)] = std::move(r);
    }
    return out;
  }();
  return ref;
}

// Table 2: Kh(11a362) as printed, cells (p, q, free, tor2).
inline BigradedTable paper_table_kh_11a362() {
  BigradedTable t;
  for (auto [i, j, f, tor] : std::vector<std::array<int, 4>>{
           {0, -8, 1, 0},   {0, -10, 0, 1},  {-2, -12, 3, 0}, {-1, -12, 1, 0}, {-3, -14, 1, 0}, {-2, -14, 0, 3},
           {-4, -16, 3, 0}, {-3, -16, 3, 1}, {-5, -18, 3, 0}, {-4, -18, 1, 3}, {-6, -20, 2, 0}, {-5, -20, 3, 3},
           {-7, -22, 3, 0}, {-6, -22, 3, 2}, {-8, -24, 1, 0}, {-7, -24, 2, 3}, {-9, -26, 2, 0}, {-8, -26, 3, 1},
           {-9, -28, 1, 2}, {-11, -30, 1, 0}, {-10, -30, 2, 0}, {-11, -32, 1, 0}})
    t.add(i, j, f, tor);
  return t;
}

// Table 4: chromatic homology of theta(3,3,5), cells (i, j, free, tor2).
inline BigradedTable paper_table_theta_335() {
  BigradedTable t;
  for (auto [i, j, f, tor] : std::vector<std::array<int, 4>>{
           {0, 10, 1, 0}, {0, 9, 1, 0}, {1, 9, 2, 0}, {2, 8, 1, 2}, {2, 7, 2, 0}, {3, 7, 3, 1},
           {3, 6, 1, 0},  {4, 6, 2, 3}, {4, 5, 3, 0}, {5, 5, 3, 2}, {5, 4, 2, 0}, {6, 4, 2, 3},
           {6, 3, 3, 0},  {7, 3, 1, 2}, {7, 2, 2, 0}, {8, 2, 0, 1}, {8, 1, 1, 0}})
    t.add(i, j, f, tor);
  return t;
}

// Smith invariants from determinantal divisors: d_k = gcd of all k x k
// minors, invariant factor k = d_k / d_{k-1}. Exponential; tiny matrices only.
inline BigInt determinant(std::vector<std::vector<BigRational>> m) {
  const std::size_t n = m.size();
  BigRational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      BigRational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return numerator(det);
}

inline std::vector<BigInt> smith_by_minors(const std::vector<std::vector<BigInt>>& a) {
  const int R = static_cast<int>(a.size()), C = R ? static_cast<int>(a[0].size()) : 0;
  std::vector<BigInt> d{1};
  for (int k = 1; k <= std::min(R, C); ++k) {
    BigInt g = 0;
    std::vector<int> rows(k), cols(k);
    std::function<void(int, int)> pick_cols;
    std::function<void(int, int)> pick_rows = [&](int at, int from) {
      if (at == k) {
        pick_cols(0, 0);
        return;
      }
      for (int r = from; r < R; ++r) {
        rows[at] = r;
        pick_rows(at + 1, r + 1);
      }
    };
    pick_cols = [&](int at, int from) {
      if (at == k) {
        std::vector<std::vector<BigRational>> m(k, std::vector<BigRational>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) m[i][j] = BigRational(a[rows[i]][cols[j]]);
        g = gcd(g, abs(determinant(m)));
        return;
      }
      for (int c = from; c < C; ++c) {
        cols[at] = c;
        pick_cols(at + 1, c + 1);
      }
    };
    pick_rows(0, 0);
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<BigInt> inv;
  for (std::size_t k = 1; k < d.size(); ++k) inv.push_back(d[k] / d[k - 1]);
  return inv;
}

// Simple cycles of length k counted as edge subsets: every vertex of the
// subset has degree 2 and the subset is connected. Parallel edges count as
// distinct edges, loops as 1-cycles.
inline BigInt cycles_by_edge_subsets(const Multigraph& g, int k) {
  const auto& e = g.edges();
  const int m = static_cast<int>(e.size());
  if (m > 22) throw std::length_error("too many edges for subset enumeration");
  BigInt count = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> deg(g.v(), 0);
    Multigraph h(g.v());
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) {
        deg[e[i].first]++;
        deg[e[i].second]++;
        h.add_edge(e[i].first, e[i].second);
      }
    bool ok = true;
    int used = 0;
    for (int x = 0; x < g.v(); ++x) {
      if (deg[x] != 0 && deg[x] != 2) ok = false;
      used += deg[x] != 0;
    }
    if (!ok) continue;
    // connected on used vertices: components = (v - used) + 1
    if (h.num_components() == g.v() - used + 1) ++count;
  }
  return count;
}

// Proper colorings with `colors` colors by direct enumeration.
inline long count_colorings(const Multigraph& g, int colors) {
  std::vector<int> col(g.v(), 0);
  long total = 0;
  std::function<void(int)> rec = [&](int x) {
    if (x == g.v()) {
      for (auto [a, b] : g.edges())
        if (col[a] == col[b]) return;
      ++total;
      return;
    }
    for (int c = 0; c < colors; ++c) {
      col[x] = c;
      rec(x + 1);
    }
  };
  rec(0);
  return total;
}

}  // namespace testing_support
