#pragma once

#include "statechrome/diagram.hpp"
#include "statechrome/multigraph.hpp"
#include "statechrome/polynomial.hpp"
#include "statechrome/smith.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace statechrome {

struct HomologyCell {
  long free = 0;
  long tor2 = 0;
  std::vector<BigInt> other_torsion;  // invariant factors other than 2

  bool empty() const { return free == 0 && tor2 == 0 && other_torsion.empty(); }
  friend bool operator==(const HomologyCell&, const HomologyCell&) = default;
};

// (homological, quantum) -> group. Absent keys are zero groups.
class BigradedTable {
 public:
  using Key = std::pair<int, int>;

  const std::map<Key, HomologyCell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }

  HomologyCell at(int i, int j) const {
    auto it = cells_.find({i, j});
    return it == cells_.end() ? HomologyCell{} : it->second;
  }
  long free(int i, int j) const { return at(i, j).free; }
  long tor2(int i, int j) const { return at(i, j).tor2; }

  void set(int i, int j, const HomologyCell& c) {
    if (c.free < 0 || c.tor2 < 0) throw std::invalid_argument("negative rank in homology table");
    if (c.empty())
      cells_.erase({i, j});
    else
      cells_[{i, j}] = c;
  }
  void set(int i, int j, long free, long tor2 = 0) {
    HomologyCell c = at(i, j);
    c.free = free;
    c.tor2 = tor2;
    set(i, j, c);
  }
  void add(int i, int j, long free, long tor2 = 0) {
    HomologyCell c = at(i, j);
    c.free += free;
    c.tor2 += tor2;
    set(i, j, c);
  }

  bool has_other_torsion() const {
    for (const auto& [k, c] : cells_)
      if (!c.other_torsion.empty()) return true;
    return false;
  }

  BigradedTable translated(int di, int dj) const {
    BigradedTable t;
    for (const auto& [k, c] : cells_) t.cells_[{k.first + di, k.second + dj}] = c;
    return t;
  }

  int min_i() const { return bounds().first; }
  int max_i() const { return bounds().second; }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : cells_) {
      nlohmann::json rec = {{"i", k.first}, {"j", k.second}, {"rank", c.free}, {"tor2", c.tor2}};
      if (!c.other_torsion.empty()) {
        nlohmann::json o = nlohmann::json::array();
        for (const auto& x : c.other_torsion) o.push_back(x.str());
        rec["other_torsion"] = o;
      }
      arr.push_back(rec);
    }
    return arr;
  }
  static BigradedTable from_json(const nlohmann::json& arr) {
    BigradedTable t;
    for (const auto& rec : arr) {
      HomologyCell c;
      c.free = rec.at("rank").get<long>();
      c.tor2 = rec.at("tor2").get<long>();
      if (rec.contains("other_torsion"))
        for (const auto& x : rec["other_torsion"]) c.other_torsion.emplace_back(x.get<std::string>());
      t.set(rec.at("i").get<int>(), rec.at("j").get<int>(), c);
    }
    return t;
  }

  // Rows are quantum gradings (descending), columns homological gradings.
  // "2,3_2" stands for Z^2 + Z_2^3.
  std::string to_text(const std::string& row_label = "j", const std::string& col_label = "i") const {
    if (cells_.empty()) return "(zero)\n";
    std::set<int> is, js;
    for (const auto& [k, c] : cells_) {
      is.insert(k.first);
      js.insert(k.second);
    }
    auto render = [](const HomologyCell& c) {
      std::string s;
      if (c.free) s += std::to_string(c.free);
      if (c.tor2) s += (s.empty() ? "" : ",") + std::to_string(c.tor2) + "_2";
      for (const auto& x : c.other_torsion) s += (s.empty() ? "" : ",") + std::string("Z/") + x.str();
      return s;
    };
    const int lo = *is.begin(), hi = *is.rbegin();
    std::size_t width = 4;
    for (const auto& [k, c] : cells_) width = std::max(width, render(c).size() + 1);
    std::ostringstream out;
    auto pad = [&](const std::string& s) {
      out << std::string(width > s.size() ? width - s.size() : 0, ' ') << s;
    };
    pad(row_label + "\\" + col_label);
    for (int i = lo; i <= hi; ++i) pad(std::to_string(i));
    out << "\n";
    for (auto it = js.rbegin(); it != js.rend(); ++it) {
      pad(std::to_string(*it));
      for (int i = lo; i <= hi; ++i) pad(render(at(i, *it)));
      out << "\n";
    }
    return out.str();
  }

  friend bool operator==(const BigradedTable& a, const BigradedTable& b) { return a.cells_ == b.cells_; }

 private:
  std::pair<int, int> bounds() const {
    if (cells_.empty()) return {0, 0};
    int lo = cells_.begin()->first.first, hi = lo;
    for (const auto& [k, c] : cells_) {
      lo = std::min(lo, k.first);
      hi = std::max(hi, k.first);
    }
    return {lo, hi};
  }
  std::map<Key, HomologyCell> cells_;
};

// Sum of (-1)^i rank q^j over free parts.
inline LaurentPolynomial euler_characteristic(const BigradedTable& t) {
  LaurentPolynomial p;
  for (const auto& [k, c] : t.cells()) p.add_term(k.second, (k.first % 2 == 0 ? 1 : -1) * BigInt(c.free));
  return p;
}

// Entrywise difference report; empty when the tables agree on `keys` (or on
// every key of either table when `keys` is empty).
struct TableDiff {
  int i, j;
  HomologyCell expected, actual;
};
inline std::vector<TableDiff> diff_tables(const BigradedTable& expected, const BigradedTable& actual,
                                          const std::set<std::pair<int, int>>& keys = {}) {
  std::set<std::pair<int, int>> all = keys;
  if (all.empty()) {
    for (const auto& [k, c] : expected.cells()) all.insert(k);
    for (const auto& [k, c] : actual.cells()) all.insert(k);
  }
  std::vector<TableDiff> out;
  for (auto [i, j] : all) {
    auto e = expected.at(i, j), a = actual.at(i, j);
    if (!(e == a)) out.push_back({i, j, e, a});
  }
  return out;
}

// ---- cube of resolutions over Z[x]/(x^2) ----

struct CubeOptions {
  unsigned workers = 1;
  bool check_d_squared = true;
};

namespace detail {

// Each cube vertex s (bitmask over n edges) partitions a fixed set of atoms
// into components. Generators are (s, mask) with mask bit c set when component
// c carries x. Flipping a 0-bit to 1 merges two components, splits one, or
// keeps the partition; the induced map is multiplication, comultiplication or
// the identity.
class CubeComplex {
 public:
  enum class EdgeKind : unsigned char { Merge, Split, Identity };
  struct EdgeMap {
    EdgeKind kind;
    std::vector<signed char> image;  // component of s -> component of s' (-1 for the split one)
    int from1 = -1, from2 = -1;      // merge: the two source components
    int to1 = -1, to2 = -1;          // split: the two target components; merge: to1
    int split_from = -1;
  };

  // comps[s][atom] = component id, ids 0..count-1
  CubeComplex(int n, std::vector<std::vector<signed char>> comps) : n_(n), comps_(std::move(comps)) {
    count_.resize(comps_.size());
    base_.resize(comps_.size() + 1, 0);
    for (std::size_t s = 0; s < comps_.size(); ++s) {
      int k = 0;
      for (auto c : comps_[s]) k = std::max(k, c + 1);
      count_[s] = k;
      if (k > 30) throw BudgetError("too many circles in one resolution");
      base_[s + 1] = base_[s] + (1LL << k);
    }
    if (base_.back() > (1LL << 31)) throw BudgetError("cube complex too large");
    edges_.resize(comps_.size() * n_);
    for (std::size_t s = 0; s < comps_.size(); ++s)
      for (int k = 0; k < n_; ++k)
        if (!(s >> k & 1)) edges_[s * n_ + k] = make_edge(s, s | (1u << k));
  }

  int n() const { return n_; }
  int components(std::size_t s) const { return count_[s]; }

  // grade(s, mask) must be preserved by every edge map. Returns per-grade
  // homology keyed by (r = |s|, grade).
  template <class Grade>
  std::map<std::pair<int, int>, HomologyCell> homology(Grade grade, const CubeOptions& opt) const {
    // group generators by grade
    std::map<int, std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>> by_grade;
    for (std::size_t s = 0; s < comps_.size(); ++s) {
      int r = std::popcount(static_cast<unsigned>(s));
      for (std::uint32_t m = 0; m < (1u << count_[s]); ++m) {
        auto& per_r = by_grade[grade(s, m)];
        if (per_r.empty()) per_r.resize(n_ + 1);
        per_r[r].push_back({static_cast<std::uint32_t>(s), m});
      }
    }
    std::vector<int> grades;
    for (auto& [g, v] : by_grade) grades.push_back(g);
    std::vector<std::map<int, HomologyCell>> results(grades.size());
    parallel_for(
        grades.size(),
        [&](std::size_t gi) { results[gi] = homology_of_grade(by_grade.at(grades[gi]), opt); },
        opt.workers);
    std::map<std::pair<int, int>, HomologyCell> out;
    for (std::size_t gi = 0; gi < grades.size(); ++gi)
      for (auto& [r, c] : results[gi])
        if (!c.empty()) out[{r, grades[gi]}] = c;
    return out;
  }

 private:
  EdgeMap make_edge(std::size_t s, std::size_t t) const {
    EdgeMap e;
    const auto& a = comps_[s];
    const auto& b = comps_[t];
    const int ks = count_[s], kt = count_[t];
    std::vector<std::set<int>> fwd(ks);
    for (std::size_t x = 0; x < a.size(); ++x) fwd[a[x]].insert(b[x]);
    e.image.assign(ks, -1);
    if (kt == ks) {
      e.kind = EdgeKind::Identity;
      for (int c = 0; c < ks; ++c) e.image[c] = static_cast<signed char>(*fwd[c].begin());
    } else if (kt == ks - 1) {
      e.kind = EdgeKind::Merge;
      std::vector<int> hit(kt, -1);
      for (int c = 0; c < ks; ++c) {
        int d = *fwd[c].begin();
        e.image[c] = static_cast<signed char>(d);
        if (hit[d] >= 0) {
          e.from1 = hit[d];
          e.from2 = c;
          e.to1 = d;
        }
        hit[d] = c;
      }
    } else if (kt == ks + 1) {
      e.kind = EdgeKind::Split;
      for (int c = 0; c < ks; ++c) {
        if (fwd[c].size() == 2) {
          e.split_from = c;
          e.to1 = *fwd[c].begin();
          e.to2 = *fwd[c].rbegin();
        } else {
          e.image[c] = static_cast<signed char>(*fwd[c].begin());
        }
      }
    } else {
      throw std::logic_error("cube edge changes component count by more than one");
    }
    return e;
  }

  // Applies the edge map to generator mask m; appends (target mask, coeff).
  static void apply(const EdgeMap& e, std::uint32_t m, std::vector<std::pair<std::uint32_t, int>>& out) {
    std::uint32_t base = 0;
    for (std::size_t c = 0; c < e.image.size(); ++c)
      if (e.image[c] >= 0 && (m >> c & 1) && !(e.kind == EdgeKind::Merge && (int(c) == e.from1 || int(c) == e.from2)))
        base |= 1u << e.image[c];
    switch (e.kind) {
      case EdgeKind::Identity:
        out.push_back({base, 1});
        break;
      case EdgeKind::Merge: {
        int x1 = m >> e.from1 & 1, x2 = m >> e.from2 & 1;
        if (x1 && x2) break;  // x*x = 0
        out.push_back({base | ((x1 | x2) ? 1u << e.to1 : 0u), 1});
        break;
      }
      case EdgeKind::Split: {
        if (m >> e.split_from & 1) {
          out.push_back({base | 1u << e.to1 | 1u << e.to2, 1});
        } else {
          out.push_back({base | 1u << e.to1, 1});
          out.push_back({base | 1u << e.to2, 1});
        }
        break;
      }
    }
  }

  using Gen = std::pair<std::uint32_t, std::uint32_t>;

  // differential from per_r[r] into per_r[r+1]
  SparseIntMatrix differential(const std::vector<std::vector<Gen>>& per_r, int r,
                               const std::vector<std::map<Gen, int>>& index) const {
    SparseIntMatrix d(static_cast<int>(per_r[r + 1].size()), static_cast<int>(per_r[r].size()));
    std::vector<std::pair<std::uint32_t, int>> terms;
    for (std::size_t col = 0; col < per_r[r].size(); ++col) {
      auto [s, m] = per_r[r][col];
      for (int k = 0; k < n_; ++k) {
        if (s >> k & 1) continue;
        int sign = (std::popcount(s & ((1u << k) - 1)) % 2) ? -1 : 1;
        terms.clear();
        apply(edges_[s * n_ + k], m, terms);
        std::uint32_t t = s | (1u << k);
        for (auto [m2, coeff] : terms) {
          auto it = index[r + 1].find({t, m2});
          if (it == index[r + 1].end()) throw std::logic_error("differential leaves its grade");
          d.add(it->second, static_cast<int>(col), sign * coeff);
        }
      }
    }
    return d;
  }

  static void check_square_zero(const SparseIntMatrix& d1, const SparseIntMatrix& d0) {
    // (d1 * d0) == 0
    std::map<int, std::vector<std::pair<int, BigInt>>> rows_of_d1_by_col;
    for (const auto& [rc, x] : d1.nonzeros()) rows_of_d1_by_col[rc.second].push_back({rc.first, x});
    std::map<std::pair<int, int>, BigInt> prod;
    for (const auto& [rc, x] : d0.nonzeros()) {
      auto it = rows_of_d1_by_col.find(rc.first);
      if (it == rows_of_d1_by_col.end()) continue;
      for (const auto& [row, y] : it->second) prod[{row, rc.second}] += y * x;
    }
    for (const auto& [k, v] : prod)
      if (v != 0) throw std::logic_error("differential does not square to zero");
  }

  std::map<int, HomologyCell> homology_of_grade(const std::vector<std::vector<Gen>>& per_r, const CubeOptions& opt) const {
    std::vector<std::map<Gen, int>> index(n_ + 1);
    for (int r = 0; r <= n_; ++r)
      for (std::size_t i = 0; i < per_r[r].size(); ++i) index[r][per_r[r][i]] = static_cast<int>(i);
    std::vector<long> rank(n_ + 1, 0);
    std::vector<std::vector<BigInt>> inv(n_ + 1);
    SparseIntMatrix prev;
    for (int r = 0; r < n_; ++r) {
      if (per_r[r].empty() || per_r[r + 1].empty()) {
        prev = SparseIntMatrix();
        continue;
      }
      SparseIntMatrix d = differential(per_r, r, index);
      if (opt.check_d_squared && prev.rows() == d.cols() && prev.rows() > 0) check_square_zero(d, prev);
      inv[r] = smith_invariants(d);
      rank[r] = static_cast<long>(inv[r].size());
      prev = std::move(d);
    }
    std::map<int, HomologyCell> out;
    for (int r = 0; r <= n_; ++r) {
      HomologyCell c;
      c.free = static_cast<long>(per_r[r].size()) - rank[r] - (r > 0 ? rank[r - 1] : 0);
      if (r > 0)
        for (const auto& x : inv[r - 1]) {
          if (x == 2)
            ++c.tor2;
          else if (x != 1)
            c.other_torsion.push_back(x);
        }
      if (!c.empty()) out[r] = c;
    }
    return out;
  }

  int n_;
  std::vector<std::vector<signed char>> comps_;
  std::vector<int> count_;
  std::vector<long long> base_;
  std::vector<EdgeMap> edges_;
};

}  // namespace detail

struct KhovanovOptions {
  int max_crossings = 12;
  CubeOptions cube;
};

// Integral Khovanov homology. Homological grading (#B) - c-, quantum grading
// (#1 - #x) + (#B) + c+ - 2c-.
inline BigradedTable khovanov_homology(const LinkDiagram& d, const KhovanovOptions& opt = {}) {
  const int n = d.num_crossings();
  if (n > opt.max_crossings)
    throw BudgetError("Khovanov oracle limited to " + std::to_string(opt.max_crossings) + " crossings, got " + std::to_string(n));
  const int free_loops = d.free_loops();
  std::vector<std::vector<signed char>> comps(std::size_t(1) << n);
  for (std::size_t s = 0; s < comps.size(); ++s) {
    std::vector<Smoothing> ch(n);
    for (int k = 0; k < n; ++k) ch[k] = (s >> k & 1) ? Smoothing::B : Smoothing::A;
    KauffmanState st = resolve(d, ch);
    std::vector<signed char> atoms(d.n_arcs() + free_loops);
    for (int l = 1; l <= d.n_arcs(); ++l) atoms[l - 1] = static_cast<signed char>(st.circle_of_arc[l]);
    for (int f = 0; f < free_loops; ++f) atoms[d.n_arcs() + f] = static_cast<signed char>(st.size() - free_loops + f);
    comps[s] = std::move(atoms);
  }
  detail::CubeComplex cube(n, std::move(comps));
  auto raw = cube.homology(
      [&](std::size_t s, std::uint32_t m) {
        int k = cube.components(s);
        int x = std::popcount(m);
        return (k - 2 * x) + std::popcount(static_cast<unsigned>(s));
      },
      opt.cube);
  BigradedTable t;
  const int cp = d.c_plus(), cm = d.c_minus();
  for (const auto& [key, cell] : raw) t.set(key.first - cm, key.second + cp - 2 * cm, cell);
  return t;
}

struct ChromaticHomologyOptions {
  int max_vertices = 12;
  int max_edges = 14;
  CubeOptions cube;
};

// Spanning-subgraph cube over Z[x]/(x^2): i = number of edges, j = number of
// components labeled x (deg 1 = 0, deg x = 1, so H^{0,v} carries x^{(v)}).
inline BigradedTable chromatic_homology_bruteforce(const Multigraph& g, const ChromaticHomologyOptions& opt = {}) {
  if (g.v() > opt.max_vertices || g.num_edges() > opt.max_edges)
    throw BudgetError("chromatic homology oracle limited to v <= " + std::to_string(opt.max_vertices) + ", E <= " +
                      std::to_string(opt.max_edges));
  const int n = g.num_edges();
  std::vector<std::vector<signed char>> comps(std::size_t(1) << n);
  for (std::size_t s = 0; s < comps.size(); ++s) {
    Multigraph h(g.v());
    for (int k = 0; k < n; ++k)
      if (s >> k & 1) h.add_edge(g.edges()[k].first, g.edges()[k].second);
    auto id = h.component_ids();
    comps[s].assign(id.begin(), id.end());
  }
  detail::CubeComplex cube(n, std::move(comps));
  auto raw = cube.homology([](std::size_t, std::uint32_t m) { return std::popcount(m); }, opt.cube);
  BigradedTable t;
  for (const auto& [key, cell] : raw) t.set(key.first, key.second, cell);
  return t;
}

}  // namespace statechrome
