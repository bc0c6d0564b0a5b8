#pragma once

#include "statechrome/core.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace statechrome {

class SparseIntMatrix {
 public:
  SparseIntMatrix(int rows = 0, int cols = 0) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::map<std::pair<int, int>, BigInt>& nonzeros() const { return nz_; }

  void add(int r, int c, const BigInt& x) {
    if (r < 0 || c < 0 || r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    if (x == 0) return;
    auto& slot = nz_[{r, c}];
    slot += x;
    if (slot == 0) nz_.erase({r, c});
  }
  BigInt at(int r, int c) const {
    auto it = nz_.find({r, c});
    return it == nz_.end() ? BigInt(0) : it->second;
  }

  std::vector<std::vector<BigInt>> dense() const {
    std::vector<std::vector<BigInt>> m(rows_, std::vector<BigInt>(cols_, 0));
    for (const auto& [rc, x] : nz_) m[rc.first][rc.second] = x;
    return m;
  }

 private:
  int rows_, cols_;
  std::map<std::pair<int, int>, BigInt> nz_;
};

namespace detail {

struct Overflow {};

inline long long checked_mul_sub(long long a, long long b, long long c) {
  // a - b * c
  long long prod, out;
  if (__builtin_mul_overflow(b, c, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
  return out;
}
inline BigInt checked_mul_sub(const BigInt& a, const BigInt& b, const BigInt& c) { return a - b * c; }

inline long long abs_value(long long x) {
  if (x == std::numeric_limits<long long>::min()) throw Overflow{};
  return x < 0 ? -x : x;
}
inline BigInt abs_value(const BigInt& x) { return abs(x); }

// Sparse pivoting: repeatedly takes a pivot p that divides every entry of its
// row and column, preferring small |p| and then the Markowitz product, and
// removes that row and column. Returns the pivots and leaves the rest in
// `rows` for the dense phase.
template <class T>
struct SparseEliminator {
  using Row = std::vector<std::pair<int, T>>;  // sorted by column
  std::vector<Row> rows;
  std::vector<std::vector<int>> col_rows;  // may hold stale row ids
  std::vector<char> row_alive, col_alive;
  std::vector<T> pivots;

  SparseEliminator(int nrows, int ncols) : rows(nrows), col_rows(ncols), row_alive(nrows, 1), col_alive(ncols, 1) {}

  void finalize_columns() {
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      for (auto& [c, x] : rows[r]) col_rows[c].push_back(r);
  }

  const T* find(const Row& row, int c) const {
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int k) { return e.first < k; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  }

  std::vector<int> live_rows_of(int c) {
    auto& list = col_rows[c];
    std::vector<int> out;
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::vector<int> keep;
    for (int r : list)
      if (row_alive[r] && find(rows[r], c)) {
        out.push_back(r);
        keep.push_back(r);
      }
    list = std::move(keep);
    return out;
  }

  // target -= factor * src
  void axpy(int target, const T& factor, int src) {
    Row out;
    const Row& a = rows[target];
    const Row& b = rows[src];
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        T v = checked_mul_sub(T(0), factor, b[j].second);
        col_rows[b[j].first].push_back(target);
        out.emplace_back(b[j].first, v);
        ++j;
      } else {
        T v = checked_mul_sub(a[i].second, factor, b[j].second);
        if (v != 0) out.emplace_back(a[i].first, v);
        ++i, ++j;
      }
    }
    rows[target] = std::move(out);
  }

  void run() {
    for (;;) {
      // candidate pivots scanned over live rows; cheap rows first
      std::vector<int> order;
      for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        if (row_alive[r] && !rows[r].empty()) order.push_back(r);
      if (order.empty()) return;
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        return rows[x].size() != rows[y].size() ? rows[x].size() < rows[y].size() : x < y;
      });
      int eliminated = 0;
      for (int r : order) {
        if (!row_alive[r] || rows[r].empty()) continue;
        // best entry in this row
        int best_c = -1;
        T best_abs{};
        std::size_t best_cost = 0;
        for (auto& [c, x] : rows[r]) {
          T ax = abs_value(x);
          std::size_t cost = col_rows[c].size();
          if (best_c < 0 || ax < best_abs || (ax == best_abs && cost < best_cost)) {
            best_c = c;
            best_abs = ax;
            best_cost = cost;
          }
        }
        const T p = *find(rows[r], best_c);
        bool ok = true;
        for (auto& [c, x] : rows[r])
          if (x % p != 0) ok = false;
        std::vector<int> others;
        if (ok) {
          others = live_rows_of(best_c);
          for (int r2 : others)
            if (r2 != r && *find(rows[r2], best_c) % p != 0) ok = false;
        }
        if (!ok) continue;
        for (int r2 : others) {
          if (r2 == r) continue;
          T factor = *find(rows[r2], best_c) / p;
          axpy(r2, factor, r);
        }
        pivots.push_back(abs_value(p));
        row_alive[r] = 0;
        col_alive[best_c] = 0;
        rows[r].clear();
        ++eliminated;
      }
      if (!eliminated) return;
    }
  }
};

inline void dense_smith(std::vector<std::vector<BigInt>> m, std::vector<BigInt>& diag) {
  const int R = static_cast<int>(m.size());
  const int C = R ? static_cast<int>(m[0].size()) : 0;
  int t = 0;
  while (t < R && t < C) {
    // smallest nonzero entry in the remaining block
    int pr = -1, pc = -1;
    for (int i = t; i < R; ++i)
      for (int j = t; j < C; ++j)
        if (m[i][j] != 0 && (pr < 0 || abs(m[i][j]) < abs(m[pr][pc]))) pr = i, pc = j;
    if (pr < 0) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < R; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = m[i][t] / m[t][t];
        for (int j = t; j < C; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < C; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = m[t][j] / m[t][t];
        for (int i = t; i < R; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
}

// Turns any nonzero diagonal into invariant factors d1 | d2 | ...
inline std::vector<BigInt> normalize_diagonal(std::vector<BigInt> d) {
  std::vector<BigInt> ones, rest;
  for (auto& x : d) (x == 1 ? ones : rest).push_back(x);
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      BigInt g = gcd(rest[i], rest[j]);
      BigInt l = rest[i] / g * rest[j];
      rest[i] = g;
      rest[j] = l;
    }
  ones.insert(ones.end(), rest.begin(), rest.end());
  std::sort(ones.begin(), ones.end());
  return ones;
}

template <class T>
std::vector<BigInt> smith_with(const SparseIntMatrix& m) {
  SparseEliminator<T> el(m.rows(), m.cols());
  for (const auto& [rc, x] : m.nonzeros()) el.rows[rc.first].emplace_back(rc.second, static_cast<T>(x));
  el.finalize_columns();
  el.run();
  std::vector<BigInt> diag;
  for (const auto& p : el.pivots) diag.push_back(BigInt(p));
  std::vector<int> live_rows, live_cols;
  std::vector<int> col_pos(m.cols(), -1);
  for (int r = 0; r < m.rows(); ++r)
    if (el.row_alive[r] && !el.rows[r].empty()) live_rows.push_back(r);
  for (int r : live_rows)
    for (auto& [c, x] : el.rows[r])
      if (col_pos[c] < 0) {
        col_pos[c] = static_cast<int>(live_cols.size());
        live_cols.push_back(c);
      }
  std::vector<std::vector<BigInt>> rest(live_rows.size(), std::vector<BigInt>(live_cols.size(), 0));
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (auto& [c, x] : el.rows[live_rows[i]]) rest[i][col_pos[c]] = BigInt(x);
  dense_smith(std::move(rest), diag);
  return normalize_diagonal(std::move(diag));
}

}  // namespace detail

// Nonzero invariant factors, ascending, each dividing the next.
inline std::vector<BigInt> smith_invariants(const SparseIntMatrix& m) {
  bool small = true;
  for (const auto& [rc, x] : m.nonzeros())
    if (abs(x) > (BigInt(1) << 40)) small = false;
  if (small) {
    try {
      return detail::smith_with<long long>(m);
    } catch (const detail::Overflow&) {
    }
  }
  return detail::smith_with<BigInt>(m);
}

inline long matrix_rank(const SparseIntMatrix& m) { return static_cast<long>(smith_invariants(m).size()); }

}  // namespace statechrome
