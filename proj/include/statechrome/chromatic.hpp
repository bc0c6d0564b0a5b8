#pragma once

#include "statechrome/canonical.hpp"
#include "statechrome/multigraph.hpp"
#include "statechrome/polynomial.hpp"

#include <filesystem>
#include <fstream>
#include <future>
#include <mutex>
#include <optional>
#include <queue>
#include <shared_mutex>
#include <unordered_map>

namespace statechrome {

// Coefficients of P_G(q+1) by power of q: a[k] multiplies q^k.
struct QShiftedCoefficients {
  std::vector<BigInt> a;

  BigInt at(long k) const { return (k < 0 || k >= static_cast<long>(a.size())) ? BigInt(0) : a[k]; }
  long degree() const { return static_cast<long>(a.size()) - 1; }
};

inline QShiftedCoefficients shift_to_q(const IntPolynomial& p) { return {p.taylor_shift(1).coeffs()}; }

inline IntPolynomial shift_back(const QShiftedCoefficients& q) { return IntPolynomial(q.a).taylor_shift(-1); }

// Thread-safe memo keyed by canonical graph code, optionally mirrored to a
// directory of content-addressed JSON files.
class ChromaticCache {
 public:
  ChromaticCache() = default;
  explicit ChromaticCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(*dir_);
  }

  std::optional<IntPolynomial> get(const std::string& code) {
    {
      std::shared_lock lock(mu_);
      auto it = memo_.find(code);
      if (it != memo_.end()) {
        ++hits_;
        return it->second;
      }
    }
    if (dir_) {
      std::ifstream in(file_for(code));
      if (in) {
        try {
          auto j = nlohmann::json::parse(in);
          if (j.at("code").get<std::string>() == code) {
            auto p = IntPolynomial::from_json(j.at("poly"));
            std::unique_lock lock(mu_);
            memo_.emplace(code, p);
            ++hits_;
            return p;
          }
        } catch (const std::exception&) {
          // unreadable entry: recompute and overwrite
        }
      }
    }
    ++misses_;
    return std::nullopt;
  }

  void put(const std::string& code, const IntPolynomial& p) {
    {
      std::unique_lock lock(mu_);
      if (!memo_.emplace(code, p).second) return;
    }
    if (dir_) {
      auto path = file_for(code);
      auto tmp = path;
      tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
      {
        std::ofstream out(tmp);
        out << nlohmann::json{{"code", code}, {"poly", p.to_json()}}.dump() << "\n";
      }
      std::error_code ec;
      std::filesystem::rename(tmp, path, ec);
    }
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return memo_.size();
  }
  long hits() const { return hits_; }
  long misses() const { return misses_; }

 private:
  std::filesystem::path file_for(const std::string& code) const {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char ch : code) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return *dir_ / (std::string(buf) + ".json");
  }

  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, IntPolynomial> memo_;
  std::optional<std::filesystem::path> dir_;
  std::atomic<long> hits_{0}, misses_{0};
};

struct ChromaticOptions {
  ChromaticCache* cache = nullptr;  // nullptr disables memoization
  unsigned workers = 1;
  int memo_min_vertices = 5;
};

namespace detail {

inline IntPolynomial lambda_power(long k) { return IntPolynomial::monomial(static_cast<std::size_t>(k)); }

inline IntPolynomial lambda_minus_one_power(long k) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (long i = 0; i < k; ++i) p *= IntPolynomial::linear_root(1);
  return p;
}

// Simple graph kept as sorted adjacency sets.
struct SimpleGraph {
  std::vector<std::vector<int>> nb;

  int v() const { return static_cast<int>(nb.size()); }
  long e() const {
    long s = 0;
    for (const auto& x : nb) s += static_cast<long>(x.size());
    return s / 2;
  }
  static SimpleGraph from(const Multigraph& g) {
    SimpleGraph s;
    s.nb.resize(g.v());
    const Multigraph simple = simplify(g).graph;
    for (auto [a, b] : simple.edges()) {
      s.nb[a].push_back(b);
      s.nb[b].push_back(a);
    }
    for (auto& x : s.nb) std::sort(x.begin(), x.end());
    return s;
  }
  Multigraph to_multigraph() const {
    Multigraph g(v());
    for (int x = 0; x < v(); ++x)
      for (int y : nb[x])
        if (x < y) g.add_edge(x, y);
    return g;
  }
  SimpleGraph induced(const std::vector<int>& keep) const {
    std::vector<int> pos(v(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
    SimpleGraph s;
    s.nb.resize(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (int y : nb[keep[i]])
        if (pos[y] >= 0) s.nb[i].push_back(pos[y]);
    for (auto& x : s.nb) std::sort(x.begin(), x.end());
    return s;
  }
  SimpleGraph without_edge(int a, int b) const {
    SimpleGraph s = *this;
    s.nb[a].erase(std::find(s.nb[a].begin(), s.nb[a].end(), b));
    s.nb[b].erase(std::find(s.nb[b].begin(), s.nb[b].end(), a));
    return s;
  }
  // b merged into a, parallel edges collapsed
  SimpleGraph contracted(int a, int b) const {
    std::vector<int> keep;
    for (int x = 0; x < v(); ++x)
      if (x != b) keep.push_back(x);
    std::vector<int> pos(v());
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
    pos[b] = pos[a];
    SimpleGraph s;
    s.nb.resize(keep.size());
    for (int x = 0; x < v(); ++x)
      for (int y : nb[x]) {
        int px = pos[x], py = pos[y];
        if (px != py) s.nb[px].push_back(py);
      }
    for (auto& x : s.nb) {
      std::sort(x.begin(), x.end());
      x.erase(std::unique(x.begin(), x.end()), x.end());
    }
    return s;
  }
  std::vector<std::vector<int>> components() const {
    std::vector<int> seen(v(), 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < v(); ++s) {
      if (seen[s]) continue;
      std::vector<int> comp{s};
      seen[s] = 1;
      for (std::size_t k = 0; k < comp.size(); ++k)
        for (int y : nb[comp[k]])
          if (!seen[y]) {
            seen[y] = 1;
            comp.push_back(y);
          }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }
  // An edge closing a shortest cycle, or {-1,-1} for forests.
  std::pair<int, int> shortest_cycle_edge() const {
    int best = 0;
    std::pair<int, int> edge{-1, -1};
    std::vector<int> dist(v()), parent(v());
    for (int s = 0; s < v(); ++s) {
      std::fill(dist.begin(), dist.end(), -1);
      dist[s] = 0;
      parent[s] = -1;
      std::queue<int> q;
      q.push(s);
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (best && 2 * dist[x] + 1 >= best) break;
        for (int y : nb[x]) {
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            parent[y] = x;
            q.push(y);
          } else if (parent[x] != y) {
            int len = dist[x] + dist[y] + 1;
            if (!best || len < best) {
              best = len;
              edge = {x, y};
            }
          }
        }
      }
    }
    return edge;
  }
};

class ChromaticSolver {
 public:
  explicit ChromaticSolver(const ChromaticOptions& opt) : opt_(opt) {}

  IntPolynomial solve(SimpleGraph g, int depth = 0) {
    if (g.v() == 0) return IntPolynomial::constant(1);
    if (g.e() == 0) return lambda_power(g.v());
    auto comps = g.components();
    if (comps.size() > 1) {
      IntPolynomial p = IntPolynomial::constant(1);
      for (const auto& c : comps) p *= solve(g.induced(c), depth);
      return p;
    }
    // connected: peel pendant vertices, each a factor (lambda - 1)
    long peeled = 0;
    for (;;) {
      int leaf = -1;
      for (int x = 0; x < g.v(); ++x)
        if (g.nb[x].size() == 1) {
          leaf = x;
          break;
        }
      if (leaf < 0 || g.v() == 1) break;
      std::vector<int> keep;
      for (int x = 0; x < g.v(); ++x)
        if (x != leaf) keep.push_back(x);
      g = g.induced(keep);
      ++peeled;
    }
    IntPolynomial factor = lambda_minus_one_power(peeled);
    const long v = g.v(), e = g.e();
    if (v == 1) return factor * lambda_power(1);
    if (e == v) {
      // a connected graph without leaves and with E = v is a cycle
      IntPolynomial p = lambda_minus_one_power(v);
      IntPolynomial tail = IntPolynomial::linear_root(1);
      p += (v % 2 == 0) ? tail : IntPolynomial() - tail;
      return factor * p;
    }
    if (e == v * (v - 1) / 2) {
      IntPolynomial p = IntPolynomial::constant(1);
      for (long k = 0; k < v; ++k) p *= IntPolynomial::linear_root(k);
      return factor * p;
    }
    std::string code;
    if (opt_.cache && v >= opt_.memo_min_vertices) {
      code = canonical_code(g.to_multigraph());
      if (auto hit = opt_.cache->get(code)) return factor * *hit;
    }
    auto [a, b] = g.shortest_cycle_edge();
    IntPolynomial del, con;
    if ((1u << std::min(depth, 20)) < opt_.workers) {
      auto fut = std::async(std::launch::async, [&, gd = g.without_edge(a, b)] { return solve(gd, depth + 1); });
      con = solve(g.contracted(a, b), depth + 1);
      del = fut.get();
    } else {
      del = solve(g.without_edge(a, b), depth + 1);
      con = solve(g.contracted(a, b), depth + 1);
    }
    IntPolynomial p = del - con;
    if (!code.empty()) opt_.cache->put(code, p);
    return factor * p;
  }

 private:
  ChromaticOptions opt_;
};

}  // namespace detail

// Deletion-contraction on the simplification; zero polynomial with a loop.
inline IntPolynomial chromatic_polynomial(const Multigraph& g, const ChromaticOptions& opt = {}) {
  if (g.has_loop()) return {};
  return detail::ChromaticSolver(opt).solve(detail::SimpleGraph::from(g));
}

// Colorings counted through partitions of V into independent sets (each
// partition visited once as a restricted growth string), evaluated at
// lambda = 0..v and interpolated with exact rationals.
inline IntPolynomial brute_force_chromatic(const Multigraph& g, int max_vertices = 12) {
  const int n = g.v();
  if (n > max_vertices) throw BudgetError("brute-force chromatic polynomial limited to " + std::to_string(max_vertices) + " vertices");
  if (g.has_loop()) return {};
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [a, b] : g.edges()) adj[a][b] = adj[b][a] = 1;
  std::vector<BigInt> blocks(n + 1, 0);  // partitions with k independent blocks
  std::vector<int> block(n, -1);
  std::function<void(int, int)> rec = [&](int x, int used) {
    if (x == n) {
      ++blocks[used];
      return;
    }
    for (int k = 0; k <= used && k < n; ++k) {
      bool ok = true;
      for (int y = 0; y < x && ok; ++y)
        if (block[y] == k && adj[x][y]) ok = false;
      if (!ok) continue;
      block[x] = k;
      rec(x + 1, std::max(used, k + 1));
    }
    block[x] = -1;
  };
  rec(0, 0);
  std::vector<BigInt> count(n + 1, 0);
  for (int lam = 0; lam <= n; ++lam)
    for (int k = 0; k <= n; ++k) {
      if (blocks[k] == 0) continue;
      BigInt falling = 1;
      for (int t = 0; t < k; ++t) falling *= (lam - t);
      count[lam] += blocks[k] * falling;
    }
  // Lagrange interpolation through (lam, count[lam]).
  std::vector<BigRational> poly(n + 1, BigRational(0));
  for (int i = 0; i <= n; ++i) {
    if (count[i] == 0) continue;
    std::vector<BigRational> basis{BigRational(1)};
    BigRational denom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<BigRational> next(basis.size() + 1, BigRational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * j;
      }
      basis = std::move(next);
      denom *= (i - j);
    }
    for (std::size_t k = 0; k < basis.size(); ++k) poly[k] += basis[k] * BigRational(count[i]) / denom;
  }
  std::vector<BigInt> out;
  for (const auto& c : poly) {
    if (denominator(c) != 1) throw std::logic_error("chromatic interpolation produced a non-integer coefficient");
    out.push_back(numerator(c));
  }
  return IntPolynomial(std::move(out));
}

// c_v, c_{v-1}, ..., c_{v-l+1} for a graph of girth l > 2.
inline std::vector<BigInt> meredith_coeffs(long v, long E, int ell, const BigInt& n_ell) {
  (void)v;
  if (ell <= 2) throw PreconditionError("Meredith's coefficients need girth > 2");
  std::vector<BigInt> c;
  for (int i = 0; i < ell - 1; ++i) c.push_back((i % 2 ? -1 : 1) * binomial(E, i));
  const int i = ell - 1;
  c.push_back((i % 2 ? -1 : 1) * (binomial(E, i) - n_ell));
  return c;
}

// c_v, c_{v-1}, c_{v-2}, c_{v-3} of a simple graph.
inline std::array<BigInt, 4> farrell_coeffs(long v, long E, long t1, long t2, long t3) {
  (void)v;
  return {BigInt(1), BigInt(-E), binomial(E, 2) - t1, -binomial(E, 3) + BigInt(E - 2) * t1 + t2 - 2 * t3};
}

// (-1)^i (binom(p1 - 2 + i, i) - n_{i+1}), valid for 0 < i <= girth - 1.
inline BigInt a_coeff_closed(long p1, long i, const BigInt& n_next) {
  return (i % 2 ? -1 : 1) * (binomial(p1 - 2 + i, i) - n_next);
}

// The re-expansions of a_{v-4}, a_{v-5} through c-coefficients.
inline BigInt a_v4_from_c(long v, long E, long t1, const BigInt& c3, const BigInt& c4) {
  return binomial(v, 4) - E * binomial(v - 1, 3) + (binomial(E, 2) - t1) * binomial(v - 2, 2) + c3 * (v - 3) + c4;
}
inline BigInt a_v5_from_c(long v, long E, long t1, const BigInt& c3, const BigInt& c4, const BigInt& c5) {
  return binomial(v, 5) - E * binomial(v - 1, 4) + (binomial(E, 2) - t1) * binomial(v - 2, 3) + c3 * binomial(v - 3, 2) +
         c4 * (v - 4) + c5;
}

}  // namespace statechrome
