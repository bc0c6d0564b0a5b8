#pragma once

#include "statechrome/core.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace statechrome {

// Undirected multigraph with loops. Edges are stored normalized (u <= w).
class Multigraph {
 public:
  using Edge = std::pair<int, int>;

  Multigraph() = default;
  explicit Multigraph(int v) : v_(v) {
    if (v < 0) throw std::invalid_argument("negative vertex count");
  }
  Multigraph(int v, const std::vector<Edge>& edges) : Multigraph(v) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  int v() const { return v_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  int add_vertex() { return v_++; }
  void add_edge(int a, int b) {
    if (a < 0 || b < 0 || a >= v_ || b >= v_)
      throw std::out_of_range("edge endpoint out of range: " + std::to_string(a) + "," + std::to_string(b));
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }

  bool has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.first == e.second; });
  }
  bool has_multi_edge() const {
    auto m = multiplicities();
    return std::any_of(m.begin(), m.end(), [](const auto& kv) { return kv.first.first != kv.first.second && kv.second > 1; });
  }
  bool is_simple() const { return !has_loop() && !has_multi_edge(); }

  // Non-loop edge classes with their multiplicities.
  std::map<Edge, int> multiplicities() const {
    std::map<Edge, int> m;
    for (const auto& e : edges_) ++m[e];
    return m;
  }

  // Neighbor lists with repetition; a loop contributes its vertex twice.
  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(v_);
    for (auto [a, b] : edges_) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    return adj;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(v_, 0);
    for (auto [a, b] : edges_) {
      ++d[a];
      ++d[b];
    }
    return d;
  }

  // Component id per vertex, numbered by smallest member.
  std::vector<int> component_ids() const {
    std::vector<int> parent(v_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [a, b] : edges_) {
      int ra = find(a), rb = find(b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<int> id(v_, -1), root_id(v_, -1);
    int next = 0;
    for (int x = 0; x < v_; ++x) {
      int r = find(x);
      if (root_id[r] < 0) root_id[r] = next++;
      id[x] = root_id[r];
    }
    return id;
  }
  int num_components() const {
    auto id = component_ids();
    return id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  }
  bool is_connected() const { return num_components() <= 1; }

  // Edge-list text: "v m" then m lines "a b".
  std::string to_edge_list() const {
    std::ostringstream out;
    out << v_ << " " << edges_.size() << "\n";
    for (auto [a, b] : edges_) out << a << " " << b << "\n";
    return out.str();
  }
  static Multigraph from_edge_list(std::istream& in) {
    long v = -1, m = -1;
    if (!(in >> v >> m) || v < 0 || m < 0) throw ParseError("edge list: expected header 'v m'");
    Multigraph g(static_cast<int>(v));
    for (long i = 0; i < m; ++i) {
      long a, b;
      if (!(in >> a >> b)) throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
      if (a < 0 || b < 0 || a >= v || b >= v) throw ParseError("edge list: endpoint out of range on edge " + std::to_string(i));
      g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
    return g;
  }
  static Multigraph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list(in);
  }

  nlohmann::json to_json() const {
    nlohmann::json e = nlohmann::json::array();
    for (auto [a, b] : edges_) e.push_back({a, b});
    return {{"v", v_}, {"edges", e}};
  }

  friend bool operator==(const Multigraph& g, const Multigraph& h) {
    if (g.v_ != h.v_) return false;
    auto a = g.edges_, b = h.edges_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

 private:
  int v_ = 0;
  std::vector<Edge> edges_;
};

// ---- generators ----

inline Multigraph cycle_graph(int n) {
  if (n < 1) throw std::invalid_argument("cycle needs at least one vertex");
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Multigraph path_graph(int n) {
  Multigraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Multigraph complete_graph(int n) {
  Multigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// Two poles (vertices 0 and 1) joined by internally disjoint paths of the
// given edge lengths.
inline Multigraph theta_graph(const std::vector<int>& arms) {
  Multigraph g(2);
  for (int len : arms) {
    if (len < 1) throw std::invalid_argument("theta arm length must be positive");
    int prev = 0;
    for (int k = 1; k < len; ++k) {
      int x = g.add_vertex();
      g.add_edge(prev, x);
      prev = x;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

// Vertex 0 of g2 is identified with vertex 0 of g1.
inline Multigraph wedge(const Multigraph& g1, const Multigraph& g2) {
  if (g1.v() == 0 || g2.v() == 0) throw std::invalid_argument("wedge of an empty graph");
  Multigraph g(g1.v() + g2.v() - 1);
  for (auto [a, b] : g1.edges()) g.add_edge(a, b);
  auto map = [&](int x) { return x == 0 ? 0 : x + g1.v() - 1; };
  for (auto [a, b] : g2.edges()) g.add_edge(map(a), map(b));
  return g;
}

inline Multigraph disjoint_union(const Multigraph& g1, const Multigraph& g2) {
  Multigraph g(g1.v() + g2.v());
  for (auto [a, b] : g1.edges()) g.add_edge(a, b);
  for (auto [a, b] : g2.edges()) g.add_edge(a + g1.v(), b + g1.v());
  return g;
}

// Erdos-Renyi style graph; `connected` resamples until connected.
inline Multigraph random_simple_graph(int v, double p, std::mt19937_64& rng, bool connected = false) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    Multigraph g(v);
    for (int i = 0; i < v; ++i)
      for (int j = i + 1; j < v; ++j)
        if (coin(rng)) g.add_edge(i, j);
    if (!connected || g.is_connected()) return g;
  }
}

// ---- invariants ----

struct Simplification {
  Multigraph graph;
  int mu = 0;
};

// Loops deleted, parallel classes collapsed; mu counts classes of size >= 2.
inline Simplification simplify(const Multigraph& g) {
  Simplification s{Multigraph(g.v()), 0};
  for (const auto& [e, m] : g.multiplicities()) {
    if (e.first == e.second) continue;
    s.graph.add_edge(e.first, e.second);
    if (m >= 2) ++s.mu;
  }
  return s;
}

inline int cyclomatic(const Multigraph& g) { return g.num_edges() - g.v() + g.num_components(); }

inline bool is_bipartite(const Multigraph& g) {
  auto adj = g.adjacency();
  std::vector<int> color(g.v(), -1);
  for (int s = 0; s < g.v(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          q.push(y);
        } else if (color[y] == color[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline int girth(const Multigraph& g) {
  if (g.has_loop()) return 1;
  if (g.has_multi_edge()) return 2;
  auto adj = g.adjacency();
  int best = 0;
  std::vector<int> dist(g.v()), parent(g.v());
  for (int s = 0; s < g.v(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      if (best && 2 * dist[x] + 1 >= best) break;
      for (int y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          int len = dist[x] + dist[y] + 1;
          if (!best || len < best) best = len;
        }
      }
    }
  }
  return best;
}

// Number of cycles with exactly k distinct vertices, counted as edge sets, so
// a vertex cycle through parallel classes counts once per choice of edges.
inline BigInt count_cycles(const Multigraph& g, int k) {
  if (k < 1) throw std::invalid_argument("cycle length must be >= 1");
  auto mult = g.multiplicities();
  if (k == 1) {
    BigInt loops = 0;
    for (const auto& [e, m] : mult)
      if (e.first == e.second) loops += m;
    return loops;
  }
  if (k == 2) {
    BigInt pairs = 0;
    for (const auto& [e, m] : mult)
      if (e.first != e.second) pairs += binomial(m, 2);
    return pairs;
  }
  const int n = g.v();
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (const auto& [e, m] : mult) {
    if (e.first == e.second) continue;
    adj[e.first].push_back({e.second, m});
    adj[e.second].push_back({e.first, m});
  }
  BigInt total = 0;
  std::vector<char> on_path(n, 0);
  // Canonical start: the smallest vertex of the cycle. Every other vertex is
  // larger; each cycle is found once per direction.
  for (int s = 0; s < n; ++s) {
    std::function<void(int, int, long)> dfs = [&](int x, int depth, long weight) {
      for (auto [y, m] : adj[x]) {
        if (y == s && depth == k) {
          total += weight * m;
        } else if (y > s && !on_path[y] && depth < k) {
          on_path[y] = 1;
          dfs(y, depth + 1, weight * m);
          on_path[y] = 0;
        }
      }
    };
    on_path[s] = 1;
    dfs(s, 1, 1);
    on_path[s] = 0;
  }
  return total / 2;
}

struct SubgraphCounts {
  long t1 = 0;  // triangles
  long t2 = 0;  // induced 4-cycles
  long t3 = 0;  // K4 subgraphs
};

// Counted on the simplification.
inline SubgraphCounts small_subgraph_census(const Multigraph& g) {
  const Multigraph s = simplify(g).graph;
  const int n = s.v();
  std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
  std::vector<std::vector<int>> nb(n);
  for (auto [x, y] : s.edges()) {
    a[x][y] = a[y][x] = 1;
    nb[x].push_back(y);
    nb[y].push_back(x);
  }
  SubgraphCounts c;
  for (auto [x, y] : s.edges()) {
    // x < y; common neighbours above y give triangles, pairs of those give K4s.
    std::vector<int> common;
    for (int z : nb[x])
      if (z > y && a[y][z]) common.push_back(z);
    c.t1 += static_cast<long>(common.size());
    for (std::size_t i = 0; i < common.size(); ++i)
      for (std::size_t j = i + 1; j < common.size(); ++j)
        if (a[common[i]][common[j]]) ++c.t3;
  }
  long twice = 0;
  for (int x = 0; x < n; ++x)
    for (int z = x + 1; z < n; ++z) {
      if (a[x][z]) continue;
      std::vector<int> common;
      for (int y : nb[x])
        if (a[z][y]) common.push_back(y);
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
          if (!a[common[i]][common[j]]) ++twice;
    }
  c.t2 = twice / 2;
  return c;
}

struct GraphStats {
  int v = 0;
  int edges = 0;
  int girth = 0;
  int p1 = 0;
  int bipartite = 0;
  std::map<int, BigInt> n;  // cycle length -> count
  long t1 = 0, t2 = 0, t3 = 0;
  int mu = 0;

  BigInt n_at(int k) const {
    auto it = n.find(k);
    return it == n.end() ? BigInt(0) : it->second;
  }

  nlohmann::json to_json() const {
    nlohmann::json cyc = nlohmann::json::object();
    for (const auto& [k, c] : n) cyc[std::to_string(k)] = c.str();
    return {{"v", v},   {"E", edges}, {"girth", girth}, {"p1", p1}, {"bipartite", bipartite},
            {"n", cyc}, {"t1", t1},   {"t2", t2},       {"t3", t3}, {"mu", mu}};
  }
};

// Cycle counts are taken for lengths 1..min(v, max_cycle).
inline GraphStats census(const Multigraph& g, int max_cycle = 12) {
  GraphStats s;
  s.v = g.v();
  s.edges = g.num_edges();
  s.girth = girth(g);
  s.p1 = cyclomatic(g);
  s.bipartite = is_bipartite(g) ? 1 : 0;
  for (int k = 1; k <= std::min(g.v(), max_cycle); ++k) {
    BigInt c = count_cycles(g, k);
    if (c != 0) s.n[k] = c;
  }
  auto t = small_subgraph_census(g);
  s.t1 = t.t1;
  s.t2 = t.t2;
  s.t3 = t.t3;
  s.mu = simplify(g).mu;
  return s;
}

}  // namespace statechrome
