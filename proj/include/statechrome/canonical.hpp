#pragma once

#include "statechrome/multigraph.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace statechrome {

// Canonical code of a simple graph: color refinement, then individualization
// of the first non-singleton cell, keeping the lexicographically smallest
// adjacency string over all leaves. Past `leaf_budget` leaves the search stops
// with the best code so far; the code still describes the graph exactly, so a
// truncated search only costs memo hits, never correctness.
class CanonicalForm {
 public:
  explicit CanonicalForm(const Multigraph& g, long leaf_budget = 4096) : n_(g.v()), budget_(leaf_budget) {
    adj_.assign(n_, std::vector<char>(n_, 0));
    nb_.resize(n_);
    const Multigraph simple = simplify(g).graph;
    for (auto [a, b] : simple.edges()) {
      adj_[a][b] = adj_[b][a] = 1;
      nb_[a].push_back(b);
      nb_[b].push_back(a);
    }
    std::vector<int> color(n_);
    for (int x = 0; x < n_; ++x) color[x] = static_cast<int>(nb_[x].size());
    search(refine(rank(color)));
  }

  const std::string& code() const { return best_; }
  // position of each vertex in the canonical order
  const std::vector<int>& labeling() const { return best_perm_; }
  bool complete() const { return leaves_ <= budget_; }

 private:
  static std::vector<int> rank(const std::vector<int>& key) {
    std::vector<int> sorted = key;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(key.size());
    for (std::size_t i = 0; i < key.size(); ++i)
      out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), key[i]) - sorted.begin());
    return out;
  }

  // Colors are ranks; refinement sorts by (old color, sorted neighbor colors),
  // so cell order is preserved and the result is labeling independent.
  std::vector<int> refine(std::vector<int> color) const {
    int classes = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    for (;;) {
      std::vector<std::vector<int>> sig(n_);
      for (int x = 0; x < n_; ++x) {
        sig[x].push_back(color[x]);
        std::vector<int> around;
        for (int y : nb_[x]) around.push_back(color[y]);
        std::sort(around.begin(), around.end());
        sig[x].insert(sig[x].end(), around.begin(), around.end());
      }
      std::vector<std::vector<int>> uniq = sig;
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      for (int x = 0; x < n_; ++x)
        color[x] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[x]) - uniq.begin());
      int now = static_cast<int>(uniq.size());
      if (now == classes) return color;
      classes = now;
    }
  }

  void search(const std::vector<int>& color) {
    if (leaves_ > budget_) return;
    std::vector<int> count(n_ + 1, 0);
    for (int c : color) ++count[c];
    int target = -1;
    for (int c = 0; c < n_; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      ++leaves_;
      std::vector<int> order(n_);
      for (int x = 0; x < n_; ++x) order[color[x]] = x;
      std::string code = std::to_string(n_) + ":";
      code.reserve(code.size() + n_ * (n_ - 1) / 2);
      for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) code.push_back(adj_[order[i]][order[j]] ? '1' : '0');
      if (best_.empty() || code < best_) {
        best_ = std::move(code);
        best_perm_ = color;
      }
      return;
    }
    for (int u = 0; u < n_; ++u) {
      if (color[u] != target) continue;
      std::vector<int> next(n_);
      for (int x = 0; x < n_; ++x) next[x] = 2 * color[x] + (x == u ? 0 : 1);
      search(refine(rank(next)));
      if (leaves_ > budget_) return;
    }
  }

  int n_;
  long budget_;
  long leaves_ = 0;
  std::vector<std::vector<char>> adj_;
  std::vector<std::vector<int>> nb_;
  std::string best_;
  std::vector<int> best_perm_;
};

inline std::string canonical_code(const Multigraph& g) { return CanonicalForm(g).code(); }

}  // namespace statechrome
