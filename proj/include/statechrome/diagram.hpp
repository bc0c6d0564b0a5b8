#pragma once

#include "statechrome/core.hpp"
#include "statechrome/multigraph.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace statechrome {

// X[a,b,c,d]: labels listed counterclockwise starting from the incoming
// under-arc a; the under strand runs a -> c. The crossing is positive when the
// over strand runs d -> b.
struct Crossing {
  std::array<int, 4> arc{};
  int sign = 0;

  int a() const { return arc[0]; }
  int b() const { return arc[1]; }
  int c() const { return arc[2]; }
  int d() const { return arc[3]; }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

enum class Smoothing : unsigned char { A = 0, B = 1 };

// Slots joined by a smoothing. A pairs (a,b),(c,d); B pairs (a,d),(b,c). At a
// positive crossing A is the oriented smoothing.
inline int smoothing_partner(int slot, Smoothing s) {
  static constexpr int kA[4] = {1, 0, 3, 2};
  static constexpr int kB[4] = {3, 2, 1, 0};
  return s == Smoothing::A ? kA[slot] : kB[slot];
}

class LinkDiagram {
 public:
  LinkDiagram() = default;

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int num_crossings() const { return static_cast<int>(crossings_.size()); }
  int n_arcs() const { return 2 * num_crossings(); }
  int components() const { return components_; }
  // Crossingless unknotted components.
  int free_loops() const { return free_loops_; }

  int c_plus() const {
    return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(), [](const Crossing& x) { return x.sign > 0; }));
  }
  int c_minus() const { return num_crossings() - c_plus(); }
  int writhe() const { return c_plus() - c_minus(); }

  // True when slot `slot` of crossing `ci` is where its arc enters the crossing.
  bool incoming(int ci, int slot) const { return incoming_[ci][slot]; }

  // Occurrences (crossing, slot) of an arc label, tail end first.
  const std::array<std::pair<int, int>, 2>& arc_ends(int label) const { return ends_.at(label); }

  std::string to_pd() const {
    std::string out;
    for (const auto& x : crossings_) {
      if (!out.empty()) out += " ";
      out += "X[" + std::to_string(x.a()) + "," + std::to_string(x.b()) + "," + std::to_string(x.c()) + "," +
             std::to_string(x.d()) + "]";
    }
    if (free_loops_) out += (out.empty() ? "" : " ") + std::string("O") + std::to_string(free_loops_);
    return out;
  }

  // Validates labels, derives orientation and crossing signs.
  static LinkDiagram build(std::vector<Crossing> crossings, int free_loops = 0);

  static LinkDiagram unknot() { return build({}, 1); }

  friend bool operator==(const LinkDiagram& x, const LinkDiagram& y) {
    return x.crossings_ == y.crossings_ && x.free_loops_ == y.free_loops_;
  }

 private:
  std::vector<Crossing> crossings_;
  std::vector<std::array<bool, 4>> incoming_;
  std::map<int, std::array<std::pair<int, int>, 2>> ends_;
  int components_ = 0;
  int free_loops_ = 0;
};

namespace detail {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    p[std::max(x, y)] = std::min(x, y);
    return true;
  }
};

}  // namespace detail

inline LinkDiagram LinkDiagram::build(std::vector<Crossing> crossings, int free_loops) {
  if (free_loops < 0) throw ParseError("negative number of free loops");
  const int n = static_cast<int>(crossings.size());
  const int n_arcs = 2 * n;
  std::vector<std::vector<std::pair<int, int>>> occ(n_arcs + 1);
  for (int ci = 0; ci < n; ++ci)
    for (int s = 0; s < 4; ++s) {
      int l = crossings[ci].arc[s];
      if (l < 1 || l > n_arcs)
        throw ParseError("arc label " + std::to_string(l) + " out of range 1.." + std::to_string(n_arcs));
      occ[l].push_back({ci, s});
    }
  for (int l = 1; l <= n_arcs; ++l)
    if (occ[l].size() != 2)
      throw ParseError("arc " + std::to_string(l) + " appears " + std::to_string(occ[l].size()) + " times");

  // dir: +1 incoming, -1 outgoing, 0 unknown. Under strands are fixed by the
  // format; over strands are inferred by walking arcs, with the label-successor
  // rule only for strands that never pass under anything.
  std::vector<std::array<int, 4>> dir(n, {1, 0, -1, 0});
  auto other_end = [&](int ci, int s) {
    const auto& o = occ[crossings[ci].arc[s]];
    return (o[0] == std::make_pair(ci, s)) ? o[1] : o[0];
  };
  auto propagate = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int ci = 0; ci < n; ++ci)
        for (int s = 0; s < 4; ++s) {
          if (!dir[ci][s]) continue;
          auto [cj, t] = other_end(ci, s);
          int want = -dir[ci][s];
          if (dir[cj][t] == 0) {
            dir[cj][t] = want;
            changed = true;
          } else if (dir[cj][t] != want) {
            throw ParseError("inconsistent orientation along arc " + std::to_string(crossings[ci].arc[s]));
          }
          int u = (s + 2) % 4;
          if (dir[ci][u] == 0) {
            dir[ci][u] = -dir[ci][s];
            changed = true;
          } else if (dir[ci][u] != -dir[ci][s]) {
            throw ParseError("inconsistent orientation at crossing " + std::to_string(ci));
          }
        }
    }
  };
  propagate();
  for (int ci = 0; ci < n; ++ci) {
    if (dir[ci][1]) continue;
    const int b = crossings[ci].b(), d = crossings[ci].d();
    bool d_to_b = (b == d + 1) || (d - b > 1);
    dir[ci][3] = d_to_b ? 1 : -1;
    dir[ci][1] = -dir[ci][3];
    propagate();
  }

  LinkDiagram D;
  D.incoming_.resize(n);
  for (int ci = 0; ci < n; ++ci) {
    for (int s = 0; s < 4; ++s) D.incoming_[ci][s] = dir[ci][s] > 0;
    crossings[ci].sign = dir[ci][3] > 0 ? 1 : -1;
  }
  for (int l = 1; l <= n_arcs; ++l) {
    auto e0 = occ[l][0], e1 = occ[l][1];
    if (D.incoming_[e0.first][e0.second]) std::swap(e0, e1);
    D.ends_[l] = {e0, e1};
  }
  detail::UnionFind uf(n_arcs + 1);
  for (const auto& x : crossings) {
    uf.unite(x.a(), x.c());
    uf.unite(x.b(), x.d());
  }
  std::set<int> roots;
  for (int l = 1; l <= n_arcs; ++l) roots.insert(uf.find(l));
  D.crossings_ = std::move(crossings);
  D.components_ = static_cast<int>(roots.size()) + free_loops;
  D.free_loops_ = free_loops;
  return D;
}

// Accepts Knot-Atlas "X[1,4,2,5] X[3,6,4,1] ..." and bare-bracket
// "[[1,4,2,5],[3,6,4,1],...]". A trailing "O<k>" token adds k crossingless
// loops; the empty string is rejected, "O1" is the 0-crossing unknot.
inline LinkDiagram parse_pd(const std::string& text) {
  std::string body = text;
  int free_loops = 0;
  static const std::regex loops_re(R"(\bO(\d+)\b)");
  std::smatch lm;
  if (std::regex_search(body, lm, loops_re)) {
    free_loops = std::stoi(lm[1]);
    body = lm.prefix().str() + lm.suffix().str();
  }
  std::vector<Crossing> xs;
  static const std::regex tuple_re(R"(X?\[([^\[\]]*)\])");
  std::string residue;
  std::size_t last = 0;
  for (auto it = std::sregex_iterator(body.begin(), body.end(), tuple_re); it != std::sregex_iterator(); ++it) {
    residue += body.substr(last, it->position() - last);
    last = it->position() + it->length();
    std::string inner = (*it)[1];
    for (char& ch : inner)
      if (ch == ',') ch = ' ';
    std::istringstream in(inner);
    std::vector<long> vals;
    std::string tok;
    while (in >> tok) {
      try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw ParseError("");
        vals.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("malformed tuple: non-integer entry '" + tok + "'");
      }
    }
    if (vals.size() != 4) throw ParseError("malformed tuple: X[" + std::string((*it)[1]) + "] needs 4 entries");
    Crossing x;
    for (int k = 0; k < 4; ++k) x.arc[k] = static_cast<int>(vals[k]);
    xs.push_back(x);
  }
  residue += body.substr(last);
  for (char ch : residue)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',' && ch != '[' && ch != ']')
      throw ParseError("malformed PD text near '" + std::string(1, ch) + "'");
  if (xs.empty() && free_loops == 0) throw ParseError("empty PD code");
  return LinkDiagram::build(std::move(xs), free_loops);
}

// Recomputes orientation and signs from the labels alone.
inline LinkDiagram assign_signs(const LinkDiagram& d) {
  auto xs = d.crossings();
  for (auto& x : xs) x.sign = 0;
  return LinkDiagram::build(std::move(xs), d.free_loops());
}

// Over and under swapped at every crossing, orientation kept.
inline LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> xs;
  for (const auto& x : d.crossings()) {
    Crossing m;
    if (x.sign > 0)
      m.arc = {x.d(), x.a(), x.b(), x.c()};
    else
      m.arc = {x.b(), x.c(), x.d(), x.a()};
    xs.push_back(m);
  }
  return LinkDiagram::build(std::move(xs), d.free_loops());
}

// ---- states ----

struct KauffmanState {
  std::vector<Smoothing> choice;
  std::vector<int> circle_of_arc;          // index = arc label, entry 0 unused
  std::vector<std::vector<int>> circles;   // arc labels per circle; free loops are empty
  int n_minus = 0;

  int size() const { return static_cast<int>(circles.size()); }
};

inline KauffmanState resolve(const LinkDiagram& d, const std::vector<Smoothing>& choice) {
  const int n = d.num_crossings();
  if (static_cast<int>(choice.size()) != n) throw std::invalid_argument("state does not cover every crossing");
  detail::UnionFind uf(d.n_arcs() + 1);
  KauffmanState s;
  s.choice = choice;
  for (int ci = 0; ci < n; ++ci) {
    const auto& x = d.crossings()[ci];
    for (int slot = 0; slot < 4; ++slot) uf.unite(x.arc[slot], x.arc[smoothing_partner(slot, choice[ci])]);
    if (choice[ci] == Smoothing::B) ++s.n_minus;
  }
  s.circle_of_arc.assign(d.n_arcs() + 1, -1);
  std::map<int, int> id;
  for (int l = 1; l <= d.n_arcs(); ++l) {
    int r = uf.find(l);
    auto [it, fresh] = id.emplace(r, static_cast<int>(id.size()));
    if (fresh) s.circles.emplace_back();
    s.circle_of_arc[l] = it->second;
    s.circles[it->second].push_back(l);
  }
  for (int k = 0; k < d.free_loops(); ++k) s.circles.emplace_back();
  return s;
}

inline KauffmanState all_positive_state(const LinkDiagram& d) {
  return resolve(d, std::vector<Smoothing>(d.num_crossings(), Smoothing::A));
}
inline KauffmanState all_negative_state(const LinkDiagram& d) {
  return resolve(d, std::vector<Smoothing>(d.num_crossings(), Smoothing::B));
}

// One vertex per circle, one edge per crossing joining the circles on its two
// sides. Both smoothings put slots 0 and 2 on opposite sides.
inline Multigraph state_graph(const LinkDiagram& d, const KauffmanState& s) {
  Multigraph g(s.size());
  for (const auto& x : d.crossings()) g.add_edge(s.circle_of_arc[x.a()], s.circle_of_arc[x.c()]);
  return g;
}

inline Multigraph g_plus(const LinkDiagram& d) { return state_graph(d, all_positive_state(d)); }
inline Multigraph g_minus(const LinkDiagram& d) { return state_graph(d, all_negative_state(d)); }

inline int n_grading(const LinkDiagram& d) { return -all_positive_state(d).size() + d.c_plus() - 2 * d.c_minus(); }

// ---- construction ----

// Combinatorial planar 4-valent graph. Slots 0..3 run counterclockwise and
// slots 0,2 carry the under strand. emit() orients each strand by traversal,
// labels arcs consecutively per component and writes Knot-Atlas tuples.
class PlanarBuilder {
 public:
  int add_crossing() {
    link_.push_back({{{-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}}});
    return static_cast<int>(link_.size()) - 1;
  }
  void connect(int c1, int s1, int c2, int s2) {
    auto& p = link_.at(c1)[s1];
    auto& q = link_.at(c2)[s2];
    if (p.first >= 0 || q.first >= 0) throw std::logic_error("slot connected twice");
    p = {c2, s2};
    q = {c1, s1};
  }
  // Preferred direction for the component through this slot: leave through it.
  void prefer_exit(int c, int s) { hints_.push_back({c, s}); }
  void add_free_loop() { ++free_loops_; }

  LinkDiagram emit() const {
    const int n = static_cast<int>(link_.size());
    for (int c = 0; c < n; ++c)
      for (int s = 0; s < 4; ++s)
        if (link_[c][s].first < 0) throw std::logic_error("unconnected slot");
    // label of the arc leaving (c, s), and whether (c, s) is an entry slot
    std::vector<std::array<int, 4>> label(n, {0, 0, 0, 0});
    std::vector<std::array<char, 4>> entry(n, {0, 0, 0, 0});
    int next = 1;
    auto walk = [&](int c, int s) {
      // leave (c, s), follow the strand until back
      int c0 = c, s0 = s;
      do {
        auto [c2, s2] = link_[c][s];
        label[c][s] = label[c2][s2] = next++;
        entry[c2][s2] = 1;
        c = c2;
        s = (s2 + 2) % 4;
      } while (!(c == c0 && s == s0));
    };
    std::vector<std::pair<int, int>> starts = hints_;
    for (int c = 0; c < n; ++c)
      for (int s = 0; s < 4; ++s) starts.push_back({c, s});
    for (auto [c, s] : starts)
      if (!label[c][s]) walk(c, s);
    std::vector<Crossing> xs;
    for (int c = 0; c < n; ++c) {
      int a = entry[c][0] ? 0 : 2;
      Crossing x;
      for (int k = 0; k < 4; ++k) x.arc[k] = label[c][(a + k) % 4];
      xs.push_back(x);
    }
    return LinkDiagram::build(std::move(xs), free_loops_);
  }

 private:
  std::vector<std::array<std::pair<int, int>, 4>> link_;
  std::vector<std::pair<int, int>> hints_;
  int free_loops_ = 0;
};

namespace detail {
// Counterclockwise slot order for a crossing drawn with strands NW-SE and
// SW-NE. Index the result by compass corner.
enum Corner { NE = 0, NW = 1, SW = 2, SE = 3 };
// under strand SW-NE: slots SW,SE,NE,NW; under NW-SE: slots NW,SW,SE,NE
inline std::array<int, 4> corner_slots(bool under_sw_ne) {
  std::array<int, 4> slot{};
  if (under_sw_ne) {
    slot[SW] = 0, slot[SE] = 1, slot[NE] = 2, slot[NW] = 3;
  } else {
    slot[NW] = 0, slot[SW] = 1, slot[SE] = 2, slot[NE] = 3;
  }
  return slot;
}
}  // namespace detail

// Vertical twist columns side by side, tops and bottoms joined in a ring. A
// negative parameter puts the under strand SW-NE, making its A-smoothing
// horizontal, so all-negative parameters give a theta-shaped G+ with arm
// lengths |a_i|.
inline LinkDiagram pretzel(const std::vector<int>& params) {
  using namespace detail;
  if (params.empty()) throw std::invalid_argument("pretzel needs at least one column");
  PlanarBuilder b;
  struct Column {
    std::vector<int> ids;
    std::vector<std::array<int, 4>> slots;
  };
  std::vector<Column> cols;
  for (int a : params) {
    if (a == 0) throw std::invalid_argument("pretzel twist parameter must be nonzero");
    Column col;
    for (int k = 0; k < std::abs(a); ++k) {
      col.ids.push_back(b.add_crossing());
      col.slots.push_back(corner_slots(a < 0));
    }
    for (int k = 0; k + 1 < std::abs(a); ++k) {
      b.connect(col.ids[k], col.slots[k][SW], col.ids[k + 1], col.slots[k + 1][NW]);
      b.connect(col.ids[k], col.slots[k][SE], col.ids[k + 1], col.slots[k + 1][NE]);
    }
    cols.push_back(std::move(col));
  }
  const int m = static_cast<int>(cols.size());
  for (int i = 0; i < m; ++i) {
    const Column& L = cols[i];
    const Column& R = cols[(i + 1) % m];
    b.connect(L.ids.front(), L.slots.front()[NE], R.ids.front(), R.slots.front()[NW]);
    b.connect(L.ids.back(), L.slots.back()[SE], R.ids.back(), R.slots.back()[SW]);
  }
  return b.emit();
}

// Closure of a braid word; generator +k is sigma_k with the under strand
// NW-SE (a positive crossing, strands oriented downward), -k its inverse.
// Strand positions are 1..max|k|+1, or `strands` when given.
inline LinkDiagram braid_closure(const std::vector<int>& word, int strands = 0) {
  using namespace detail;
  if (word.empty()) throw std::invalid_argument("braid word must be nonempty");
  int width = strands;
  for (int g : word) {
    if (g == 0) throw std::invalid_argument("braid generator 0 is not valid");
    width = std::max(width, std::abs(g) + 1);
  }
  PlanarBuilder b;
  // current open end at the bottom of each strand position: (crossing, slot)
  std::vector<std::pair<int, int>> bottom(width + 1, {-1, -1}), top(width + 1, {-1, -1});
  for (int g : word) {
    int k = std::abs(g);
    int c = b.add_crossing();
    auto slot = corner_slots(g < 0);
    auto attach = [&](int pos, int corner) {
      if (bottom[pos].first < 0)
        top[pos] = {c, slot[corner]};
      else
        b.connect(bottom[pos].first, bottom[pos].second, c, slot[corner]);
    };
    attach(k, NW);
    attach(k + 1, NE);
    bottom[k] = {c, slot[SW]};
    bottom[k + 1] = {c, slot[SE]};
    b.prefer_exit(c, slot[SW]);
    b.prefer_exit(c, slot[SE]);
  }
  for (int pos = 1; pos <= width; ++pos) {
    if (bottom[pos].first < 0)
      b.add_free_loop();
    else
      b.connect(bottom[pos].first, bottom[pos].second, top[pos].first, top[pos].second);
  }
  return b.emit();
}

namespace detail {
// Relabels arcs consecutively along each component, starting from the lowest
// old label; keeps orientation.
inline LinkDiagram relabel_by_traversal(const LinkDiagram& d) {
  const int n = d.num_crossings();
  std::vector<int> fresh(d.n_arcs() + 1, 0);
  int next = 1;
  for (int start = 1; start <= d.n_arcs(); ++start) {
    if (fresh[start]) continue;
    int l = start;
    while (!fresh[l]) {
      fresh[l] = next++;
      auto [hc, hs] = d.arc_ends(l)[1];
      l = d.crossings()[hc].arc[(hs + 2) % 4];
    }
  }
  std::vector<Crossing> xs(n);
  for (int ci = 0; ci < n; ++ci)
    for (int k = 0; k < 4; ++k) xs[ci].arc[k] = fresh[d.crossings()[ci].arc[k]];
  return LinkDiagram::build(std::move(xs), d.free_loops());
}
}  // namespace detail

// Joins arc `arc1` of d1 to arc `arc2` of d2: the tail of each now runs into
// the head of the other. Both must be knots.
inline LinkDiagram connected_sum(const LinkDiagram& d1, const LinkDiagram& d2, int arc1 = 1, int arc2 = 1) {
  if (d1.components() != 1 || d2.components() != 1)
    throw PreconditionError("connected sum needs two knot diagrams");
  if (d1.num_crossings() == 0) return d2;
  if (d2.num_crossings() == 0) return d1;
  const int off = d1.n_arcs();
  std::vector<Crossing> xs = d1.crossings();
  for (auto x : d2.crossings()) {
    for (auto& l : x.arc) l += off;
    xs.push_back(x);
  }
  auto [h1c, h1s] = d1.arc_ends(arc1)[1];
  auto [h2c, h2s] = d2.arc_ends(arc2)[1];
  xs[h1c].arc[h1s] = arc2 + off;
  xs[d1.num_crossings() + h2c].arc[h2s] = arc1;
  for (auto& x : xs) x.sign = 0;
  return detail::relabel_by_traversal(LinkDiagram::build(std::move(xs)));
}

// Reidemeister I kink of the given sign inserted on arc `arc`. A negative
// kink's A-smoothing keeps the strand in one circle, so it adds a loop to G+;
// a positive kink adds a pendant vertex.
inline LinkDiagram add_kink(const LinkDiagram& d, int sign, int arc = 1) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("kink sign must be +1 or -1");
  if (d.num_crossings() == 0) {
    if (d.free_loops() == 0) throw std::invalid_argument("no strand to kink");
    Crossing x;
    x.arc = sign > 0 ? std::array<int, 4>{1, 1, 2, 2} : std::array<int, 4>{1, 2, 2, 1};
    return LinkDiagram::build({x}, d.free_loops() - 1);
  }
  const int x_lab = arc, y = d.n_arcs() + 1, z = d.n_arcs() + 2;
  std::vector<Crossing> xs = d.crossings();
  auto [hc, hs] = d.arc_ends(x_lab)[1];
  xs[hc].arc[hs] = z;
  Crossing k;
  // under first: enter x, leave y, loop back over as y, leave as z
  k.arc = sign > 0 ? std::array<int, 4>{x_lab, z, y, y} : std::array<int, 4>{x_lab, y, y, z};
  xs.push_back(k);
  for (auto& c : xs) c.sign = 0;
  return detail::relabel_by_traversal(LinkDiagram::build(std::move(xs), d.free_loops()));
}

// ---- corpus ----

struct CorpusEntry {
  std::string name;
  std::string pd;
  std::optional<int> signature;
  bool mirror = false;

  // Entries "K@variant" share the group "K".
  std::string group() const { return name.substr(0, name.find('@')); }
  LinkDiagram diagram() const {
    LinkDiagram d = parse_pd(pd);
    return mirror ? statechrome::mirror(d) : d;
  }
};

// name<TAB>pd[<TAB>signature[<TAB>mirror]]; '#' starts a comment line. The
// signature column may be empty or "-"; mirror is "1"/"mirror" when set.
inline std::vector<CorpusEntry> read_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::size_t pos = 0;
    for (;;) {
      auto tab = line.find('\t', pos);
      cols.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos : tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (cols.size() < 2 || cols[0].empty())
      throw ParseError("corpus line " + std::to_string(lineno) + ": expected name<TAB>pd");
    CorpusEntry e;
    e.name = cols[0];
    e.pd = cols[1];
    if (cols.size() > 2 && !cols[2].empty() && cols[2] != "-") {
      try {
        e.signature = std::stoi(cols[2]);
      } catch (const std::exception&) {
        throw ParseError("corpus line " + std::to_string(lineno) + ": bad signature '" + cols[2] + "'");
      }
    }
    if (cols.size() > 3) e.mirror = cols[3] == "1" || cols[3] == "mirror";
    if (!seen.insert(e.name).second) throw ParseError("corpus line " + std::to_string(lineno) + ": duplicate name " + e.name);
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<CorpusEntry> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file " + path);
  return read_corpus(in);
}

}  // namespace statechrome
