#pragma once

#include "statechrome/diagram.hpp"
#include "statechrome/extremal.hpp"
#include "statechrome/homology.hpp"
#include "statechrome/multigraph.hpp"
#include "statechrome/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace statechrome {

// Upper girth bound from the lowest coefficients of a thin link's normalized
// Jones polynomial: 2 + the longest prefix with |b_i| = binom(b-1+i, i),
// b = |b_1|, and alternating signs. `step` is 2 in q, 1 in t.
inline int mj_bound(const LaurentPolynomial& j, int step = 2) {
  if (j.is_zero() || j.min_degree() == j.max_degree()) throw PreconditionError("mj_bound needs a non-constant Jones polynomial");
  const auto beta = coefficient_run(j, step);
  if (abs(beta[0]) != 1) throw PreconditionError("lowest Jones coefficient is not +-1");
  const BigInt b = abs(beta[1]);
  if (b == 0) return 2;
  int matched = 0;
  for (std::size_t i = 1; i < beta.size(); ++i) {
    if (sign_of(beta[i]) != -sign_of(beta[i - 1])) break;
    if (abs(beta[i]) != binomial(b - 1 + BigInt(i), static_cast<long>(i))) break;
    matched = static_cast<int>(i);
  }
  return matched + 2;
}

// Lowest homological and quantum gradings carrying free rank.
inline std::pair<int, int> kh_corner(const BigradedTable& t) {
  int p = std::numeric_limits<int>::max(), q = std::numeric_limits<int>::max();
  for (const auto& [k, c] : t.cells())
    if (c.free > 0) {
      p = std::min(p, k.first);
      q = std::min(q, k.second);
    }
  if (p == std::numeric_limits<int>::max()) throw PreconditionError("table has no free part");
  return {p, q};
}

// sum over k = i, i-2, ... >= 0 of binom(b-2+k, k), plus (-1)^(i+1) d
inline BigInt kh_diagonal_model(long b, long i, int delta) {
  BigInt sum = 0;
  for (long k = i; k >= 0; k -= 2) sum += binomial(b - 2 + k, k);
  return sum + ((i + 1) % 2 ? -1 : 1) * delta;
}

// Upper girth bound from a full Khovanov table: 2 + the longest prefix
// 0 < i <= m of the diagonal (P+i, Q+2i) fitting the model for one choice of
// b >= 1 and d in {0,1}. Only gradings inside the table's homological span
// are scanned, so the bound never exceeds span + 2.
inline int mk_bound(const BigradedTable& t) {
  if (t.empty()) throw PreconditionError("mk_bound needs a nonempty table");
  const auto [P, Q] = kh_corner(t);
  const int span = t.max_i() - P;
  long max_rank = 0;
  for (int i = 0; i <= span; ++i) max_rank = std::max(max_rank, t.free(P + i, Q + 2 * i));
  int best = 0;
  for (long b = 1; b <= max_rank + 2; ++b)
    for (int delta = 0; delta <= 1; ++delta) {
      int matched = 0;
      for (int i = 1; i <= span; ++i) {
        if (BigInt(t.free(P + i, Q + 2 * i)) != kh_diagonal_model(b, i, delta)) break;
        matched = i;
      }
      best = std::max(best, matched);
    }
  return best + 2;
}

// floor(2c / (c_- - sigma + 1))
inline int signature_bound(int c, int c_minus, int sigma) {
  if (c <= 0) throw PreconditionError("signature_bound needs a diagram with crossings");
  const int den = c_minus - sigma + 1;
  if (den <= 0) throw PreconditionError("signature_bound denominator c_- - sigma + 1 is not positive");
  return (2 * c) / den;
}

struct GraphConstraints {
  int ell = 0;
  std::optional<bool> bipartite;  // not recoverable from Jones data
  long p1 = 0;
  BigInt n_ell = 0;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["ell"] = ell;
    j["bipartite"] = bipartite ? nlohmann::json(*bipartite) : nlohmann::json(nullptr);
    j["p1"] = p1;
    j["n_ell"] = n_ell.str();
    return j;
  }
};

// Bipartiteness, cyclomatic number and ell-cycle count of G+ read off the
// Khovanov table of a link with a diagram of girth ell > 2. The corner
// defaults to the lowest gradings, which is (-c_-, N) for such a diagram.
inline GraphConstraints infer_graph_constraints(const BigradedTable& t, int ell,
                                                std::optional<std::pair<int, int>> corner = std::nullopt) {
  if (ell <= 2) throw PreconditionError("infer_graph_constraints needs girth > 2");
  if (t.empty()) throw PreconditionError("infer_graph_constraints needs a nonempty table");
  const auto [P, Q] = corner ? *corner : kh_corner(t);
  if (t.free(P, Q) != 1) throw PreconditionError("corner group is not Z; wrong corner or not plus-adequate");
  if (P + ell - 1 > t.max_i()) throw PreconditionError("table does not reach homological degree corner + ell - 1");
  GraphConstraints g;
  g.ell = ell;
  const long d = t.free(P, Q + 2);
  if (d > 1) throw PreconditionError("rank at (P, Q+2) exceeds 1");
  g.bipartite = d == 1;
  g.p1 = t.free(P + 1, Q + 2) - d + 1;
  BigInt sum = 0;
  for (long k = ell - 1; k >= 0; k -= 2) sum += binomial(g.p1 - 2 + k, k);
  g.n_ell = sum + (ell % 2 ? -1 : 1) * d - t.free(P + ell - 1, Q + 2 * (ell - 1));
  return g;
}

// Jones-side variant for thin links: p1 = |b_1|,
// n_ell = binom(|b_1| - 1 + (ell-1), ell-1) - |b_{ell-1}|.
inline GraphConstraints infer_from_jones(const LaurentPolynomial& j, int ell, int step = 2) {
  if (ell <= 2) throw PreconditionError("infer_from_jones needs girth > 2");
  const auto beta = coefficient_run(j, step);
  if (static_cast<int>(beta.size()) < ell) throw PreconditionError("Jones polynomial too short for this girth");
  GraphConstraints g;
  g.ell = ell;
  g.p1 = to_long(abs(beta[1]));
  g.n_ell = binomial(g.p1 - 1 + (ell - 1), ell - 1) - abs(beta[ell - 1]);
  return g;
}

struct GirthReport {
  int lower = 0;
  std::optional<int> exact, upper_mj, upper_mk, upper_sig;
  std::optional<GraphConstraints> constraints;
  bool inconsistent = false;
  std::vector<int> observed;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["lower"] = lower;
    j["inconsistent"] = inconsistent;
    j["observed"] = observed;
    if (exact) j["exact"] = *exact;
    if (upper_mj) j["upper_mj"] = *upper_mj;
    if (upper_mk) j["upper_mk"] = *upper_mk;
    if (upper_sig) j["upper_sig"] = *upper_sig;
    if (constraints) j["constraints"] = constraints->to_json();
    return j;
  }
};

class GirthInconsistency : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct GirthInputs {
  std::optional<LaurentPolynomial> jones;  // normalized, in q
  std::optional<BigradedTable> kh;
  std::optional<int> sigma;
  bool strict = false;  // throw GirthInconsistency instead of flagging
};

// Core of the report from the observed girths; `sig_bound` is the largest
// signature bound over the supplied diagrams, if any applied.
inline GirthReport girth_report_from_values(std::vector<int> ells, const GirthInputs& in,
                                            std::optional<int> sig_bound = std::nullopt) {
  GirthReport r;
  std::sort(ells.begin(), ells.end());
  r.observed = ells;
  r.lower = ells.empty() ? 0 : ells.back();
  std::set<int> big;
  for (int l : ells)
    if (l >= 3) big.insert(l);
  if (big.size() > 1) {
    r.inconsistent = true;
    if (in.strict)
      throw GirthInconsistency("diagrams with girths " + std::to_string(*big.begin()) + " and " +
                               std::to_string(*big.rbegin()) + " cannot represent the same link");
  }
  if (in.jones) {
    try {
      r.upper_mj = mj_bound(*in.jones);
    } catch (const PreconditionError&) {
    }
  }
  if (in.kh && !in.kh->empty()) r.upper_mk = mk_bound(*in.kh);
  r.upper_sig = sig_bound;
  std::optional<int> upper;
  for (auto u : {r.upper_mj, r.upper_mk, r.upper_sig})
    if (u) upper = upper ? std::min(*upper, *u) : *u;
  if (!r.inconsistent && (r.lower >= 3 || (upper && *upper == r.lower))) r.exact = r.lower;
  if (r.exact && *r.exact >= 3) {
    try {
      if (in.kh) r.constraints = infer_graph_constraints(*in.kh, *r.exact);
      else if (in.jones) r.constraints = infer_from_jones(*in.jones, *r.exact);
    } catch (const PreconditionError&) {
    }
  }
  return r;
}

inline GirthReport girth_report(const std::vector<LinkDiagram>& diagrams, const GirthInputs& in = {}) {
  std::vector<int> ells;
  std::optional<int> sig;
  for (const auto& d : diagrams) {
    ells.push_back(girth(g_plus(d)));
    if (in.sigma && d.components() == 1 && d.num_crossings() > 0) {
      try {
        int b = signature_bound(d.num_crossings(), d.c_minus(), *in.sigma);
        sig = sig ? std::max(*sig, b) : b;
      } catch (const PreconditionError&) {
      }
    }
  }
  return girth_report_from_values(std::move(ells), in, sig);
}

}  // namespace statechrome
