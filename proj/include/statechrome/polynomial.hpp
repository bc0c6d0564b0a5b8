#pragma once

#include "statechrome/core.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace statechrome {

// Dense polynomial in one variable, coefficient index = degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial constant(const BigInt& k) { return IntPolynomial({k}); }
  static IntPolynomial monomial(std::size_t deg, const BigInt& k = 1) {
    std::vector<BigInt> c(deg + 1, 0);
    c[deg] = k;
    return IntPolynomial(std::move(c));
  }
  // x - r
  static IntPolynomial linear_root(const BigInt& r) { return IntPolynomial({-r, 1}); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  BigInt coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size())) return 0;
    return c_[k];
  }
  const std::vector<BigInt>& coeffs() const { return c_; }

  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // p(x + delta), by repeated synthetic division.
  IntPolynomial taylor_shift(const BigInt& delta) const {
    std::vector<BigInt> a = c_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) a[j - 1] += delta * a[j];
    return IntPolynomial(std::move(a));
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(r));
  }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  // Descending powers, e.g. "x^3 - 3x^2 + 2x".
  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
      const BigInt& a = c_[k];
      if (a == 0) continue;
      BigInt mag = abs(a);
      if (first) {
        if (a < 0) out << "-";
      } else {
        out << (a < 0 ? " - " : " + ");
      }
      if (mag != 1 || k == 0) out << mag;
      if (k >= 1) out << var;
      if (k >= 2) out << "^" << k;
      first = false;
    }
    return out.str();
  }

  // Lowest degree first, decimal strings so large coefficients survive.
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : c_) arr.push_back(a.str());
    return arr;
  }
  static IntPolynomial from_json(const nlohmann::json& j) {
    std::vector<BigInt> c;
    for (const auto& e : j) c.emplace_back(e.get<std::string>());
    return IntPolynomial(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

// Sparse Laurent polynomial in q.
class LaurentPolynomial {
 public:
  using Terms = std::map<long, BigInt>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(Terms t) : t_(std::move(t)) { trim(); }
  static LaurentPolynomial monomial(long e, const BigInt& k = 1) { return LaurentPolynomial(Terms{{e, k}}); }
  static LaurentPolynomial q_plus_qinv() { return LaurentPolynomial(Terms{{-1, 1}, {1, 1}}); }

  bool is_zero() const { return t_.empty(); }
  const Terms& terms() const { return t_; }
  long min_degree() const { return t_.empty() ? 0 : t_.begin()->first; }
  long max_degree() const { return t_.empty() ? 0 : t_.rbegin()->first; }
  BigInt coeff(long e) const {
    auto it = t_.find(e);
    return it == t_.end() ? BigInt(0) : it->second;
  }

  void add_term(long e, const BigInt& k) {
    if (k == 0) return;
    auto& slot = t_[e];
    slot += k;
    if (slot == 0) t_.erase(e);
  }

  LaurentPolynomial shifted(long e) const {
    Terms r;
    for (const auto& [k, a] : t_) r.emplace(k + e, a);
    return LaurentPolynomial(std::move(r));
  }
  LaurentPolynomial negated() const {
    Terms r;
    for (const auto& [k, a] : t_) r.emplace(k, -a);
    return LaurentPolynomial(std::move(r));
  }
  // q -> q^{-1}
  LaurentPolynomial reflected() const {
    Terms r;
    for (const auto& [k, a] : t_) r.emplace(-k, a);
    return LaurentPolynomial(std::move(r));
  }
  // Substitute t = q^step (step = 2 converts a t-variable Jones polynomial to q).
  LaurentPolynomial stretched(long step) const {
    Terms r;
    for (const auto& [k, a] : t_) r.emplace(k * step, a);
    return LaurentPolynomial(std::move(r));
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [k, a] : o.t_) add_term(k, a);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [k, a] : o.t_) add_term(k, -a);
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [i, x] : a.t_)
      for (const auto& [j, y] : b.t_) r.add_term(i + j, x * y);
    return r;
  }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.t_ == b.t_; }

  // Exact quotient by (q + q^{-1}); nullopt-style failure via exception.
  LaurentPolynomial divided_by_q_plus_qinv() const {
    if (t_.empty()) return {};
    // q*P = J*(1 + q^2); peel from the bottom.
    Terms rem;
    for (const auto& [k, a] : t_) rem.emplace(k + 1, a);
    Terms quot;
    while (!rem.empty()) {
      auto [k, a] = *rem.begin();
      quot.emplace(k, a);
      rem.erase(rem.begin());
      auto& slot = rem[k + 2];
      slot -= a;
      if (slot == 0) rem.erase(k + 2);
      if (!rem.empty() && rem.begin()->first > max_degree() + 1)
        throw std::invalid_argument("polynomial is not divisible by q+q^-1: " + to_string());
    }
    return LaurentPolynomial(std::move(quot));
  }

  // Ascending exponents in the compact style "-q^-32+q^-30-2q^-18+q^-8".
  std::string to_string(const std::string& var = "q") const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, a] : t_) {
      BigInt mag = abs(a);
      if (a < 0)
        out += "-";
      else if (!first)
        out += "+";
      if (mag != 1 || e == 0) out += mag.str();
      if (e != 0) {
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
      }
      first = false;
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, a] : t_) arr.push_back({{"coeff", a.str()}, {"exp", e}});
    return arr;
  }

  // Accepts "-q^-32+q^-30", "2q^{-12}", "3*q^(2)", "q", "-7", with any variable
  // name. Whitespace is ignored.
  static LaurentPolynomial parse(const std::string& text, const std::string& var = "q") {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty polynomial");
    LaurentPolynomial p;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
      throw ParseError("bad polynomial '" + text + "' at offset " + std::to_string(i) + ": " + why);
    };
    auto read_int = [&](BigInt& out) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) return false;
      out = BigInt(s.substr(i, j - i));
      i = j;
      return true;
    };
    while (i < s.size()) {
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (i != 0) {
        fail("expected sign");
      }
      BigInt k = 1;
      bool have_k = read_int(k);
      if (have_k && i < s.size() && s[i] == '*') ++i;
      long e = 0;
      if (s.compare(i, var.size(), var) == 0) {
        i += var.size();
        e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          char close = 0;
          if (i < s.size() && (s[i] == '{' || s[i] == '(')) {
            close = s[i] == '{' ? '}' : ')';
            ++i;
          }
          int esign = 1;
          if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            esign = s[i] == '-' ? -1 : 1;
            ++i;
          }
          BigInt ev;
          if (!read_int(ev)) fail("missing exponent");
          e = esign * ev.convert_to<long>();
          if (close) {
            if (i >= s.size() || s[i] != close) fail("unclosed exponent");
            ++i;
          }
        }
      } else if (!have_k) {
        fail("expected coefficient or variable");
      }
      p.add_term(e, sign * k);
    }
    return p;
  }

 private:
  void trim() {
    for (auto it = t_.begin(); it != t_.end();) it = it->second == 0 ? t_.erase(it) : std::next(it);
  }
  Terms t_;
};

}  // namespace statechrome
