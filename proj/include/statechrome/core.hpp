#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace statechrome {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Malformed input text or a structurally invalid diagram.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A theorem hypothesis (girth bound, thinness, ...) does not hold for the input.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input exceeds the configured size budget of a brute-force routine.
class BudgetError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// binom(n, k) with the falling-factorial definition, so n may be negative:
// binom(-1, 0) = 1, binom(k - 1, k) = 0 for k >= 1, binom(n, k) = 0 for k < 0.
inline BigInt binomial(const BigInt& n, long k) {
  if (k < 0) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (long t = 0; t < k; ++t) {
    num *= (n - t);
    den *= (t + 1);
  }
  return num / den;
}

inline BigInt binomial(long n, long k) { return binomial(BigInt(n), k); }

inline int sign_of(const BigInt& x) { return x.sign(); }

inline long to_long(const BigInt& x) {
  if (x > std::numeric_limits<long>::max() || x < std::numeric_limits<long>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + x.str());
  return x.convert_to<long>();
}

// Runs body(i) for i in [0, count) on up to `workers` threads. Work items are
// claimed through an atomic counter, so result slots must be indexed by i.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                         unsigned workers = 0) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace statechrome
