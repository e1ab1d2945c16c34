#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace orbitlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an enumeration would exceed a configured size cap.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown for type/rank combinations outside the supported classical families.
class UnsupportedError : public std::invalid_argument {
 public:
  explicit UnsupportedError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a question cannot be decided within the configured cap and the
// caller should consult a precomputed answer table instead.
class UndecidedError : public std::runtime_error {
 public:
  explicit UndecidedError(const std::string& what) : std::runtime_error(what) {}
};

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// q * (q-1) * ... * (q-k+1), k factors.
inline Int falling_factorial(const Int& q, int k) {
  Int r = 1;
  for (int i = 0; i < k; ++i) r *= q - i;
  return r;
}

// q * (q+1) * ... * (q+k-1), k factors.
inline Int rising_factorial(const Int& q, int k) {
  Int r = 1;
  for (int i = 0; i < k; ++i) r *= q + i;
  return r;
}

inline Int binomial(const Int& n, int k) {
  if (k < 0 || n < k) return 0;
  Int num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::vector<long long> prime_divisors(Int n) {
  std::vector<long long> out;
  if (n < 0) n = -n;
  Int d = 2;
  while (d * d <= n) {
    if (n % d == 0) {
      out.push_back(static_cast<long long>(d));
      while (n % d == 0) n /= d;
    }
    ++d;
  }
  if (n > 1) out.push_back(static_cast<long long>(n));
  return out;
}

inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

inline Int to_int(const Rat& r) {
  if (!is_integral(r)) throw std::logic_error("non-integral rational where integer expected");
  return numerator(r);
}

}  // namespace orbitlab
