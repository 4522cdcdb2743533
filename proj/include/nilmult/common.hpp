#pragma once

// Shared vocabulary: exact integers, error types, small number theory.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilmult {

using BigInt = boost::multiprecision::cpp_int;

/// Bad input: out-of-range argument, malformed object, violated precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configurable cap (closure size, basis size, subgroup enumeration) was hit.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt pow(const BigInt& base, std::uint64_t exponent) {
  if (exponent > std::numeric_limits<unsigned>::max())
    throw ResourceLimit("exponent too large: " + std::to_string(exponent));
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

/// Narrow an exact integer to uint64, failing loudly instead of wrapping.
inline std::uint64_t to_u64(const BigInt& v, const char* what = "value") {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    throw ResourceLimit(std::string(what) + " does not fit in 64 bits: " + v.str());
  return v.convert_to<std::uint64_t>();
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw ResourceLimit("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceLimit("64-bit overflow in exponent arithmetic");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimit("64-bit overflow in exponent arithmetic");
  return r;
}

/// Prime factorization by trial division, primes ascending.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  if (n < 2) return out;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t m = 1; m <= n / m; ++m) {
    if (n % m) continue;
    small.push_back(m);
    if (m != n / m) large.push_back(n / m);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// If n = p^k with k >= 1, returns {p, k}; otherwise {0, 0}.
inline std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

}  // namespace nilmult
