#pragma once

#include "nilmult/abelian.hpp"
#include "nilmult/common.hpp"

#include <compare>
#include <map>
#include <string>

namespace nilmult {

/// A positive integer held as its prime factorization. Bound sides are
/// prime powers whose exponents outgrow any fixed-width value quickly.
class PValue {
 public:
  PValue() = default;  // 1

  static PValue of(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("PValue: zero has no factorization");
    PValue v;
    for (const auto& [p, e] : factorize(n)) v.factors_[p] = e;
    return v;
  }

  static PValue of(const BigInt& n) { return of(to_u64(n, "PValue operand")); }

  /// p^e. With e = 0 the prime is irrelevant (and may be 0, the trivial group's "prime").
  static PValue prime_power(std::uint64_t p, const BigInt& e) {
    if (e < 0) throw InvalidArgument("PValue: negative exponent");
    PValue v;
    if (e == 0) return v;
    if (p < 2 || prime_power_base(p) != p) throw InvalidArgument("PValue: " + std::to_string(p) + " is not prime");
    v.factors_[p] = e;
    return v;
  }

  static PValue order_of(const AbelianGroup& a) {
    PValue v;
    for (auto n : a.invariants()) v = v * of(n);
    return v;
  }
  static PValue exponent_of(const AbelianGroup& a) { return of(a.exponent()); }

  const std::map<std::uint64_t, BigInt>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  /// Exponent of p in this value.
  BigInt exponent_of_prime(std::uint64_t p) const {
    auto it = factors_.find(p);
    return it == factors_.end() ? BigInt(0) : it->second;
  }

  BigInt value() const {
    BigInt r = 1;
    for (const auto& [p, e] : factors_) r *= pow(BigInt(p), to_u64(e, "PValue exponent"));
    return r;
  }

  bool divides(const PValue& other) const {
    for (const auto& [p, e] : factors_)
      if (other.exponent_of_prime(p) < e) return false;
    return true;
  }

  friend PValue operator*(const PValue& a, const PValue& b) {
    PValue r = a;
    for (const auto& [p, e] : b.factors_) r.factors_[p] += e;
    return r;
  }

  friend bool operator==(const PValue&, const PValue&) = default;

  friend std::strong_ordering operator<=>(const PValue& a, const PValue& b) {
    if (a == b) return std::strong_ordering::equal;
    // same single prime: compare exponents without expanding
    const bool single = a.factors_.size() <= 1 && b.factors_.size() <= 1;
    if (single) {
      std::uint64_t pa = a.is_one() ? 0 : a.factors_.begin()->first;
      std::uint64_t pb = b.is_one() ? 0 : b.factors_.begin()->first;
      if (pa == pb || pa == 0 || pb == 0) {
        const std::uint64_t p = pa ? pa : pb;
        const BigInt ea = a.exponent_of_prime(p), eb = b.exponent_of_prime(p);
        return ea < eb ? std::strong_ordering::less : std::strong_ordering::greater;
      }
    }
    const BigInt va = a.value(), vb = b.value();
    if (va < vb) return std::strong_ordering::less;
    if (va > vb) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "2^6", "2^3*3", "1"
  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : factors_) {
      if (!s.empty()) s += "*";
      s += std::to_string(p);
      if (e != 1) s += "^" + e.str();
    }
    return s;
  }

 private:
  static std::uint64_t prime_power_base(std::uint64_t p) {
    auto f = factorize(p);
    return f.size() == 1 && f.front().second == 1 ? p : 0;
  }

  std::map<std::uint64_t, BigInt> factors_;
};

}  // namespace nilmult
