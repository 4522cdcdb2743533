#pragma once

// Finite abelian groups in invariant-factor form.

#include "nilmult/common.hpp"

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace nilmult {

/// Z_{n_1} + ... + Z_{n_k} with n_{i+1} | n_i and every n_i >= 2.
/// The empty list is the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  /// Canonical form of the direct sum of cyclic groups of the given orders.
  static AbelianGroup from_cyclic_orders(std::span<const std::uint64_t> orders) {
    std::map<std::uint64_t, std::vector<std::uint64_t>> powers;  // prime -> prime powers
    for (std::uint64_t m : orders) {
      if (m == 0) throw InvalidArgument("canonicalize: cyclic order 0 is not finite");
      for (const auto& [p, e] : factorize(m)) {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        powers[p].push_back(q);
      }
    }
    std::size_t k = 0;
    for (auto& [p, list] : powers) {
      std::sort(list.begin(), list.end(), std::greater<>());
      k = std::max(k, list.size());
    }
    std::vector<std::uint64_t> inv(k, 1);
    for (const auto& [p, list] : powers)
      for (std::size_t j = 0; j < list.size(); ++j) inv[j] = checked_mul(inv[j], list[j]);
    AbelianGroup g;
    g.invariants_ = std::move(inv);
    return g;
  }

  static AbelianGroup from_cyclic_orders(std::initializer_list<std::uint64_t> orders) {
    return from_cyclic_orders(std::span<const std::uint64_t>(orders.begin(), orders.size()));
  }

  static AbelianGroup cyclic(std::uint64_t n) { return from_cyclic_orders({n}); }

  static AbelianGroup elementary(std::uint64_t p, unsigned rank) {
    return from_cyclic_orders(std::vector<std::uint64_t>(rank, p));
  }

  const std::vector<std::uint64_t>& invariants() const { return invariants_; }
  bool is_trivial() const { return invariants_.empty(); }

  BigInt order() const {
    BigInt r = 1;
    for (auto n : invariants_) r *= n;
    return r;
  }
  BigInt exponent() const { return invariants_.empty() ? BigInt(1) : BigInt(invariants_.front()); }
  std::size_t rank() const { return invariants_.size(); }

  /// "Z4 + Z2"; the trivial group prints as "0".
  std::string to_string() const {
    if (invariants_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < invariants_.size(); ++i) {
      if (i) s += " + ";
      s += "Z" + std::to_string(invariants_[i]);
    }
    return s;
  }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<std::uint64_t> invariants_;
};

inline AbelianGroup canonicalize(std::span<const std::uint64_t> cyclic_orders) {
  return AbelianGroup::from_cyclic_orders(cyclic_orders);
}

inline AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<std::uint64_t> all = a.invariants();
  all.insert(all.end(), b.invariants().begin(), b.invariants().end());
  return canonicalize(all);
}

/// Z_m (x) Z_n = Z_gcd(m,n), distributed over the cyclic factors.
inline AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<std::uint64_t> parts;
  parts.reserve(a.rank() * b.rank());
  for (auto m : a.invariants())
    for (auto n : b.invariants()) parts.push_back(std::gcd(m, n));
  return canonicalize(parts);
}

/// B (x) A (x) ... (x) A with `copies` factors of A.
inline AbelianGroup tensor_power(const AbelianGroup& b, const AbelianGroup& a, unsigned copies) {
  if (copies == 0) throw InvalidArgument("tensor_power: need at least one copy of A");
  AbelianGroup r = b;
  for (unsigned i = 0; i < copies && !r.is_trivial(); ++i) r = tensor(r, a);
  return r;
}

}  // namespace nilmult
