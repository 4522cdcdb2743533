#pragma once

// Möbius function, Witt's count of basic commutators, and ordered
// generation of the Hall basis of basic commutators.

#include "nilmult/caps.hpp"
#include "nilmult/common.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace nilmult {

inline int mobius(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("mobius: argument must be positive");
  int sign = 1;
  for (const auto& [p, e] : factorize(m)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

/// Number of basic commutators of weight n on d letters:
/// (1/n) * sum over m | n of mobius(m) * d^(n/m).
inline BigInt witt(std::uint64_t n, std::uint64_t d) {
  if (n == 0 || d == 0) throw InvalidArgument("witt: weight and letter count must be positive");
  BigInt sum = 0;
  const BigInt base = d;
  for (std::uint64_t m : divisors(n)) {
    int mu = mobius(m);
    if (mu == 0) continue;
    BigInt term = pow(base, n / m);
    if (mu > 0) sum += term;
    else sum -= term;
  }
  if (sum % n != 0) throw InternalError("witt: sum not divisible by n=" + std::to_string(n));
  return sum / n;
}

/// witt() extended by 0 at d = 0 (no letters, no commutators). Bound
/// formulas evaluate the count at n - k or d(G), which vanish for the
/// trivial group.
inline BigInt witt_or_zero(std::uint64_t n, std::uint64_t d) { return d == 0 ? BigInt(0) : witt(n, d); }

struct Letter {
  unsigned index;  // 1-based: x_1, x_2, ...
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// [left, right], both given by order index into the owning basis.
struct Bracket {
  std::size_t left;
  std::size_t right;
  friend bool operator==(const Bracket&, const Bracket&) = default;
};

struct BasicCommutator {
  std::variant<Letter, Bracket> shape;
  unsigned weight = 1;
  std::size_t order_index = 0;

  bool is_letter() const { return std::holds_alternative<Letter>(shape); }
  const Bracket& bracket() const { return std::get<Bracket>(shape); }
  unsigned letter() const { return std::get<Letter>(shape).index; }
};

/// All basic commutators of weight <= max_weight on x_1..x_d.
///
/// Within a weight stratum brackets are ordered by (right, left) order
/// index; letters by index. Strata are contiguous and weight-increasing.
class HallBasis {
 public:
  HallBasis(unsigned letters, unsigned max_weight, std::size_t cap = Caps{}.basis)
      : letters_(letters), max_weight_(max_weight) {
    if (letters == 0 || max_weight == 0)
      throw InvalidArgument("hall_basis: letter count and max weight must be positive");
    BigInt total = 0;
    for (unsigned w = 1; w <= max_weight; ++w) {
      total += witt(w, letters);
      if (total > cap)
        throw ResourceLimit("hall_basis: basis size exceeds cap of " + std::to_string(cap));
    }
    elements_.reserve(total.convert_to<std::size_t>());
    offsets_.push_back(0);
    for (unsigned i = 1; i <= letters; ++i) push({Letter{i}, 1, 0});
    offsets_.push_back(elements_.size());
    for (unsigned k = 2; k <= max_weight; ++k) {
      generate_weight(k);
      offsets_.push_back(elements_.size());
    }
  }

  unsigned letters() const { return letters_; }
  unsigned max_weight() const { return max_weight_; }
  std::size_t size() const { return elements_.size(); }
  const BasicCommutator& operator[](std::size_t i) const { return elements_.at(i); }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  /// Elements of exactly the given weight.
  std::span<const BasicCommutator> stratum(unsigned weight) const {
    if (weight == 0 || weight > max_weight_) return {};
    return std::span(elements_).subspan(offsets_[weight - 1], offsets_[weight] - offsets_[weight - 1]);
  }
  std::size_t stratum_begin(unsigned weight) const { return offsets_.at(weight - 1); }
  std::size_t stratum_end(unsigned weight) const { return offsets_.at(weight); }

  std::string to_string(std::size_t i) const {
    const auto& c = elements_.at(i);
    if (c.is_letter()) return "x" + std::to_string(c.letter());
    return "[" + to_string(c.bracket().left) + "," + to_string(c.bracket().right) + "]";
  }

 private:
  void push(BasicCommutator c) {
    c.order_index = elements_.size();
    elements_.push_back(c);
  }

  // [c_i, c_j] is basic iff w(c_i) + w(c_j) = k, c_i > c_j, and when
  // c_i = [c_s, c_t] also c_j >= c_t.
  void generate_weight(unsigned k) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (right, left)
    const std::size_t known = elements_.size();
    for (std::size_t j = 0; j < known; ++j) {
      const unsigned wj = elements_[j].weight;
      if (wj >= k) break;
      const unsigned wi = k - wj;
      if (wi < wj) continue;  // then c_i < c_j
      for (std::size_t i = offsets_[wi - 1]; i < offsets_[wi]; ++i) {
        if (i <= j) continue;
        const auto& ci = elements_[i];
        if (!ci.is_letter() && j < ci.bracket().right) continue;
        pairs.emplace_back(j, i);
      }
    }
    std::sort(pairs.begin(), pairs.end());
    for (auto [j, i] : pairs) push({Bracket{i, j}, k, 0});
  }

  unsigned letters_;
  unsigned max_weight_;
  std::vector<BasicCommutator> elements_;
  std::vector<std::size_t> offsets_;
};

inline HallBasis hall_basis(unsigned d, unsigned max_weight, std::size_t cap = Caps{}.basis) {
  return HallBasis(d, max_weight, cap);
}

/// Table of witt(n, d) over a rectangular range.
class WittTable {
 public:
  WittTable(unsigned max_weight, unsigned max_letters) : max_letters_(max_letters) {
    for (unsigned n = 1; n <= max_weight; ++n)
      for (unsigned d = 1; d <= max_letters; ++d) entries_.push_back(witt(n, d));
  }
  const BigInt& operator()(unsigned n, unsigned d) const { return entries_.at((n - 1) * max_letters_ + (d - 1)); }

 private:
  unsigned max_letters_;
  std::vector<BigInt> entries_;
};

}  // namespace nilmult
