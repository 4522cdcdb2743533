#pragma once

// Multiplication-table groups and element subsets.

#include "nilmult/caps.hpp"
#include "nilmult/common.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace nilmult {

using Element = std::uint32_t;

/// A subset of the elements {0..n-1} of a table group, stored as a bitset.
/// Subgroups are ElementSets that happen to be closed.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }
  bool contains(Element x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(Element x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        out.push_back(static_cast<Element>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) { return a.words_ <=> b.words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

using Subgroup = ElementSet;

/// A finite group given by its full multiplication table:
/// multiply(i, j) is the index of element_i * element_j.
class FiniteGroup {
 public:
  /// Validates the table: square, Latin, with a two-sided identity and
  /// associative (exhaustively up to order 256, 10^5 seeded samples above).
  static FiniteGroup from_table(std::vector<std::string> labels, const std::vector<std::vector<Element>>& table) {
    const std::size_t n = table.size();
    if (n == 0) throw InvalidArgument("group table is empty");
    if (labels.size() != n) throw InvalidArgument("group table: label count does not match table size");
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (const auto& row : table) {
      if (row.size() != n) throw InvalidArgument("group table is not square");
      for (auto x : row) {
        if (x >= n) throw InvalidArgument("group table entry out of range: " + std::to_string(x));
        flat.push_back(x);
      }
    }
    FiniteGroup g(std::move(labels), std::move(flat));
    g.validate();
    return g;
  }

  /// For constructions that are groups by design (permutations, quotients,
  /// direct products); skips the associativity check.
  static FiniteGroup from_trusted_table(std::vector<std::string> labels, std::vector<Element> flat) {
    FiniteGroup g(std::move(labels), std::move(flat));
    g.find_identity_and_inverses();
    return g;
  }

  std::size_t order() const { return n_; }
  Element identity() const { return identity_; }
  Element multiply(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  /// [a, b] = a^-1 b^-1 a b
  Element commutator(Element a, Element b) const {
    return multiply(multiply(inverse_[a], inverse_[b]), multiply(a, b));
  }
  Element conjugate(Element a, Element by) const { return multiply(multiply(inverse_[by], a), by); }

  std::size_t element_order(Element a) const {
    std::size_t k = 1;
    for (Element x = a; x != identity_; x = multiply(x, a)) ++k;
    return k;
  }

  const std::string& label(Element a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }

  ElementSet whole() const {
    ElementSet s(n_);
    for (Element i = 0; i < n_; ++i) s.insert(i);
    return s;
  }
  ElementSet trivial() const {
    ElementSet s(n_);
    s.insert(identity_);
    return s;
  }

  bool is_abelian() const {
    for (Element a = 0; a < n_; ++a)
      for (Element b = a + 1; b < n_; ++b)
        if (multiply(a, b) != multiply(b, a)) return false;
    return true;
  }

  /// Row-major copy of the table, for serialization.
  std::vector<std::vector<Element>> table() const {
    std::vector<std::vector<Element>> rows(n_);
    for (std::size_t i = 0; i < n_; ++i) rows[i].assign(table_.begin() + i * n_, table_.begin() + (i + 1) * n_);
    return rows;
  }

 private:
  FiniteGroup(std::vector<std::string> labels, std::vector<Element> flat)
      : labels_(std::move(labels)), table_(std::move(flat)), n_(labels_.size()) {}

  void find_identity_and_inverses() {
    bool found = false;
    for (Element e = 0; e < n_ && !found; ++e) {
      bool ok = true;
      for (Element x = 0; x < n_ && ok; ++x) ok = multiply(e, x) == x && multiply(x, e) == x;
      if (ok) {
        identity_ = e;
        found = true;
      }
    }
    if (!found) throw InvalidArgument("group table has no two-sided identity");
    inverse_.assign(n_, n_);
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b)
        if (multiply(a, b) == identity_) {
          if (multiply(b, a) != identity_) throw InvalidArgument("element '" + labels_[a] + "' has no two-sided inverse");
          inverse_[a] = b;
          break;
        }
    for (Element a = 0; a < n_; ++a)
      if (inverse_[a] == n_) throw InvalidArgument("element '" + labels_[a] + "' has no inverse");
  }

  void validate() {
    std::vector<char> seen(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n_; ++j) {
        if (seen[table_[i * n_ + j]]++) throw InvalidArgument("group table is not a Latin square (row " + std::to_string(i) + ")");
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n_; ++j) {
        if (seen[table_[j * n_ + i]]++) throw InvalidArgument("group table is not a Latin square (column " + std::to_string(i) + ")");
      }
    }
    find_identity_and_inverses();
    auto assoc = [&](Element a, Element b, Element c) {
      if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
        throw InvalidArgument("group table is not associative at (" + labels_[a] + ", " + labels_[b] + ", " + labels_[c] + ")");
    };
    if (n_ <= 256) {
      for (Element a = 0; a < n_; ++a)
        for (Element b = 0; b < n_; ++b)
          for (Element c = 0; c < n_; ++c) assoc(a, b, c);
    } else {
      std::mt19937_64 rng(0x6e696c6d756c74ULL);
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n_ - 1));
      for (int i = 0; i < 100000; ++i) assoc(pick(rng), pick(rng), pick(rng));
    }
  }

  std::vector<std::string> labels_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::size_t n_ = 0;
  Element identity_ = 0;
};

/// Permutations as 0-based image vectors.
using Permutation = std::vector<std::uint32_t>;

inline std::string cycle_notation(const Permutation& p) {
  std::string s;
  std::vector<char> seen(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      if (j != i) s += ",";
      seen[j] = 1;
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

/// Closure of 1-based permutation generators (image lists) on {1..degree}.
/// Products compose left to right: (p*q)(x) = q(p(x)). Identity is element 0.
inline FiniteGroup from_permutations(unsigned degree, const std::vector<std::vector<std::uint32_t>>& generators,
                                     std::size_t cap = Caps{}.closure) {
  if (degree == 0) throw InvalidArgument("permutation degree must be positive");
  std::vector<Permutation> gens;
  for (const auto& images : generators) {
    if (images.size() != degree)
      throw InvalidArgument("permutation generator has " + std::to_string(images.size()) + " images, expected " +
                            std::to_string(degree));
    Permutation p(degree);
    std::vector<char> hit(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      if (images[i] < 1 || images[i] > degree) throw InvalidArgument("permutation image out of range");
      if (hit[images[i] - 1]++) throw InvalidArgument("permutation generator is not a bijection");
      p[i] = images[i] - 1;
    }
    gens.push_back(std::move(p));
  }
  auto compose = [](const Permutation& p, const Permutation& q) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
  };
  Permutation id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  std::vector<Permutation> elements{id};
  std::map<Permutation, Element> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      auto next = compose(elements[head], g);
      if (index.count(next)) continue;
      if (elements.size() >= cap)
        throw ResourceLimit("permutation closure exceeds cap of " + std::to_string(cap) + " elements");
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  const std::size_t n = elements.size();
  std::vector<Element> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = index.at(compose(elements[i], elements[j]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elements) labels.push_back(cycle_notation(p));
  return FiniteGroup::from_trusted_table(std::move(labels), std::move(flat));
}

}  // namespace nilmult
