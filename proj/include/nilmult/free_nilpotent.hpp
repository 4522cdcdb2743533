#pragma once

// Normal forms in the free nilpotent group of class c on d generators.
//
// Every element has a unique expression b_0^e_0 b_1^e_1 ... b_N^e_N over
// the Hall basis of weight <= c, in order-index order. Products are formed
// by collection from the left using the conjugation relations
// b_k^-s b_j b_k^s (k < j), which are derived once through the Magnus
// embedding x_i -> 1 + X_i into the truncated free associative ring.
//
// Commutator convention: [a, b] = a^-1 b^-1 a b, left-normed.

#include "nilmult/caps.hpp"
#include "nilmult/common.hpp"
#include "nilmult/witt_hall.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nilmult {

struct SignedLetter {
  unsigned index;  // 1-based
  int sign;        // +1 or -1
  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

using LetterWord = std::vector<SignedLetter>;

/// Parses "x2 x1^-1 x3" or "x2*x1^-1*x3"; "X1" is accepted for x1^-1.
inline LetterWord parse_letter_word(std::string_view text) {
  LetterWord word;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '*' || text[i] == '\t' || text[i] == '.')) ++i;
  };
  auto number = [&](const char* what) {
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (start == i) throw InvalidArgument(std::string("word: expected ") + what + " at position " + std::to_string(start));
    return static_cast<unsigned>(std::stoul(std::string(text.substr(start, i - start))));
  };
  skip();
  while (i < text.size()) {
    const char head = text[i];
    if (head != 'x' && head != 'X') throw InvalidArgument("word: expected letter 'x' at position " + std::to_string(i));
    ++i;
    unsigned index = number("letter index");
    if (index == 0) throw InvalidArgument("word: letters are numbered from 1");
    int sign = head == 'X' ? -1 : 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = i < text.size() && text[i] == '-';
      if (neg) ++i;
      unsigned power = number("exponent");
      for (unsigned r = 0; r < power; ++r) word.push_back({index, neg ? -sign : sign});
    } else {
      word.push_back({index, sign});
    }
    skip();
  }
  return word;
}

inline LetterWord inverse_word(const LetterWord& w) {
  LetterWord r(w.rbegin(), w.rend());
  for (auto& l : r) l.sign = -l.sign;
  return r;
}

/// An element of the free nilpotent group of class `c` on `d` letters, as
/// exponents over hall_basis(d, c).
struct NilpotentWord {
  unsigned d = 0;
  unsigned c = 0;
  std::vector<std::int64_t> exponents;

  bool is_identity() const {
    for (auto e : exponents)
      if (e) return false;
    return true;
  }
  friend bool operator==(const NilpotentWord&, const NilpotentWord&) = default;
};

namespace detail {

/// Truncated free associative ring Z<X_1..X_d> / (degree > c), dense over
/// words of length 0..c.
class MagnusRing {
 public:
  using Vec = std::vector<std::int64_t>;

  MagnusRing(unsigned d, unsigned c) : d_(d), c_(c) {
    std::size_t width = 1;
    for (unsigned len = 0; len <= c; ++len) {
      offsets_.push_back(dim_);
      widths_.push_back(width);
      dim_ += width;
      width *= d;
    }
  }

  std::size_t dim() const { return dim_; }
  std::size_t offset(unsigned degree) const { return offsets_[degree]; }
  std::size_t width(unsigned degree) const { return widths_[degree]; }

  Vec one() const {
    Vec v(dim_, 0);
    v[0] = 1;
    return v;
  }

  /// x_i^s: 1 + X_i for s = +1, 1 - X_i + X_i^2 - ... for s = -1.
  Vec letter(unsigned index, int sign) const {
    Vec v(dim_, 0);
    std::size_t code = 0;
    std::int64_t coeff = 1;
    for (unsigned len = 0; len <= c_; ++len) {
      v[offsets_[len] + code] = coeff;
      if (sign > 0 && len >= 1) break;
      code = code * d_ + (index - 1);
      coeff = sign > 0 ? 1 : -coeff;
    }
    return v;
  }

  Vec multiply(const Vec& a, const Vec& b) const {
    Vec r(dim_, 0);
    for (unsigned la = 0; la <= c_; ++la) {
      for (std::size_t ca = 0; ca < widths_[la]; ++ca) {
        const std::int64_t x = a[offsets_[la] + ca];
        if (!x) continue;
        std::size_t scale = 1;
        for (unsigned lb = 0; la + lb <= c_; ++lb) {
          const std::size_t base = offsets_[la + lb] + ca * scale;
          for (std::size_t cb = 0; cb < widths_[lb]; ++cb) {
            const std::int64_t y = b[offsets_[lb] + cb];
            if (!y) continue;
            auto& slot = r[base + cb];
            slot = checked_add(slot, checked_mul(x, y));
          }
          scale *= d_;
        }
      }
    }
    return r;
  }

  /// (1 + N)^-1 = sum_k (-N)^k for N without constant term.
  Vec inverse(const Vec& g) const {
    if (g[0] != 1) throw InternalError("Magnus inverse of a non-unipotent element");
    Vec minus_n = g;
    minus_n[0] = 0;
    for (auto& x : minus_n) x = -x;
    Vec result = one();
    Vec term = one();
    for (unsigned k = 1; k <= c_; ++k) {
      term = multiply(term, minus_n);
      for (std::size_t i = 0; i < dim_; ++i) result[i] = checked_add(result[i], term[i]);
    }
    return result;
  }

  Vec power(const Vec& g, std::int64_t e) const {
    Vec base = e < 0 ? inverse(g) : g;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    Vec r = one();
    while (n) {
      if (n & 1) r = multiply(r, base);
      n >>= 1;
      if (n) base = multiply(base, base);
    }
    return r;
  }

  std::span<const std::int64_t> degree_part(const Vec& v, unsigned degree) const {
    return std::span(v).subspan(offsets_[degree], widths_[degree]);
  }

 private:
  unsigned d_, c_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> widths_;
};

/// Solves M e = v for integer e where the columns of M are the degree-w
/// leading terms of the weight-w basic commutators (a Z-basis of the
/// degree-w free Lie ring). Works modulo a 61-bit prime, lifts to the
/// symmetric range and checks the integer equation exactly.
class LieCoordinateSolver {
 public:
  LieCoordinateSolver() = default;

  explicit LieCoordinateSolver(std::vector<std::vector<std::int64_t>> columns) : columns_(std::move(columns)) {
    const std::size_t m = columns_.size();
    if (m == 0) return;
    rows_ = columns_.front().size();
    // choose m independent rows by eliminating the transpose
    std::vector<std::vector<std::uint64_t>> t(m, std::vector<std::uint64_t>(rows_));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t r = 0; r < rows_; ++r) t[j][r] = reduce(columns_[j][r]);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < rows_ && rank < m; ++col) {
      std::size_t piv = rank;
      while (piv < m && t[piv][col] == 0) ++piv;
      if (piv == m) continue;
      std::swap(t[piv], t[rank]);
      const std::uint64_t inv = inverse_mod(t[rank][col]);
      for (auto& x : t[rank]) x = mulmod(x, inv);
      for (std::size_t i = 0; i < m; ++i) {
        if (i == rank || t[i][col] == 0) continue;
        const std::uint64_t f = t[i][col];
        for (std::size_t k = 0; k < rows_; ++k) t[i][k] = submod(t[i][k], mulmod(f, t[rank][k]));
      }
      pivot_rows_.push_back(col);
      ++rank;
    }
    if (rank != m) throw InternalError("Lie leading terms are not linearly independent");
    // invert the square submatrix S[a][j] = M[pivot_rows_[a]][j]
    std::vector<std::vector<std::uint64_t>> s(m, std::vector<std::uint64_t>(2 * m, 0));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t j = 0; j < m; ++j) s[a][j] = reduce(columns_[j][pivot_rows_[a]]);
      s[a][m + a] = 1;
    }
    for (std::size_t col = 0; col < m; ++col) {
      std::size_t piv = col;
      while (piv < m && s[piv][col] == 0) ++piv;
      if (piv == m) throw InternalError("Lie coordinate system is singular");
      std::swap(s[piv], s[col]);
      const std::uint64_t inv = inverse_mod(s[col][col]);
      for (auto& x : s[col]) x = mulmod(x, inv);
      for (std::size_t i = 0; i < m; ++i) {
        if (i == col || s[i][col] == 0) continue;
        const std::uint64_t f = s[i][col];
        for (std::size_t k = 0; k < 2 * m; ++k) s[i][k] = submod(s[i][k], mulmod(f, s[col][k]));
      }
    }
    inverse_.assign(m, std::vector<std::uint64_t>(m));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t a = 0; a < m; ++a) inverse_[j][a] = s[j][m + a];
  }

  std::vector<std::int64_t> solve(std::span<const std::int64_t> v) const {
    const std::size_t m = columns_.size();
    std::vector<std::int64_t> e(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t a = 0; a < m; ++a) acc = addmod(acc, mulmod(inverse_[j][a], reduce(v[pivot_rows_[a]])));
      e[j] = acc > kPrime / 2 ? -static_cast<std::int64_t>(kPrime - acc) : static_cast<std::int64_t>(acc);
    }
    for (std::size_t r = 0; r < v.size(); ++r) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < m; ++j)
        if (columns_[j][r]) acc = checked_add(acc, checked_mul(columns_[j][r], e[j]));
      if (acc != v[r]) throw InternalError("element is not in the span of the Hall basis leading terms");
    }
    return e;
  }

 private:
  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
  static std::uint64_t reduce(std::int64_t x) {
    std::int64_t r = x % static_cast<std::int64_t>(kPrime);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(kPrime) : r);
  }
  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<boost::multiprecision::uint128_t>(a) * b % kPrime);
  }
  static std::uint64_t addmod(std::uint64_t a, std::uint64_t b) { return (a + b) % kPrime; }
  static std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return (a + kPrime - b) % kPrime; }
  static std::uint64_t inverse_mod(std::uint64_t a) {
    std::uint64_t r = 1, e = kPrime - 2;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  }

  std::vector<std::vector<std::int64_t>> columns_;
  std::size_t rows_ = 0;
  std::vector<std::size_t> pivot_rows_;
  std::vector<std::vector<std::uint64_t>> inverse_;
};

}  // namespace detail

class FreeNilpotentGroup {
 public:
  FreeNilpotentGroup(unsigned d, unsigned c, const Caps& caps = Caps{})
      : basis_(checked_basis(d, c, caps)), ring_(d, c) {
    const std::size_t n = basis_.size();
    image_.reserve(n);
    inverse_image_.reserve(n);
    for (const auto& b : basis_) {
      if (b.is_letter()) {
        image_.push_back(ring_.letter(b.letter(), +1));
        inverse_image_.push_back(ring_.letter(b.letter(), -1));
      } else {
        const auto [l, r] = b.bracket();
        // [l, r] = l^-1 r^-1 l r ; its inverse is [r, l]
        image_.push_back(ring_.multiply(ring_.multiply(inverse_image_[l], inverse_image_[r]),
                                        ring_.multiply(image_[l], image_[r])));
        inverse_image_.push_back(ring_.multiply(ring_.multiply(inverse_image_[r], inverse_image_[l]),
                                                ring_.multiply(image_[r], image_[l])));
      }
    }
    solvers_.resize(c + 1);
    for (unsigned w = 1; w <= c; ++w) {
      std::vector<std::vector<std::int64_t>> cols;
      for (std::size_t i = basis_.stratum_begin(w); i < basis_.stratum_end(w); ++i) {
        auto part = ring_.degree_part(image_[i], w);
        cols.emplace_back(part.begin(), part.end());
      }
      solvers_[w] = detail::LieCoordinateSolver(std::move(cols));
    }
    conj_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      conj_[k].resize(n - k - 1);
      for (std::size_t j = k + 1; j < n; ++j) {
        if (basis_[k].weight + basis_[j].weight > c) continue;
        for (int s : {+1, -1}) {
          const auto& a = s > 0 ? image_[k] : inverse_image_[k];
          const auto& a_inv = s > 0 ? inverse_image_[k] : image_[k];
          auto conj = ring_.multiply(ring_.multiply(a_inv, image_[j]), a);
          conj_[k][j - k - 1][s > 0 ? 0 : 1] = sparse(peel(conj));
        }
      }
    }
  }

  unsigned letters() const { return basis_.letters(); }
  unsigned nilpotency_class() const { return basis_.max_weight(); }
  const HallBasis& basis() const { return basis_; }

  NilpotentWord identity() const { return {letters(), nilpotency_class(), std::vector<std::int64_t>(basis_.size(), 0)}; }

  /// The basis element b_i itself.
  NilpotentWord basis_element(std::size_t i) const {
    auto w = identity();
    w.exponents.at(i) = 1;
    return w;
  }

  /// Normal form of a word in x_1..x_d and their inverses.
  NilpotentWord collect(std::span<const SignedLetter> word) const {
    auto v = identity();
    for (const auto& l : word) {
      check_letter(l);
      multiply_generator(v.exponents, l.index - 1, l.sign);
    }
    return v;
  }

  NilpotentWord multiply(const NilpotentWord& u, const NilpotentWord& v) const {
    check_same(u);
    check_same(v);
    auto r = u;
    for (std::size_t i = 0; i < v.exponents.size(); ++i)
      if (v.exponents[i]) multiply_generator(r.exponents, i, v.exponents[i]);
    return r;
  }

  NilpotentWord inverse(const NilpotentWord& u) const {
    check_same(u);
    auto r = identity();
    for (std::size_t i = u.exponents.size(); i-- > 0;)
      if (u.exponents[i]) multiply_generator(r.exponents, i, -u.exponents[i]);
    return r;
  }

  /// [u, v] = u^-1 v^-1 u v
  NilpotentWord commutator(const NilpotentWord& u, const NilpotentWord& v) const {
    return multiply(multiply(inverse(u), inverse(v)), multiply(u, v));
  }

  /// b_i written out in letters via [a, b] = a^-1 b^-1 a b.
  LetterWord letter_expansion(std::size_t i) const {
    const auto& b = basis_[i];
    if (b.is_letter()) return {{b.letter(), +1}};
    auto l = letter_expansion(b.bracket().left);
    auto r = letter_expansion(b.bracket().right);
    LetterWord out = inverse_word(l);
    auto ri = inverse_word(r);
    out.insert(out.end(), ri.begin(), ri.end());
    out.insert(out.end(), l.begin(), l.end());
    out.insert(out.end(), r.begin(), r.end());
    return out;
  }

  /// Normal form computed without collection: map the word into the Magnus
  /// ring and peel off basis powers weight by weight.
  NilpotentWord normal_form_via_magnus(std::span<const SignedLetter> word) const {
    auto g = ring_.one();
    for (const auto& l : word) {
      check_letter(l);
      g = ring_.multiply(g, ring_.letter(l.index, l.sign));
    }
    return {letters(), nilpotency_class(), peel(g)};
  }

  std::string to_string(const NilpotentWord& u) const {
    std::string s;
    for (std::size_t i = 0; i < u.exponents.size(); ++i) {
      if (!u.exponents[i]) continue;
      if (!s.empty()) s += " ";
      s += basis_.to_string(i);
      if (u.exponents[i] != 1) s += "^" + std::to_string(u.exponents[i]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  using Sparse = std::vector<std::pair<std::size_t, std::int64_t>>;

  static HallBasis checked_basis(unsigned d, unsigned c, const Caps& caps) {
    if (d == 0 || c == 0) throw InvalidArgument("free nilpotent group: rank and class must be positive");
    if (d > caps.nilpotent_rank)
      throw ResourceLimit("free nilpotent group: rank " + std::to_string(d) + " exceeds cap " +
                          std::to_string(caps.nilpotent_rank));
    if (c > caps.nilpotent_class)
      throw ResourceLimit("free nilpotent group: class " + std::to_string(c) + " exceeds cap " +
                          std::to_string(caps.nilpotent_class));
    return HallBasis(d, c, caps.basis);
  }

  void check_letter(const SignedLetter& l) const {
    if (l.index == 0 || l.index > letters())
      throw InvalidArgument("letter x" + std::to_string(l.index) + " out of range 1.." + std::to_string(letters()));
    if (l.sign != 1 && l.sign != -1) throw InvalidArgument("letter sign must be +1 or -1");
  }

  void check_same(const NilpotentWord& u) const {
    if (u.d != letters() || u.c != nilpotency_class() || u.exponents.size() != basis_.size())
      throw InvalidArgument("nilpotent word belongs to a different basis");
  }

  static Sparse sparse(const std::vector<std::int64_t>& v) {
    Sparse s;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) s.emplace_back(i, v[i]);
    return s;
  }

  std::vector<std::int64_t> peel(detail::MagnusRing::Vec g) const {
    std::vector<std::int64_t> exps(basis_.size(), 0);
    for (unsigned w = 1; w <= nilpotency_class(); ++w) {
      auto e = solvers_[w].solve(ring_.degree_part(g, w));
      auto layer = ring_.one();
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (!e[j]) continue;
        const std::size_t i = basis_.stratum_begin(w) + j;
        exps[i] = e[j];
        layer = ring_.multiply(layer, ring_.power(image_[i], e[j]));
      }
      g = ring_.multiply(ring_.inverse(layer), g);
    }
    if (g != ring_.one()) throw InternalError("Magnus peeling left a nontrivial remainder");
    return exps;
  }

  // v <- v * b_k^e
  void multiply_generator(std::vector<std::int64_t>& v, std::size_t k, std::int64_t e) const {
    if (!e) return;
    bool tail_empty = true;
    for (std::size_t j = k + 1; j < v.size() && tail_empty; ++j) tail_empty = v[j] == 0;
    if (tail_empty) {
      v[k] = checked_add(v[k], e);
      return;
    }
    const int s = e > 0 ? 1 : -1;
    for (std::int64_t r = 0; r < (e > 0 ? e : -e); ++r) multiply_single(v, k, s);
  }

  // u b_k^a W b_k^s = u b_k^(a+s) * prod_j (b_k^-s b_j b_k^s)^(v_j)
  void multiply_single(std::vector<std::int64_t>& v, std::size_t k, int s) const {
    Sparse tail;
    for (std::size_t j = k + 1; j < v.size(); ++j)
      if (v[j]) {
        tail.emplace_back(j, v[j]);
        v[j] = 0;
      }
    v[k] = checked_add(v[k], s);
    for (const auto& [j, a] : tail) {
      const auto& conj = conj_[k][j - k - 1][s > 0 ? 0 : 1];
      if (conj.empty()) {  // weights add past c: b_j and b_k commute
        multiply_generator(v, j, a);
        continue;
      }
      for (std::int64_t r = 0; r < (a > 0 ? a : -a); ++r) {
        if (a > 0) {
          for (const auto& [m, x] : conj) multiply_generator(v, m, x);
        } else {
          for (auto it = conj.rbegin(); it != conj.rend(); ++it) multiply_generator(v, it->first, -it->second);
        }
      }
    }
  }

  HallBasis basis_;
  detail::MagnusRing ring_;
  std::vector<detail::MagnusRing::Vec> image_;
  std::vector<detail::MagnusRing::Vec> inverse_image_;
  std::vector<detail::LieCoordinateSolver> solvers_;
  std::vector<std::vector<std::array<Sparse, 2>>> conj_;
};

/// Rank of gamma_n(F)/gamma_{n+i}(F): the number of basic commutators of
/// weights n .. n+i-1.
inline BigInt quotient_rank(unsigned d, unsigned n, unsigned i) {
  if (d == 0 || n == 0 || i == 0) throw InvalidArgument("quotient_rank: d, n and i must be positive");
  if (d > 4 || n + i - 1 > 6) throw ResourceLimit("quotient_rank: supported range is d <= 4, n + i - 1 <= 6");
  BigInt r = 0;
  for (unsigned w = n; w < n + i; ++w) r += witt(w, d);
  return r;
}

}  // namespace nilmult
