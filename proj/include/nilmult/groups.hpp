#pragma once

// Constructors for the small groups used by the corpus and the CLI, and a
// parser for their names ("d8", "cyclic(6)", "extraspecial(3,exponent-p)").

#include "nilmult/abelian.hpp"
#include "nilmult/caps.hpp"
#include "nilmult/finite_group.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilmult::groups {

/// Table group of Z_{n_1} + ... + Z_{n_k}; elements are tuples in mixed radix.
inline FiniteGroup abelian(const AbelianGroup& a, std::size_t cap = Caps{}.closure) {
  const auto& inv = a.invariants();
  std::size_t n = 1;
  for (auto m : inv) {
    n = checked_mul(n, m);
    if (n > cap) throw ResourceLimit("abelian group of order > " + std::to_string(cap) + " exceeds the closure cap");
  }
  auto digits = [&](std::size_t x) {
    std::vector<std::uint64_t> d(inv.size());
    for (std::size_t i = inv.size(); i-- > 0;) {
      d[i] = x % inv[i];
      x /= inv[i];
    }
    return d;
  };
  std::vector<std::string> labels;
  std::vector<Element> flat(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto dx = digits(x);
    std::string s = "(";
    for (std::size_t i = 0; i < dx.size(); ++i) s += (i ? "," : "") + std::to_string(dx[i]);
    labels.push_back(inv.empty() ? "e" : s + ")");
    for (std::size_t y = 0; y < n; ++y) {
      const auto dy = digits(y);
      std::size_t z = 0;
      for (std::size_t i = 0; i < inv.size(); ++i) z = z * inv[i] + (dx[i] + dy[i]) % inv[i];
      flat[x * n + y] = static_cast<Element>(z);
    }
  }
  return FiniteGroup::from_trusted_table(std::move(labels), std::move(flat));
}

inline FiniteGroup trivial() { return abelian(AbelianGroup{}); }
inline FiniteGroup cyclic(std::uint64_t n) { return abelian(AbelianGroup::cyclic(n)); }
inline FiniteGroup elementary(std::uint64_t p, unsigned d) { return abelian(AbelianGroup::elementary(p, d)); }
inline FiniteGroup klein4() { return elementary(2, 2); }

/// <a, b | a^m, b^2 = a^z, b^-1 a b = a^-1>; z = 0 gives the dihedral group
/// of order 2m, z = m/2 the generalized quaternion group.
inline FiniteGroup metacyclic_involutive(std::uint32_t m, std::uint32_t z, const char* b_name) {
  const std::uint32_t n = 2 * m;
  auto idx = [m](std::uint32_t i, std::uint32_t j) { return j * m + i % m; };
  std::vector<std::string> labels(n);
  std::vector<Element> flat(static_cast<std::size_t>(n) * n);
  for (std::uint32_t j = 0; j < 2; ++j)
    for (std::uint32_t i = 0; i < m; ++i) {
      std::string s = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
      if (j) s += b_name;
      labels[idx(i, j)] = s.empty() ? "e" : s;
    }
  for (std::uint32_t j = 0; j < 2; ++j)
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t l = 0; l < 2; ++l)
        for (std::uint32_t k = 0; k < m; ++k) {
          // a^i b^j a^k b^l
          std::uint32_t e = j ? (i + m - k) % m : (i + k) % m;
          std::uint32_t jb = j + l;
          if (jb == 2) {
            e = (e + z) % m;
            jb = 0;
          }
          flat[idx(i, j) * n + idx(k, l)] = idx(e, jb);
        }
  return FiniteGroup::from_trusted_table(std::move(labels), std::move(flat));
}

/// Dihedral group of the given order (>= 4, even).
inline FiniteGroup dihedral(std::uint32_t order) {
  if (order < 4 || order % 2) throw InvalidArgument("dihedral: order must be even and at least 4");
  return metacyclic_involutive(order / 2, 0, "b");
}
inline FiniteGroup d8() { return dihedral(8); }

/// Generalized quaternion group of order 2^n >= 8.
inline FiniteGroup quaternion(std::uint32_t order) {
  if (order < 8 || (order & (order - 1))) throw InvalidArgument("quaternion: order must be a power of 2, at least 8");
  return metacyclic_involutive(order / 2, order / 4, "b");
}
inline FiniteGroup q8() { return quaternion(8); }

/// Heisenberg group of upper unitriangular 3x3 matrices over Z_p: order
/// p^3, exponent p for odd p (for p = 2 it is D8).
inline FiniteGroup heisenberg(std::uint32_t p) {
  if (prime_power(p).first != p || prime_power(p).second != 1) throw InvalidArgument("heisenberg: p must be prime");
  const std::uint32_t n = p * p * p;
  auto idx = [p](std::uint32_t a, std::uint32_t b, std::uint32_t c) { return (a * p + b) * p + c; };
  std::vector<std::string> labels(n);
  std::vector<Element> flat(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c) {
        labels[idx(a, b, c)] = "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
        for (std::uint32_t x = 0; x < p; ++x)
          for (std::uint32_t y = 0; y < p; ++y)
            for (std::uint32_t z = 0; z < p; ++z)
              flat[static_cast<std::size_t>(idx(a, b, c)) * n + idx(x, y, z)] =
                  idx((a + x) % p, (b + y) % p, (c + z + a * y) % p);
      }
  return FiniteGroup::from_trusted_table(std::move(labels), std::move(flat));
}

/// Z_{p^2} semidirect Z_p with b a b^-1 = a^(1+p): order p^3, exponent p^2.
inline FiniteGroup metacyclic_p3(std::uint32_t p) {
  if (prime_power(p).first != p || prime_power(p).second != 1) throw InvalidArgument("metacyclic_p3: p must be prime");
  const std::uint32_t m = p * p, n = m * p;
  std::vector<std::uint32_t> s_pow(p, 1);  // (1+p)^j mod p^2
  for (std::uint32_t j = 1; j < p; ++j) s_pow[j] = s_pow[j - 1] * (1 + p) % m;
  std::vector<std::string> labels(n);
  std::vector<Element> flat(static_cast<std::size_t>(n) * n);
  for (std::uint32_t j = 0; j < p; ++j)
    for (std::uint32_t i = 0; i < m; ++i) {
      labels[j * m + i] = "a^" + std::to_string(i) + "b^" + std::to_string(j);
      for (std::uint32_t l = 0; l < p; ++l)
        for (std::uint32_t k = 0; k < m; ++k)
          flat[static_cast<std::size_t>(j * m + i) * n + l * m + k] = ((j + l) % p) * m + (i + k * s_pow[j]) % m;
    }
  return FiniteGroup::from_trusted_table(std::move(labels), std::move(flat));
}

/// Extraspecial group of order p^3. For odd p, `exponent_p` picks between
/// exponent p and p^2; for p = 2 it picks D8 (true) or Q8 (false).
inline FiniteGroup extraspecial(std::uint32_t p, bool exponent_p = true) {
  if (p == 2) return exponent_p ? d8() : q8();
  return exponent_p ? heisenberg(p) : metacyclic_p3(p);
}

inline FiniteGroup symmetric3() { return from_permutations(3, {{2, 3, 1}, {2, 1, 3}}); }

inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order() * h.order();
  std::vector<std::string> labels(n);
  std::vector<Element> flat(n * n);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < h.order(); ++b) {
      const std::size_t x = a * h.order() + b;
      labels[x] = "(" + g.label(a) + "," + h.label(b) + ")";
      for (Element c = 0; c < g.order(); ++c)
        for (Element d = 0; d < h.order(); ++d)
          flat[x * n + c * h.order() + d] = static_cast<Element>(g.multiply(a, c) * h.order() + h.multiply(b, d));
    }
  return FiniteGroup::from_trusted_table(std::move(labels), std::move(flat));
}

namespace detail {

inline std::vector<std::string> split_args(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::uint64_t parse_uint(const std::string& s, const std::string& name) {
  if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidArgument("group name '" + name + "': expected a positive integer, got '" + s + "'");
  return std::stoull(s);
}

}  // namespace detail

/// Resolves a built-in group name. Accepted forms: trivial, klein4, d8,
/// q8, s3, cyclic(n), abelian(n1,...), elementary(p,d), dihedral(order),
/// quaternion(order), heisenberg(p), extraspecial(p[,exponent-p|exponent-p2]).
/// Returns nullopt when the name is not of any of these shapes.
inline std::optional<FiniteGroup> by_name(std::string_view raw) {
  std::string name;
  for (char ch : raw) name += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (name == "trivial") return trivial();
  if (name == "klein4" || name == "v4") return klein4();
  if (name == "d8") return d8();
  if (name == "q8") return q8();
  if (name == "s3") return symmetric3();
  const auto open = name.find('(');
  if (open == std::string::npos || name.back() != ')') return std::nullopt;
  const std::string head = name.substr(0, open);
  const auto args = detail::split_args(std::string_view(name).substr(open + 1, name.size() - open - 2));
  const std::string full(raw);
  auto num = [&](std::size_t i) { return detail::parse_uint(args.at(i), full); };
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi)
      throw InvalidArgument("group name '" + full + "': wrong number of arguments");
  };
  auto prime = [&](std::uint64_t p) {
    if (prime_power(p).first != p || prime_power(p).second != 1)
      throw InvalidArgument("group name '" + full + "': " + std::to_string(p) + " is not prime");
    return static_cast<std::uint32_t>(p);
  };
  if (head == "cyclic") {
    need(1, 1);
    const auto n = num(0);
    if (n == 0) throw InvalidArgument("group name '" + full + "': order must be positive");
    return cyclic(n);
  }
  if (head == "abelian") {
    std::vector<std::uint64_t> inv;
    if (!(args.size() == 1 && args[0].empty()))
      for (std::size_t i = 0; i < args.size(); ++i) {
        inv.push_back(num(i));
        if (inv.back() == 0) throw InvalidArgument("group name '" + full + "': cyclic order 0");
      }
    return abelian(AbelianGroup::from_cyclic_orders(inv));
  }
  if (head == "elementary") {
    need(2, 2);
    return elementary(prime(num(0)), static_cast<unsigned>(num(1)));
  }
  if (head == "dihedral") {
    need(1, 1);
    return dihedral(static_cast<std::uint32_t>(num(0)));
  }
  if (head == "quaternion") {
    need(1, 1);
    return quaternion(static_cast<std::uint32_t>(num(0)));
  }
  if (head == "heisenberg") {
    need(1, 1);
    return heisenberg(prime(num(0)));
  }
  if (head == "extraspecial") {
    need(1, 2);
    const auto p = prime(num(0));
    bool exp_p = true;
    if (args.size() == 2) {
      const auto& kind = args[1];
      if (kind == "exponent-p" || kind == "p") exp_p = true;
      else if (kind == "exponent-p2" || kind == "exponent-p^2" || kind == "p2" || kind == "p^2") exp_p = false;
      else throw InvalidArgument("group name '" + full + "': expected exponent-p or exponent-p2");
    }
    return extraspecial(p, exp_p);
  }
  return std::nullopt;
}

}  // namespace nilmult::groups
