#pragma once

// c-nilpotent multipliers M^(c)(G) where an exact value is available:
// every finite abelian group, D8 for c >= 2, and the classical Schur
// multipliers (c = 1) of a few small nonabelian p-groups.

#include "nilmult/abelian.hpp"
#include "nilmult/group_engine.hpp"
#include "nilmult/witt_hall.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>

namespace nilmult {

/// M^(c) of Z_{n_1} + ... + Z_{n_k} (n_{i+1} | n_i): for j = 2..k the
/// summand Z_{n_j} appears chi_{c+1}(j) - chi_{c+1}(j-1) times, with
/// chi_{c+1}(1) = 0.
inline AbelianGroup abelian_multiplier(const AbelianGroup& g, unsigned c) {
  if (c == 0) throw InvalidArgument("abelian_multiplier: class c must be positive");
  const auto& n = g.invariants();
  std::vector<std::uint64_t> parts;
  BigInt previous = 0;  // chi_{c+1}(1)
  for (std::size_t j = 2; j <= n.size(); ++j) {
    BigInt current = witt(c + 1, j);
    BigInt copies = current - previous;
    previous = current;
    const auto count = to_u64(copies, "multiplier summand count");
    if (parts.size() + count > 50'000'000) throw ResourceLimit("abelian_multiplier: too many summands");
    parts.insert(parts.end(), count, n[j - 1]);
  }
  return canonicalize(parts);
}

/// Z4 + Z2^(chi_{c+1}(2) - 1).
inline AbelianGroup dihedral8_multiplier(unsigned c) {
  if (c == 0) throw InvalidArgument("dihedral8_multiplier: class c must be positive");
  const auto copies = to_u64(witt(c + 1, 2) - 1, "Z2 summand count");
  std::vector<std::uint64_t> parts(copies, 2);
  parts.push_back(4);
  return canonicalize(parts);
}

struct KnownMultiplier {
  AbelianGroup value;
  std::string provenance;
};

struct MultiplierOptions {
  /// Also apply the D8 formula at c = 1, where it gives Z4 instead of the
  /// classical Schur multiplier Z2.
  bool d8_formula_at_c1 = false;
};

struct MultiplierQuery {
  std::variant<AbelianGroup, FiniteGroup> group;
  unsigned c = 1;
};

/// Isomorphism-class fingerprints for the registry's nonabelian groups.
enum class SmallGroupKind {
  other,
  dihedral_2group,        // order 2^n >= 8
  quaternion_2group,      // generalized quaternion, order 2^n >= 8
  extraspecial_exp_p,     // order p^3, p odd, exponent p
  extraspecial_exp_p2,    // order p^3, p odd, exponent p^2
};

/// Recognizes the nonabelian groups above from order statistics:
/// a nonabelian group of order 2^n with an element of order 2^(n-1) is
/// dihedral, semidihedral, quaternion or modular; 2^(n-1)+1 involutions
/// pin down the dihedral group and a single involution the quaternion one.
/// Nonabelian groups of order p^3 (p odd) are told apart by exponent.
inline SmallGroupKind classify_small_group(const FiniteGroup& g) {
  if (g.is_abelian()) return SmallGroupKind::other;
  const auto [p, n] = prime_power(g.order());
  if (p == 0) return SmallGroupKind::other;
  std::map<std::size_t, std::size_t> census;
  for (Element a = 0; a < g.order(); ++a) ++census[g.element_order(a)];
  if (p == 2 && n >= 3) {
    const std::size_t half = g.order() / 2;
    if (!census.count(half)) return SmallGroupKind::other;
    if (census[2] == half + 1) return SmallGroupKind::dihedral_2group;
    if (census[2] == 1) return SmallGroupKind::quaternion_2group;
    return SmallGroupKind::other;
  }
  if (p != 2 && n == 3) {
    const auto e = group_exponent(g);
    return e == p ? SmallGroupKind::extraspecial_exp_p : SmallGroupKind::extraspecial_exp_p2;
  }
  return SmallGroupKind::other;
}

inline std::optional<KnownMultiplier> known_multiplier(const MultiplierQuery& q, const MultiplierOptions& opts = {}) {
  if (q.c == 0) throw InvalidArgument("known_multiplier: class c must be positive");
  if (const auto* a = std::get_if<AbelianGroup>(&q.group))
    return KnownMultiplier{abelian_multiplier(*a, q.c), "invariant-factor formula (abelian groups)"};
  const auto& g = std::get<FiniteGroup>(q.group);
  if (g.is_abelian()) return KnownMultiplier{abelian_multiplier(abelian_invariants(g), q.c), "invariant-factor formula (abelian groups)"};

  const auto kind = classify_small_group(g);
  const auto p = prime_power(g.order()).first;
  if (kind == SmallGroupKind::dihedral_2group && g.order() == 8 && (q.c >= 2 || opts.d8_formula_at_c1))
    return KnownMultiplier{dihedral8_multiplier(q.c), "Example 28"};
  if (q.c != 1) return std::nullopt;
  switch (kind) {
    case SmallGroupKind::dihedral_2group:
      return KnownMultiplier{AbelianGroup::cyclic(2), "classical Schur multiplier (dihedral 2-group)"};
    case SmallGroupKind::quaternion_2group:
      return KnownMultiplier{AbelianGroup{}, "classical Schur multiplier (generalized quaternion group)"};
    case SmallGroupKind::extraspecial_exp_p:
      return KnownMultiplier{AbelianGroup::elementary(p, 2), "classical Schur multiplier (extraspecial p^3, exponent p)"};
    case SmallGroupKind::extraspecial_exp_p2:
      return KnownMultiplier{AbelianGroup{}, "classical Schur multiplier (extraspecial p^3, exponent p^2)"};
    case SmallGroupKind::other:
      break;
  }
  return std::nullopt;
}

}  // namespace nilmult
