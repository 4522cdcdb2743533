#pragma once

// Structural analysis of table groups: subgroup closure, commutator
// subgroups, central series, quotients, abelianization, generator counts.

#include "nilmult/abelian.hpp"
#include "nilmult/caps.hpp"
#include "nilmult/finite_group.hpp"

#include <deque>
#include <optional>
#include <unordered_set>

namespace nilmult {

/// Subgroup generated by the given elements.
inline ElementSet generated_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  ElementSet s = g.trivial();
  std::vector<Element> frontier{g.identity()};
  while (!frontier.empty()) {
    Element x = frontier.back();
    frontier.pop_back();
    for (Element y : gens) {
      Element z = g.multiply(x, y);
      if (!s.contains(z)) {
        s.insert(z);
        frontier.push_back(z);
      }
    }
  }
  return s;
}

inline bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.universe() != g.order() || !s.contains(g.identity())) return false;
  auto elems = s.elements();
  for (Element a : elems)
    for (Element b : elems)
      if (!s.contains(g.multiply(a, b))) return false;
  return true;
}

/// Normal iff closed and stable under conjugation by every element.
inline bool is_normal(const FiniteGroup& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) return false;
  auto elems = h.elements();
  for (Element x = 0; x < g.order(); ++x)
    for (Element a : elems)
      if (!h.contains(g.conjugate(a, x))) return false;
  return true;
}

/// [M, N]: generated by all [x, y] with x in M, y in N.
inline ElementSet commutator_subgroup(const FiniteGroup& g, const ElementSet& m, const ElementSet& n) {
  if (!is_subgroup(g, m) || !is_subgroup(g, n))
    throw InvalidArgument("commutator_subgroup: arguments must be subgroups");
  ElementSet seen(g.order());
  std::vector<Element> gens;
  auto ns = n.elements();
  for (Element x : m.elements())
    for (Element y : ns) {
      Element c = g.commutator(x, y);
      if (!seen.contains(c)) {
        seen.insert(c);
        gens.push_back(c);
      }
    }
  return generated_subgroup(g, gens);
}

inline ElementSet derived_subgroup(const FiniteGroup& g) {
  auto all = g.whole();
  return commutator_subgroup(g, all, all);
}

/// [M, N, N, ..., N] with `copies` copies of N, left-normed.
inline ElementSet iterated_commutator(const FiniteGroup& g, const ElementSet& m, const ElementSet& n, unsigned copies) {
  ElementSet r = m;
  for (unsigned i = 0; i < copies; ++i) r = commutator_subgroup(g, r, n);
  return r;
}

inline ElementSet center(const FiniteGroup& g) {
  ElementSet z(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g.multiply(a, b) == g.multiply(b, a);
    if (central) z.insert(a);
  }
  return z;
}

/// gamma_1 = G, gamma_{j+1} = [gamma_j, G], stopping once the series is
/// stable. Ends in the trivial subgroup iff G is nilpotent.
inline std::vector<ElementSet> lower_central_series(const FiniteGroup& g) {
  const auto all = g.whole();
  std::vector<ElementSet> series{all};
  while (true) {
    auto next = commutator_subgroup(g, series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

/// Lower central series of the subgroup N itself: gamma_1(N) = N,
/// gamma_{j+1}(N) = [gamma_j(N), N], as subsets of G.
inline ElementSet lower_central_term(const FiniteGroup& g, const ElementSet& n, unsigned i) {
  if (i == 0) throw InvalidArgument("lower central terms are indexed from 1");
  ElementSet r = n;
  for (unsigned j = 1; j < i; ++j) r = commutator_subgroup(g, r, n);
  return r;
}

/// Z_0 = 1, Z_{j+1} = { x : [x, y] in Z_j for every y }.
inline std::vector<ElementSet> upper_central_series(const FiniteGroup& g) {
  std::vector<ElementSet> series{g.trivial()};
  while (true) {
    const auto& z = series.back();
    ElementSet next(g.order());
    for (Element x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (Element y = 0; y < g.order() && ok; ++y) ok = z.contains(g.commutator(x, y));
      if (ok) next.insert(x);
    }
    if (next == z) break;
    series.push_back(std::move(next));
  }
  return series;
}

/// Nilpotency class, or nullopt if G is not nilpotent. The trivial group has class 0.
inline std::optional<unsigned> nilpotency_class(const std::vector<ElementSet>& lower_central) {
  if (lower_central.back().size() != 1) return std::nullopt;
  return static_cast<unsigned>(lower_central.size() - 1);
}

struct QuotientMap {
  FiniteGroup group;
  std::vector<Element> coset_of;  // element of G -> element of G/N
};

inline QuotientMap quotient_map(const FiniteGroup& g, const ElementSet& n) {
  if (!is_normal(g, n)) throw InvalidArgument("quotient: subgroup is not normal");
  const Element none = static_cast<Element>(g.order());
  std::vector<Element> coset_of(g.order(), none);
  std::vector<Element> reps;
  auto members = n.elements();
  auto add_coset = [&](Element x) {
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element h : members) coset_of[g.multiply(x, h)] = id;
  };
  add_coset(g.identity());
  for (Element x = 0; x < g.order(); ++x)
    if (coset_of[x] == none) add_coset(x);
  const std::size_t q = reps.size();
  std::vector<Element> flat(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) flat[i * q + j] = coset_of[g.multiply(reps[i], reps[j])];
  std::vector<std::string> labels;
  labels.reserve(q);
  for (Element r : reps) labels.push_back(g.label(r));
  return {FiniteGroup::from_trusted_table(std::move(labels), std::move(flat)), std::move(coset_of)};
}

inline FiniteGroup quotient(const FiniteGroup& g, const ElementSet& n) { return quotient_map(g, n).group; }

/// The subgroup H as a group in its own right.
inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) throw InvalidArgument("subgroup_as_group: not a subgroup");
  auto elems = h.elements();
  std::vector<Element> local(g.order());
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Element>(i);
  const std::size_t k = elems.size();
  std::vector<Element> flat(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) flat[i * k + j] = local[g.multiply(elems[i], elems[j])];
  std::vector<std::string> labels;
  for (Element e : elems) labels.push_back(g.label(e));
  return FiniteGroup::from_trusted_table(std::move(labels), std::move(flat));
}

inline std::uint64_t group_exponent(const FiniteGroup& g) {
  std::uint64_t e = 1;
  for (Element a = 0; a < g.order(); ++a) e = std::lcm(e, static_cast<std::uint64_t>(g.element_order(a)));
  return e;
}

inline std::uint64_t subset_exponent(const FiniteGroup& g, const ElementSet& s) {
  std::uint64_t e = 1;
  for (Element a : s.elements()) e = std::lcm(e, static_cast<std::uint64_t>(g.element_order(a)));
  return e;
}

/// Invariant factors of an abelian table group, read off its element-order
/// census: for each prime p, #{x : x^(p^i) = 1} = p^(sum_j min(lambda_j, i))
/// determines the partition lambda of the p-primary part.
inline AbelianGroup abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw InvalidArgument("abelian_invariants: group is not abelian");
  std::vector<std::size_t> orders(g.order());
  for (Element a = 0; a < g.order(); ++a) orders[a] = g.element_order(a);
  std::vector<std::uint64_t> prime_powers;
  for (const auto& [p, e] : factorize(g.order())) {
    // s[i] = log_p #{x : order(x) divides p^i}
    std::vector<unsigned> s(e + 1, 0);
    std::uint64_t q = 1;
    for (unsigned i = 1; i <= e; ++i) {
      q *= p;
      std::size_t count = 0;
      for (auto o : orders)
        if (q % o == 0) ++count;
      unsigned logc = 0;
      for (std::size_t c = count; c > 1; c /= p) ++logc;
      s[i] = logc;
    }
    // m[i] = number of parts >= i
    std::vector<unsigned> m(e + 2, 0);
    for (unsigned i = 1; i <= e; ++i) m[i] = s[i] - s[i - 1];
    for (unsigned i = 1; i <= e; ++i) {
      std::uint64_t pi = 1;
      for (unsigned k = 0; k < i; ++k) pi *= p;
      for (unsigned c = 0; c < m[i] - m[i + 1]; ++c) prime_powers.push_back(pi);
    }
  }
  return canonicalize(prime_powers);
}

/// G/G' in invariant-factor form.
inline AbelianGroup abelianization(const FiniteGroup& g) { return abelian_invariants(quotient(g, derived_subgroup(g))); }

inline AbelianGroup abelianization_of(const FiniteGroup& g, const ElementSet& h) {
  return abelianization(subgroup_as_group(g, h));
}

struct SubgroupRecord {
  ElementSet elements;
  unsigned min_generators;
  std::vector<Element> generators;
};

/// Breadth-first enumeration of subgroups by number of generators: level k
/// holds <H, x> for H on level k-1 and x outside H. A subgroup first
/// appears on level d(H). With `stop_at_whole`, stops as soon as G itself
/// appears.
inline std::vector<SubgroupRecord> enumerate_subgroups(const FiniteGroup& g, bool stop_at_whole = false) {
  std::vector<SubgroupRecord> all{{g.trivial(), 0, {}}};
  std::unordered_set<ElementSet, ElementSetHash> seen{g.trivial()};
  if (g.order() == 1) return all;
  std::size_t level_begin = 0;
  for (unsigned level = 1;; ++level) {
    const std::size_t level_end = all.size();
    if (level_begin == level_end) break;
    for (std::size_t idx = level_begin; idx < level_end; ++idx) {
      // <H, x> depends only on the coset xH
      ElementSet covered(g.order());
      const ElementSet h = all[idx].elements;
      const auto h_elems = h.elements();
      const auto h_gens = all[idx].generators;
      for (Element x = 0; x < g.order(); ++x) {
        if (covered.contains(x) || h.contains(x)) continue;
        for (Element y : h_elems) covered.insert(g.multiply(x, y));
        auto gens = h_gens;
        gens.push_back(x);
        auto k = generated_subgroup(g, gens);
        if (!seen.insert(k).second) continue;
        const bool whole = k.size() == g.order();
        all.push_back({std::move(k), level, std::move(gens)});
        if (whole && stop_at_whole) return all;
      }
    }
    level_begin = level_end;
  }
  return all;
}

/// d(G): the least number of elements generating G.
inline unsigned min_generators(const FiniteGroup& g, std::size_t cap = Caps{}.min_generators) {
  if (g.order() > cap)
    throw ResourceLimit("min_generators: |G| = " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
  if (g.order() == 1) return 0;
  // cyclic shortcut
  for (Element a = 0; a < g.order(); ++a)
    if (g.element_order(a) == g.order()) return 1;
  auto subgroups = enumerate_subgroups(g, true);
  return subgroups.back().min_generators;
}

/// r(G) = max over subgroups H of d(H).
inline unsigned special_rank(const FiniteGroup& g, std::size_t cap = Caps{}.special_rank) {
  if (g.order() > cap)
    throw ResourceLimit("special_rank: |G| = " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
  unsigned r = 0;
  for (const auto& rec : enumerate_subgroups(g)) r = std::max(r, rec.min_generators);
  return r;
}

inline std::vector<ElementSet> normal_subgroups(const FiniteGroup& g, std::size_t cap = Caps{}.special_rank) {
  if (g.order() > cap)
    throw ResourceLimit("normal_subgroups: |G| = " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
  std::vector<ElementSet> out;
  for (auto& rec : enumerate_subgroups(g))
    if (is_normal(g, rec.elements)) out.push_back(std::move(rec.elements));
  return out;
}

/// Cached structural data of a group. Immutable once built by analyze().
struct GroupAnalysis {
  std::size_t order = 1;
  bool abelian = true;
  bool p_group = true;                  // order is a prime power or 1
  std::optional<std::uint64_t> prime;   // p when |G| = p^n, n >= 1
  unsigned log_order = 0;               // n when |G| = p^n
  std::vector<ElementSet> lower_central;
  std::vector<ElementSet> upper_central;
  std::optional<unsigned> nilpotency_class;
  std::uint64_t exponent = 1;
  std::uint64_t center_exponent = 1;
  std::optional<unsigned> min_generators;  // unset beyond the cap
  std::optional<unsigned> special_rank;    // unset beyond the cap
  AbelianGroup abelianization;

  const ElementSet& gamma(unsigned j) const {
    // gamma_j for j >= 1; past the end of the series the last term repeats
    return lower_central.at(std::min<std::size_t>(j, lower_central.size()) - 1);
  }
  const ElementSet& upper(unsigned j) const {
    return upper_central.at(std::min<std::size_t>(j, upper_central.size() - 1));
  }
};

inline GroupAnalysis analyze(const FiniteGroup& g, const Caps& caps = Caps{}) {
  GroupAnalysis a;
  a.order = g.order();
  a.abelian = g.is_abelian();
  if (a.order > 1) {
    auto [p, n] = prime_power(a.order);
    a.p_group = p != 0;
    if (a.p_group) {
      a.prime = p;
      a.log_order = n;
    }
  }
  a.lower_central = lower_central_series(g);
  a.upper_central = upper_central_series(g);
  a.nilpotency_class = nilpotency_class(a.lower_central);
  a.exponent = group_exponent(g);
  a.center_exponent = subset_exponent(g, center(g));
  if (a.order <= caps.min_generators) a.min_generators = min_generators(g, caps.min_generators);
  if (a.order <= caps.special_rank) a.special_rank = special_rank(g, caps.special_rank);
  a.abelianization = abelianization(g);
  return a;
}

}  // namespace nilmult
