#pragma once

// The built-in corpus: named groups with expected values, and a sweep that
// checks every fixture and every applicable bound.

#include "nilmult/bounds.hpp"
#include "nilmult/groups.hpp"
#include "nilmult/multiplier.hpp"
#include "nilmult/witt_hall.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nilmult {

struct ExpectedMultiplier {
  unsigned c;
  AbelianGroup value;
  std::string provenance;
};

/// A named check. `run` returns an empty string on success, otherwise a
/// description of the mismatch.
struct Fixture {
  std::string description;
  std::string provenance;
  std::function<std::string()> run;
};

struct CorpusEntry {
  std::string name;          // resolvable through groups::by_name
  std::string construction;  // "abelian", "table" or "perm"
  std::vector<ExpectedMultiplier> expected;
};

inline std::vector<CorpusEntry> builtin_corpus() {
  auto ab = [](std::string name, std::vector<ExpectedMultiplier> e = {}) {
    return CorpusEntry{std::move(name), "abelian", std::move(e)};
  };
  auto tb = [](std::string name, std::vector<ExpectedMultiplier> e = {}) {
    return CorpusEntry{std::move(name), "table", std::move(e)};
  };
  const std::string classical = "classical Schur multiplier";
  return {
      ab("trivial"),
      ab("cyclic(2)"),
      ab("cyclic(4)"),
      ab("cyclic(8)"),
      ab("cyclic(9)"),
      ab("cyclic(6)"),
      ab("klein4", {{1, AbelianGroup::cyclic(2), classical}, {2, AbelianGroup::elementary(2, 2), "Witt count chi_3(2)=2"}}),
      ab("abelian(4,2)", {{1, AbelianGroup::cyclic(2), classical}}),
      ab("abelian(4,4)"),
      ab("abelian(8,2)"),
      ab("abelian(4,2,2)"),
      ab("elementary(2,3)", {{1, AbelianGroup::elementary(2, 3), classical}}),
      ab("elementary(2,4)"),
      ab("elementary(3,2)"),
      ab("elementary(3,3)", {{2, AbelianGroup::elementary(3, 8), "Witt count chi_3(3)=8"}}),
      ab("abelian(9,3)"),
      ab("elementary(5,2)"),
      tb("d8", {{1, AbelianGroup::cyclic(2), classical},
                {2, AbelianGroup::from_cyclic_orders({4, 2}), "Example 28"},
                {3, AbelianGroup::from_cyclic_orders({4, 2, 2}), "Example 28"}}),
      tb("q8", {{1, AbelianGroup{}, classical}}),
      tb("dihedral(16)", {{1, AbelianGroup::cyclic(2), classical}}),
      tb("quaternion(16)", {{1, AbelianGroup{}, classical}}),
      tb("dihedral(32)"),
      tb("extraspecial(3,exponent-p)", {{1, AbelianGroup::elementary(3, 2), classical}}),
      tb("extraspecial(3,exponent-p2)", {{1, AbelianGroup{}, classical}}),
      tb("extraspecial(5,exponent-p)"),
      tb("dihedral(12)"),
      {"s3", "perm", {}},
  };
}

struct CorpusResult {
  std::vector<std::string> lines;
  std::size_t checks = 0;
  std::size_t failures = 0;

  bool ok() const { return failures == 0; }
};

namespace detail {

inline std::string expect_eq(const std::string& what, const std::string& got, const std::string& want) {
  return got == want ? std::string{} : what + ": got " + got + ", expected " + want;
}

inline const BoundReport& find_report(const std::vector<BoundReport>& reports, const std::string& id) {
  for (const auto& r : reports)
    if (r.id == id) return r;
  throw InternalError("no report with id " + id);
}

/// [M, gamma_i(N)] contained in [M, N, ..., N] (i copies) for all normal M, N and i <= class.
inline std::string check_commutator_containment(const FiniteGroup& g, unsigned t) {
  const auto normals = normal_subgroups(g, g.order());
  for (const auto& m : normals)
    for (const auto& n : normals)
      for (unsigned i = 1; i <= std::max(t, 1u); ++i) {
        const auto lhs = commutator_subgroup(g, m, lower_central_term(g, n, i));
        if (!lhs.is_subset_of(iterated_commutator(g, m, n, i)))
          return "containment fails for |M|=" + std::to_string(m.size()) + ", |N|=" + std::to_string(n.size()) +
                 ", i=" + std::to_string(i);
      }
  return {};
}

/// Z_{p^k} + Z_p^t: the family on which the central-subgroup bound beats
/// the Witt-count bound once k > 1.
inline std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> central_cyclic_family() {
  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> out;
  const std::pair<std::uint64_t, unsigned> limits[] = {{2, 7}, {3, 5}};
  for (const auto& [p, max_n] : limits)
    for (unsigned k = 2; k <= 4; ++k)
      for (unsigned t = 1; t <= 3 && k + t <= max_n; ++t) {
        std::vector<std::uint64_t> inv{to_u64(pow(BigInt(p), k))};
        inv.insert(inv.end(), t, p);
        out.push_back({p, inv});
      }
  return out;
}

}  // namespace detail

/// Fixtures that are not attached to a single corpus entry.
inline std::vector<Fixture> reference_fixtures() {
  using detail::expect_eq;
  std::vector<Fixture> out;
  out.push_back({"witt(3,3) = 8", "Example 25", [] { return expect_eq("witt(3,3)", witt(3, 3).str(), "8"); }});
  for (std::uint32_t p : {2u, 3u}) {
    const std::string ps = std::to_string(p);
    out.push_back({"extraspecial(" + ps + ") c=2: theorem_B bound p^6 below corollary12 bound p^8", "Example 25", [p, ps] {
                     BoundContext ctx(groups::extraspecial(p), 2);
                     const auto b = theorem_B(ctx)[0];
                     const auto u = corollary12(ctx).second;
                     if (auto e = expect_eq("theorem_B rhs", to_string(*b.rhs), ps + "^6"); !e.empty()) return e;
                     if (auto e = expect_eq("corollary12 rhs", to_string(*u.rhs), ps + "^8"); !e.empty()) return e;
                     const auto cmp = compare_bounds(ctx);
                     const auto* row = cmp.find("theorem_B.order");
                     if (!row || !row->tightest) return std::string("theorem_B not flagged tightest");
                     for (const auto& id : row->strictly_below)
                       if (id == "corollary12.upper") return std::string{};
                     return std::string("theorem_B not strictly below corollary12");
                   }});
  }
  out.push_back({"D8 c=2: M = Z4 + Z2, exponent 4, corollary27 attained", "Example 28", [] {
                   BoundContext ctx(groups::d8(), 2);
                   const auto& m = ctx.multiplier();
                   if (!m) return std::string("multiplier unknown");
                   if (auto e = expect_eq("M^(2)(D8)", m->value.to_string(), "Z4 + Z2"); !e.empty()) return e;
                   if (auto e = expect_eq("provenance", m->provenance, "Example 28"); !e.empty()) return e;
                   const auto r = corollary27(ctx);
                   if (auto e = expect_eq("corollary27 rhs", to_string(*r.rhs), "2^2"); !e.empty()) return e;
                   return expect_eq("corollary27 lhs", to_string(*r.lhs), "2^2");
                 }});
  out.push_back({"extraspecial(3,exponent-p) c=1: theorem_C order bound attained", "Remarks (i)", [] {
                   BoundContext ctx(groups::extraspecial(3), 1);
                   const auto r = theorem_C(ctx)[0];
                   if (!r.lhs || !r.rhs) return std::string("sides unknown");
                   return expect_eq("theorem_C order", to_string(*r.lhs), to_string(*r.rhs));
                 }});
  out.push_back({"D8 c=2: theorem_C exponent bound attained", "Remarks (i)", [] {
                   BoundContext ctx(groups::d8(), 2);
                   const auto r = theorem_C(ctx)[1];
                   if (!r.lhs || !r.rhs) return std::string("sides unknown");
                   return expect_eq("theorem_C exponent", to_string(*r.lhs), to_string(*r.rhs));
                 }});
  for (const auto& [p, inv] : detail::central_cyclic_family()) {
    const auto a = AbelianGroup::from_cyclic_orders(inv);
    out.push_back({a.to_string() + " c=2: theorem_A bound below corollary12 bound", "Example 23", [a] {
                     BoundContext ctx(groups::abelian(a), 2);
                     const auto ta = theorem_A(ctx);
                     const auto cu = corollary12(ctx).second;
                     const auto& x = std::get<PValue>(*ta.rhs);
                     const auto& y = std::get<PValue>(*cu.rhs);
                     return x < y ? std::string{} : "theorem_A " + x.to_string() + " vs corollary12 " + y.to_string();
                   }});
  }
  for (std::uint32_t p : {2u, 3u})
    for (unsigned d = 1; d <= 3; ++d) {
      out.push_back({"elementary(" + std::to_string(p) + "," + std::to_string(d) + ") c=2: theorem_A ties corollary12",
                     "Example 23", [p, d] {
                       BoundContext ctx(groups::elementary(p, d), 2);
                       const auto x = std::get<PValue>(*theorem_A(ctx).rhs);
                       const auto cmp = compare_bounds(ctx);
                       if (!cmp.find("theorem_A") || !cmp.find("corollary12.upper")) return std::string("rows missing");
                       return expect_eq("theorem_A rhs", x.to_string(), cmp.find("corollary12.upper")->rhs.to_string());
                     }});
    }
  for (unsigned d = 1; d <= 3; ++d)
    for (unsigned c = 1; c <= 3; ++c)
      out.push_back({"elementary(2," + std::to_string(d) + ") c=" + std::to_string(c) +
                         ": corollary12 lower and corollary26 attained",
                     "Corollary 26 remark", [d, c] {
                       BoundContext ctx(groups::elementary(2, d), c);
                       const auto lo = corollary12(ctx).first;
                       const auto g = corollary26(ctx);
                       if (auto e = expect_eq("corollary12 lower", to_string(*lo.lhs), to_string(*lo.rhs)); !e.empty())
                         return e;
                       return expect_eq("corollary26", to_string(*g.lhs), to_string(*g.rhs));
                     }});
  return out;
}

/// Runs the corpus: expected multipliers, the soundness sweep over
/// c = 1..class_max, the multiplier-order property, commutator containment
/// for groups of order <= 32, and the reference fixtures.
inline CorpusResult run_corpus(unsigned class_max = 3, const BoundOptions& opts = {}) {
  if (class_max == 0) throw InvalidArgument("corpus: class-max must be positive");
  CorpusResult res;
  auto record = [&](const std::string& what, const std::string& error) {
    ++res.checks;
    if (error.empty()) {
      res.lines.push_back("PASS " + what);
    } else {
      ++res.failures;
      res.lines.push_back("FAIL " + what + ": " + error);
    }
  };
  for (const auto& entry : builtin_corpus()) {
    const auto g = *groups::by_name(entry.name);
    const auto an = analyze(g, opts.caps);
    for (const auto& exp : entry.expected) {
      const auto m = known_multiplier({g, exp.c}, opts.multiplier);
      record(entry.name + " M^(" + std::to_string(exp.c) + ") [" + exp.provenance + "]",
             m ? detail::expect_eq("multiplier", m->value.to_string(), exp.value.to_string()) : "multiplier unknown");
    }
    for (unsigned c = 1; c <= class_max; ++c) {
      const BoundContext ctx(g, an, c, opts);
      if (!ctx.multiplier()) continue;
      std::string failed;
      std::size_t verified = 0;
      for (const auto& r : all_reports(ctx)) {
        if (r.verdict == Verdict::holds) ++verified;
        if (r.verdict == Verdict::fails)
          failed += (failed.empty() ? "" : ", ") + r.id + " (" + (r.lhs ? to_string(*r.lhs) : "?") + " " +
                    to_string(r.relation) + " " + (r.rhs ? to_string(*r.rhs) : "?") + ")";
      }
      record(entry.name + " c=" + std::to_string(c) + ": " + std::to_string(verified) + " bounds hold", failed);
      if (an.p_group && an.prime) {
        const auto f = PValue::order_of(ctx.multiplier()->value).factors();
        const bool ok = f.empty() || (f.size() == 1 && f.begin()->first == *an.prime);
        record(entry.name + " c=" + std::to_string(c) + ": |M| is a power of p",
               ok ? "" : "|M| = " + ctx.multiplier()->value.order().str());
      }
    }
    if (g.order() <= 32)
      record(entry.name + ": [M, gamma_i(N)] <= [M, _i N]",
             detail::check_commutator_containment(g, an.nilpotency_class.value_or(3)));
  }
  for (const auto& f : reference_fixtures()) {
    std::string err;
    try {
      err = f.run();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    record(f.description + " [" + f.provenance + "]", err);
  }
  return res;
}

}  // namespace nilmult
