// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "nilmult/corpus.hpp"
#include "nilmult/free_nilpotent.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>

using namespace nilmult;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_s > 0 && secs > budget_s) out.fail("exceeded " + std::to_string(budget_s) + " s");
  if (!out.ok) ++failures;
  std::printf("%s %d %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.ok ? "" : ": ",
              out.detail.c_str());
}

// Rank over Q via fraction-free elimination.
std::size_t exact_rank(std::vector<std::vector<BigInt>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t k = col + 1; k < cols; ++k)
        m[r][k] = (m[rank][col] * m[r][k] - m[r][col] * m[rank][k]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

AbelianGroup classical_schur(const std::vector<std::uint64_t>& n) {
  std::vector<std::uint64_t> parts;
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = i + 1; j < n.size(); ++j) parts.push_back(std::gcd(n[i], n[j]));
  return canonicalize(parts);
}

}  // namespace

int main() {
  criterion(1, "Witt values and Hall strata", 5.0, [](Outcome& o) {
    if (witt(3, 3) != 8) o.fail("witt(3,3) = " + witt(3, 3).str());
    for (unsigned d = 1; d <= 4; ++d) {
      const auto h = hall_basis(d, 6);
      for (unsigned n = 1; n <= 6; ++n)
        if (BigInt(h.stratum(n).size()) != witt(n, d))
          o.fail("stratum " + std::to_string(n) + " on " + std::to_string(d) + " letters");
    }
  });

  criterion(2, "extraspecial p^3, c=2: theorem_B p^6 strictly below corollary12 p^8", 1.0, [](Outcome& o) {
    for (std::uint32_t p : {2u, 3u}) {
      const BoundContext ctx(groups::extraspecial(p), 2);
      const auto b = std::get<PValue>(*theorem_B(ctx)[0].rhs);
      const auto u = std::get<PValue>(*corollary12(ctx).second.rhs);
      if (b != PValue::prime_power(p, 6)) o.fail("theorem_B rhs " + b.to_string());
      if (u != PValue::prime_power(p, 8)) o.fail("corollary12 rhs " + u.to_string());
      const auto cmp = compare_bounds(ctx);
      const auto* row = cmp.find("theorem_B.order");
      if (!row || !row->tightest) o.fail("theorem_B.order not flagged");
      else if (std::find(row->strictly_below.begin(), row->strictly_below.end(), "corollary12.upper") ==
               row->strictly_below.end())
        o.fail("corollary12.upper not listed as weaker");
    }
  });

  criterion(3, "D8, c=2: M = Z4 + Z2, exponent 4, corollary27 attained", 0, [](Outcome& o) {
    const BoundContext ctx(groups::d8(), 2);
    if (!ctx.multiplier()) return o.fail("multiplier unknown");
    const auto& m = ctx.multiplier()->value;
    if (m != AbelianGroup::from_cyclic_orders({4, 2})) o.fail("M = " + m.to_string());
    if (m.exponent() != 4) o.fail("exponent " + m.exponent().str());
    const auto r = corollary27(ctx);
    if (!r.lhs || !r.rhs || to_string(*r.rhs) != "2^2" || to_string(*r.lhs) != to_string(*r.rhs))
      o.fail("corollary27 not an equality at 4");
  });

  criterion(4, "abelian multiplier at c=1 matches classical Schur multiplier (200 groups)", 10.0, [](Outcome& o) {
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 200; ++i) {
      std::vector<std::uint64_t> raw(1 + rng() % 5);
      for (auto& x : raw) x = 1 + rng() % 64;
      const auto a = canonicalize(raw);
      const auto got = abelian_multiplier(a, 1);
      const auto want = classical_schur(a.invariants());
      if (got != want) o.fail(a.to_string() + ": " + got.to_string() + " vs " + want.to_string());
    }
  });

  criterion(5, "Z_{p^k} + Z_p^t, c=2: theorem_A strictly below corollary12; elementary ties reported", 0,
            [](Outcome& o) {
              std::size_t strict = 0;
              for (const auto& [p, inv] : detail::central_cyclic_family()) {
                const BoundContext ctx(groups::abelian(AbelianGroup::from_cyclic_orders(inv)), 2);
                const auto a = std::get<PValue>(*theorem_A(ctx).rhs);
                const auto u = std::get<PValue>(*corollary12(ctx).second.rhs);
                if (a < u) ++strict;
                else o.fail(a.to_string() + " vs " + u.to_string());
              }
              if (strict < 10) o.fail("only " + std::to_string(strict) + " instances");
              for (std::uint32_t p : {2u, 3u}) {
                const auto cmp = compare_bounds(BoundContext(groups::elementary(p, 3), 2));
                if (!cmp.find("theorem_A") || !cmp.find("corollary12.upper")) o.fail("elementary rows missing");
              }
            });

  criterion(6, "soundness sweep over the corpus, c = 1..3", 60.0, [](Outcome& o) {
    std::size_t swept = 0;
    for (const auto& entry : builtin_corpus()) {
      const auto g = *groups::by_name(entry.name);
      const auto an = analyze(g);
      for (unsigned c = 1; c <= 3; ++c) {
        const BoundContext ctx(g, an, c);
        if (!ctx.multiplier()) continue;
        ++swept;
        for (const auto& r : all_reports(ctx))
          if (r.applicable && r.verdict != Verdict::informational && !r.holds())
            o.fail(entry.name + " c=" + std::to_string(c) + " " + r.id + " " + to_string(r.verdict));
      }
    }
    if (swept == 0) o.fail("nothing swept");
  });

  criterion(7, "free nilpotent quotient ranks and associativity", 30.0, [](Outcome& o) {
    std::mt19937_64 rng(7);
    for (auto [d, c] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 3u}}) {
      const FreeNilpotentGroup f(d, c);
      const auto& basis = f.basis();
      // left-normed commutators of letters, grouped by weight
      std::vector<std::vector<NilpotentWord>> by_weight(c + 1);
      for (unsigned i = 0; i < d; ++i) by_weight[1].push_back(f.basis_element(i));
      for (unsigned w = 2; w <= c; ++w)
        for (const auto& u : by_weight[w - 1])
          for (unsigned i = 0; i < d; ++i) by_weight[w].push_back(f.commutator(u, f.basis_element(i)));
      for (unsigned n = 1; n <= c; ++n) {
        BigInt total = 0;
        for (unsigned w = n; w <= c; ++w) {
          std::vector<std::vector<BigInt>> rows;
          for (const auto& u : by_weight[w]) {
            for (std::size_t k = 0; k < basis.stratum_begin(w); ++k)
              if (u.exponents[k]) o.fail("weight " + std::to_string(w) + " element has a lower-weight coordinate");
            std::vector<BigInt> row;
            for (std::size_t k = basis.stratum_begin(w); k < basis.stratum_end(w); ++k) row.emplace_back(u.exponents[k]);
            rows.push_back(std::move(row));
          }
          total += exact_rank(std::move(rows));
        }
        if (total != quotient_rank(d, n, c - n + 1))
          o.fail("d=" + std::to_string(d) + " c=" + std::to_string(c) + " n=" + std::to_string(n) + ": rank " +
                 total.str());
      }
      auto random_element = [&] {
        LetterWord w(rng() % 13);
        for (auto& l : w) l = {static_cast<unsigned>(1 + rng() % d), rng() % 2 ? 1 : -1};
        return f.collect(w);
      };
      for (int i = 0; i < 500; ++i) {
        const auto a = random_element(), b = random_element(), e = random_element();
        if (f.multiply(f.multiply(a, b), e) != f.multiply(a, f.multiply(b, e))) {
          o.fail("associativity fails for d=" + std::to_string(d) + " c=" + std::to_string(c));
          break;
        }
      }
    }
  });

  criterion(8, "commutator containment for corpus groups of order <= 32", 0, [](Outcome& o) {
    for (const auto& entry : builtin_corpus()) {
      const auto g = *groups::by_name(entry.name);
      if (g.order() > 32) continue;
      const auto t = nilpotency_class(lower_central_series(g)).value_or(3);
      if (auto err = detail::check_commutator_containment(g, t); !err.empty()) o.fail(entry.name + ": " + err);
    }
  });

  criterion(9, "known multipliers of p-groups have p-power order", 0, [](Outcome& o) {
    for (const auto& entry : builtin_corpus()) {
      const auto g = *groups::by_name(entry.name);
      const auto an = analyze(g);
      if (!an.p_group || !an.prime) continue;
      for (unsigned c = 1; c <= 3; ++c)
        if (const auto m = known_multiplier({g, c})) {
          const auto f = PValue::order_of(m->value).factors();
          if (!(f.empty() || (f.size() == 1 && f.begin()->first == *an.prime)))
            o.fail(entry.name + " c=" + std::to_string(c) + ": |M| = " + m->value.order().str());
        }
    }
  });

  return failures == 0 ? 0 : 1;
}
