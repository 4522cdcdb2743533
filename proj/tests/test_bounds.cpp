#include "nilmult/bounds.hpp"
#include "nilmult/groups.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace nilmult;

namespace {

PValue rhs(const BoundReport& r) { return std::get<PValue>(*r.rhs); }
PValue lhs(const BoundReport& r) { return std::get<PValue>(*r.lhs); }
PValue pp(std::uint64_t p, unsigned e) { return PValue::prime_power(p, e); }

}  // namespace

TEST(PValue, Arithmetic) {
  EXPECT_EQ(PValue::of(std::uint64_t{12}).to_string(), "2^2*3");
  EXPECT_EQ(PValue{}.to_string(), "1");
  EXPECT_TRUE(pp(2, 3).divides(pp(2, 5)));
  EXPECT_FALSE(pp(2, 3).divides(pp(3, 5)));
  EXPECT_LT(pp(2, 3), pp(3, 2));
  EXPECT_LT(pp(5, 1), pp(2, 3));
  EXPECT_EQ(pp(2, 3) * pp(2, 4), pp(2, 7));
  EXPECT_EQ(PValue::prime_power(0, 0), PValue{});
  EXPECT_THROW(PValue::prime_power(4, 2), InvalidArgument);
  EXPECT_EQ(PValue::prime_power(2, BigInt(1000)).exponent_of_prime(2), 1000);
}

TEST(Bounds, ExtraspecialClassTwoReproducesWittAndTensorValues) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    BoundContext ctx(groups::extraspecial(p), 2);
    EXPECT_EQ(rhs(corollary12(ctx).second), pp(p, 8));
    EXPECT_EQ(rhs(theorem_B(ctx)[0]), pp(p, 6));
    EXPECT_EQ(rhs(theorem_A(ctx)), pp(p, 8));
    const auto cmp = compare_bounds(ctx);
    ASSERT_FALSE(cmp.rows.empty());
    EXPECT_EQ(cmp.rows.front().rhs, pp(p, 6));
    EXPECT_TRUE(cmp.find("theorem_B.order")->tightest);
    EXPECT_FALSE(cmp.find("corollary12.upper")->tightest);
  }
}

TEST(Bounds, DihedralEightClassTwo) {
  BoundContext ctx(groups::d8(), 2);
  ASSERT_TRUE(ctx.multiplier());
  EXPECT_EQ(ctx.multiplier()->value, AbelianGroup::from_cyclic_orders({4, 2}));
  const auto r27 = corollary27(ctx);
  EXPECT_EQ(rhs(r27), pp(2, 2));
  EXPECT_EQ(lhs(r27), pp(2, 2));
  EXPECT_TRUE(r27.holds());
  const auto c = theorem_C(ctx);
  EXPECT_EQ(c[0].note, "case c+1>t");
  EXPECT_EQ(lhs(c[1]), rhs(c[1]));
  for (const auto& r : all_reports(ctx)) { EXPECT_NE(r.verdict, Verdict::fails) << r.id; }
}

TEST(Bounds, DihedralEightClassOne) {
  BoundContext ctx(groups::d8(), 1);
  const auto b = theorem_B(ctx);
  EXPECT_EQ(rhs(b[0]), pp(2, 3));
  EXPECT_EQ(lhs(b[0]), pp(2, 2));
  EXPECT_TRUE(b[0].holds());
  for (const auto& r : jones_c1_suite(ctx))
    if (r.id == "theorem6") {
      EXPECT_EQ(lhs(r), pp(2, 2));
      EXPECT_EQ(rhs(r), pp(2, 3));
    }
}

TEST(Bounds, HeisenbergClassOneEqualities) {
  BoundContext ctx(groups::heisenberg(3), 1);
  const auto c = theorem_C(ctx)[0];
  EXPECT_EQ(c.note, "case c+1<=t");
  EXPECT_EQ(lhs(c), rhs(c));
  EXPECT_EQ(lhs(c), pp(3, 3));
}

TEST(Bounds, TheoremAOnAbelianGroups) {
  // Z4 + Z2, c = 1: B = Z4, d(G/B) = 1, exponent chi_2(1) + 1*2*1 = 2
  BoundContext ctx(groups::abelian(AbelianGroup::from_cyclic_orders({4, 2})), 1);
  const auto a = theorem_A(ctx);
  EXPECT_EQ(rhs(a), pp(2, 2));
  EXPECT_EQ(lhs(a), pp(2, 1));
  EXPECT_TRUE(a.holds());
  // elementary abelian, c = 1: chi_2(n-1) + (n-1)
  for (unsigned n = 1; n <= 4; ++n) {
    BoundContext e(groups::elementary(2, n), 1);
    EXPECT_EQ(rhs(theorem_A(e)), pp(2, static_cast<unsigned>(to_u64(witt_or_zero(2, n - 1))) + n - 1));
  }
  // explicit generator override must be central of order exp(Z(G))
  const auto g = groups::abelian(AbelianGroup::from_cyclic_orders({4, 2}));
  BoundOptions bad;
  bad.central_cyclic_generator = 0;
  EXPECT_THROW(theorem_A(BoundContext(g, 1, bad)), InvalidArgument);
}

TEST(Bounds, CentralCyclicFamilyBeatsWittBound) {
  for (std::uint64_t p : {2u, 3u})
    for (unsigned k = 2; k <= 3; ++k) {
      std::vector<std::uint64_t> inv{to_u64(pow(BigInt(p), k)), p, p};
      BoundContext ctx(groups::abelian(AbelianGroup::from_cyclic_orders(inv)), 2);
      // n = k + 2, t = d = 2: chi_3(2) + 2k*3 against chi_3(k+2)
      EXPECT_EQ(rhs(theorem_A(ctx)), pp(p, static_cast<unsigned>(2 + 6 * k)));
      EXPECT_EQ(rhs(corollary12(ctx).second), pp(p, static_cast<unsigned>(to_u64(witt(3, k + 2)))));
      EXPECT_LT(rhs(theorem_A(ctx)), rhs(corollary12(ctx).second));
    }
}

TEST(Bounds, ElementaryAbelianEqualities) {
  for (unsigned d = 1; d <= 4; ++d)
    for (unsigned c = 1; c <= 3; ++c) {
      BoundContext ctx(groups::elementary(3, d), c);
      const auto lo = corollary12(ctx).first;
      EXPECT_EQ(lhs(lo), rhs(lo));
      const auto g = corollary26(ctx);
      EXPECT_EQ(*g.lhs, *g.rhs);
      // exact for abelian groups
      const auto b = theorem_B(ctx);
      EXPECT_EQ(lhs(b[0]), rhs(b[0]));
      if (c == 1) {
        for (const auto& r : jones_c1_suite(ctx))
          if (r.id == "corollary8.upper") { EXPECT_EQ(lhs(r), rhs(r)); }
      }
    }
}

TEST(Bounds, ApplicabilityReasons) {
  BoundContext s3(groups::symmetric3(), 1);
  EXPECT_EQ(corollary12(s3).first.reason, "not_p_group");
  EXPECT_EQ(theorem_B(s3)[0].reason, "not_nilpotent");
  EXPECT_EQ(corollary27(s3).reason, "not_nilpotent");
  BoundContext ab(groups::klein4(), 1);
  EXPECT_EQ(theorem_C(ab)[0].reason, "class_below_2");
  for (const auto& r : jones_c1_suite(ab))
    if (r.id == "corollary20") { EXPECT_EQ(r.reason, "class_below_2"); }
  BoundOptions small;
  small.caps.special_rank = 4;
  BoundContext capped(groups::d8(), 2, small);
  EXPECT_EQ(corollary26(capped).reason, "rank_cap_exceeded");
  EXPECT_FALSE(corollary26(capped).applicable);
  EXPECT_THROW(BoundContext(groups::d8(), 0), InvalidArgument);
}

TEST(Bounds, UnknownMultiplierIsUnverifiable) {
  BoundContext ctx(groups::q8(), 2);
  const auto r = theorem_B(ctx)[0];
  EXPECT_TRUE(r.applicable);
  EXPECT_FALSE(r.lhs.has_value());
  EXPECT_TRUE(r.rhs.has_value());
  EXPECT_EQ(r.verdict, Verdict::unverifiable);
}

TEST(Bounds, ImprovementOverExponentBound) {
  for (const char* name : {"d8", "q8", "dihedral(16)", "extraspecial(3,exponent-p2)"}) {
    BoundContext ctx(*groups::by_name(name), 1);
    std::optional<PValue> r18, r20;
    for (const auto& r : jones_c1_suite(ctx)) {
      if (r.id == "corollary18") r18 = rhs(r);
      if (r.id == "corollary20") r20 = rhs(r);
    }
    ASSERT_TRUE(r18 && r20) << name;
    EXPECT_TRUE(r20->divides(*r18)) << name;
  }
}

TEST(Bounds, TrivialGroup) {
  BoundContext ctx(groups::trivial(), 1);
  for (const auto& r : all_reports(ctx)) {
    if (!r.applicable || r.verdict == Verdict::informational) continue;
    EXPECT_EQ(r.verdict, Verdict::holds) << r.id;
    EXPECT_EQ(to_string(*r.lhs), r.quantity == Quantity::generators ? "0" : "1") << r.id;
  }
}

TEST(Bounds, ComparisonIsDeterministicAndComplete) {
  BoundContext ctx(groups::heisenberg(3), 1);
  const auto a = compare_bounds(ctx), b = compare_bounds(ctx);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  std::set<std::string> ids;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].id, b.rows[i].id);
    EXPECT_TRUE(ids.insert(a.rows[i].id).second);
  }
  EXPECT_EQ(ids, (std::set<std::string>{"corollary12.upper", "corollary8.upper", "theorem6", "theorem_A",
                                        "theorem_B.order"}));
  // all rows tie at 3^3: no winner is flagged
  EXPECT_TRUE(a.all_tied());
  for (const auto& row : a.rows) { EXPECT_FALSE(row.tightest); }
}
