#include "nilmult/abelian.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

using namespace nilmult;

namespace {

// Element-order census of Z_{m_1} + ... + Z_{m_k}, by enumerating elements.
std::map<std::uint64_t, std::uint64_t> census(const std::vector<std::uint64_t>& m) {
  std::map<std::uint64_t, std::uint64_t> out;
  std::uint64_t n = 1;
  for (auto x : m) n *= x;
  for (std::uint64_t e = 0; e < n; ++e) {
    std::uint64_t rest = e, ord = 1;
    for (auto x : m) {
      const std::uint64_t digit = rest % x;
      rest /= x;
      const std::uint64_t o = x / std::gcd(x, digit);
      ord = std::lcm(ord, o);
    }
    ++out[ord];
  }
  return out;
}

AbelianGroup random_group(std::mt19937_64& rng, std::size_t max_factors, std::uint64_t max_entry) {
  std::uniform_int_distribution<std::size_t> count(0, max_factors);
  std::uniform_int_distribution<std::uint64_t> entry(1, max_entry);
  std::vector<std::uint64_t> m(count(rng));
  for (auto& x : m) x = entry(rng);
  return canonicalize(m);
}

}  // namespace

TEST(Canonicalize, Examples) {
  const std::vector<std::uint64_t> a{2, 4}, b{6, 4}, c{1, 1};
  EXPECT_EQ(canonicalize(a).invariants(), (std::vector<std::uint64_t>{4, 2}));
  EXPECT_EQ(canonicalize(b).invariants(), (std::vector<std::uint64_t>{12, 2}));
  EXPECT_TRUE(canonicalize(c).is_trivial());
  const std::vector<std::uint64_t> zero{0};
  EXPECT_THROW(canonicalize(zero), InvalidArgument);
}

TEST(Canonicalize, CensusOracle) {
  const std::vector<std::vector<std::uint64_t>> inputs{{6, 4}, {2, 3, 4}, {12, 18}, {8, 4, 6}, {5, 10, 3}, {9, 6, 4}};
  for (const auto& m : inputs) {
    const auto c = canonicalize(m);
    EXPECT_EQ(census(m), census(c.invariants()));
    for (std::size_t i = 1; i < c.invariants().size(); ++i) EXPECT_EQ(c.invariants()[i - 1] % c.invariants()[i], 0u);
  }
}

TEST(Canonicalize, IdempotentAndOrderFree) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::uint64_t> m(4);
    for (auto& x : m) x = 1 + rng() % 40;
    const auto a = canonicalize(m);
    std::shuffle(m.begin(), m.end(), rng);
    EXPECT_EQ(canonicalize(m), a);
    EXPECT_EQ(canonicalize(a.invariants()), a);
  }
}

TEST(DirectSum, Examples) {
  const auto z4z2 = AbelianGroup::from_cyclic_orders({4, 2});
  EXPECT_EQ(direct_sum(z4z2, AbelianGroup{}), z4z2);
  EXPECT_EQ(direct_sum(AbelianGroup::cyclic(2), AbelianGroup::cyclic(2)).invariants(), (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(direct_sum(AbelianGroup::cyclic(4), AbelianGroup::cyclic(6)).invariants(), (std::vector<std::uint64_t>{12, 2}));
}

TEST(Tensor, Examples) {
  EXPECT_EQ(tensor(AbelianGroup::cyclic(4), AbelianGroup::cyclic(6)), AbelianGroup::cyclic(2));
  EXPECT_TRUE(tensor(AbelianGroup::cyclic(5), AbelianGroup{}).is_trivial());
  const auto v = AbelianGroup::elementary(2, 2);
  EXPECT_EQ(tensor(v, v).invariants(), (std::vector<std::uint64_t>{2, 2, 2, 2}));
}

TEST(Tensor, PowerExamples) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const auto t = tensor_power(AbelianGroup::cyclic(p), AbelianGroup::elementary(p, 2), 2);
    EXPECT_EQ(t.order(), pow(BigInt(p), 4));
  }
  EXPECT_TRUE(tensor_power(AbelianGroup{}, AbelianGroup::cyclic(4), 3).is_trivial());
  EXPECT_EQ(tensor_power(AbelianGroup::cyclic(2), AbelianGroup::cyclic(4), 1), AbelianGroup::cyclic(2));
  EXPECT_THROW(tensor_power(AbelianGroup::cyclic(2), AbelianGroup::cyclic(2), 0), InvalidArgument);
}

TEST(Tensor, AlgebraicProperties) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_group(rng, 3, 64), b = random_group(rng, 3, 64), c = random_group(rng, 3, 64);
    EXPECT_EQ(tensor(a, b), tensor(b, a));
    EXPECT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
    const auto t = tensor(a, b);
    EXPECT_LE(t.order(), std::min(pow(a.order(), b.rank()), pow(b.order(), a.rank())));
    const BigInt g = std::gcd(to_u64(a.exponent()), to_u64(b.exponent()));
    EXPECT_EQ(g % t.exponent(), 0);
    EXPECT_EQ(direct_sum(a, b).order(), a.order() * b.order());
  }
}

TEST(AbelianGroup, OrderExponentRank) {
  const auto z4z2 = AbelianGroup::from_cyclic_orders({4, 2});
  EXPECT_EQ(z4z2.order(), 8);
  EXPECT_EQ(z4z2.exponent(), 4);
  EXPECT_EQ(z4z2.rank(), 2u);
  EXPECT_EQ(AbelianGroup{}.order(), 1);
  EXPECT_EQ(AbelianGroup{}.exponent(), 1);
  EXPECT_EQ(AbelianGroup{}.rank(), 0u);
  const auto z12z2 = AbelianGroup::from_cyclic_orders({12, 2});
  EXPECT_EQ(z12z2.order(), 24);
  EXPECT_EQ(z12z2.exponent(), 12);
  EXPECT_EQ(z4z2.to_string(), "Z4 + Z2");
  EXPECT_EQ(AbelianGroup{}.to_string(), "0");
}
