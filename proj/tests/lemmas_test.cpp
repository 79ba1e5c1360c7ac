#include "bds/lemmas.hpp"

#include <stdexcept>

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace bds {
namespace {

using testing::ref_binomial;

TEST(Absorption, Examples) {
  const auto a = absorption_check(2, 1);
  EXPECT_EQ(a.lhs, BigNat(12));
  EXPECT_EQ(a.rhs, BigNat(12));

  const auto edge = absorption_check(3, 3);
  EXPECT_EQ(edge.lhs, BigNat());
  EXPECT_EQ(edge.rhs, BigNat());

  const auto center = absorption_check(5, 0);
  EXPECT_EQ(center.lhs, BigNat(25 * 252));
  EXPECT_EQ(center.rhs, BigNat(25 * 252));
}

TEST(Absorption, DomainErrors) {
  EXPECT_THROW(absorption_check(0, 0), std::domain_error);
  EXPECT_THROW(absorption_check(3, 4), std::domain_error);
  EXPECT_THROW(absorption_check(3, -4), std::domain_error);
}

TEST(Absorption, HoldsOverSmallRangeAgainstReference) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (std::int64_t i = -n; i <= n; ++i) {
      const auto sides = absorption_check(n, i);
      ASSERT_EQ(sides.lhs.mpz(), ref_binomial(2 * n, n + i) * static_cast<long>((n - i) * (n + i)));
      ASSERT_TRUE(sides.holds()) << n << "," << i;
    }
  }
}

TEST(PascalTriple, Examples) {
  const auto center = pascal_triple_check(2, 0);
  EXPECT_EQ(center.lhs, BigNat(6));
  EXPECT_EQ(center.rhs, BigNat(6));

  const auto edge = pascal_triple_check(1, 1);
  EXPECT_EQ(edge.lhs, BigNat(1));
  EXPECT_EQ(edge.rhs, BigNat(1));

  const auto outside = pascal_triple_check(3, 4);
  EXPECT_EQ(outside.lhs, BigNat());
  EXPECT_EQ(outside.rhs, BigNat());
}

TEST(PascalTriple, DomainErrors) { EXPECT_THROW(pascal_triple_check(0, 0), std::domain_error); }

TEST(PascalTriple, HoldsBeyondSupport) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (std::int64_t k = -n - 2; k <= n + 2; ++k) {
      const auto sides = pascal_triple_check(n, k);
      ASSERT_EQ(sides.lhs.mpz(), ref_binomial(2 * n, n + k));
      ASSERT_TRUE(sides.holds()) << n << "," << k;
    }
  }
}

}  // namespace
}  // namespace bds
