#include "bds/bignum.hpp"

#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "bds/digest.hpp"

namespace bds {
namespace {

TEST(BigNat, ArithmeticAcrossLimbBoundaries) {
  const BigNat max64 = ~std::uint64_t{0};
  const BigNat sum = max64 + BigNat(1);
  EXPECT_EQ(sum, BigNat::pow2(64));
  EXPECT_EQ(sum.to_string(), "18446744073709551616");
  EXPECT_EQ((sum * sum).to_string(), "340282366920938463463374607431768211456");
  EXPECT_EQ(BigNat::pow(10, 40).digit_count(), 41u);
}

TEST(BigNat, SubtractionUnderflowIsDomainError) {
  BigNat small = 3;
  EXPECT_THROW(small -= BigNat(4), std::domain_error);
  EXPECT_EQ(BigNat(7) - BigNat(7), BigNat());
}

TEST(BigNat, ExactDivisionRejectsRemainder) {
  BigNat value = 120;
  value.divide_exact(std::uint64_t{6});
  EXPECT_EQ(value, BigNat(20));
  EXPECT_THROW(value.divide_exact(std::uint64_t{3}), std::domain_error);
  EXPECT_THROW(value.divide_exact(std::uint64_t{0}), std::domain_error);
  EXPECT_THROW(value.divide_exact(BigNat(0)), std::domain_error);
}

TEST(BigNat, DigitCountIsExactAtPowersOfTen) {
  EXPECT_EQ(BigNat().digit_count(), 1u);
  for (std::uint64_t e = 1; e < 200; ++e) {
    const BigNat p = BigNat::pow(10, e);
    EXPECT_EQ(p.digit_count(), e + 1);
    EXPECT_EQ((p - BigNat(1)).digit_count(), e);
  }
}

TEST(BigNat, DecimalParsing) {
  EXPECT_EQ(BigNat::from_decimal("155117520"), BigNat(155117520));
  EXPECT_THROW(BigNat::from_decimal("-1"), std::invalid_argument);
  EXPECT_THROW(BigNat::from_decimal(""), std::invalid_argument);
  EXPECT_THROW(BigNat::from_decimal("12a"), std::invalid_argument);
  EXPECT_THROW(BigNat::from_mpz(mpz_class(-5)), std::domain_error);
}

TEST(BigInt, SignIsZeroIffMagnitudeIsZero) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const BigNat a = BigNat(rng() % 1000) * BigNat::pow2(rng() % 130);
    const BigNat b = BigNat(rng() % 1000) * BigNat::pow2(rng() % 130);
    const BigInt d = difference(a, b);
    EXPECT_EQ(d.sign() == 0, d.magnitude().is_zero());
    EXPECT_EQ(d.sign(), a < b ? -1 : (a == b ? 0 : 1));
    // a - b + b == a for every pair of naturals.
    EXPECT_EQ((d + BigInt(b)).to_nat(), a);
  }
}

TEST(BigInt, NegativeValues) {
  const BigInt minus_three = -3;
  EXPECT_EQ(minus_three.to_string(), "-3");
  EXPECT_EQ(minus_three.magnitude(), BigNat(3));
  EXPECT_THROW((void)minus_three.to_nat(), std::domain_error);
  EXPECT_EQ(BigInt::from_decimal("-3"), minus_three);
  EXPECT_EQ((minus_three * -4).to_string(), "12");
  EXPECT_LT(minus_three, BigInt(0));
}

TEST(Digest, Sha256OfDecimal) {
  EXPECT_EQ(digest(BigNat(288)),
            "23c657f2efda7731a3c1990b25f318fa2eb1332208f97ab9cc2a7eac70ab5a76");
  EXPECT_EQ(digest(BigNat()),
            "5feceb66ffc86f38d952786c6d696c79c2dbc239dd4e91b46729d73a27fb57e9");
  EXPECT_EQ(digest(BigInt(288)), digest(BigNat(288)));
  EXPECT_NE(digest(BigInt(-288)), digest(BigInt(288)));
}

}  // namespace
}  // namespace bds
