#include "bds/binomial.hpp"

#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "bds/digest.hpp"
#include "bds/pascal_row.hpp"
#include "oracle.hpp"

namespace bds {
namespace {

using testing::ref_binomial;

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(4, 2), BigNat(6));
  EXPECT_EQ(binomial(0, 0), BigNat(1));
  EXPECT_EQ(binomial(30, 15), BigNat(155117520));
}

TEST(Binomial, OutOfRangeIsZero) {
  EXPECT_EQ(binomial(0, -1), BigNat());
  EXPECT_EQ(binomial(3, 4), BigNat());
  EXPECT_EQ(binomial(5000, -7), BigNat());
  EXPECT_EQ(binomial(5000, 5001), BigNat());
  for (auto s : kAllBinomialStrategies) {
    EXPECT_EQ(binomial(0, -1, s), BigNat());
    EXPECT_EQ(binomial(2, 3, s), BigNat());
  }
}

TEST(Binomial, NegativeUpperIndexIsDomainError) {
  EXPECT_THROW(binomial(-1, 0), std::domain_error);
  for (auto s : kAllBinomialStrategies) EXPECT_THROW(binomial(-3, 1, s), std::domain_error);
  EXPECT_THROW(pascal_row(-1), std::domain_error);
  EXPECT_THROW(pascal_row_by_ratio(-1), std::domain_error);
}

TEST(Binomial, ThirtyChooseFifteenMatchesRowRecurrence) {
  // 155117520 from the multiplicative formula, cross-checked on the full row.
  EXPECT_EQ(pascal_row(30)[15], BigNat(155117520));
  for (const auto& [strategy, value] : binomial_strategies(30, 15)) {
    EXPECT_EQ(value, BigNat(155117520)) << to_string(strategy);
  }
}

TEST(Binomial, StrategiesAgreeAtTwoHundredChooseHundred) {
  const auto values = binomial_strategies(200, 100);
  EXPECT_EQ(values[0].value, values[1].value);
  EXPECT_EQ(values[1].value, values[2].value);
  EXPECT_EQ(values[0].value.mpz(), ref_binomial(200, 100));
}

TEST(Binomial, StrategiesAgreeOnRandomSample) {
  std::mt19937_64 rng(20240611);
  // The row-recurrence strategy is quadratic in m, so most draws stay small.
  for (int trial = 0; trial < 48; ++trial) {
    const std::int64_t m_max = trial % 8 == 0 ? 10'000 : 1'000;
    const std::int64_t m = std::uniform_int_distribution<std::int64_t>(0, m_max)(rng);
    const std::int64_t k = std::uniform_int_distribution<std::int64_t>(-2, m + 2)(rng);
    const auto values = binomial_strategies(m, k);
    const mpz_class expected = ref_binomial(m, k);
    for (const auto& [strategy, value] : values) {
      ASSERT_EQ(value.mpz(), expected) << to_string(strategy) << " m=" << m << " k=" << k;
    }
    ASSERT_EQ(binomial(m, k).mpz(), expected);
  }
}

TEST(Binomial, CentralCoefficientAtHundredThousandAgreesAcrossFastStrategies) {
  const BigNat product = binomial(200'000, 100'000, BinomialStrategy::kMultiplicative);
  const BigNat quotient = binomial(200'000, 100'000, BinomialStrategy::kFactorialQuotient);
  EXPECT_EQ(digest(product), digest(quotient));
  EXPECT_EQ(product.mpz(), ref_binomial(200'000, 100'000));
}

TEST(PascalRow, SmallRows) {
  EXPECT_EQ(pascal_row(0).coefficients().size(), 1u);
  EXPECT_EQ(pascal_row(0)[0], BigNat(1));
  const PascalRow four = pascal_row(4);
  const std::vector<BigNat> expected = {1, 4, 6, 4, 1};
  ASSERT_EQ(four.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(four[k], expected[k]);
  EXPECT_EQ(four.at(-1), BigNat());
  EXPECT_EQ(four.at(5), BigNat());
}

TEST(PascalRow, RatioBuildMatchesRecurrence) {
  for (std::int64_t m = 0; m <= 300; ++m) ASSERT_EQ(pascal_row_by_ratio(m), pascal_row(m)) << m;
}

TEST(PascalRow, RowTwoThousandSumsToPowerOfTwo) {
  EXPECT_EQ(pascal_row(2000).sum(), BigNat::pow2(2000));
}

// Symmetry, row sum and Pascal's rule (against the previous row) for every
// row up to 2000.
TEST(PascalRow, InvariantsUpToTwoThousand) {
  PascalRow previous = pascal_row_by_ratio(0);
  for (std::int64_t m = 0; m <= 2000; ++m) {
    const PascalRow row = pascal_row_by_ratio(m);
    for (std::int64_t k = 0; k <= m; ++k) ASSERT_EQ(row.at(k), row.at(m - k)) << m << "," << k;
    ASSERT_EQ(row.sum(), BigNat::pow2(static_cast<std::uint64_t>(m))) << m;
    if (m >= 1) {
      for (std::int64_t k = -1; k <= m + 1; ++k) {
        ASSERT_EQ(row.at(k), previous.at(k - 1) + previous.at(k)) << m << "," << k;
      }
    }
    previous = row;
  }
}

TEST(RowCache, LookupsMatchFreshRowsUnderContention) {
  RowCache cache(3);
  std::vector<std::jthread> threads;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (std::int64_t m = 0; m < 60; ++m) {
        const std::int64_t row = (m * 7 + t) % 40;
        if (*cache.get(row) != pascal_row(row)) ++mismatches;
      }
    });
  }
  threads.clear();
  EXPECT_EQ(mismatches.load(), 0);
}

TEST(FactorialCache, ExtendsFromCachedValues) {
  FactorialCache cache(3);
  EXPECT_EQ(*cache.factorial(0), BigNat(1));
  EXPECT_EQ(*cache.factorial(20), BigNat(2432902008176640000ULL));
  EXPECT_EQ(*cache.factorial(10), BigNat(3628800));
  mpz_class ref;
  mpz_fac_ui(ref.get_mpz_t(), 500);
  EXPECT_EQ(cache.factorial(500)->mpz(), ref);
  EXPECT_EQ(*cache.factorial(20), BigNat(2432902008176640000ULL));
}

TEST(ProductRange, MatchesFactorialRatio) {
  EXPECT_EQ(product_range(5, 4), BigNat(1));
  EXPECT_EQ(product_range(1, 10), BigNat(3628800));
  EXPECT_EQ(product_range(8, 10), BigNat(720));
}

}  // namespace
}  // namespace bds
