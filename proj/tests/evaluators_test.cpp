#include "bds/evaluators.hpp"

#include <cstdlib>
#include <stdexcept>

#include <gtest/gtest.h>

#include "bds/binomial.hpp"
#include "oracle.hpp"

namespace bds {
namespace {

using testing::brute_force_S;
using testing::ref_binomial;

// Brute-force values, frozen: sum over the full grid with GMP binomials.
constexpr std::uint64_t kBruteForce[] = {0, 8, 288, 7200, 156800, 3175200};

TEST(Evaluators, BruteForceOracleMatchesFrozenValues) {
  for (std::int64_t n = 0; n < 6; ++n) {
    EXPECT_EQ(brute_force_S(n), mpz_class(static_cast<unsigned long>(kBruteForce[n]))) << n;
  }
}

TEST(Evaluators, SmallInstances) {
  for (Strategy s : kAllStrategies) {
    for (std::int64_t n = 0; n < 6; ++n) {
      const EvalResult r = evaluate(SumInstance(n), s);
      EXPECT_EQ(r.n, n);
      EXPECT_EQ(r.strategy, s);
      EXPECT_EQ(r.value, BigNat(kBruteForce[n])) << to_string(s) << " n=" << n;
    }
  }
}

TEST(Evaluators, ClosedFormByHand) {
  // 2 * 1 * C(2,1)^2 and 2 * 4 * C(4,2)^2.
  EXPECT_EQ(eval_S_closed(SumInstance(1)).value, BigNat(2 * 1 * 4));
  EXPECT_EQ(eval_S_closed(SumInstance(2)).value, BigNat(2 * 4 * 36));
}

TEST(Evaluators, SymmetrizedMatchesNaiveAtFifty) {
  const SumInstance inst(50);
  EXPECT_EQ(eval_S_symmetrized(inst).value, eval_S_naive(inst).value);
  EXPECT_EQ(eval_S_naive(inst).value.mpz(), brute_force_S(50));
}

TEST(Evaluators, StrategiesAgreeWithBruteForce) {
  for (std::int64_t n = 0; n <= 40; ++n) {
    const SumInstance inst(n);
    const mpz_class expected = brute_force_S(n);
    ASSERT_EQ(eval_S_naive(inst).value.mpz(), expected) << n;
    ASSERT_EQ(eval_S_symmetrized(inst).value.mpz(), expected) << n;
    ASSERT_EQ(eval_S_closed(inst).value.mpz(), expected) << n;
  }
}

// Walking the grid with (i, j) -> (-i, -j) gives the same total.
TEST(Evaluators, ReflectedGridSameValue) {
  for (std::int64_t n = 0; n <= 30; ++n) {
    mpz_class reflected;
    for (std::int64_t i = n; i >= -n; --i) {
      for (std::int64_t j = n; j >= -n; --j) {
        const long gap = static_cast<long>(std::llabs(i * i - j * j));
        reflected += ref_binomial(2 * n, n - i) * ref_binomial(2 * n, n - j) * gap;
      }
    }
    ASSERT_EQ(eval_S_naive(SumInstance(n)).value.mpz(), reflected) << n;
  }
}

TEST(Evaluators, NegativeNIsRejected) {
  EXPECT_THROW(SumInstance(-1), std::domain_error);
  EXPECT_THROW(half_row_sum(-1), std::domain_error);
}

TEST(SumInstance, DerivedConstants) {
  const SumInstance inst(7);
  EXPECT_EQ(inst.n(), 7);
  EXPECT_EQ(inst.two_n(), 14);
  EXPECT_EQ(inst.two_n_minus_one(), 13);
}

TEST(HalfRowSum, SmallValues) {
  EXPECT_EQ(half_row_sum(0), BigNat(1));
  EXPECT_EQ(half_row_sum(1), BigNat(3));
  EXPECT_EQ(half_row_sum(2), BigNat(11));
}

TEST(HalfRowSum, ClosedFormProperty) {
  for (std::int64_t n = 0; n <= 400; ++n) {
    const auto un = static_cast<std::uint64_t>(n);
    ASSERT_EQ(half_row_sum(n) * 2, BigNat::pow(4, un) + binomial(2 * n, n)) << n;
  }
}

TEST(Strategy, NamesRoundTrip) {
  for (Strategy s : kAllStrategies) EXPECT_EQ(parse_strategy(to_string(s)), s);
  EXPECT_EQ(parse_strategy("closed"), Strategy::kClosedForm);
  EXPECT_EQ(parse_strategy("naive"), Strategy::kNaive);
  EXPECT_FALSE(parse_strategy("fast").has_value());
}

}  // namespace
}  // namespace bds
