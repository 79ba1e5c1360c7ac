#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string_view>

#include "bds/bignum.hpp"

namespace bds {

// Binomial coefficients are total in k: C(m, k) = 0 for k < 0 or k > m.
// A negative upper index is a std::domain_error.

enum class BinomialStrategy {
  kRowRecurrence,      // additive Pascal recurrence up to row m
  kMultiplicative,     // prod_{t=1..k} (m-k+t)/t, each division asserted exact
  kFactorialQuotient,  // m! / (k! (m-k)!) from a shared factorial cache
};

inline constexpr std::array<BinomialStrategy, 3> kAllBinomialStrategies = {
    BinomialStrategy::kRowRecurrence,
    BinomialStrategy::kMultiplicative,
    BinomialStrategy::kFactorialQuotient,
};

std::string_view to_string(BinomialStrategy strategy);

// Default entry point. Small rows are served from RowCache::shared(),
// larger ones by the multiplicative product.
BigNat binomial(std::int64_t m, std::int64_t k);

BigNat binomial(std::int64_t m, std::int64_t k, BinomialStrategy strategy);

struct StrategyValue {
  BinomialStrategy strategy;
  BigNat value;
};

// One value per strategy, in kAllBinomialStrategies order.
std::array<StrategyValue, 3> binomial_strategies(std::int64_t m, std::int64_t k);

// Rows at or below this index go through the row cache in binomial(m, k).
inline constexpr std::int64_t kRowCacheMaxIndex = 4096;

// Product lo * (lo+1) * ... * hi by binary splitting; 1 when lo > hi.
BigNat product_range(std::uint64_t lo, std::uint64_t hi);

// Thread-safe memo of factorials. A miss extends from the largest cached
// factorial below the request. Bounded to `capacity` entries (LRU).
class FactorialCache {
 public:
  explicit FactorialCache(std::size_t capacity = 64);
  ~FactorialCache();
  FactorialCache(const FactorialCache&) = delete;
  FactorialCache& operator=(const FactorialCache&) = delete;

  std::shared_ptr<const BigNat> factorial(std::uint64_t m);

  static FactorialCache& shared();

 private:
  struct State;
  std::size_t capacity_;
  std::unique_ptr<State> state_;
};

}  // namespace bds
