#include "bds/binomial.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "bds/pascal_row.hpp"

namespace bds {
namespace {

void require_upper_index(std::int64_t m) {
  if (m < 0) {
    throw std::domain_error("binomial upper index must be nonnegative, got " + std::to_string(m));
  }
}

bool out_of_range(std::int64_t m, std::int64_t k) { return k < 0 || k > m; }

BigNat multiplicative(std::int64_t m, std::int64_t k) {
  if (k > m - k) k = m - k;
  BigNat value = 1;
  const auto base = static_cast<std::uint64_t>(m - k);
  for (std::uint64_t t = 1; t <= static_cast<std::uint64_t>(k); ++t) {
    value *= base + t;
    value.divide_exact(t);  // every prefix product is itself C(base+t, t)
  }
  return value;
}

BigNat factorial_quotient(std::int64_t m, std::int64_t k) {
  auto& cache = FactorialCache::shared();
  BigNat value = *cache.factorial(static_cast<std::uint64_t>(m));
  BigNat denominator = *cache.factorial(static_cast<std::uint64_t>(k));
  denominator *= *cache.factorial(static_cast<std::uint64_t>(m - k));
  value.divide_exact(denominator);
  return value;
}

mpz_class product_range_mpz(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) return 1;
  if (hi - lo < 8) {
    mpz_class p = static_cast<unsigned long>(lo);
    for (std::uint64_t t = lo + 1; t <= hi; ++t) p *= static_cast<unsigned long>(t);
    return p;
  }
  const std::uint64_t mid = lo + (hi - lo) / 2;
  return product_range_mpz(lo, mid) * product_range_mpz(mid + 1, hi);
}

}  // namespace

std::string_view to_string(BinomialStrategy strategy) {
  switch (strategy) {
    case BinomialStrategy::kRowRecurrence: return "row-recurrence";
    case BinomialStrategy::kMultiplicative: return "multiplicative";
    case BinomialStrategy::kFactorialQuotient: return "factorial-quotient";
  }
  return "unknown";
}

BigNat binomial(std::int64_t m, std::int64_t k) {
  require_upper_index(m);
  if (out_of_range(m, k)) return {};
  if (m <= kRowCacheMaxIndex) return RowCache::shared().get(m)->at(k);
  return multiplicative(m, k);
}

BigNat binomial(std::int64_t m, std::int64_t k, BinomialStrategy strategy) {
  require_upper_index(m);
  if (out_of_range(m, k)) return {};
  switch (strategy) {
    case BinomialStrategy::kRowRecurrence: return pascal_row(m).at(k);
    case BinomialStrategy::kMultiplicative: return multiplicative(m, k);
    case BinomialStrategy::kFactorialQuotient: return factorial_quotient(m, k);
  }
  throw std::invalid_argument("unknown binomial strategy");
}

std::array<StrategyValue, 3> binomial_strategies(std::int64_t m, std::int64_t k) {
  std::array<StrategyValue, 3> out{};
  for (std::size_t s = 0; s < kAllBinomialStrategies.size(); ++s) {
    out[s] = {kAllBinomialStrategies[s], binomial(m, k, kAllBinomialStrategies[s])};
  }
  return out;
}

BigNat product_range(std::uint64_t lo, std::uint64_t hi) {
  return BigNat::from_mpz(product_range_mpz(lo, hi));
}

struct FactorialCache::State {
  struct Entry {
    std::shared_ptr<const BigNat> value;
    std::uint64_t last_use = 0;
  };
  std::mutex mutex;
  std::map<std::uint64_t, Entry> entries;
  std::uint64_t clock = 0;
};

FactorialCache::FactorialCache(std::size_t capacity)
    : capacity_(capacity < 2 ? 2 : capacity), state_(std::make_unique<State>()) {}

FactorialCache::~FactorialCache() = default;

std::shared_ptr<const BigNat> FactorialCache::factorial(std::uint64_t m) {
  std::uint64_t start = 0;
  std::shared_ptr<const BigNat> seed;
  {
    std::lock_guard lock(state_->mutex);
    auto& entries = state_->entries;
    auto it = entries.upper_bound(m);
    if (it != entries.begin()) {
      --it;
      it->second.last_use = ++state_->clock;
      if (it->first == m) return it->second.value;
      start = it->first;
      seed = it->second.value;
    }
  }
  BigNat value = product_range(start + 1, m);
  if (seed) value *= *seed;
  auto shared_value = std::make_shared<const BigNat>(std::move(value));

  std::lock_guard lock(state_->mutex);
  auto& entries = state_->entries;
  auto [it, inserted] = entries.try_emplace(m, State::Entry{shared_value, 0});
  it->second.last_use = ++state_->clock;
  while (entries.size() > capacity_) {
    auto victim = entries.begin();
    for (auto e = entries.begin(); e != entries.end(); ++e) {
      if (e->second.last_use < victim->second.last_use) victim = e;
    }
    entries.erase(victim);
  }
  return it->second.value;
}

FactorialCache& FactorialCache::shared() {
  static FactorialCache cache;
  return cache;
}

}  // namespace bds
