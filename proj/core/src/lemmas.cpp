#include "bds/lemmas.hpp"

#include <stdexcept>
#include <string>

#include "bds/binomial.hpp"

namespace bds {
namespace {

void require_positive(std::int64_t n) {
  if (n < 1) throw std::domain_error("identity requires n >= 1, got n = " + std::to_string(n));
}

}  // namespace

IdentitySides<BigNat> absorption_check(std::int64_t n, std::int64_t i) {
  require_positive(n);
  if (i < -n || i > n) {
    throw std::domain_error("absorption requires |i| <= n, got i = " + std::to_string(i));
  }
  BigNat lhs = binomial(2 * n, n + i);
  lhs *= static_cast<std::uint64_t>((n - i) * (n + i));
  BigNat rhs = binomial(2 * n - 2, n - 1 + i);
  rhs *= static_cast<std::uint64_t>(2 * n * (2 * n - 1));
  return {std::move(lhs), std::move(rhs)};
}

IdentitySides<BigNat> pascal_triple_check(std::int64_t n, std::int64_t k) {
  require_positive(n);
  const std::int64_t lower = 2 * n - 2;
  BigNat rhs = binomial(lower, n + k);
  rhs.add_product(binomial(lower, n - 1 + k), 2);
  rhs += binomial(lower, n - 2 + k);
  return {binomial(2 * n, n + k), std::move(rhs)};
}

}  // namespace bds
