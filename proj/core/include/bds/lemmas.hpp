#pragma once

// Pointwise binomial identities used by the derivation, returned as both
// sides evaluated independently so callers can test equality.

#include <cstdint>

#include "bds/bignum.hpp"

namespace bds {

template <typename T>
struct IdentitySides {
  T lhs;
  T rhs;

  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

// (n-i)(n+i) C(2n, n+i)  versus  2n(2n-1) C(2n-2, n-1+i).
// Requires n >= 1 and |i| <= n; otherwise std::domain_error.
IdentitySides<BigNat> absorption_check(std::int64_t n, std::int64_t i);

// C(2n, n+k)  versus  C(2n-2, n+k) + 2 C(2n-2, n-1+k) + C(2n-2, n-2+k).
// Any integer k; requires n >= 1.
IdentitySides<BigNat> pascal_triple_check(std::int64_t n, std::int64_t k);

}  // namespace bds
