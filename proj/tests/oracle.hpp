#pragma once

// Reference values computed without any bds code path: GMP's own binomial
// and the double sum evaluated term by term as written.

#include <cstdint>
#include <cstdlib>

#include <gmpxx.h>

namespace bds::testing {

inline mpz_class ref_binomial(std::int64_t m, std::int64_t k) {
  mpz_class out;
  if (k < 0 || k > m) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return out;
}

inline mpz_class brute_force_S(std::int64_t n) {
  mpz_class total;
  for (std::int64_t i = -n; i <= n; ++i) {
    for (std::int64_t j = -n; j <= n; ++j) {
      mpz_class gap = static_cast<long>(std::llabs(i * i - j * j));
      total += ref_binomial(2 * n, n + i) * ref_binomial(2 * n, n + j) * gap;
    }
  }
  return total;
}

}  // namespace bds::testing
