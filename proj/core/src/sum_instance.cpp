#include "bds/sum_instance.hpp"

#include <stdexcept>
#include <string>

namespace bds {

SumInstance::SumInstance(std::int64_t n) : n_(n) {
  if (n < 0) throw std::domain_error("n must be nonnegative, got " + std::to_string(n));
  // i^2 - j^2 is formed in 64-bit arithmetic.
  if (n > 2'000'000'000) throw std::domain_error("n too large: " + std::to_string(n));
}

}  // namespace bds
