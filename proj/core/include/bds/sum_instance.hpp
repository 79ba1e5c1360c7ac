#pragma once

#include <cstdint>

namespace bds {

// One problem instance of the double sum, fixed by its parameter n.
class SumInstance {
 public:
  // Throws std::domain_error for n < 0.
  explicit SumInstance(std::int64_t n);

  [[nodiscard]] std::int64_t n() const { return n_; }
  [[nodiscard]] std::int64_t two_n() const { return 2 * n_; }
  // 2n - 1; -1 at n = 0, where no identity that divides by it applies.
  [[nodiscard]] std::int64_t two_n_minus_one() const { return 2 * n_ - 1; }

  friend bool operator==(const SumInstance&, const SumInstance&) = default;

 private:
  std::int64_t n_;
};

}  // namespace bds
