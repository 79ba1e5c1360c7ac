#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "bds/bignum.hpp"

namespace bds {

// Row m of Pascal's triangle: entry k holds C(m, k) for 0 <= k <= m.
class PascalRow {
 public:
  PascalRow(std::int64_t m, std::vector<BigNat> coefficients);

  [[nodiscard]] std::int64_t m() const { return m_; }
  [[nodiscard]] std::span<const BigNat> coefficients() const { return coefficients_; }
  [[nodiscard]] std::size_t size() const { return coefficients_.size(); }

  // C(m, k) with the zero convention: 0 for k < 0 or k > m.
  [[nodiscard]] const BigNat& at(std::int64_t k) const;
  [[nodiscard]] const BigNat& operator[](std::size_t k) const { return coefficients_[k]; }

  [[nodiscard]] BigNat sum() const;

  friend bool operator==(const PascalRow&, const PascalRow&) = default;

 private:
  std::int64_t m_;
  std::vector<BigNat> coefficients_;
};

// Builds the row by the additive recurrence C(r,k) = C(r-1,k-1) + C(r-1,k),
// one row at a time from row 0. O(m^2) additions.
// Throws std::domain_error for m < 0.
PascalRow pascal_row(std::int64_t m);

// Builds the same row by walking the ratio C(m,k+1) = C(m,k)(m-k)/(k+1)
// over the left half and mirroring. O(m) small multiply/divide steps.
PascalRow pascal_row_by_ratio(std::int64_t m);

// Thread-safe bounded cache of ratio-built rows. Lookups return the same
// values a fresh pascal_row_by_ratio(m) would.
class RowCache {
 public:
  explicit RowCache(std::size_t capacity = 16);
  ~RowCache();
  RowCache(const RowCache&) = delete;
  RowCache& operator=(const RowCache&) = delete;

  std::shared_ptr<const PascalRow> get(std::int64_t m);
  [[nodiscard]] std::size_t capacity() const { return capacity_; }

  static RowCache& shared();

 private:
  struct State;
  std::size_t capacity_;
  std::unique_ptr<State> state_;
};

}  // namespace bds
