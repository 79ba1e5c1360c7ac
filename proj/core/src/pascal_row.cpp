#include "bds/pascal_row.hpp"

#include <list>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace bds {
namespace {

const BigNat& zero() {
  static const BigNat kZero;
  return kZero;
}

void require_row_index(std::int64_t m) {
  if (m < 0) throw std::domain_error("Pascal row index must be nonnegative, got " + std::to_string(m));
}

}  // namespace

PascalRow::PascalRow(std::int64_t m, std::vector<BigNat> coefficients)
    : m_(m), coefficients_(std::move(coefficients)) {
  require_row_index(m);
  if (coefficients_.size() != static_cast<std::size_t>(m) + 1) {
    throw std::invalid_argument("Pascal row " + std::to_string(m) + " needs " +
                                std::to_string(m + 1) + " coefficients");
  }
}

const BigNat& PascalRow::at(std::int64_t k) const {
  if (k < 0 || k > m_) return zero();
  return coefficients_[static_cast<std::size_t>(k)];
}

BigNat PascalRow::sum() const {
  BigNat total;
  for (const auto& c : coefficients_) total += c;
  return total;
}

PascalRow pascal_row(std::int64_t m) {
  require_row_index(m);
  std::vector<BigNat> row(static_cast<std::size_t>(m) + 1);
  row[0] = 1;
  for (std::size_t r = 1; r <= static_cast<std::size_t>(m); ++r) {
    row[r] = 1;
    for (std::size_t k = r - 1; k >= 1; --k) row[k] += row[k - 1];
  }
  return PascalRow(m, std::move(row));
}

PascalRow pascal_row_by_ratio(std::int64_t m) {
  require_row_index(m);
  const auto width = static_cast<std::size_t>(m);
  std::vector<BigNat> row(width + 1);
  row[0] = 1;
  for (std::size_t k = 0; k < width / 2; ++k) {
    BigNat next = row[k] * static_cast<std::uint64_t>(width - k);
    next.divide_exact(static_cast<std::uint64_t>(k + 1));
    row[k + 1] = std::move(next);
  }
  for (std::size_t k = width / 2 + 1; k <= width; ++k) row[k] = row[width - k];
  return PascalRow(m, std::move(row));
}

struct RowCache::State {
  std::mutex mutex;
  // Most recently used at the front.
  std::list<std::pair<std::int64_t, std::shared_ptr<const PascalRow>>> order;
  std::unordered_map<std::int64_t, decltype(order)::iterator> index;
};

RowCache::RowCache(std::size_t capacity)
    : capacity_(capacity == 0 ? 1 : capacity), state_(std::make_unique<State>()) {}

RowCache::~RowCache() = default;

std::shared_ptr<const PascalRow> RowCache::get(std::int64_t m) {
  require_row_index(m);
  {
    std::lock_guard lock(state_->mutex);
    if (auto it = state_->index.find(m); it != state_->index.end()) {
      state_->order.splice(state_->order.begin(), state_->order, it->second);
      return it->second->second;
    }
  }
  // Built outside the lock; a concurrent miss on the same m builds twice and
  // keeps whichever lands first.
  auto row = std::make_shared<const PascalRow>(pascal_row_by_ratio(m));
  std::lock_guard lock(state_->mutex);
  if (auto it = state_->index.find(m); it != state_->index.end()) return it->second->second;
  state_->order.emplace_front(m, row);
  state_->index[m] = state_->order.begin();
  while (state_->order.size() > capacity_) {
    state_->index.erase(state_->order.back().first);
    state_->order.pop_back();
  }
  return row;
}

RowCache& RowCache::shared() {
  static RowCache cache(32);
  return cache;
}

}  // namespace bds
