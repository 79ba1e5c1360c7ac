#pragma once

// Exact evaluators for
//
//   S(n) = sum_{i,j in [-n,n]} C(2n,n+i) C(2n,n+j) |i^2 - j^2|
//
// and for the half-row sum that its closed form relies on.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "bds/bignum.hpp"
#include "bds/sum_instance.hpp"

namespace bds {

enum class Strategy {
  kNaive,        // full (2n+1)^2 grid with |i^2 - j^2|
  kSymmetrized,  // 4 * sum over i >= 0, |j| <= i of (i^2 - j^2)
  kClosedForm,   // 2 n^2 C(2n,n)^2
};

inline constexpr std::array<Strategy, 3> kAllStrategies = {
    Strategy::kNaive, Strategy::kSymmetrized, Strategy::kClosedForm};

// "NAIVE", "SYMMETRIZED", "CLOSED_FORM".
std::string_view to_string(Strategy strategy);
// Accepts the canonical names and the short forms naive/symmetrized/closed,
// case-insensitively.
std::optional<Strategy> parse_strategy(std::string_view text);

struct EvalResult {
  std::int64_t n;
  Strategy strategy;
  BigNat value;
};

EvalResult eval_S_naive(const SumInstance& inst);
EvalResult eval_S_symmetrized(const SumInstance& inst);
EvalResult eval_S_closed(const SumInstance& inst);
EvalResult evaluate(const SumInstance& inst, Strategy strategy);

// sum_{i=0..n} C(2n, n+i), summed term by term.
BigNat half_row_sum(std::int64_t n);

}  // namespace bds
