#pragma once

// Every displayed line of the elementary derivation of
//
//   S(n) = 2 n^2 C(2n,n)^2
//
// evaluated as a standalone exact quantity, plus the checks that link
// consecutive lines. Writing a_k = C(2n-2, n-1+k) and c_k = C(2n, n+k):
//
//   L1  4 sum_{i>=0} sum_{|j|<=i} c_i c_j (i^2 - j^2)                 (= S)
//   L2  -sum_{i>=0} sum_{|j|<=i} a_i c_j + sum_{i>=0} sum_{|j|<=i} c_i a_j
//                                                          (= S / 8n(2n-1))
//   L3  j-range folded to 0 <= j <= i, leaving boundary single sums
//   L4  c_k expanded as a_{k+1} + 2 a_k + a_{k-1}         (not materialized)
//   L5  four double sums over a-pairs plus the two boundary sums
//   L6  telescoped to single sums
//   L7  n C(2n,n)^2 / (4(2n-1))
//   X   alternative finish through X = sum_{i>=0} a_i
//
// Rational lines are compared with denominators cleared. All lines other
// than L1 require n >= 1 and throw std::domain_error otherwise.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bds/bignum.hpp"
#include "bds/lemmas.hpp"

namespace bds {

enum class StepId {
  kL0Definition,
  kL1Symmetrized,
  kL2Absorbed,
  kL3Folded,
  kL4Expanded,
  kL5Cancelled,
  kL6Telescoped,
  kL7Closed,
  kXFinish,
};

// "L0_DEFINITION", ..., "X_FINISH".
std::string_view to_string(StepId step);
std::optional<StepId> parse_step(std::string_view text);

// The steps verify_chain reports on, in report order. Each names the line
// being reached; the line it is compared against is reported alongside.
inline constexpr std::array<StepId, 7> kChainSteps = {
    StepId::kL1Symmetrized, StepId::kL2Absorbed,   StepId::kL3Folded, StepId::kL5Cancelled,
    StepId::kL6Telescoped,  StepId::kL7Closed,     StepId::kXFinish,
};

struct SubCheck {
  std::string name;
  BigInt lhs;
  BigInt rhs;
  bool equal;
};

struct StepReport {
  std::int64_t n;
  StepId from;
  StepId step;
  BigInt lhs;
  BigInt rhs;
  bool equal;  // lhs == rhs
  // Auxiliary identities a step relies on; only X_FINISH has any.
  std::vector<SubCheck> sub_checks;

  // equal, and every sub-check equal.
  [[nodiscard]] bool passed() const;
};

struct XValue {
  std::int64_t n;
  BigNat x;  // sum_{i>=0} C(2n-2, n-1+i)
};

XValue x_value(std::int64_t n);

BigInt q_L1(std::int64_t n);
BigInt q_L2(std::int64_t n);
BigInt q_L3(std::int64_t n);
BigInt q_L5(std::int64_t n);
BigInt q_L6(std::int64_t n);

// 4(2n-1) q_L6(n)  versus  n C(2n,n)^2.
IdentitySides<BigInt> q_L7(std::int64_t n);

struct XFinish {
  std::int64_t n;
  BigNat x;
  BigInt expression;   // the X-expression for the telescoped line
  BigInt simplified;   // C(2n-2,n-1) [2 C(2n-2,n-2) + C(2n-2,n-1) - C(2n-2,n-2)]
  BigInt claimed;      // C(2n-2,n-1) C(2n-1,n-1)
  // (a) sum_{i>=0} C(2n-2,n-2+i) == C(2n-2,n-2) + X
  // (b) sum_{i>=0} C(2n,n+i)     == 4X - C(2n-2,n-1) + C(2n-2,n-2)
  // (c) C(2n-2,n-2) + C(2n-2,n-1) == C(2n-1,n-1)
  IdentitySides<BigInt> sub_a;
  IdentitySides<BigInt> sub_b;
  IdentitySides<BigInt> sub_c;
};

XFinish q_X_finish(std::int64_t n);

// Seven reports, in kChainSteps order. Requires n >= 1.
std::vector<StepReport> verify_chain(std::int64_t n);

}  // namespace bds
