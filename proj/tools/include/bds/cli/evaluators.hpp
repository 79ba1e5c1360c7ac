#pragma once

#include <functional>

#include "bds/bignum.hpp"
#include "bds/evaluators.hpp"
#include "bds/sum_instance.hpp"

namespace bds::cli {

// The evaluator behind each strategy. Commands take this table so tests can
// substitute a deliberately wrong evaluator.
struct EvaluatorTable {
  using Fn = std::function<BigNat(const SumInstance&)>;

  Fn naive;
  Fn symmetrized;
  Fn closed_form;

  [[nodiscard]] BigNat operator()(Strategy strategy, const SumInstance& inst) const;

  static EvaluatorTable defaults();
};

}  // namespace bds::cli
