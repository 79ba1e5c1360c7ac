#include "bds/cli/evaluators.hpp"

#include <stdexcept>

namespace bds::cli {

BigNat EvaluatorTable::operator()(Strategy strategy, const SumInstance& inst) const {
  switch (strategy) {
    case Strategy::kNaive: return naive(inst);
    case Strategy::kSymmetrized: return symmetrized(inst);
    case Strategy::kClosedForm: return closed_form(inst);
  }
  throw std::invalid_argument("unknown strategy");
}

EvaluatorTable EvaluatorTable::defaults() {
  return {
      [](const SumInstance& inst) { return eval_S_naive(inst).value; },
      [](const SumInstance& inst) { return eval_S_symmetrized(inst).value; },
      [](const SumInstance& inst) { return eval_S_closed(inst).value; },
  };
}

}  // namespace bds::cli
