#include "bds/evaluators.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

#include "bds/binomial.hpp"
#include "bds/pascal_row.hpp"

namespace bds {
namespace {

std::string upper(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

std::uint64_t square_gap(std::int64_t i, std::int64_t j) {
  const std::int64_t gap = i * i - j * j;
  return static_cast<std::uint64_t>(gap < 0 ? -gap : gap);
}

}  // namespace

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::kNaive: return "NAIVE";
    case Strategy::kSymmetrized: return "SYMMETRIZED";
    case Strategy::kClosedForm: return "CLOSED_FORM";
  }
  return "UNKNOWN";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
  const std::string name = upper(text);
  if (name == "NAIVE") return Strategy::kNaive;
  if (name == "SYMMETRIZED" || name == "SYM") return Strategy::kSymmetrized;
  if (name == "CLOSED_FORM" || name == "CLOSED" || name == "CLOSED-FORM") return Strategy::kClosedForm;
  return std::nullopt;
}

EvalResult eval_S_naive(const SumInstance& inst) {
  const std::int64_t n = inst.n();
  const PascalRow row = pascal_row_by_ratio(inst.two_n());
  BigNat total;
  for (std::int64_t i = -n; i <= n; ++i) {
    // C(2n, n+i) does not depend on j, so it multiplies the finished inner sum.
    BigNat inner;
    for (std::int64_t j = -n; j <= n; ++j) inner.add_product(row.at(n + j), square_gap(i, j));
    total.add_product(row.at(n + i), inner);
  }
  return {n, Strategy::kNaive, std::move(total)};
}

EvalResult eval_S_symmetrized(const SumInstance& inst) {
  const std::int64_t n = inst.n();
  const PascalRow row = pascal_row_by_ratio(inst.two_n());
  BigNat total;
  for (std::int64_t i = 0; i <= n; ++i) {
    BigNat inner;
    for (std::int64_t j = -i; j <= i; ++j) {
      inner.add_product(row.at(n + j), static_cast<std::uint64_t>(i * i - j * j));
    }
    total.add_product(row.at(n + i), inner);
  }
  total *= 4;
  return {n, Strategy::kSymmetrized, std::move(total)};
}

EvalResult eval_S_closed(const SumInstance& inst) {
  const std::int64_t n = inst.n();
  const BigNat central = binomial(inst.two_n(), n, BinomialStrategy::kMultiplicative);
  BigNat value = central * central;
  value *= static_cast<std::uint64_t>(n);
  value *= static_cast<std::uint64_t>(n);
  value *= 2;
  return {n, Strategy::kClosedForm, std::move(value)};
}

EvalResult evaluate(const SumInstance& inst, Strategy strategy) {
  switch (strategy) {
    case Strategy::kNaive: return eval_S_naive(inst);
    case Strategy::kSymmetrized: return eval_S_symmetrized(inst);
    case Strategy::kClosedForm: return eval_S_closed(inst);
  }
  throw std::invalid_argument("unknown strategy");
}

BigNat half_row_sum(std::int64_t n) {
  const SumInstance inst(n);
  const PascalRow row = pascal_row_by_ratio(inst.two_n());
  BigNat total;
  for (std::int64_t i = 0; i <= n; ++i) total += row.at(n + i);
  return total;
}

}  // namespace bds
