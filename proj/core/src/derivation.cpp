#include "bds/derivation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "bds/binomial.hpp"
#include "bds/evaluators.hpp"
#include "bds/pascal_row.hpp"

namespace bds {
namespace {

constexpr std::array<std::string_view, 9> kStepNames = {
    "L0_DEFINITION", "L1_SYMMETRIZED", "L2_ABSORBED",  "L3_FOLDED", "L4_EXPANDED",
    "L5_CANCELLED",  "L6_TELESCOPED",  "L7_CLOSED",    "X_FINISH",
};

void require_positive(std::int64_t n) {
  if (n < 1) {
    throw std::domain_error("derivation lines divide by 2n(2n-1); need n >= 1, got n = " +
                            std::to_string(n));
  }
}

// The two rows every line is written in, with the signed shifts used above:
// c(k) = C(2n, n+k), a(k) = C(2n-2, n-1+k). Both vanish outside |k| <= n,
// so i = 0..n covers the support of every "i >= 0" sum.
class Rows {
 public:
  explicit Rows(std::int64_t n)
      : n_(n), upper_(RowCache::shared().get(2 * n)), lower_(RowCache::shared().get(2 * n - 2)) {}

  [[nodiscard]] std::int64_t n() const { return n_; }
  [[nodiscard]] const BigNat& c(std::int64_t k) const { return upper_->at(n_ + k); }
  [[nodiscard]] const BigNat& a(std::int64_t k) const { return lower_->at(n_ - 1 + k); }

 private:
  std::int64_t n_;
  std::shared_ptr<const PascalRow> upper_;
  std::shared_ptr<const PascalRow> lower_;
};

using Term = std::function<const BigNat&(std::int64_t)>;

// sum_{i=0..n} outer(i) * sum_{j=lo(i)..i} inner(j), with lo(i) = -i when
// `symmetric`, else 0.
BigNat double_sum(std::int64_t n, const Term& outer, const Term& inner, bool symmetric) {
  BigNat total;
  for (std::int64_t i = 0; i <= n; ++i) {
    BigNat inner_sum;
    for (std::int64_t j = symmetric ? -i : 0; j <= i; ++j) inner_sum += inner(j);
    total.add_product(outer(i), inner_sum);
  }
  return total;
}

// sum_{i=0..n} term(i).
BigNat single_sum(std::int64_t n, const Term& term) {
  BigNat total;
  for (std::int64_t i = 0; i <= n; ++i) total += term(i);
  return total;
}

BigInt line2(const Rows& r) {
  const std::int64_t n = r.n();
  const Term a = [&](std::int64_t k) -> const BigNat& { return r.a(k); };
  const Term c = [&](std::int64_t k) -> const BigNat& { return r.c(k); };
  return difference(double_sum(n, c, a, true), double_sum(n, a, c, true));
}

BigInt line3(const Rows& r) {
  const std::int64_t n = r.n();
  const Term a = [&](std::int64_t k) -> const BigNat& { return r.a(k); };
  const Term c = [&](std::int64_t k) -> const BigNat& { return r.c(k); };
  BigInt value = -2 * BigInt(double_sum(n, a, c, false));
  value += BigInt(r.c(0) * single_sum(n, a));
  value += 2 * BigInt(double_sum(n, c, a, false));
  value -= BigInt(r.a(0) * single_sum(n, c));
  return value;
}

BigInt line5(const Rows& r) {
  const std::int64_t n = r.n();
  const Term a = [&](std::int64_t k) -> const BigNat& { return r.a(k); };
  const Term c = [&](std::int64_t k) -> const BigNat& { return r.c(k); };
  const Term a_up = [&](std::int64_t k) -> const BigNat& { return r.a(k + 1); };
  const Term a_down = [&](std::int64_t k) -> const BigNat& { return r.a(k - 1); };
  BigInt value = -2 * BigInt(double_sum(n, a, a_up, false));
  value += 2 * BigInt(double_sum(n, a_down, a, false));
  value += 2 * BigInt(double_sum(n, a_up, a, false));
  value -= 2 * BigInt(double_sum(n, a, a_down, false));
  value -= BigInt(r.a(0) * single_sum(n, c));
  value += BigInt(r.c(0) * single_sum(n, a));
  return value;
}

BigInt line6(const Rows& r) {
  const std::int64_t n = r.n();
  const Term a = [&](std::int64_t k) -> const BigNat& { return r.a(k); };
  const Term c = [&](std::int64_t k) -> const BigNat& { return r.c(k); };
  const Term a_down = [&](std::int64_t k) -> const BigNat& { return r.a(k - 1); };
  BigInt value = 2 * BigInt(r.a(0) * single_sum(n, a_down));
  value -= 2 * BigInt(r.a(-1) * single_sum(n, a));
  value -= BigInt(r.a(0) * single_sum(n, c));
  value += BigInt(r.c(0) * single_sum(n, a));
  return value;
}

IdentitySides<BigInt> line7(const Rows& r, const BigInt& telescoped) {
  const std::int64_t n = r.n();
  BigInt lhs = telescoped * (4 * (2 * n - 1));
  BigInt rhs = BigInt(r.c(0) * r.c(0)) * n;
  return {std::move(lhs), std::move(rhs)};
}

XFinish x_finish(const Rows& r) {
  const std::int64_t n = r.n();
  const Term a = [&](std::int64_t k) -> const BigNat& { return r.a(k); };
  const Term c = [&](std::int64_t k) -> const BigNat& { return r.c(k); };
  const Term a_down = [&](std::int64_t k) -> const BigNat& { return r.a(k - 1); };

  const BigNat x_nat = single_sum(n, a);
  const BigInt x(x_nat);
  const BigInt center(r.a(0));      // C(2n-2, n-1)
  const BigInt left(r.a(-1));       // C(2n-2, n-2)
  const BigInt top(r.c(0));         // C(2n, n)
  const BigInt odd_middle(binomial(2 * n - 1, n - 1));

  BigInt expression = 2 * center * (left + x);
  expression -= 2 * left * x;
  expression -= center * (4 * x - center + left);
  expression += top * x;

  BigInt simplified = center * (2 * left + center - left);
  BigInt claimed = center * odd_middle;

  return XFinish{
      .n = n,
      .x = x_nat,
      .expression = std::move(expression),
      .simplified = std::move(simplified),
      .claimed = std::move(claimed),
      .sub_a = {BigInt(single_sum(n, a_down)), left + x},
      .sub_b = {BigInt(single_sum(n, c)), 4 * x - center + left},
      .sub_c = {left + center, odd_middle},
  };
}

StepReport make_report(std::int64_t n, StepId from, StepId step, BigInt lhs, BigInt rhs) {
  const bool equal = lhs == rhs;
  return StepReport{n, from, step, std::move(lhs), std::move(rhs), equal, {}};
}

SubCheck make_sub(std::string name, const IdentitySides<BigInt>& sides) {
  return SubCheck{std::move(name), sides.lhs, sides.rhs, sides.holds()};
}

}  // namespace

std::string_view to_string(StepId step) { return kStepNames[static_cast<std::size_t>(step)]; }

std::optional<StepId> parse_step(std::string_view text) {
  std::string name(text);
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (std::size_t s = 0; s < kStepNames.size(); ++s) {
    const auto full = kStepNames[s];
    // Accept "L3" or "X" as well as the full tag.
    if (name == full || name == full.substr(0, full.find('_'))) return static_cast<StepId>(s);
  }
  return std::nullopt;
}

bool StepReport::passed() const {
  return equal && std::all_of(sub_checks.begin(), sub_checks.end(),
                              [](const SubCheck& s) { return s.equal; });
}

XValue x_value(std::int64_t n) {
  require_positive(n);
  const Rows rows(n);
  return {n, single_sum(n, [&](std::int64_t k) -> const BigNat& { return rows.a(k); })};
}

BigInt q_L1(std::int64_t n) { return BigInt(eval_S_symmetrized(SumInstance(n)).value); }

BigInt q_L2(std::int64_t n) {
  require_positive(n);
  return line2(Rows(n));
}

BigInt q_L3(std::int64_t n) {
  require_positive(n);
  return line3(Rows(n));
}

BigInt q_L5(std::int64_t n) {
  require_positive(n);
  return line5(Rows(n));
}

BigInt q_L6(std::int64_t n) {
  require_positive(n);
  return line6(Rows(n));
}

IdentitySides<BigInt> q_L7(std::int64_t n) {
  require_positive(n);
  const Rows rows(n);
  return line7(rows, line6(rows));
}

XFinish q_X_finish(std::int64_t n) {
  require_positive(n);
  return x_finish(Rows(n));
}

std::vector<StepReport> verify_chain(std::int64_t n) {
  require_positive(n);
  const SumInstance inst(n);
  const Rows rows(n);

  const BigInt l0(eval_S_naive(inst).value);
  const BigInt l1(eval_S_symmetrized(inst).value);
  const BigInt l2 = line2(rows);
  const BigInt l3 = line3(rows);
  const BigInt l5 = line5(rows);
  const BigInt l6 = line6(rows);
  auto l7 = line7(rows, l6);
  const XFinish x = x_finish(rows);

  std::vector<StepReport> reports;
  reports.reserve(kChainSteps.size());
  reports.push_back(make_report(n, StepId::kL0Definition, StepId::kL1Symmetrized, l0, l1));
  reports.push_back(
      make_report(n, StepId::kL1Symmetrized, StepId::kL2Absorbed, l1, l2 * (4 * 2 * n * (2 * n - 1))));
  reports.push_back(make_report(n, StepId::kL2Absorbed, StepId::kL3Folded, l2, l3));
  reports.push_back(make_report(n, StepId::kL3Folded, StepId::kL5Cancelled, l3, l5));
  reports.push_back(make_report(n, StepId::kL5Cancelled, StepId::kL6Telescoped, l5, l6));
  reports.push_back(make_report(n, StepId::kL6Telescoped, StepId::kL7Closed, std::move(l7.lhs),
                                std::move(l7.rhs)));

  StepReport finish = make_report(n, StepId::kL6Telescoped, StepId::kXFinish, l6, x.expression);
  finish.sub_checks.push_back(make_sub("expression=simplified", {x.expression, x.simplified}));
  finish.sub_checks.push_back(make_sub("simplified=claimed", {x.simplified, x.claimed}));
  finish.sub_checks.push_back(make_sub("a", x.sub_a));
  finish.sub_checks.push_back(make_sub("b", x.sub_b));
  finish.sub_checks.push_back(make_sub("c", x.sub_c));
  reports.push_back(std::move(finish));
  return reports;
}

}  // namespace bds
