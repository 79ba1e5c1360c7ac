#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bds/bignum.hpp"
#include "bds/cli/run_config.hpp"

namespace bds::cli {

// Values with more digits than this are reported by digest only unless
// --full-decimal is given.
inline constexpr std::size_t kInlineDigits = 60;

inline constexpr std::string_view kCheckCsvHeader =
    "n,step_or_strategy,lhs_digest,rhs_digest,equal,duration_ns";
inline constexpr std::string_view kValueCsvHeader = "n,strategy,digits,digest,value";

// Check rows compare two quantities (verify, steps, bench). Value rows carry
// a single exact result (eval, table).
enum class RowSchema { kCheck, kValue };

struct ReportRow {
  std::int64_t n = 0;
  std::string label;  // strategy, strategy pair, or step
  std::string from;   // steps only: the line the step is compared against
  std::string lhs_digest;
  std::string rhs_digest;
  std::optional<bool> equal;
  std::optional<std::int64_t> duration_ns;
  std::optional<std::string> lhs_value;
  std::optional<std::string> rhs_value;
  std::optional<std::size_t> digits;
  std::optional<int> repetition;
  bool skipped = false;
  std::string note;
};

struct Report {
  RunConfig config;
  RowSchema schema = RowSchema::kCheck;
  std::vector<ReportRow> rows;
  bool all_passed = true;
  nlohmann::json extra = nlohmann::json::object();  // merged into the top level
};

// Decimal text when it is short enough (or forced), otherwise nullopt.
std::optional<std::string> inline_value(const BigInt& value, bool full_decimal);

nlohmann::json config_to_json(const RunConfig& config);
nlohmann::json to_json(const Report& report);

void write_json(const Report& report, std::ostream& out);
void write_csv(const Report& report, std::ostream& out);

}  // namespace bds::cli
