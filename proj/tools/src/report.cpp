#include "bds/cli/report.hpp"

#include <ostream>

namespace bds::cli {
namespace {

template <typename T>
nlohmann::json optional_json(const std::optional<T>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

nlohmann::json check_row_json(const ReportRow& row) {
  nlohmann::json j = {
      {"n", row.n},
      {"step_or_strategy", row.label},
      {"lhs_digest", row.lhs_digest},
      {"rhs_digest", row.rhs_digest},
      {"equal", optional_json(row.equal)},
      {"duration_ns", optional_json(row.duration_ns)},
  };
  if (!row.from.empty()) j["from"] = row.from;
  if (row.lhs_value) j["lhs"] = *row.lhs_value;
  if (row.rhs_value) j["rhs"] = *row.rhs_value;
  if (row.repetition) j["repetition"] = *row.repetition;
  if (row.skipped) j["skipped"] = true;
  if (!row.note.empty()) j["note"] = row.note;
  return j;
}

nlohmann::json value_row_json(const ReportRow& row) {
  nlohmann::json j = {
      {"n", row.n},
      {"strategy", row.label},
      {"digits", optional_json(row.digits)},
      {"digest", row.lhs_digest},
      {"value", optional_json(row.lhs_value)},
  };
  if (row.duration_ns) j["duration_ns"] = *row.duration_ns;
  return j;
}

std::string csv_field(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

template <typename T>
std::string csv_field(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "";
}

}  // namespace

std::optional<std::string> inline_value(const BigInt& value, bool full_decimal) {
  if (full_decimal || value.digit_count() <= kInlineDigits) return value.to_string();
  return std::nullopt;
}

nlohmann::json config_to_json(const RunConfig& config) {
  nlohmann::json strategies = nlohmann::json::array();
  for (Strategy s : config.strategies) strategies.push_back(to_string(s));
  nlohmann::json steps = nlohmann::json::array();
  for (StepId s : config.steps) steps.push_back(to_string(s));
  return {
      {"command", to_string(config.command)},
      {"n_min", config.n_min},
      {"n_max", config.n_max},
      {"strategies", strategies},
      {"steps", steps},
      {"format", to_string(config.format)},
      {"jobs", config.jobs},
      {"naive_cutoff", config.naive_cutoff},
      {"full_decimal", config.full_decimal},
      {"repetitions", config.repetitions},
  };
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& row : report.rows) {
    results.push_back(report.schema == RowSchema::kCheck ? check_row_json(row) : value_row_json(row));
  }
  nlohmann::json j = {
      {"config", config_to_json(report.config)},
      {"results", std::move(results)},
      {"all_passed", report.all_passed},
  };
  for (const auto& [key, value] : report.extra.items()) j[key] = value;
  return j;
}

void write_json(const Report& report, std::ostream& out) { out << to_json(report).dump(2) << '\n'; }

void write_csv(const Report& report, std::ostream& out) {
  if (report.schema == RowSchema::kCheck) {
    out << kCheckCsvHeader << '\n';
    for (const auto& row : report.rows) {
      out << row.n << ',' << row.label << ',' << row.lhs_digest << ','
          << row.rhs_digest << ',' << csv_field(row.equal) << ',' << csv_field(row.duration_ns)
          << '\n';
    }
    return;
  }
  out << kValueCsvHeader << '\n';
  for (const auto& row : report.rows) {
    out << row.n << ',' << row.label << ',' << csv_field(row.digits) << ',' << row.lhs_digest << ','
        << row.lhs_value.value_or("") << '\n';
  }
}

}  // namespace bds::cli
