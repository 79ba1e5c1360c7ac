#include "bds/cli/run_config.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

namespace bds::cli {
namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kText: return "text";
  }
  return "text";
}

OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "text") return OutputFormat::kText;
  throw UsageError("unknown format '" + std::string(text) + "' (json, csv, text)");
}

std::string_view to_string(Command command) {
  switch (command) {
    case Command::kEval: return "eval";
    case Command::kVerify: return "verify";
    case Command::kSteps: return "steps";
    case Command::kBench: return "bench";
    case Command::kTable: return "table";
  }
  return "eval";
}

void RunConfig::validate() const {
  if (n_min < 0) throw UsageError("n must be nonnegative, got " + std::to_string(n_min));
  if (n_min > n_max) {
    throw UsageError("empty range " + std::to_string(n_min) + ".." + std::to_string(n_max));
  }
  if (command == Command::kSteps && n_min < 1) {
    throw UsageError(
        "derivation steps divide by 2n(2n-1) and need n >= 1; start the range at 1");
  }
  if (command == Command::kEval && n_min != n_max) throw UsageError("eval takes a single --n");
  if (strategies.empty()) throw UsageError("no strategies selected");
  if (command == Command::kVerify && strategies.size() < 2) {
    throw UsageError("verify compares strategies; select at least two");
  }
  if (command == Command::kSteps && steps.empty()) throw UsageError("no steps selected");
  if (repetitions < 1) throw UsageError("--reps must be at least 1");
  if (jobs < 1) throw UsageError("--jobs must be at least 1");
  if (naive_cutoff < 0) throw UsageError("--naive-cutoff must be nonnegative");
}

std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const std::int64_t n = parse_int(text);
    return {n, n};
  }
  std::string_view hi = text.substr(dots + 2);
  if (!hi.empty() && hi.front() == '=') hi.remove_prefix(1);
  return {parse_int(text.substr(0, dots)), parse_int(hi)};
}

std::size_t default_jobs() {
  const char* env = std::getenv(kJobsEnvVar);
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value < 1) return 1;
  return static_cast<std::size_t>(value);
}

}  // namespace bds::cli
