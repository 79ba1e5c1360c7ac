#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bds/derivation.hpp"
#include "bds/evaluators.hpp"

namespace bds::cli {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

// Bad flags or an unsatisfiable configuration; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { kJson, kCsv, kText };

std::string_view to_string(OutputFormat format);
OutputFormat parse_format(std::string_view text);

enum class Command { kEval, kVerify, kSteps, kBench, kTable };

std::string_view to_string(Command command);

inline constexpr std::int64_t kDefaultNaiveCutoff = 3000;
inline constexpr const char* kJobsEnvVar = "BDS_JOBS";

struct RunConfig {
  Command command = Command::kEval;
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  std::vector<StepId> steps{kChainSteps.begin(), kChainSteps.end()};
  std::vector<Strategy> strategies{kAllStrategies.begin(), kAllStrategies.end()};
  OutputFormat format = OutputFormat::kText;
  std::size_t jobs = 1;
  std::int64_t naive_cutoff = kDefaultNaiveCutoff;
  bool full_decimal = false;
  int repetitions = 5;

  // Throws UsageError when the configuration cannot be run.
  void validate() const;

  [[nodiscard]] std::size_t count() const { return static_cast<std::size_t>(n_max - n_min + 1); }
  [[nodiscard]] bool naive_allowed(std::int64_t n) const { return n <= naive_cutoff; }
};

// "A..B" or "A..=B" (both inclusive), or a single "N".
std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text);

// Worker count from BDS_JOBS, or 1 when unset or unparsable.
std::size_t default_jobs();

}  // namespace bds::cli
