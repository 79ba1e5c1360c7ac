#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bds/cli/evaluators.hpp"
#include "bds/cli/run_config.hpp"

namespace bds::cli {

struct BenchRecord {
  std::int64_t n = 0;
  Strategy strategy = Strategy::kClosedForm;
  int repetition = 0;
  std::int64_t duration_ns = 0;  // > 0 unless skipped
  std::string digest;   // SHA-256 of the decimal result
  std::size_t digits = 0;
  bool skipped = false;  // NAIVE above the cutoff; one record, no repetitions
};

// One record per (n, strategy, repetition) in that order; skipped strategies
// contribute a single marker record. Distinct n run on up to config.jobs
// threads.
std::vector<BenchRecord> run_bench(const RunConfig& config, const EvaluatorTable& evaluators);

struct BenchSummary {
  std::int64_t n;
  Strategy strategy;
  std::int64_t median_ns;
  int samples;
};

// Median duration per (n, strategy) over the non-skipped records. For an
// even sample count the lower middle value is used.
std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records);

}  // namespace bds::cli
