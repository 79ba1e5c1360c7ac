#include "bds/cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "bds/digest.hpp"
#include "bds/parallel.hpp"

namespace bds::cli {

std::vector<BenchRecord> run_bench(const RunConfig& config, const EvaluatorTable& evaluators) {
  auto per_n = parallel_map(config.count(), config.jobs, [&](std::size_t idx) {
    const std::int64_t n = config.n_min + static_cast<std::int64_t>(idx);
    const SumInstance inst(n);
    std::vector<BenchRecord> records;
    for (Strategy strategy : config.strategies) {
      if (strategy == Strategy::kNaive && !config.naive_allowed(n)) {
        records.push_back({n, strategy, 0, 0, "skipped", 0, true});
        continue;
      }
      for (int rep = 0; rep < config.repetitions; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        const BigNat value = evaluators(strategy, inst);
        const auto stop = std::chrono::steady_clock::now();
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
        // Clock granularity floor; a real evaluation never takes zero time.
        records.push_back({n, strategy, rep, std::max<std::int64_t>(ns, 1), digest(value),
                           value.digit_count(), false});
      }
    }
    return records;
  });

  std::vector<BenchRecord> out;
  for (auto& chunk : per_n) {
    for (auto& record : chunk) out.push_back(std::move(record));
  }
  return out;
}

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records) {
  // Keyed by position of first appearance so output follows record order.
  std::vector<std::pair<std::int64_t, Strategy>> order;
  std::map<std::pair<std::int64_t, Strategy>, std::vector<std::int64_t>> samples;
  for (const auto& r : records) {
    if (r.skipped) continue;
    const auto key = std::make_pair(r.n, r.strategy);
    auto [it, inserted] = samples.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.push_back(r.duration_ns);
  }
  std::vector<BenchSummary> out;
  for (const auto& key : order) {
    auto& values = samples[key];
    std::sort(values.begin(), values.end());
    out.push_back({key.first, key.second, values[(values.size() - 1) / 2],
                   static_cast<int>(values.size())});
  }
  return out;
}

}  // namespace bds::cli
