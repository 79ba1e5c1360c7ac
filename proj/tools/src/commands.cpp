#include "bds/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>

#include "bds/cli/bench.hpp"
#include "bds/derivation.hpp"
#include "bds/digest.hpp"
#include "bds/parallel.hpp"

namespace bds::cli {
namespace {

std::int64_t nth(const RunConfig& config, std::size_t idx) {
  return config.n_min + static_cast<std::int64_t>(idx);
}

std::string short_digest(const std::string& digest) { return digest.substr(0, 16); }

int exit_code(const Report& report) { return report.all_passed ? kExitOk : kExitMismatch; }

ReportRow value_row(std::int64_t n, Strategy strategy, const BigNat& value, bool full_decimal) {
  ReportRow row;
  row.n = n;
  row.label = std::string(to_string(strategy));
  row.lhs_digest = digest(value);
  row.lhs_value = inline_value(BigInt(value), full_decimal);
  row.digits = value.digit_count();
  return row;
}

void emit(const Report& report, std::ostream& out,
          const std::function<void(const Report&, std::ostream&)>& text) {
  switch (report.config.format) {
    case OutputFormat::kJson: write_json(report, out); break;
    case OutputFormat::kCsv: write_csv(report, out); break;
    case OutputFormat::kText: text(report, out); break;
  }
}

void finish(Report& report) {
  report.all_passed = std::all_of(report.rows.begin(), report.rows.end(),
                                  [](const ReportRow& r) { return r.skipped || r.equal.value_or(false); });
}

}  // namespace

Report build_eval_report(const RunConfig& config, const EvaluatorTable& evaluators) {
  Report report{config, RowSchema::kValue, {}, true, nlohmann::json::object()};
  const Strategy strategy = config.strategies.front();
  const auto start = std::chrono::steady_clock::now();
  const BigNat value = evaluators(strategy, SumInstance(config.n_min));
  const auto stop = std::chrono::steady_clock::now();
  // eval always carries the exact value; the digest is alongside it.
  ReportRow row = value_row(config.n_min, strategy, value, true);
  row.duration_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
  report.rows.push_back(std::move(row));
  return report;
}

Report build_verify_report(const RunConfig& config, const EvaluatorTable& evaluators) {
  auto per_n = parallel_map(config.count(), config.jobs, [&](std::size_t idx) {
    const std::int64_t n = nth(config, idx);
    const SumInstance inst(n);
    std::vector<ReportRow> rows;
    std::vector<std::pair<Strategy, BigNat>> values;
    for (Strategy s : config.strategies) {
      if (s == Strategy::kNaive && !config.naive_allowed(n)) {
        ReportRow skipped;
        skipped.n = n;
        skipped.label = std::string(to_string(s));
        skipped.lhs_digest = "skipped";
        skipped.skipped = true;
        skipped.note = "above naive cutoff " + std::to_string(config.naive_cutoff);
        rows.push_back(std::move(skipped));
        continue;
      }
      values.emplace_back(s, evaluators(s, inst));
    }
    for (std::size_t a = 0; a < values.size(); ++a) {
      for (std::size_t b = a + 1; b < values.size(); ++b) {
        ReportRow row;
        row.n = n;
        row.label = std::string(to_string(values[a].first)) + "/" + std::string(to_string(values[b].first));
        row.lhs_digest = digest(values[a].second);
        row.rhs_digest = digest(values[b].second);
        row.equal = values[a].second == values[b].second;
        row.lhs_value = inline_value(BigInt(values[a].second), config.full_decimal);
        row.rhs_value = inline_value(BigInt(values[b].second), config.full_decimal);
        rows.push_back(std::move(row));
      }
    }
    return rows;
  });

  Report report{config, RowSchema::kCheck, {}, true, nlohmann::json::object()};
  for (auto& rows : per_n) {
    for (auto& row : rows) report.rows.push_back(std::move(row));
  }
  finish(report);
  return report;
}

Report build_steps_report(const RunConfig& config) {
  auto per_n = parallel_map(config.count(), config.jobs, [&](std::size_t idx) {
    const std::int64_t n = nth(config, idx);
    std::vector<ReportRow> rows;
    for (const StepReport& r : verify_chain(n)) {
      if (std::find(config.steps.begin(), config.steps.end(), r.step) == config.steps.end()) continue;
      ReportRow row;
      row.n = n;
      row.label = std::string(to_string(r.step));
      row.lhs_digest = digest(r.lhs);
      row.rhs_digest = digest(r.rhs);
      row.equal = r.passed();
      row.lhs_value = inline_value(r.lhs, config.full_decimal);
      row.rhs_value = inline_value(r.rhs, config.full_decimal);
      row.from = std::string(to_string(r.from));
      for (const SubCheck& sub : r.sub_checks) {
        if (sub.equal) continue;
        if (!row.note.empty()) row.note += "; ";
        row.note += "sub-identity " + sub.name + " failed";
      }
      rows.push_back(std::move(row));
    }
    return rows;
  });

  Report report{config, RowSchema::kCheck, {}, true, nlohmann::json::object()};
  for (auto& rows : per_n) {
    for (auto& row : rows) report.rows.push_back(std::move(row));
  }
  finish(report);
  return report;
}

Report build_bench_report(const RunConfig& config, const EvaluatorTable& evaluators) {
  const std::vector<BenchRecord> records = run_bench(config, evaluators);

  std::map<std::int64_t, std::string> reference;
  for (const auto& r : records) {
    if (!r.skipped) reference.try_emplace(r.n, r.digest);
  }

  Report report{config, RowSchema::kCheck, {}, true, nlohmann::json::object()};
  for (const auto& r : records) {
    ReportRow row;
    row.n = r.n;
    row.label = std::string(to_string(r.strategy));
    row.lhs_digest = r.digest;
    row.skipped = r.skipped;
    if (r.skipped) {
      row.note = "above naive cutoff " + std::to_string(config.naive_cutoff);
    } else {
      row.rhs_digest = reference.at(r.n);
      row.equal = r.digest == row.rhs_digest;
      row.duration_ns = r.duration_ns;
      row.repetition = r.repetition;
    }
    report.rows.push_back(std::move(row));
  }
  finish(report);

  nlohmann::json summary = nlohmann::json::array();
  for (const auto& s : summarize(records)) {
    summary.push_back({{"n", s.n},
                       {"strategy", to_string(s.strategy)},
                       {"median_ns", s.median_ns},
                       {"samples", s.samples}});
  }
  report.extra["summary"] = std::move(summary);
  return report;
}

Report build_table_report(const RunConfig& config, const EvaluatorTable& evaluators) {
  const Strategy strategy = config.strategies.front();
  auto rows = parallel_map(config.count(), config.jobs, [&](std::size_t idx) {
    const std::int64_t n = nth(config, idx);
    return value_row(n, strategy, evaluators(strategy, SumInstance(n)), config.full_decimal);
  });
  return Report{config, RowSchema::kValue, std::move(rows), true, nlohmann::json::object()};
}

int cmd_eval(const RunConfig& config, const EvaluatorTable& evaluators, std::ostream& out) {
  const Report report = build_eval_report(config, evaluators);
  emit(report, out, [](const Report& r, std::ostream& os) { os << *r.rows.front().lhs_value << '\n'; });
  return kExitOk;
}

int cmd_verify(const RunConfig& config, const EvaluatorTable& evaluators, std::ostream& out) {
  const Report report = build_verify_report(config, evaluators);
  emit(report, out, [](const Report& r, std::ostream& os) {
    std::map<std::int64_t, std::vector<const ReportRow*>> by_n;
    for (const auto& row : r.rows) by_n[row.n].push_back(&row);
    for (const auto& [n, rows] : by_n) {
      const bool ok = std::all_of(rows.begin(), rows.end(),
                                  [](const ReportRow* row) { return row->skipped || *row->equal; });
      os << "n=" << n << (ok ? " PASS" : " FAIL");
      for (const ReportRow* row : rows) {
        if (row->skipped) {
          os << " (" << row->label << " skipped, " << row->note << ")";
        } else if (!*row->equal) {
          const auto slash = row->label.find('/');
          os << ' ' << row->label.substr(0, slash) << '=' << row->lhs_digest << ' '
             << row->label.substr(slash + 1) << '=' << row->rhs_digest;
        }
      }
      os << '\n';
    }
    os << (r.all_passed ? "all strategies agree" : "MISMATCH: strategies disagree") << " for n in "
       << r.config.n_min << ".." << r.config.n_max << '\n';
  });
  return exit_code(report);
}

int cmd_steps(const RunConfig& config, std::ostream& out) {
  const Report report = build_steps_report(config);
  emit(report, out, [](const Report& r, std::ostream& os) {
    for (const auto& row : r.rows) {
      os << "n=" << row.n << ' ' << std::left << std::setw(14) << row.from << " -> " << std::setw(15) << row.label
         << (*row.equal ? "PASS" : "FAIL");
      if (!row.note.empty()) os << " (" << row.note << ')';
      os << '\n';
    }
    os << (r.all_passed ? "every step holds" : "MISMATCH: a step failed") << " for n in "
       << r.config.n_min << ".." << r.config.n_max << '\n';
  });
  return exit_code(report);
}

int cmd_bench(const RunConfig& config, const EvaluatorTable& evaluators, std::ostream& out) {
  const Report report = build_bench_report(config, evaluators);
  emit(report, out, [](const Report& r, std::ostream& os) {
    os << std::left << std::setw(10) << "n" << std::setw(14) << "strategy" << std::right
       << std::setw(16) << "median_ns" << std::setw(9) << "samples" << "  digest\n";
    std::map<std::pair<std::int64_t, std::string>, std::string> digests;
    for (const auto& row : r.rows) digests.try_emplace({row.n, row.label}, row.lhs_digest);
    for (const auto& s : r.extra.at("summary")) {
      const auto n = s.at("n").get<std::int64_t>();
      const auto name = s.at("strategy").get<std::string>();
      os << std::left << std::setw(10) << n << std::setw(14) << name << std::right << std::setw(16)
         << s.at("median_ns").get<std::int64_t>() << std::setw(9) << s.at("samples").get<int>()
         << "  " << short_digest(digests.at({n, name})) << '\n';
    }
    for (const auto& row : r.rows) {
      if (row.skipped) os << "n=" << row.n << ' ' << row.label << " skipped (" << row.note << ")\n";
    }
    if (!r.all_passed) os << "MISMATCH: strategy digests disagree\n";
  });
  return exit_code(report);
}

int cmd_table(const RunConfig& config, const EvaluatorTable& evaluators, std::ostream& out) {
  const Report report = build_table_report(config, evaluators);
  emit(report, out, [](const Report& r, std::ostream& os) {
    os << std::left << std::setw(10) << "n" << std::setw(10) << "digits" << "S(n)\n";
    for (const auto& row : r.rows) {
      os << std::left << std::setw(10) << row.n << std::setw(10) << *row.digits
         << (row.lhs_value ? *row.lhs_value : "sha256:" + row.lhs_digest) << '\n';
    }
  });
  return kExitOk;
}

int run_command(const RunConfig& config, const EvaluatorTable& evaluators, std::ostream& out) {
  config.validate();
  switch (config.command) {
    case Command::kEval: return cmd_eval(config, evaluators, out);
    case Command::kVerify: return cmd_verify(config, evaluators, out);
    case Command::kSteps: return cmd_steps(config, out);
    case Command::kBench: return cmd_bench(config, evaluators, out);
    case Command::kTable: return cmd_table(config, evaluators, out);
  }
  return kExitUsage;
}

}  // namespace bds::cli
