#pragma once

#include <iosfwd>

#include "bds/cli/evaluators.hpp"
#include "bds/cli/report.hpp"
#include "bds/cli/run_config.hpp"

namespace bds::cli {

// Each command builds its report, writes it to `out` in config.format and
// returns the exit code. `config` must already be validated.

Report build_eval_report(const RunConfig& config, const EvaluatorTable& evaluators);
Report build_verify_report(const RunConfig& config, const EvaluatorTable& evaluators);
Report build_steps_report(const RunConfig& config);
Report build_bench_report(const RunConfig& config, const EvaluatorTable& evaluators);
Report build_table_report(const RunConfig& config, const EvaluatorTable& evaluators);

int cmd_eval(const RunConfig& config, const EvaluatorTable& evaluators, std::ostream& out);
int cmd_verify(const RunConfig& config, const EvaluatorTable& evaluators, std::ostream& out);
int cmd_steps(const RunConfig& config, std::ostream& out);
int cmd_bench(const RunConfig& config, const EvaluatorTable& evaluators, std::ostream& out);
int cmd_table(const RunConfig& config, const EvaluatorTable& evaluators, std::ostream& out);

int run_command(const RunConfig& config, const EvaluatorTable& evaluators, std::ostream& out);

}  // namespace bds::cli
