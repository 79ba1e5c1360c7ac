#include "bds/cli/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bds/cli/commands.hpp"
#include "bds/cli/run_config.hpp"

namespace bds::cli {
namespace {

struct Flags {
  std::optional<std::int64_t> n;
  std::string range;
  std::vector<std::string> strategies;
  std::vector<std::string> steps;
  std::string format = "text";
  std::optional<std::size_t> jobs;
  std::int64_t naive_cutoff = kDefaultNaiveCutoff;
  bool full_decimal = false;
  int repetitions = 5;
  std::string output;
};

void add_common(CLI::App& sub, Flags& flags, bool takes_range) {
  sub.add_option("--n", flags.n, "Instance parameter n");
  if (takes_range) sub.add_option("--range", flags.range, "Inclusive range A..B (or A..=B)");
  sub.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub.add_option("--jobs", flags.jobs, "Worker threads (default from BDS_JOBS, else 1)");
  sub.add_flag("--full-decimal", flags.full_decimal, "Print full decimal values in reports");
  sub.add_option("--output", flags.output, "Write the report to this file instead of stdout");
}

void add_strategy(CLI::App& sub, Flags& flags) {
  sub.add_option("--strategy", flags.strategies,
                 "naive, symmetrized, closed (repeatable or comma-separated)")
      ->delimiter(',');
}

RunConfig to_config(Command command, const Flags& flags) {
  RunConfig config;
  config.command = command;

  const bool has_range = !flags.range.empty();
  if (flags.n && has_range) throw UsageError("--n and --range are mutually exclusive");
  if (flags.n) {
    config.n_min = config.n_max = *flags.n;
  } else if (has_range) {
    std::tie(config.n_min, config.n_max) = parse_range(flags.range);
  } else {
    throw UsageError("missing --n" + std::string(command == Command::kEval ? "" : " or --range"));
  }

  if (!flags.strategies.empty()) {
    config.strategies.clear();
    for (const auto& name : flags.strategies) {
      if (name == "all") {
        config.strategies.assign(kAllStrategies.begin(), kAllStrategies.end());
        continue;
      }
      auto s = parse_strategy(name);
      if (!s) throw UsageError("unknown strategy '" + name + "'");
      if (std::find(config.strategies.begin(), config.strategies.end(), *s) == config.strategies.end()) {
        config.strategies.push_back(*s);
      }
    }
  } else if (command == Command::kEval || command == Command::kTable) {
    config.strategies = {Strategy::kClosedForm};
  }

  if (!flags.steps.empty()) {
    config.steps.clear();
    for (const auto& name : flags.steps) {
      auto s = parse_step(name);
      if (!s || std::find(kChainSteps.begin(), kChainSteps.end(), *s) == kChainSteps.end()) {
        throw UsageError("unknown or unreported step '" + name + "'");
      }
      config.steps.push_back(*s);
    }
  }

  config.format = parse_format(flags.format);
  config.jobs = flags.jobs.value_or(default_jobs());
  config.naive_cutoff = flags.naive_cutoff;
  config.full_decimal = flags.full_decimal;
  config.repetitions = flags.repetitions;
  config.validate();
  return config;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const EvaluatorTable& evaluators) {
  CLI::App app{"Exact evaluation and verification of the binomial double sum "
               "sum_{i,j} C(2n,n+i) C(2n,n+j) |i^2 - j^2|"};
  app.require_subcommand(1);

  Flags flags;
  std::map<CLI::App*, Command> commands;

  auto* eval = app.add_subcommand("eval", "Print S(n) in decimal");
  add_common(*eval, flags, false);
  eval->add_option("--strategy", flags.strategies, "naive, symmetrized or closed (default closed)");
  commands[eval] = Command::kEval;

  auto* verify = app.add_subcommand("verify", "Check that all strategies agree for every n in range");
  add_common(*verify, flags, true);
  add_strategy(*verify, flags);
  verify->add_option("--naive-cutoff", flags.naive_cutoff, "Skip NAIVE above this n");
  commands[verify] = Command::kVerify;

  auto* steps = app.add_subcommand("steps", "Check every line of the derivation chain");
  add_common(*steps, flags, true);
  steps->add_option("--steps", flags.steps, "Restrict to these steps (e.g. L3,L6,X)")->delimiter(',');
  commands[steps] = Command::kSteps;

  auto* bench = app.add_subcommand("bench", "Time each strategy and cross-check digests");
  add_common(*bench, flags, true);
  add_strategy(*bench, flags);
  bench->add_option("--naive-cutoff", flags.naive_cutoff, "Skip NAIVE above this n");
  bench->add_option("--reps", flags.repetitions, "Repetitions per (n, strategy)");
  commands[bench] = Command::kBench;

  auto* table = app.add_subcommand("table", "Print n, S(n) and its digit count");
  add_common(*table, flags, true);
  add_strategy(*table, flags);
  commands[table] = Command::kTable;

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Command command = Command::kEval;
  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) command = cmd;
  }

  try {
    const RunConfig config = to_config(command, flags);
    if (flags.output.empty()) return run_command(config, evaluators, out);

    std::ofstream file(flags.output);
    if (!file) {
      err << "error: cannot open " << flags.output << " for writing\n";
      return kExitIo;
    }
    const int code = run_command(config, evaluators, file);
    file.flush();
    if (!file) {
      err << "error: failed writing " << flags.output << '\n';
      return kExitIo;
    }
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace bds::cli
