#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bds/cli/evaluators.hpp"

namespace bds::cli {

// Full command-line entry point. `args` includes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const EvaluatorTable& evaluators = EvaluatorTable::defaults());

}  // namespace bds::cli
