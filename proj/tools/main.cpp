#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "bds/cli/cli.hpp"

int main(int argc, char** argv) {
  try {
    const std::vector<std::string> args(argv, argv + argc);
    return bds::cli::run_cli(args, std::cout, std::cerr);
  } catch (const std::exception& ex) {
    std::cerr << "fatal: " << ex.what() << std::endl;
    return 1;
  }
}
