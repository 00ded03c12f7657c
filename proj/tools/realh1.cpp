#include <iostream>
#include <string>
#include <vector>

#include "realh1/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = realh1::cli::run_command(args);
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
