#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace realh1::cli {

struct CommandResult {
  int exit_code = 0;
  std::string output;  // report text (or JSON with --json)
  std::string error;   // diagnostics
};

/// `args` excludes the program name. Exit codes: 0 success, 1 usage,
/// schema or validation error, 2 internal inconsistency or oracle mismatch.
CommandResult run_command(const std::vector<std::string>& args);

/// Text rendering of a report produced by the --json form of a command.
std::string render_text(const nlohmann::json& report);

}  // namespace realh1::cli
