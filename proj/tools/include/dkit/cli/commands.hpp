#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dkit/cli/spec.hpp"

namespace dkit::cli {

/// Flags that override or extend the spec for a single run.
struct CommandArgs {
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::vector<std::string> basis;
  std::vector<std::string> surfaces;
  std::optional<std::string> g;
  std::optional<std::string> h;
  std::optional<unsigned> count;
};

enum ExitCode { kOk = 0, kNegative = 1, kInputError = 2 };

struct CommandResult {
  int exit_code = kOk;
  nlohmann::json report;
};

const std::vector<std::string>& command_names();

/// Runs one command; input problems surface as exceptions (see run_safely).
CommandResult run(const std::string& command, const SystemSpec& spec, const CommandArgs& args);

/// Parses the spec document and runs the command, mapping input errors to
/// exit code 2 with an error report.
CommandResult run_safely(const std::string& command, const std::string& spec_text, const CommandArgs& args);

}  // namespace dkit::cli
