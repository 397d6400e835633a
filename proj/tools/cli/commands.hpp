#pragma once

#include "cayleysum/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cayleysum::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsage = 2 };

struct CommandResult {
  int exit_code = kPass;
  std::optional<RunReport> report;
};

/// args excludes the program name. Results go to `out`, diagnostics and
/// usage text to `err`.
CommandResult run_command(const std::vector<std::string>& args, std::ostream& out,
                          std::ostream& err);

}  // namespace cayleysum::cli
