#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "rspec/cli/dsl.hpp"

namespace rspec {

struct CommandOutcome {
  nlohmann::ordered_json report;
  /// 0 success, 2 counterexample found.
  int exit_code = 0;
};

const std::vector<std::string>& command_names();

/// Runs one command against a workspace. Flags use their long names
/// without dashes ("module", "set", "range", ...). Throws Error on bad input.
CommandOutcome run_command(const Workspace& ws, const std::string& command, const std::map<std::string, std::string>& flags);

/// Human-readable rendering of a report.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace rspec
