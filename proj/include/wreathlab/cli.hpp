#pragma once

#include <string>
#include <vector>

namespace wreathlab {

enum class CommandStatus { Ok, CheckFailed, InvalidInput, BudgetExceeded };

struct CommandResult {
    std::string command;
    CommandStatus status = CommandStatus::Ok;
    std::string payload_json;  // command-specific structured data
    std::string human_text;    // one-line-per-fact rendering of the payload

    int exit_code() const;
    std::string status_string() const;
    // Full machine-readable envelope: {"schema":"1","command":...,"status":...,"payload":...}.
    std::string to_json() const;
};

// Parses and executes one subcommand; never throws (errors become statuses).
CommandResult run_command(const std::vector<std::string>& args);

} // namespace wreathlab
