#ifndef TMCAT_COMMANDS_HPP
#define TMCAT_COMMANDS_HPP

#include "tmcat/document.hpp"

#include <optional>
#include <string>

namespace tmcat {

// Exit statuses: 0 every check passed, 1 a check failed (witnesses in the
// report), 2 malformed input or unknown command, 3 an enumeration guard
// tripped. The report always embeds the options actually used.
struct CommandResult {
    int status = 0;
    Json report;
    // set for dot export; printed bare instead of the report
    std::optional<std::string> raw;
};

extern const std::size_t kCliDefaultCap;

CommandResult run_command(const std::string& command, const Json& options, const Json& input);

// parses the two json strings first; parse failures become status 2
CommandResult run_command_strings(const std::string& command, const std::string& options_json,
                                  const std::string& input_json);

} // namespace tmcat

#endif
