#pragma once

// Parameter tables shared by the config parser and the command runners.

#include <string>
#include <vector>

#include "etherdrift/cli.hpp"

namespace etherdrift::cli::detail {

enum class ParamType { Number, Integer, String, Json };
enum class Presence { Required, Optional, Defaulted };

struct ParamSpec {
    std::string key;
    ParamType type;
    Presence presence;
    Params fallback;                   ///< used when presence == Defaulted
    std::vector<std::string> aliases;  ///< extra flag spellings (without --)
    std::string help;
};

struct CommandSpec {
    Subcommand subcommand;
    std::string name;
    std::string action;  ///< empty unless nested under `proca`
    std::string description;
    std::vector<ParamSpec> params;
    /// Alternative spellings of one quantity (e.g. R_cm / R_m); at most one may be set.
    std::vector<std::vector<std::string>> exclusive;
    std::vector<OutputFormat> formats;  ///< first entry is the default
};

[[nodiscard]] const std::vector<CommandSpec>& command_table();
[[nodiscard]] const CommandSpec& find_command(Subcommand subcommand, const std::string& action);

[[nodiscard]] std::string_view to_string(OutputFormat format) noexcept;

/// Builds the module-level objects from resolved params, throwing the
/// module's DomainError for invalid values.
void validate(const RunConfig& config);

}  // namespace etherdrift::cli::detail
