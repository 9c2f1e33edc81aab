#pragma once

// Command-line front end. `parse_config` resolves arguments (plus an optional
// JSON config file, overridden by flags) into a validated RunConfig; `run`
// executes it and writes JSON or CSV. Exit codes: 0 success, 1 usage or
// config-file error, 2 domain or computation error.

#include <json.hpp>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "etherdrift/errors.hpp"
#include "etherdrift/units.hpp"

namespace etherdrift::cli {

enum class Subcommand { Speed, Fringe, Sensitivity, AbPhase, Proca, PMomentum, Bounds, Constants };
enum class OutputFormat { Json, Csv, Text };

using Params = nlohmann::ordered_json;

struct RunConfig {
    Subcommand subcommand = Subcommand::Constants;
    std::string action;  ///< proca only: bound | potential | phase
    Params params = Params::object();  ///< resolved values, defaults applied
    units::Profile profile = units::Profile::Modern;
    OutputFormat format = OutputFormat::Json;
};

/// Bad command line or config: unknown key, missing value, wrong type.
class UsageError : public Error {
public:
    UsageError(const std::string& message, std::string usage = {})
        : Error(message), usage_(std::move(usage)) {}
    [[nodiscard]] std::string_view kind() const noexcept override { return "usage"; }
    [[nodiscard]] const std::string& usage() const noexcept { return usage_; }

private:
    std::string usage_;
};

/// Config file that is not valid JSON; the message carries file:line:column.
class ConfigParseError : public Error {
public:
    using Error::Error;
    [[nodiscard]] std::string_view kind() const noexcept override { return "parse"; }
};

/// --help / --version: not an error, but no RunConfig either.
struct InfoRequest {
    std::string text;
};

struct Environment {
    std::optional<std::string> profile;  ///< ETHERDRIFT_PROFILE

    static Environment from_process();
};

/// `args` excludes the program name. Throws InfoRequest, UsageError,
/// ConfigParseError, or the domain error of the module that rejects a value.
[[nodiscard]] RunConfig parse_config(std::span<const std::string> args,
                                     const Environment& env = Environment::from_process());

/// Executes a parsed config. Computation errors go to `err` as one JSON line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_config + run with the exit-code mapping.
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err,
               const Environment& env = Environment::from_process());

/// "etherdrift <semver> (profile <name>, constants <hash>)".
[[nodiscard]] std::string version_string(units::Profile profile);

/// 17 significant digits; non-finite values become null.
[[nodiscard]] std::string format_double(double value);
/// Compact one-line JSON with doubles rendered by format_double.
void write_json(std::ostream& out, const nlohmann::ordered_json& value);

}  // namespace etherdrift::cli
