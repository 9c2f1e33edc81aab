#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "schema.hpp"

namespace etherdrift::cli {

namespace detail {

namespace {

ParamSpec number(std::string key, double fallback, std::vector<std::string> aliases, std::string help) {
    return {std::move(key), ParamType::Number, Presence::Defaulted, fallback, std::move(aliases),
            std::move(help)};
}

ParamSpec required_number(std::string key, std::vector<std::string> aliases, std::string help) {
    return {std::move(key), ParamType::Number, Presence::Required, nullptr, std::move(aliases),
            std::move(help)};
}

ParamSpec optional_number(std::string key, std::vector<std::string> aliases, std::string help) {
    return {std::move(key), ParamType::Number, Presence::Optional, nullptr, std::move(aliases),
            std::move(help)};
}

ParamSpec integer(std::string key, long long fallback, std::string help) {
    return {std::move(key), ParamType::Integer, Presence::Defaulted, fallback, {}, std::move(help)};
}

ParamSpec text(std::string key, std::string fallback, std::string help) {
    return {std::move(key), ParamType::String, Presence::Defaulted, std::move(fallback), {},
            std::move(help)};
}

std::vector<ParamSpec> interferometer_params() {
    return {
        number("L_m", 1.0, {"L"}, "arm length [m]"),
        required_number("n1", {}, "refractive index of arm 1"),
        required_number("n2", {}, "refractive index of arm 2"),
        number("ef", 0.0, {"e_f"}, "drag effectiveness applied to both media"),
        number("u_mps", 0.0, {"u"}, "preferred-frame speed [m/s]"),
        number("lambda_nm", 633.0, {}, "vacuum wavelength [nm]"),
        optional_number("lambda_m", {"lambda"}, "vacuum wavelength [m]"),
        text("composition", "tangherlini", "einstein | tangherlini"),
    };
}

std::vector<ParamSpec> cylinder_params() {
    return {
        number("V_volts", 1.0e7, {"V"}, "cylinder potential [V]"),
        number("tau_s", 5.0e-2, {"tau"}, "interaction time [s]"),
        number("R_cm", 27.0, {}, "cylinder radius [cm]"),
        optional_number("R_m", {}, "cylinder radius [m]"),
    };
}

std::vector<CommandSpec> build_table() {
    using enum OutputFormat;
    std::vector<CommandSpec> table;

    table.push_back({Subcommand::Speed, "speed", "", "light speed in a moving medium",
                     {
                         number("n", 1.0, {}, "refractive index"),
                         number("u_mps", 0.0, {"u"}, "medium speed [m/s]"),
                         number("ef", 1.0, {"e_f"}, "drag effectiveness"),
                         text("mode", "fresnel", "fresnel | effective | einstein | tangherlini"),
                     },
                     {},
                     {Json}});

    auto fringe = interferometer_params();
    fringe.push_back(integer("steps", 8, "orientations over [0, 360) deg"));
    table.push_back({Subcommand::Fringe, "fringe", "", "interferometer orientation scan (CSV)",
                     fringe, {{"lambda_nm", "lambda_m"}}, {Csv}});

    auto sensitivity = interferometer_params();
    for (auto& spec : sensitivity) {
        if (spec.key == "u_mps") {
            spec.fallback = 1.0e3;
            spec.help = "reference speed for the improvement factor [m/s]";
        }
    }
    sensitivity.push_back(number("resolution", 1.0e-3, {}, "fringe resolution"));
    table.push_back({Subcommand::Sensitivity, "sensitivity", "",
                     "minimum detectable preferred-frame speed", sensitivity,
                     {{"lambda_nm", "lambda_m"}}, {Json}});

    table.push_back({Subcommand::AbPhase, "abphase", "", "phase accumulated along a path",
                     {
                         {"path", ParamType::Json, Presence::Required, nullptr, {},
                          "JSON array of [x,y,z] vertices [m]"},
                         {"field", ParamType::Json, Presence::Required, nullptr, {},
                          "JSON object {kind, params}"},
                     },
                     {},
                     {Json}});

    auto bound = cylinder_params();
    bound.push_back(number("epsilon", 1.0e-4, {}, "phase resolution [rad]"));
    table.push_back({Subcommand::Proca, "proca", "bound", "photon-mass bound from the scalar AB cylinder",
                     bound, {{"R_cm", "R_m"}}, {Json}});

    auto potential = cylinder_params();
    potential.push_back(required_number("m_gamma_inv_cm", {}, "photon Compton range [cm]"));
    potential.push_back(integer("points", 11, "radial samples from axis to wall"));
    potential.push_back(text("expansion", "quarter", "quarter | half"));
    table.push_back({Subcommand::Proca, "proca", "potential", "radial Proca potential profile (CSV)",
                     potential, {{"R_cm", "R_m"}}, {Csv}});

    auto phase = cylinder_params();
    phase.push_back(number("rho_cm", 0.0, {}, "beam radial position [cm]"));
    phase.push_back(optional_number("rho_m", {}, "beam radial position [m]"));
    phase.push_back(required_number("m_gamma_inv_cm", {}, "photon Compton range [cm]"));
    phase.push_back(number("charge_c", units::kElementaryCharge, {}, "beam particle charge [C]"));
    phase.push_back(text("expansion", "quarter", "quarter | half"));
    table.push_back({Subcommand::Proca, "proca", "phase", "mass-dependent phase correction",
                     phase, {{"R_cm", "R_m"}, {"rho_cm", "rho_m"}}, {Json}});

    table.push_back({Subcommand::PMomentum, "pmomentum", "",
                     "interaction field momentum of a charge and a solenoid",
                     {
                         number("a_cm", 1.0, {}, "solenoid radius [cm]"),
                         number("B_gauss", 100.0, {}, "interior axial field [G]"),
                         number("d_cm", 3.0, {}, "charge distance from axis [cm]"),
                         number("q_esu", 1.0, {}, "charge [statC]"),
                         number("lambda_cm", 0.0, {}, "axial cutoff [cm]; 0 selects 50 max(a, d)"),
                         {"grid", ParamType::Json, Presence::Defaulted,
                          Params::array({48, 48, 256}), {}, "[radial, azimuthal, axial] cells"},
                         integer("levels", 3, "convergence-study levels"),
                     },
                     {},
                     {Json}});

    table.push_back({Subcommand::Bounds, "bounds", "", "published photon-mass bounds", {}, {},
                     {Json, Text}});
    table.push_back({Subcommand::Constants, "constants", "", "physical constants of a profile", {},
                     {}, {Json}});
    return table;
}

}  // namespace

const std::vector<CommandSpec>& command_table() {
    static const std::vector<CommandSpec> table = build_table();
    return table;
}

const CommandSpec& find_command(Subcommand subcommand, const std::string& action) {
    for (const auto& c : command_table()) {
        if (c.subcommand == subcommand && c.action == action) return c;
    }
    throw UsageError("unknown command");
}

std::string_view to_string(OutputFormat format) noexcept {
    switch (format) {
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Text: return "text";
    }
    return "json";
}

}  // namespace detail

namespace {

using detail::CommandSpec;
using detail::ParamSpec;
using detail::ParamType;
using detail::Presence;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Params load_config_file(const std::string& path) {
    const std::string body = read_file(path);
    try {
        auto parsed = Params::parse(body);
        if (!parsed.is_object()) throw ConfigParseError(path + ": config file must hold a JSON object");
        return parsed;
    } catch (const nlohmann::ordered_json::parse_error& e) {
        const std::size_t offset = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, body.size());
        const auto line = 1 + std::count(body.begin(), body.begin() + static_cast<long>(offset), '\n');
        const auto last_newline = body.rfind('\n', offset == 0 ? 0 : offset - 1);
        const std::size_t column =
            last_newline == std::string::npos || offset == 0 ? offset + 1 : offset - last_newline;
        throw ConfigParseError(
            fmt::format("{}:{}:{}: malformed JSON config ({})", path, line, column, e.what()));
    }
}

const ParamSpec* find_param(const CommandSpec& spec, const std::string& key) {
    for (const auto& p : spec.params) {
        if (p.key == key) return &p;
    }
    return nullptr;
}

Params from_flag(const ParamSpec& p, const std::string& raw) {
    switch (p.type) {
        case ParamType::Number: {
            char* end = nullptr;
            const double v = std::strtod(raw.c_str(), &end);
            if (raw.empty() || end != raw.c_str() + raw.size()) {
                throw UsageError("--" + p.key + ": expected a number, got '" + raw + "'");
            }
            return v;
        }
        case ParamType::Integer: {
            long long v = 0;
            const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
            if (ec != std::errc{} || ptr != raw.data() + raw.size()) {
                throw UsageError("--" + p.key + ": expected an integer, got '" + raw + "'");
            }
            return v;
        }
        case ParamType::String:
            return raw;
        case ParamType::Json:
            try {
                return Params::parse(raw);
            } catch (const nlohmann::ordered_json::parse_error& e) {
                throw UsageError("--" + p.key + ": malformed JSON value (" + e.what() + ")");
            }
    }
    return raw;
}

void check_file_value(const ParamSpec& p, const Params& value) {
    bool ok = true;
    switch (p.type) {
        case ParamType::Number: ok = value.is_number(); break;
        case ParamType::Integer: ok = value.is_number_integer(); break;
        case ParamType::String: ok = value.is_string(); break;
        case ParamType::Json: ok = true; break;
    }
    if (!ok) throw UsageError("config key '" + p.key + "' has the wrong type");
}

Params resolve(const CommandSpec& spec, const Params& file, const std::map<std::string, std::string>& flags) {
    Params merged = Params::object();
    for (const auto& [key, value] : file.items()) {
        const ParamSpec* p = find_param(spec, key);
        if (p == nullptr) {
            throw UsageError("unknown config key '" + key + "' for " + spec.name +
                             (spec.action.empty() ? "" : " " + spec.action));
        }
        check_file_value(*p, value);
        merged[key] = value;
    }
    std::vector<std::string> from_flags;
    for (const auto& [key, raw] : flags) {
        if (raw.empty()) continue;
        merged[key] = from_flag(*find_param(spec, key), raw);
        from_flags.push_back(key);
    }
    for (const auto& group : spec.exclusive) {
        const bool flag_in_group = std::any_of(group.begin(), group.end(), [&](const std::string& k) {
            return std::find(from_flags.begin(), from_flags.end(), k) != from_flags.end();
        });
        if (flag_in_group) {
            for (const auto& k : group) {
                if (std::find(from_flags.begin(), from_flags.end(), k) == from_flags.end()) merged.erase(k);
            }
        }
        const auto set = std::count_if(group.begin(), group.end(), [&](const std::string& k) {
            return merged.contains(k);
        });
        if (set > 1) {
            throw UsageError("parameters " + fmt::format("{}", fmt::join(group, ", ")) +
                             " are alternative spellings; give only one");
        }
    }
    for (const auto& p : spec.params) {
        if (merged.contains(p.key)) continue;
        const bool group_satisfied = std::any_of(spec.exclusive.begin(), spec.exclusive.end(), [&](const auto& g) {
            return std::find(g.begin(), g.end(), p.key) != g.end() &&
                   std::any_of(g.begin(), g.end(), [&](const std::string& k) { return merged.contains(k); });
        });
        if (group_satisfied) continue;
        if (p.presence == Presence::Required) {
            throw UsageError("missing required parameter '" + p.key + "'");
        }
        if (p.presence == Presence::Defaulted) merged[p.key] = p.fallback;
    }
    // Fixed key order, independent of whether a value came from a file or a flag.
    Params ordered = Params::object();
    for (const auto& p : spec.params) {
        if (merged.contains(p.key)) ordered[p.key] = merged[p.key];
    }
    return ordered;
}

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    return OutputFormat::Text;
}

struct CommandBinding {
    const CommandSpec* spec;
    CLI::App* app;
    std::map<std::string, std::string> flags;
    std::string config_path;
};

}  // namespace

Environment Environment::from_process() {
    Environment env;
    if (const char* p = std::getenv("ETHERDRIFT_PROFILE"); p != nullptr && *p != '\0') env.profile = p;
    return env;
}

RunConfig parse_config(std::span<const std::string> args, const Environment& env) {
    CLI::App app{"Ether-drift, Aharonov-Bohm and photon-mass calculations", "etherdrift"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string profile_flag;
    std::string format_flag;
    bool version = false;
    app.add_option("--profile", profile_flag, "constants profile (default $ETHERDRIFT_PROFILE or modern)")
        ->check(CLI::IsMember({"modern", "paper"}));
    app.add_option("--format", format_flag, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--version", version, "print version and constants-profile hash");

    std::vector<CommandBinding> bindings;
    bindings.reserve(detail::command_table().size());
    CLI::App* proca = nullptr;
    for (const auto& spec : detail::command_table()) {
        CLI::App* parent = &app;
        if (!spec.action.empty()) {
            if (proca == nullptr) {
                proca = app.add_subcommand("proca", "massive-photon scalar AB calculations");
                proca->require_subcommand(1);
                proca->fallthrough();
            }
            parent = proca;
        }
        CLI::App* sub = parent->add_subcommand(spec.action.empty() ? spec.name : spec.action, spec.description);
        sub->fallthrough();
        bindings.push_back({&spec, sub, {}, {}});
    }
    for (auto& b : bindings) {
        b.app->add_option("--config", b.config_path, "JSON file with parameters (flags override)");
        for (const auto& p : b.spec->params) {
            std::string names = "--" + p.key;
            for (const auto& alias : p.aliases) names += ",--" + alias;
            b.app->add_option(names, b.flags[p.key], p.help);
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = app.exit(e, out, err);
        if (code == 0) throw InfoRequest{out.str()};
        throw UsageError(err.str(), app.help());
    }

    const std::string profile_name = !profile_flag.empty() ? profile_flag : env.profile.value_or("modern");
    units::Profile profile = units::Profile::Modern;
    try {
        profile = units::parse_profile(profile_name);
    } catch (const InputError& e) {
        throw UsageError(e.what(), app.help());
    }

    if (version) throw InfoRequest{version_string(profile) + "\n"};

    const CommandBinding* chosen = nullptr;
    for (const auto& b : bindings) {
        if (b.app->parsed()) chosen = &b;
    }
    if (chosen == nullptr) throw UsageError("no subcommand given", app.help());

    RunConfig config;
    config.subcommand = chosen->spec->subcommand;
    config.action = chosen->spec->action;
    config.profile = profile;
    config.format = chosen->spec->formats.front();
    if (!format_flag.empty()) {
        const OutputFormat requested = parse_format(format_flag);
        const auto& allowed = chosen->spec->formats;
        if (std::find(allowed.begin(), allowed.end(), requested) == allowed.end()) {
            throw UsageError("output format '" + format_flag + "' not supported by this subcommand",
                             chosen->app->help());
        }
        config.format = requested;
    }

    const Params file = chosen->config_path.empty() ? Params::object() : load_config_file(chosen->config_path);
    config.params = resolve(*chosen->spec, file, chosen->flags);
    detail::validate(config);
    return config;
}

}  // namespace etherdrift::cli
