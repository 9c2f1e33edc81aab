#include <bit>
#include <cstdint>
#include <ostream>

#include <fmt/format.h>

#include "etherdrift/abphase.hpp"
#include "etherdrift/fieldmomentum.hpp"
#include "etherdrift/interferometer.hpp"
#include "etherdrift/kinematics.hpp"
#include "etherdrift/proca.hpp"
#include "schema.hpp"

#ifndef ETHERDRIFT_VERSION
#define ETHERDRIFT_VERSION "0.0.0"
#endif

namespace etherdrift::cli {

namespace {

using Json = nlohmann::ordered_json;

double num(const Params& p, const char* key) { return p.at(key).get<double>(); }

// --- builders ---------------------------------------------------------------

kinematics::Composition parse_composition(const std::string& name) {
    if (name == "einstein") return kinematics::Composition::Einstein;
    if (name == "tangherlini") return kinematics::Composition::Tangherlini;
    throw UsageError("composition must be einstein or tangherlini, got '" + name + "'");
}

interferometer::InterferometerConfig interferometer_from(const Params& p) {
    interferometer::InterferometerConfig cfg;
    cfg.arm_length = num(p, "L_m");
    cfg.n1 = num(p, "n1");
    cfg.n2 = num(p, "n2");
    cfg.drag_effectiveness = num(p, "ef");
    cfg.u = num(p, "u_mps");
    cfg.wavelength = p.contains("lambda_m") ? num(p, "lambda_m") : num(p, "lambda_nm") * 1e-9;
    cfg.composition = parse_composition(p.at("composition").get<std::string>());
    cfg.validate();
    return cfg;
}

double length_cm_or_m(const Params& p, const char* cm_key, const char* m_key) {
    return p.contains(m_key) ? num(p, m_key) : num(p, cm_key) * 1e-2;
}

proca::ProcaCylinderConfig cylinder_from(const Params& p) {
    proca::ProcaCylinderConfig cfg;
    cfg.radius = length_cm_or_m(p, "R_cm", "R_m");
    cfg.potential = num(p, "V_volts");
    cfg.interaction_time = num(p, "tau_s");
    if (p.contains("epsilon")) cfg.phase_resolution = num(p, "epsilon");
    if (p.contains("rho_cm") || p.contains("rho_m")) cfg.beam_radius = length_cm_or_m(p, "rho_cm", "rho_m");
    cfg.validate();
    return cfg;
}

// 1/m from a Compton range in cm.
double photon_mass_parameter(const Params& p) {
    const double range_cm = num(p, "m_gamma_inv_cm");
    if (!(range_cm > 0.0)) throw DomainError("m_gamma_inv_cm", "Compton range must be positive");
    return 100.0 / range_cm;
}

proca::ExpansionCoefficient parse_expansion(const std::string& name) {
    if (name == "quarter") return proca::ExpansionCoefficient::Quarter;
    if (name == "half") return proca::ExpansionCoefficient::Half;
    throw UsageError("expansion must be quarter or half, got '" + name + "'");
}

fieldmomentum::SolenoidChargeGeometry geometry_from(const Params& p) {
    fieldmomentum::SolenoidChargeGeometry g;
    g.radius = num(p, "a_cm");
    g.field = num(p, "B_gauss");
    g.charge_distance = num(p, "d_cm");
    g.charge = num(p, "q_esu");
    g.truncation_halflength = num(p, "lambda_cm");
    const Params& grid = p.at("grid");
    if (!grid.is_array() || grid.size() != 3 ||
        !std::all_of(grid.begin(), grid.end(), [](const Params& v) { return v.is_number_integer(); })) {
        throw UsageError("grid must be an array of three integers [radial, azimuthal, axial]");
    }
    g.grid = {grid[0].get<int>(), grid[1].get<int>(), grid[2].get<int>()};
    g.validate();
    return g;
}

Vec3 vec3_from(const Params& v, const std::string& what) {
    if (!v.is_array() || v.size() != 3 ||
        !std::all_of(v.begin(), v.end(), [](const Params& x) { return x.is_number(); })) {
        throw UsageError(what + " must be an array of three numbers");
    }
    return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

abphase::Path path_from(const Params& v) {
    if (!v.is_array()) throw UsageError("path must be a JSON array of [x,y,z] vertices");
    std::vector<Vec3> vertices;
    for (const auto& item : v) vertices.push_back(vec3_from(item, "path vertex"));
    return abphase::Path(std::move(vertices));
}

void require_keys(const Params& obj, std::initializer_list<const char*> allowed, const std::string& what) {
    for (const auto& [key, value] : obj.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
            throw UsageError("unknown key '" + key + "' in " + what);
        }
    }
}

double field_number(const Params& params, const char* key) {
    if (!params.contains(key) || !params.at(key).is_number()) {
        throw UsageError(std::string("field params need a numeric '") + key + "'");
    }
    return params.at(key).get<double>();
}

abphase::InteractionField field_from(const Params& v) {
    if (!v.is_object() || !v.contains("kind") || !v.at("kind").is_string()) {
        throw UsageError("field must be a JSON object {kind, params}");
    }
    require_keys(v, {"kind", "params"}, "field");
    const std::string kind = v.at("kind").get<std::string>();
    const Params params = v.value("params", Params::object());
    if (!params.is_object()) throw UsageError("field params must be a JSON object");
    if (kind == "uniform") {
        require_keys(params, {"Q"}, "uniform field params");
        if (!params.contains("Q")) throw UsageError("uniform field needs Q");
        return abphase::UniformQ{vec3_from(params.at("Q"), "Q")};
    }
    if (kind == "fresnel_flow") {
        require_keys(params, {"omega", "n", "u"}, "fresnel_flow field params");
        if (!params.contains("u")) throw UsageError("fresnel_flow field needs u");
        abphase::FresnelFlow f{field_number(params, "omega"), field_number(params, "n"),
                               vec3_from(params.at("u"), "u")};
        (void)abphase::fresnel_momentum(f.omega, f.n, f.u);
        return f;
    }
    if (kind == "solenoid") {
        require_keys(params, {"flux_wb", "point", "axis", "coupling"}, "solenoid field params");
        abphase::SolenoidVectorPotential s;
        s.flux = field_number(params, "flux_wb");
        if (params.contains("point")) s.point = vec3_from(params.at("point"), "point");
        if (params.contains("axis")) s.axis = vec3_from(params.at("axis"), "axis");
        if (params.contains("coupling")) s.coupling = field_number(params, "coupling");
        if (!(norm(s.axis) > 0.0)) throw DomainError("axis", "flux-line axis must be non-zero");
        return s;
    }
    throw UsageError("unknown field kind '" + kind + "' (uniform, fresnel_flow, solenoid)");
}

// --- runners ----------------------------------------------------------------

void run_speed(const RunConfig& c, std::ostream& out) {
    const Params& p = c.params;
    const std::string mode = p.at("mode").get<std::string>();
    const double n = num(p, "n");
    const double u = num(p, "u_mps");
    const double ef = num(p, "ef");
    double v = 0.0;
    if (mode == "fresnel") {
        v = kinematics::fresnel_speed(n, u);
    } else if (mode == "effective") {
        v = kinematics::effective_fresnel_speed(n, u, ef);
    } else if (mode == "einstein") {
        v = kinematics::einstein_composed_speed(n, u);
    } else {
        v = kinematics::tangherlini_composed_speed(n, u);
    }
    write_json(out, Json{{"mode", mode}, {"n", n}, {"u", u}, {"e_f", ef}, {"v", v}, {"units", "m/s"}});
}

void run_fringe(const RunConfig& c, std::ostream& out) {
    const auto cfg = interferometer_from(c.params);
    const auto steps = c.params.at("steps").get<long long>();
    if (steps < 2) throw DomainError("steps", "angle scan needs at least 2 steps");
    out << "theta_deg,delay_exact_s,delay_first_order_s,fringes\n";
    for (const auto& row : interferometer::angle_scan(cfg, static_cast<std::size_t>(steps))) {
        out << format_double(row.theta_deg) << ',' << format_double(row.delay_exact) << ','
            << format_double(row.delay_first_order) << ',' << format_double(row.fringes) << '\n';
    }
}

void run_sensitivity(const RunConfig& c, std::ostream& out) {
    const auto cfg = interferometer_from(c.params);
    const double u_min = interferometer::min_detectable_u(cfg, num(c.params, "resolution"));
    const double gain = interferometer::improvement_factor(cfg.u, cfg.n1, cfg.n2);
    write_json(out, Json{{"u_min_mps", u_min}, {"improvement_factor", gain}});
}

void run_abphase(const RunConfig& c, std::ostream& out) {
    const auto field = field_from(c.params.at("field"));
    const auto path = path_from(c.params.at("path"));
    write_json(out, Json{{"phase_rad", abphase::phase_line_integral(field, path)}});
}

void run_proca(const RunConfig& c, std::ostream& out) {
    const auto& k = units::constants(c.profile);
    const Params& p = c.params;
    const auto cfg = cylinder_from(p);
    if (c.action == "bound") {
        const double range = proca::invert_bound(cfg, k);
        write_json(out, Json{{"m_gamma_inv_cm", range}, {"m_ph_g", units::inverse_length_to_mass(range, k)}});
    } else if (c.action == "potential") {
        const double m = photon_mass_parameter(p);
        const auto coeff = parse_expansion(p.at("expansion").get<std::string>());
        const auto points = p.at("points").get<long long>();
        if (points < 2) throw DomainError("points", "profile needs at least 2 points");
        out << "rho_m,phi_exact_V,phi_expansion_V\n";
        for (long long i = 0; i < points; ++i) {
            const double rho = i + 1 == points ? cfg.radius
                                               : cfg.radius * static_cast<double>(i) / static_cast<double>(points - 1);
            out << format_double(rho) << ',' << format_double(proca::cylinder_potential_exact(rho, cfg, m)) << ','
                << format_double(proca::cylinder_potential_expansion(rho, cfg, m, coeff)) << '\n';
        }
    } else {
        const double m = photon_mass_parameter(p);
        const auto coeff = parse_expansion(p.at("expansion").get<std::string>());
        const double dphi = proca::mass_phase_correction(cfg, m, num(p, "charge_c"), k, coeff);
        write_json(out, Json{{"delta_phi_rad", dphi}});
    }
}

Json vec_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

void run_pmomentum(const RunConfig& c, std::ostream& out) {
    const auto geom = geometry_from(c.params);
    const auto levels = c.params.at("levels").get<long long>();
    if (levels < 2) throw DomainError("levels", "convergence study needs at least 2 levels");
    const auto result = fieldmomentum::integrate_field_momentum(geom);
    const Vec3 analytic = fieldmomentum::analytic_solenoid_momentum(geom);
    const double scale = norm(analytic);
    const double diff = norm(result.momentum - analytic);
    Json rows = Json::array();
    for (const auto& row : fieldmomentum::convergence_study(geom, static_cast<int>(levels))) {
        rows.push_back(Json{{"lambda_cm", row.halflength},
                            {"grid", Json::array({row.grid.radial, row.grid.azimuthal, row.grid.axial})},
                            {"magnitude", row.magnitude},
                            {"rel_error", row.relative_error}});
    }
    write_json(out, Json{{"P_e", vec_json(result.momentum)},
                         {"analytic", vec_json(analytic)},
                         {"rel_error", scale > 0.0 ? diff / scale : diff},
                         {"estimated_error", result.estimated_error},
                         {"levels", rows}});
}

void run_bounds(const RunConfig& c, std::ostream& out) {
    const auto registry = proca::bounds_registry();
    if (c.format == OutputFormat::Text) {
        out << fmt::format("{:<20} {:>24} {:>24}\n", "source", "m_gamma_inv_cm", "m_ph_g");
        for (const auto& b : registry) {
            out << fmt::format("{:<20} {:>24} {:>24}\n", b.source, format_double(b.range_cm),
                               format_double(b.mass_g));
        }
        return;
    }
    Json rows = Json::array();
    for (const auto& b : registry) {
        rows.push_back(Json{{"source", b.source}, {"m_gamma_inv_cm", b.range_cm}, {"m_ph_g", b.mass_g}});
    }
    write_json(out, rows);
}

void run_constants(const RunConfig& c, std::ostream& out) {
    const auto& k = units::constants(c.profile);
    const std::string profile(units::to_string(c.profile));
    Json rows = Json::array();
    auto add = [&](const char* name, double value, const char* unit, units::UnitSystem system) {
        rows.push_back(Json{{"name", name},
                            {"value", value},
                            {"unit", unit},
                            {"system", std::string(units::to_string(system))},
                            {"profile", profile}});
    };
    using units::UnitSystem;
    add("c", k.c, "m/s", UnitSystem::SI);
    add("c", k.c_cgs(), "cm/s", UnitSystem::Gaussian);
    add("h", k.h, "J s", UnitSystem::SI);
    add("h", k.h_cgs(), "erg s", UnitSystem::Gaussian);
    add("hbar", k.hbar, "J s", UnitSystem::SI);
    add("hbar", k.hbar_cgs(), "erg s", UnitSystem::Gaussian);
    add("e_charge", k.e, "C", UnitSystem::SI);
    add("e_charge", k.e_esu(), "statC", UnitSystem::Gaussian);
    add("flux_quantum_h_over_2e", k.flux_quantum, "T m^2", UnitSystem::SI);
    add("flux_quantum_h_over_2e",
        k.flux_quantum / units::si_per_gaussian(units::Dimension::MagneticFlux), "G cm^2",
        UnitSystem::Gaussian);
    write_json(out, rows);
}

void report(std::ostream& err, const Error& e) {
    Json obj{{"error", std::string(e.kind())}};
    if (const auto* d = dynamic_cast<const DomainError*>(&e)) obj["parameter"] = d->parameter();
    obj["message"] = e.what();
    write_json(err, obj);
}

}  // namespace

namespace detail {

void validate(const RunConfig& config) {
    const Params& p = config.params;
    switch (config.subcommand) {
        case Subcommand::Speed: {
            const std::string mode = p.at("mode").get<std::string>();
            if (mode != "fresnel" && mode != "effective" && mode != "einstein" && mode != "tangherlini") {
                throw UsageError("mode must be fresnel, effective, einstein or tangherlini");
            }
            if (!(num(p, "n") >= 1.0)) throw DomainError("n", "refractive index must be >= 1");
            if (!(std::abs(num(p, "u_mps")) < units::kSpeedOfLight)) {
                throw DomainError("u_mps", "speed must satisfy |u| < c");
            }
            const double ef = num(p, "ef");
            if (!(ef >= 0.0 && ef <= 1.0)) throw DomainError("ef", "drag effectiveness must lie in [0, 1]");
            break;
        }
        case Subcommand::Fringe:
        case Subcommand::Sensitivity:
            (void)interferometer_from(p);
            break;
        case Subcommand::AbPhase:
            (void)field_from(p.at("field"));
            (void)path_from(p.at("path"));
            break;
        case Subcommand::Proca:
            (void)cylinder_from(p);
            if (config.action != "bound") {
                (void)photon_mass_parameter(p);
                (void)parse_expansion(p.at("expansion").get<std::string>());
            }
            break;
        case Subcommand::PMomentum:
            (void)geometry_from(p);
            break;
        case Subcommand::Bounds:
        case Subcommand::Constants:
            break;
    }
}

}  // namespace detail

std::string version_string(units::Profile profile) {
    const auto& k = units::constants(profile);
    // FNV-1a over the bit patterns of the profile's constants.
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const double v : {k.c, k.h, k.hbar, k.e, k.flux_quantum}) {
        auto bits = std::bit_cast<std::uint64_t>(v);
        for (int i = 0; i < 8; ++i) {
            hash ^= bits & 0xffU;
            hash *= 0x100000001b3ULL;
            bits >>= 8;
        }
    }
    return fmt::format("etherdrift {} (profile {}, constants {:016x})", ETHERDRIFT_VERSION,
                       units::to_string(profile), hash);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.subcommand) {
            case Subcommand::Speed: run_speed(config, out); break;
            case Subcommand::Fringe: run_fringe(config, out); break;
            case Subcommand::Sensitivity: run_sensitivity(config, out); break;
            case Subcommand::AbPhase: run_abphase(config, out); break;
            case Subcommand::Proca: run_proca(config, out); break;
            case Subcommand::PMomentum: run_pmomentum(config, out); break;
            case Subcommand::Bounds: run_bounds(config, out); break;
            case Subcommand::Constants: run_constants(config, out); break;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        report(err, e);
        return 2;
    } catch (const std::exception& e) {
        write_json(err, Json{{"error", "internal"}, {"message", e.what()}});
        return 2;
    }
    return 0;
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err,
               const Environment& env) {
    RunConfig config;
    try {
        config = parse_config(args, env);
    } catch (const InfoRequest& info) {
        out << info.text;
        return 0;
    } catch (const UsageError& e) {
        std::string message = e.what();
        while (!message.empty() && message.back() == '\n') message.pop_back();
        err << "error: " << message << '\n';
        if (!e.usage().empty()) err << e.usage();
        return 1;
    } catch (const ConfigParseError& e) {
        report(err, e);
        return 1;
    } catch (const Error& e) {
        report(err, e);
        return 2;
    }
    return run(config, out, err);
}

}  // namespace etherdrift::cli
