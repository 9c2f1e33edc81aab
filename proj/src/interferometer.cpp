#include "etherdrift/interferometer.hpp"

#include <cmath>
#include <numbers>

#include "etherdrift/errors.hpp"
#include "etherdrift/units.hpp"

namespace etherdrift::interferometer {

namespace {

using units::kSpeedOfLight;

// Inverse lab-frame speed of one arm, in extended precision: the delay is a
// small difference of two nearly equal transit times.
long double inverse_arm_speed(double n, double e_f, double u_eff, Composition law) {
    const long double c = kSpeedOfLight;
    const long double ln = n;
    const long double u = u_eff;
    const long double v = c / ln + static_cast<long double>(e_f) * (1.0L - 1.0L / (ln * ln)) * u;
    if (law == Composition::Einstein) {
        return (1.0L - u * v / (c * c)) / (v - u);
    }
    return (1.0L - (u / c) * (u / c)) / (v - u);
}

double index_of(const InterferometerConfig& cfg, Arm arm) {
    return arm == Arm::One ? cfg.n1 : cfg.n2;
}

}  // namespace

Angle Angle::radians(double rad) noexcept { return Angle(rad * 180.0 / std::numbers::pi); }

double Angle::rad() const noexcept { return degrees_ * std::numbers::pi / 180.0; }

double Angle::cos() const noexcept {
    double reduced = std::fmod(degrees_, 360.0);
    if (reduced < 0.0) reduced += 360.0;
    if (reduced == 0.0) return 1.0;
    if (reduced == 90.0 || reduced == 270.0) return 0.0;
    if (reduced == 180.0) return -1.0;
    return std::cos(reduced * std::numbers::pi / 180.0);
}

void InterferometerConfig::validate() const {
    if (!(arm_length > 0.0) || !std::isfinite(arm_length)) {
        throw DomainError("L", "arm length must be positive");
    }
    if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
        throw DomainError("lambda", "wavelength must be positive");
    }
    if (!(n1 >= 1.0) || !std::isfinite(n1)) throw DomainError("n1", "refractive index must be >= 1");
    if (!(n2 >= 1.0) || !std::isfinite(n2)) throw DomainError("n2", "refractive index must be >= 1");
    if (!(drag_effectiveness >= 0.0 && drag_effectiveness <= 1.0)) {
        throw DomainError("ef", "drag effectiveness must lie in [0, 1]");
    }
    if (!(std::abs(u) < kSpeedOfLight)) throw DomainError("u", "speed must satisfy |u| < c");
}

double arm_speed(const InterferometerConfig& cfg, Arm arm, Angle theta) {
    cfg.validate();
    const double u_eff = cfg.u * theta.cos();
    return static_cast<double>(
        1.0L / inverse_arm_speed(index_of(cfg, arm), cfg.drag_effectiveness, u_eff, cfg.composition));
}

double delay_exact(const InterferometerConfig& cfg, Angle theta) {
    cfg.validate();
    const double u_eff = cfg.u * theta.cos();
    const long double t1 = inverse_arm_speed(cfg.n1, cfg.drag_effectiveness, u_eff, cfg.composition);
    const long double t2 = inverse_arm_speed(cfg.n2, cfg.drag_effectiveness, u_eff, cfg.composition);
    return static_cast<double>(static_cast<long double>(cfg.arm_length) * (t1 - t2));
}

double delay_first_order(const InterferometerConfig& cfg, Angle theta) {
    cfg.validate();
    const double beta = cfg.u * theta.cos() / kSpeedOfLight;
    const double dn = cfg.n1 - cfg.n2;
    const double dn2 = dn * (cfg.n1 + cfg.n2);
    return cfg.arm_length / kSpeedOfLight * (dn + beta * (1.0 - cfg.drag_effectiveness) * dn2);
}

RotationSignal rotation_signal(const InterferometerConfig& cfg) {
    const Angle forward = Angle::degrees(0.0);
    const Angle reverse = Angle::degrees(180.0);
    const double exact = delay_exact(cfg, forward) - delay_exact(cfg, reverse);
    const double beta = cfg.u / kSpeedOfLight;
    const double dn2 = (cfg.n1 - cfg.n2) * (cfg.n1 + cfg.n2);
    const double first =
        2.0 * beta * (1.0 - cfg.drag_effectiveness) * dn2 * cfg.arm_length / kSpeedOfLight;
    return {exact, first};
}

double fringe_shift(double delta_t, double wavelength) {
    if (!(wavelength > 0.0)) throw DomainError("lambda", "wavelength must be positive");
    return kSpeedOfLight * delta_t / wavelength;
}

double min_detectable_u(const InterferometerConfig& cfg, double fringe_resolution) {
    cfg.validate();
    if (!(fringe_resolution > 0.0)) {
        throw DomainError("resolution", "fringe resolution must be positive");
    }
    const double dn2 = (cfg.n1 - cfg.n2) * (cfg.n1 + cfg.n2);
    const double coupling = std::abs(dn2) * (1.0 - cfg.drag_effectiveness);
    if (coupling == 0.0) {
        throw DegenerateConfigError(
            "rotation signal vanishes identically (n1 == n2 or full drag); no detectable u");
    }
    return fringe_resolution * cfg.wavelength * kSpeedOfLight / (2.0 * coupling * cfg.arm_length);
}

double improvement_factor(double u, double n1, double n2) {
    if (!(u > 0.0)) throw DomainError("u", "speed must be positive");
    return kSpeedOfLight / u * (n1 - n2) * (n1 + n2);
}

std::vector<ScanRow> angle_scan(const InterferometerConfig& cfg, std::size_t steps) {
    if (steps < 2) throw DomainError("steps", "angle scan needs at least 2 steps");
    cfg.validate();
    std::vector<ScanRow> rows;
    rows.reserve(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        const Angle theta = Angle::degrees(360.0 * static_cast<double>(k) / static_cast<double>(steps));
        const double exact = delay_exact(cfg, theta);
        rows.push_back({theta.deg(), exact, delay_first_order(cfg, theta),
                        fringe_shift(exact, cfg.wavelength)});
    }
    return rows;
}

}  // namespace etherdrift::interferometer
