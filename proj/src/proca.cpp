#include "etherdrift/proca.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <fmt/format.h>

#include "etherdrift/abphase.hpp"
#include "etherdrift/errors.hpp"

namespace etherdrift::proca {

namespace {

void require_radius_in_cylinder(double rho, const ProcaCylinderConfig& cfg) {
    if (!(rho >= 0.0 && rho <= cfg.radius)) {
        throw DomainError("rho", "radial position must satisfy 0 <= rho <= R");
    }
}

void require_mass(double m_gamma) {
    if (!(m_gamma >= 0.0) || !std::isfinite(m_gamma)) {
        throw DomainError("m_gamma", "photon mass parameter must be finite and >= 0");
    }
}

}  // namespace

void ProcaCylinderConfig::validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("R", "radius must be positive");
    if (!std::isfinite(potential)) throw DomainError("V", "potential must be finite");
    if (!(interaction_time > 0.0) || !std::isfinite(interaction_time)) {
        throw DomainError("tau", "interaction time must be positive");
    }
    if (!(phase_resolution > 0.0) || !std::isfinite(phase_resolution)) {
        throw DomainError("epsilon", "phase resolution must be positive");
    }
    if (!(beam_radius >= 0.0 && beam_radius <= radius)) {
        throw DomainError("rho", "beam position must satisfy 0 <= rho <= R");
    }
}

double coefficient_value(ExpansionCoefficient c) noexcept {
    return c == ExpansionCoefficient::Quarter ? 0.25 : 0.5;
}

double yukawa_potential(double r, double m_gamma) {
    if (!(r > 0.0)) throw DomainError("r", "distance must be positive");
    require_mass(m_gamma);
    return std::exp(-m_gamma * r) / r;
}

double bessel_I0(double x) {
    if (!(x >= 0.0)) throw DomainError("x", "bessel_I0 requires x >= 0");
    if (x > kBesselI0MaxArgument) {
        throw OverflowError("bessel_I0 argument exceeds 700; result would overflow");
    }
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1;; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(k));
        sum += term;
        if (term < 1e-16 * sum) break;
    }
    return sum;
}

double bessel_K0(double x) {
    if (!(x > 0.0)) throw DomainError("x", "bessel_K0 requires x > 0 (diverges at the origin)");
    if (x > kBesselK0MaxArgument) throw DomainError("x", "bessel_K0 series limited to x <= 8");
    const double q = 0.25 * x * x;
    double term = 1.0;
    double harmonic = 0.0;
    double i0 = 1.0;
    double tail = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(k));
        harmonic += 1.0 / k;
        i0 += term;
        tail += term * harmonic;
        if (term * harmonic < 1e-17 * tail) break;
    }
    return -(std::log(0.5 * x) + std::numbers::egamma) * i0 + tail;
}

double cylinder_potential_exact(double rho, const ProcaCylinderConfig& cfg, double m_gamma) {
    require_radius_in_cylinder(rho, cfg);
    require_mass(m_gamma);
    if (rho == cfg.radius) return cfg.potential;
    return cfg.potential * bessel_I0(m_gamma * rho) / bessel_I0(m_gamma * cfg.radius);
}

double cylinder_potential_expansion(double rho, const ProcaCylinderConfig& cfg, double m_gamma,
                                    ExpansionCoefficient coeff) {
    require_radius_in_cylinder(rho, cfg);
    require_mass(m_gamma);
    const double c = coefficient_value(coeff);
    return cfg.potential * (1.0 + c * m_gamma * m_gamma * (rho - cfg.radius) * (rho + cfg.radius));
}

double relative_scalar_phase(std::span<const double> v1, std::span<const double> v2, double dt,
                             double charge, const units::PhysicalConstants& k) {
    if (v1.size() != v2.size()) {
        throw InputError("beam potential series have different sample counts");
    }
    if (v1.size() < 2) throw InputError("scalar phase needs at least 2 samples");
    if (!(dt > 0.0)) throw DomainError("dt", "sample spacing must be positive");
    return abphase::scalar_phase(v1, dt, charge, k) - abphase::scalar_phase(v2, dt, charge, k);
}

double mass_phase_correction(const ProcaCylinderConfig& cfg, double m_gamma, double charge,
                             const units::PhysicalConstants& k, ExpansionCoefficient coeff) {
    cfg.validate();
    require_mass(m_gamma);
    const double rho = cfg.beam_radius;
    const double radial = (rho - cfg.radius) * (rho + cfg.radius);
    return -coefficient_value(coeff) * charge * m_gamma * m_gamma * radial * cfg.potential *
           cfg.interaction_time / k.hbar;
}

double invert_bound(const ProcaCylinderConfig& cfg, const units::PhysicalConstants& k) {
    cfg.validate();
    if (!(cfg.potential > 0.0)) throw DomainError("V", "potential must be positive for a bound");
    const double range_m =
        0.5 * cfg.radius *
        std::sqrt(std::numbers::pi * cfg.potential * cfg.interaction_time /
                  (cfg.phase_resolution * k.flux_quantum));
    return range_m * 100.0;
}

PhotonMassBound bound_from_range(double range_cm, std::string source,
                                 const units::PhysicalConstants& k) {
    return {range_cm, units::inverse_length_to_mass(range_cm, k), std::move(source)};
}

double time_of_flight(double length, double speed) {
    if (!(speed > 0.0)) throw DomainError("v", "speed must be positive");
    if (!(length >= 0.0)) throw DomainError("L", "length must be >= 0");
    return length / speed;
}

PhotonMassBound projected_bound(const PhotonMassBound& base, double tau_scale) {
    if (!(tau_scale > 0.0) || !std::isfinite(tau_scale)) {
        throw DomainError("tau_scale", "interaction-time scale must be positive");
    }
    if (tau_scale == 1.0) return base;
    const double gain = std::sqrt(tau_scale);
    return {base.range_cm * gain, base.mass_g / gain, base.source + " [tau x" + fmt::format("{:g}", tau_scale) + "]"};
}

std::span<const PhotonMassBound> bounds_registry() {
    static const std::array<PhotonMassBound, 4> registry = [] {
        const auto& k = units::constants();
        return std::array<PhotonMassBound, 4>{
            // Quoted as a range only; the mass is derived.
            bound_from_range(3.0e9, "Williams-Faller-Hill", k),
            PhotonMassBound{1.66e13, 2.1e-51, "Luo et al."},
            PhotonMassBound{1.4e7, 2.5e-45, "Boulware-Deser"},
            PhotonMassBound{2.0e13, 2.0e-51, "Spavieri-Rodriguez"},
        };
    }();
    return registry;
}

}  // namespace etherdrift::proca
