#pragma once

/**
 * @file proca.hpp
 * @brief Massive-photon electrostatics for the scalar Aharonov-Bohm cylinder.
 *
 * Inside a conducting cylinder of radius R held at potential V the Proca
 * potential obeys (nabla^2 - m^2) Phi = 0, whose solution regular on the axis
 * is Phi(rho) = V I0(m rho) / I0(m R). A beam crossing the cylinder during tau
 * picks up a mass-dependent phase on top of the standard e V tau / hbar.
 *
 * Units: SI throughout (m, V, s, C); photon mass parameters `m_gamma` are
 * inverse lengths in 1/m. Compton ranges in bounds are reported in cm and
 * masses in g, matching the usual tabulation of photon-mass limits.
 */

#include <span>
#include <string>

#include "etherdrift/units.hpp"

namespace etherdrift::proca {

/// Scalar-AB cylinder experiment.
struct ProcaCylinderConfig {
    double radius = 0.27;              ///< R, m
    double potential = 1.0e7;          ///< V, volts
    double interaction_time = 5.0e-2;  ///< tau, s
    double beam_radius = 0.0;          ///< rho, m
    double phase_resolution = 1.0e-4;  ///< epsilon, rad

    /// Requires 0 <= rho <= R and positive R, tau, epsilon.
    void validate() const;
};

struct PhotonMassBound {
    double range_cm = 0.0;  ///< m_gamma^-1
    double mass_g = 0.0;    ///< m_ph
    std::string source;
};

/// Coefficient of m^2 (rho^2 - R^2) in the two-term potential expansion.
///  Quarter: 1/4, the leading term of I0(m rho)/I0(m R); also the coefficient
///           of the mass phase correction used for bounds.
///  Half:    1/2, the alternative normalization of the printed expansion.
enum class ExpansionCoefficient { Quarter, Half };

[[nodiscard]] double coefficient_value(ExpansionCoefficient c) noexcept;

/// e^{-m r} / r, with r and m in reciprocal units.
[[nodiscard]] double yukawa_potential(double r, double m_gamma);

/// Largest argument accepted by bessel_I0 (I0(700) ~ 1.5e302).
inline constexpr double kBesselI0MaxArgument = 700.0;
/// Largest argument accepted by bessel_K0; the small-argument series loses
/// about log10(I0(x)/K0(x)) digits to cancellation beyond this.
inline constexpr double kBesselK0MaxArgument = 8.0;

/// Power series sum_k (x^2/4)^k / (k!)^2. Throws OverflowError past the max.
[[nodiscard]] double bessel_I0(double x);
/// Small-argument series with the Euler-Mascheroni constant; x in (0, 8].
[[nodiscard]] double bessel_K0(double x);

/// V I0(m rho) / I0(m R) for 0 <= rho <= R.
[[nodiscard]] double cylinder_potential_exact(double rho, const ProcaCylinderConfig& cfg,
                                              double m_gamma);
/// V [1 + coeff m^2 (rho^2 - R^2)] for 0 <= rho <= R.
[[nodiscard]] double cylinder_potential_expansion(
    double rho, const ProcaCylinderConfig& cfg, double m_gamma,
    ExpansionCoefficient coeff = ExpansionCoefficient::Quarter);

/// (1/hbar) \int e [V1(t) - V2(t)] dt for two equally sampled series.
[[nodiscard]] double relative_scalar_phase(std::span<const double> v1, std::span<const double> v2,
                                           double dt, double charge,
                                           const units::PhysicalConstants& k = units::constants());

/// -coeff e m^2 (rho^2 - R^2) V tau / hbar (one beam inside, one outside).
[[nodiscard]] double mass_phase_correction(
    const ProcaCylinderConfig& cfg, double m_gamma, double charge,
    const units::PhysicalConstants& k = units::constants(),
    ExpansionCoefficient coeff = ExpansionCoefficient::Quarter);

/// Compton range (cm) at which the beam on the axis just resolves epsilon:
/// (R/2) sqrt(pi V tau / (epsilon h/2e)).
[[nodiscard]] double invert_bound(const ProcaCylinderConfig& cfg,
                                  const units::PhysicalConstants& k = units::constants());

/// Range-mass pair with the mass computed from the range.
[[nodiscard]] PhotonMassBound bound_from_range(double range_cm, std::string source,
                                               const units::PhysicalConstants& k = units::constants());

/// tau = L / v.
[[nodiscard]] double time_of_flight(double length, double speed);

/// Rescales a bound for an interaction time tau_scale times longer: the range
/// grows as sqrt(tau_scale), the mass shrinks by the same factor.
[[nodiscard]] PhotonMassBound projected_bound(const PhotonMassBound& base, double tau_scale);

/// Published limits, as quoted (rounded) range-mass pairs.
[[nodiscard]] std::span<const PhotonMassBound> bounds_registry();

}  // namespace etherdrift::proca
