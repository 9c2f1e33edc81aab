#pragma once

/**
 * @file interferometer.hpp
 * @brief First-order ether-drift interferometer with two colinear arms A->B.
 *
 * Both arms span the same segment, so a single orientation angle applies to
 * both. The preferred-frame velocity is projected on the optical axis as
 * u_eff = u cos(theta); theta = 180 deg is the u -> -u configuration.
 *
 * Each arm's medium moves with the laboratory. Its preferred-frame light speed
 * is c/n + e_f (1 - 1/n^2) u_eff, which is then transformed to the laboratory
 * frame with the selected composition law. Delays are one-way (no mirrors).
 */

#include <cstddef>
#include <vector>

#include "etherdrift/kinematics.hpp"

namespace etherdrift::interferometer {

using kinematics::Composition;

/// Orientation, stored in degrees so quadrant angles have exact cosines.
class Angle {
public:
    static constexpr Angle degrees(double deg) noexcept { return Angle(deg); }
    static Angle radians(double rad) noexcept;

    [[nodiscard]] constexpr double deg() const noexcept { return degrees_; }
    [[nodiscard]] double rad() const noexcept;
    [[nodiscard]] double cos() const noexcept;

private:
    constexpr explicit Angle(double deg) noexcept : degrees_(deg) {}
    double degrees_;
};

struct InterferometerConfig {
    double arm_length = 1.0;          ///< m
    double n1 = 1.0;
    double n2 = 1.0;
    double drag_effectiveness = 0.0;  ///< applied to both media
    double u = 0.0;                   ///< preferred-frame speed, m/s
    double wavelength = 633e-9;       ///< vacuum wavelength, m
    Composition composition = Composition::Tangherlini;

    /// Throws DomainError naming the offending field.
    void validate() const;
};

enum class Arm { One, Two };

[[nodiscard]] double arm_speed(const InterferometerConfig& cfg, Arm arm, Angle theta);

/// L (1/w1 - 1/w2); positive when arm 1 is slower.
[[nodiscard]] double delay_exact(const InterferometerConfig& cfg, Angle theta);

/// (L/c) [(n1 - n2) + (u_eff/c)(1 - e_f)(n1^2 - n2^2)]. For e_f = 0 this is
/// (L/c)(n1 - n2)[1 + (u_eff/c)(n1 + n2)].
[[nodiscard]] double delay_first_order(const InterferometerConfig& cfg, Angle theta);

struct RotationSignal {
    double exact = 0.0;        ///< delay_exact(0) - delay_exact(180)
    double first_order = 0.0;  ///< 2 (u/c)(1 - e_f)(n1^2 - n2^2) L/c
};

[[nodiscard]] RotationSignal rotation_signal(const InterferometerConfig& cfg);

/// Fringes (optical cycles) for a time difference: c dt / lambda.
[[nodiscard]] double fringe_shift(double delta_t, double wavelength);

/// Smallest |u| whose 0/180 deg rotation signal reaches `fringe_resolution`
/// fringes, from the first-order signal.
[[nodiscard]] double min_detectable_u(const InterferometerConfig& cfg, double fringe_resolution);

/// (c/u)(n1^2 - n2^2): gain of a first-order test over a second-order one.
[[nodiscard]] double improvement_factor(double u, double n1, double n2);

struct ScanRow {
    double theta_deg = 0.0;
    double delay_exact = 0.0;
    double delay_first_order = 0.0;
    double fringes = 0.0;  ///< fringe_shift(delay_exact)
};

/// `steps` orientations uniformly spaced over [0, 360) degrees.
[[nodiscard]] std::vector<ScanRow> angle_scan(const InterferometerConfig& cfg, std::size_t steps);

}  // namespace etherdrift::interferometer
