#pragma once

// Light speeds in moving refractive media.
//
// All speeds are SI (m/s). `u` is the signed speed of the laboratory (with
// the medium at rest in it) relative to the preferred frame, projected on the
// optical axis; positive u means the laboratory moves along the direction of
// light propagation, so the first-order lab-frame speed is c/n - u(...).

#include "etherdrift/vec3.hpp"

namespace etherdrift::kinematics {

enum class Composition { Einstein, Tangherlini };

/// Refractive index plus drag effectiveness of a transparent medium.
struct MediumSpec {
    double n = 1.0;
    double drag_effectiveness = 1.0;

    /// Accepts any n > 0; `below_unity()` flags exploratory n < 1 media.
    static MediumSpec make(double n, double drag_effectiveness = 1.0);

    [[nodiscard]] bool below_unity() const noexcept { return n < 1.0; }
};

/// Medium or laboratory velocity relative to the preferred frame.
struct FlowState {
    Vec3 velocity;

    /// Signed component along `axis` (need not be normalized). Throws
    /// DomainError when the full speed reaches c.
    [[nodiscard]] double along(const Vec3& axis) const;
};

[[nodiscard]] double fresnel_drag_coefficient(double n);
[[nodiscard]] double fresnel_speed(double n, double u);
[[nodiscard]] double effective_fresnel_speed(double n, double u, double drag_effectiveness);

/// Preferred-frame speed for a medium, allowing exploratory n < 1.
[[nodiscard]] double medium_speed(const MediumSpec& medium, double u);

inline constexpr double kDragGeometryFactor = 22.9;
/// Reference e_f for air at room temperature.
inline constexpr double kAirDragEffectiveness = 6.1e-3;

struct DragEstimate {
    double value = 0.0;
    bool clamped = false;
};

/// e_f = number_factor * (a/R)^3 * 22.9, saturated at 1.
[[nodiscard]] DragEstimate drag_effectiveness_estimate(double number_factor,
                                                       double a_over_r_cubed);

/// Lab-frame speed of a signal moving at `v` in the preferred frame.
[[nodiscard]] double einstein_subtract(double v, double u);
[[nodiscard]] double tangherlini_subtract(double v, double u);
[[nodiscard]] double compose(Composition law, double v, double u);

/// (c/n - u) / (1 - u/(c n))
[[nodiscard]] double einstein_composed_speed(double n, double u);
/// (c/n - u) / (1 - u^2/c^2)
[[nodiscard]] double tangherlini_composed_speed(double n, double u);

}  // namespace etherdrift::kinematics
