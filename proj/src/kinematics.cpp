#include "etherdrift/kinematics.hpp"

#include <cmath>

#include "etherdrift/errors.hpp"
#include "etherdrift/units.hpp"

namespace etherdrift::kinematics {

namespace {

using units::kSpeedOfLight;

void require_index(double n) {
    if (!(n >= 1.0) || !std::isfinite(n)) {
        throw DomainError("n", "refractive index must be >= 1");
    }
}

void require_subluminal(double u) {
    if (!(std::abs(u) < kSpeedOfLight)) {
        throw DomainError("u", "speed must satisfy |u| < c");
    }
}

void require_effectiveness(double e_f) {
    if (!(e_f >= 0.0 && e_f <= 1.0)) {
        throw DomainError("e_f", "drag effectiveness must lie in [0, 1]");
    }
}

}  // namespace

MediumSpec MediumSpec::make(double n, double drag_effectiveness) {
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw DomainError("n", "refractive index must be positive");
    }
    require_effectiveness(drag_effectiveness);
    return {n, drag_effectiveness};
}

double FlowState::along(const Vec3& axis) const {
    require_subluminal(norm(velocity));
    const double len = norm(axis);
    if (!(len > 0.0)) throw DomainError("axis", "optical axis must be non-zero");
    return dot(velocity, axis) / len;
}

double fresnel_drag_coefficient(double n) {
    require_index(n);
    return 1.0 - 1.0 / (n * n);
}

double fresnel_speed(double n, double u) {
    const double drag = fresnel_drag_coefficient(n);
    require_subluminal(u);
    return kSpeedOfLight / n + drag * u;
}

double effective_fresnel_speed(double n, double u, double drag_effectiveness) {
    const double drag = fresnel_drag_coefficient(n);
    require_subluminal(u);
    require_effectiveness(drag_effectiveness);
    return kSpeedOfLight / n + drag_effectiveness * drag * u;
}

double medium_speed(const MediumSpec& medium, double u) {
    require_subluminal(u);
    require_effectiveness(medium.drag_effectiveness);
    const double n = medium.n;
    return kSpeedOfLight / n + medium.drag_effectiveness * (1.0 - 1.0 / (n * n)) * u;
}

DragEstimate drag_effectiveness_estimate(double number_factor, double a_over_r_cubed) {
    if (!(number_factor >= 0.0)) throw DomainError("number_factor", "must be >= 0");
    if (!(a_over_r_cubed >= 0.0)) throw DomainError("a_over_r_cubed", "must be >= 0");
    const double raw = number_factor * a_over_r_cubed * kDragGeometryFactor;
    if (raw > 1.0) return {1.0, true};
    return {raw, false};
}

double einstein_subtract(double v, double u) {
    require_subluminal(u);
    return (v - u) / (1.0 - u * v / (kSpeedOfLight * kSpeedOfLight));
}

double tangherlini_subtract(double v, double u) {
    require_subluminal(u);
    const double beta = u / kSpeedOfLight;
    return (v - u) / (1.0 - beta * beta);
}

double compose(Composition law, double v, double u) {
    return law == Composition::Einstein ? einstein_subtract(v, u) : tangherlini_subtract(v, u);
}

double einstein_composed_speed(double n, double u) {
    require_index(n);
    require_subluminal(u);
    return (kSpeedOfLight / n - u) / (1.0 - u / (kSpeedOfLight * n));
}

double tangherlini_composed_speed(double n, double u) {
    require_index(n);
    return tangherlini_subtract(kSpeedOfLight / n, u);
}

}  // namespace etherdrift::kinematics
