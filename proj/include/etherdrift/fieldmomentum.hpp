#pragma once

// Interaction field momentum P_e = (1/4 pi c) \int E x B d^3x of a point charge
// outside an ideal solenoid, by volume quadrature (Gaussian units).
//
// Geometry: solenoid axis along z through the origin, radius a, uniform
// interior field B z^. Charge q at (d, 0, 0) with d > a. The momentum points
// along +y for q B > 0 and equals (q/c) A(d) with A_phi = B a^2 / (2 d).

#include <vector>

#include "etherdrift/vec3.hpp"

namespace etherdrift::fieldmomentum {

/// Cells per direction of the cylindrical product grid.
struct Grid {
    int radial = 48;
    int azimuthal = 48;
    int axial = 256;

    friend constexpr bool operator==(const Grid&, const Grid&) = default;
};

inline constexpr Grid kReferenceGrid{};
/// Default axial cutoff in units of max(a, d).
inline constexpr double kDefaultTruncationFactor = 50.0;

struct SolenoidChargeGeometry {
    double radius = 1.0;             ///< a, cm
    double field = 100.0;            ///< B, gauss
    double charge_distance = 3.0;    ///< d, cm
    double charge = 1.0;             ///< q, statC
    double truncation_halflength = 0.0;  ///< Lambda, cm; <= 0 selects the default
    Grid grid = kReferenceGrid;

    /// Lambda actually used.
    [[nodiscard]] double halflength() const noexcept;
    /// Throws DomainError naming the offending field.
    void validate() const;
};

struct MomentumResult {
    Vec3 momentum;                ///< P_e, g cm/s (truncated quadrature + tail estimate)
    double interaction_energy = 0.0;  ///< (1/4 pi) \int E . B d^3x, erg
    double estimated_error = 0.0;     ///< |P(grid) - P(grid/2)|
    double tail_estimate = 0.0;       ///< |contribution beyond |z| = Lambda|
};

/// g = E x B / (4 pi c) with E in statV/cm, B in gauss.
[[nodiscard]] Vec3 em_momentum_density(const Vec3& electric, const Vec3& magnetic);

/// Midpoint quadrature over the solenoid interior, |z| <= Lambda. The region
/// Lambda/2 < |z| <= Lambda doubles as a Richardson estimate of the remainder
/// (transverse E decays as |z|^-3, so the remainder is a third of that shell).
/// Throws ConvergenceError when refining the grid increases the change.
[[nodiscard]] MomentumResult integrate_field_momentum(const SolenoidChargeGeometry& geom);

/// (q/c) A at the charge, A_phi = B a^2 / (2 d).
[[nodiscard]] Vec3 analytic_solenoid_momentum(const SolenoidChargeGeometry& geom);

struct ConvergenceRow {
    double halflength = 0.0;
    Grid grid;
    double magnitude = 0.0;
    double relative_error = 0.0;  ///< vs the analytic result
    double tail_estimate = 0.0;
};

/// Runs `levels` refinements ending at `geom`; each coarser level halves
/// Lambda and every grid dimension.
[[nodiscard]] std::vector<ConvergenceRow> convergence_study(const SolenoidChargeGeometry& geom,
                                                            int levels);

}  // namespace etherdrift::fieldmomentum
