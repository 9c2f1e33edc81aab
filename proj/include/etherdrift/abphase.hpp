#pragma once

// Interaction-momentum fields Q(x) and the phases they imprint on a wave,
// psi = exp(i \int Q . dx) psi_0. Phases are returned unwrapped.

#include <span>
#include <variant>
#include <vector>

#include "etherdrift/units.hpp"
#include "etherdrift/vec3.hpp"

namespace etherdrift::abphase {

/// Spatially constant Q (phase per unit length, 1/m).
struct UniformQ {
    Vec3 q;
};

/// Fresnel-Fizeau momentum of light of angular frequency omega in a medium
/// of index n moving with velocity u.
struct FresnelFlow {
    double omega = 0.0;  ///< rad/s
    double n = 1.0;
    Vec3 u;              ///< m/s
};

/// Ideal zero-radius flux line (Coulomb gauge), A_phi = flux / (2 pi rho).
/// `coupling` converts A . dx into phase: e/hbar (rad/Wb) in SI.
struct SolenoidVectorPotential {
    double flux = 0.0;                 ///< Wb
    Vec3 point;                        ///< a point on the axis, m
    Vec3 axis{0.0, 0.0, 1.0};          ///< axis direction (normalized internally)
    double coupling = units::kElementaryCharge / units::kReducedPlanck;
};

using InteractionField = std::variant<UniformQ, FresnelFlow, SolenoidVectorPotential>;

/// Phase per unit flux for a charge e: e/hbar (SI, rad/Wb) or e/(hbar c)
/// (Gaussian, rad/Mx).
[[nodiscard]] double ab_coupling(units::UnitSystem system,
                                 const units::PhysicalConstants& k = units::constants());

/// Polyline contour, at least two vertices, no repeated consecutive vertex.
class Path {
public:
    explicit Path(std::vector<Vec3> vertices);

    /// Closed polygon: repeats the first vertex at the end.
    static Path closed(std::vector<Vec3> vertices);

    [[nodiscard]] std::span<const Vec3> vertices() const noexcept { return vertices_; }
    [[nodiscard]] std::size_t segment_count() const noexcept { return vertices_.size() - 1; }
    [[nodiscard]] double length() const noexcept;
    [[nodiscard]] Path reversed() const;
    /// Joins two paths sharing an endpoint (`head`'s end is `tail`'s start).
    [[nodiscard]] static Path concatenate(const Path& head, const Path& tail);

private:
    std::vector<Vec3> vertices_;
};

[[nodiscard]] Vec3 fresnel_momentum(double omega, double n, const Vec3& u);

/// Q at a point. Throws SingularityError on the flux-line axis.
[[nodiscard]] Vec3 evaluate(const InteractionField& field, const Vec3& x);

/// \int Q . dx along the path. Each segment uses the midpoint rule, doubling
/// the subdivision until successive estimates differ by < 1e-10 relative.
[[nodiscard]] double phase_line_integral(const InteractionField& field, const Path& path);

/// (e/hbar) \int V dt by the trapezoid rule; SI (volts, seconds, coulombs).
[[nodiscard]] double scalar_phase(std::span<const double> potential_samples, double dt,
                                  double charge,
                                  const units::PhysicalConstants& k = units::constants());

/// e A L / (c hbar), Gaussian: A in G cm, L in cm, charge in statC.
[[nodiscard]] double magnetic_ab_phase(double vector_potential, double path_length,
                                       double charge_esu,
                                       const units::PhysicalConstants& k = units::constants());

/// |A e^{i phi1} + A e^{i phi2}|^2 = 2 A^2 (1 + cos(phi1 - phi2)).
[[nodiscard]] double interference_intensity(double phi1, double phi2, double amplitude);

}  // namespace etherdrift::abphase
