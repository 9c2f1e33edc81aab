#include "etherdrift/fieldmomentum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <thread>

#include "etherdrift/errors.hpp"
#include "etherdrift/numerics.hpp"
#include "etherdrift/units.hpp"

namespace etherdrift::fieldmomentum {

namespace {

using std::numbers::pi;

constexpr double kSpeedOfLight = units::kSpeedOfLight * 100.0;  // cm/s

struct AxialCell {
    double z;
    double width;  // dz including the sinh-map Jacobian
};

struct Moments {
    Vec3 cross;        // \int E x B
    double parallel;   // \int E . B
};

// Midpoint cells on [z0, z1] uniform in xi with z = scale * sinh(xi).
void append_axial_cells(std::vector<AxialCell>& out, double z0, double z1, double scale, int n) {
    const double xi0 = std::asinh(z0 / scale);
    const double xi1 = std::asinh(z1 / scale);
    const double h = (xi1 - xi0) / n;
    for (int k = 0; k < n; ++k) {
        const double xi = xi0 + (k + 0.5) * h;
        out.push_back({scale * std::sinh(xi), scale * std::cosh(xi) * h});
    }
}

Moments slice(const SolenoidChargeGeometry& g, const Grid& grid, const AxialCell& cell) {
    const double dr = g.radius / grid.radial;
    const double dphi = 2.0 * pi / grid.azimuthal;
    const double z2 = cell.z * cell.z;
    std::vector<Vec3> rings(static_cast<std::size_t>(grid.radial));
    std::vector<double> rings_parallel(rings.size());
    for (int i = 0; i < grid.radial; ++i) {
        const double rho = (i + 0.5) * dr;
        Vec3 ring;
        double ring_parallel = 0.0;
        for (int j = 0; j < grid.azimuthal; ++j) {
            const double phi = (j + 0.5) * dphi;
            const double sx = rho * std::cos(phi) - g.charge_distance;
            const double sy = rho * std::sin(phi);
            const double r2 = sx * sx + sy * sy + z2;
            const double inv_r3 = 1.0 / (r2 * std::sqrt(r2));
            // E x (B z^) = B (E_y, -E_x, 0)
            ring.x += sy * inv_r3;
            ring.y -= sx * inv_r3;
            ring_parallel += cell.z * inv_r3;
        }
        const double w = rho * dr * dphi;
        rings[static_cast<std::size_t>(i)] = ring * w;
        rings_parallel[static_cast<std::size_t>(i)] = ring_parallel * w;
    }
    const double scale = g.charge * g.field * cell.width;
    return {numerics::pairwise_sum<Vec3>(rings) * scale,
            numerics::pairwise_sum<double>(rings_parallel) * scale};
}

struct Quadrature {
    Vec3 truncated;   // |z| <= Lambda
    Vec3 shell;       // Lambda/2 < |z| <= Lambda
    double parallel;
};

Quadrature quadrature(const SolenoidChargeGeometry& g, const Grid& grid, double halflength) {
    const double scale = g.charge_distance;
    const int outer = std::max(1, grid.axial / 4);
    const int inner = std::max(1, grid.axial - 2 * outer);
    std::vector<AxialCell> cells;
    append_axial_cells(cells, -halflength, -0.5 * halflength, scale, outer);
    append_axial_cells(cells, -0.5 * halflength, 0.5 * halflength, scale, inner);
    append_axial_cells(cells, 0.5 * halflength, halflength, scale, outer);

    std::vector<Moments> slices(cells.size());
    const unsigned workers =
        std::clamp(std::thread::hardware_concurrency(), 1u, static_cast<unsigned>(cells.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t k = w; k < cells.size(); k += workers) slices[k] = slice(g, grid, cells[k]);
            });
        }
    }

    std::vector<Vec3> cross(slices.size());
    std::vector<double> parallel(slices.size());
    for (std::size_t k = 0; k < slices.size(); ++k) {
        cross[k] = slices[k].cross;
        parallel[k] = slices[k].parallel;
    }
    const std::span<const Vec3> all(cross);
    const auto n_outer = static_cast<std::size_t>(outer);
    const Vec3 shell = numerics::pairwise_sum<Vec3>(all.first(n_outer)) +
                       numerics::pairwise_sum<Vec3>(all.last(n_outer));
    const Vec3 core = numerics::pairwise_sum<Vec3>(all.subspan(n_outer, cross.size() - 2 * n_outer));
    return {core + shell, shell, numerics::pairwise_sum<double>(parallel)};
}

Grid halved(const Grid& g) {
    return {std::max(1, g.radial / 2), std::max(1, g.azimuthal / 2), std::max(1, g.axial / 2)};
}

struct Evaluation {
    Vec3 momentum;
    double energy;
    double tail;
};

Evaluation evaluate(const SolenoidChargeGeometry& g, const Grid& grid, double halflength) {
    const Quadrature q = quadrature(g, grid, halflength);
    const Vec3 tail = q.shell / 3.0;
    const double prefactor = 1.0 / (4.0 * pi * kSpeedOfLight);
    return {(q.truncated + tail) * prefactor, q.parallel / (4.0 * pi), norm(tail) * prefactor};
}

}  // namespace

double SolenoidChargeGeometry::halflength() const noexcept {
    if (truncation_halflength > 0.0) return truncation_halflength;
    return kDefaultTruncationFactor * std::max(radius, charge_distance);
}

void SolenoidChargeGeometry::validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("a", "solenoid radius must be positive");
    if (!(charge_distance > radius) || !std::isfinite(charge_distance)) {
        throw DomainError("d", "charge must lie outside the solenoid (d > a)");
    }
    if (!std::isfinite(field)) throw DomainError("B", "field must be finite");
    if (!std::isfinite(charge)) throw DomainError("q", "charge must be finite");
    if (!std::isfinite(truncation_halflength)) throw DomainError("lambda", "cutoff must be finite");
    if (grid.radial < 2 || grid.azimuthal < 2 || grid.axial < 2) {
        throw DomainError("grid", "every grid dimension must be >= 2");
    }
}

Vec3 em_momentum_density(const Vec3& electric, const Vec3& magnetic) {
    return cross(electric, magnetic) / (4.0 * pi * kSpeedOfLight);
}

MomentumResult integrate_field_momentum(const SolenoidChargeGeometry& geom) {
    geom.validate();
    const double halflength = geom.halflength();
    const Evaluation fine = evaluate(geom, geom.grid, halflength);
    const Grid coarse_grid = halved(geom.grid);
    const Evaluation coarse = evaluate(geom, coarse_grid, halflength);
    const double change = norm(fine.momentum - coarse.momentum);

    const Grid& g = geom.grid;
    if (std::min({g.radial, g.azimuthal, g.axial}) >= 8) {
        const Evaluation coarsest = evaluate(geom, halved(coarse_grid), halflength);
        const double previous = norm(coarse.momentum - coarsest.momentum);
        if (change > previous && change > 1e-12 * norm(fine.momentum)) {
            throw ConvergenceError("field-momentum quadrature diverges under grid refinement");
        }
    }
    return {fine.momentum, fine.energy, change, fine.tail};
}

Vec3 analytic_solenoid_momentum(const SolenoidChargeGeometry& geom) {
    if (!(geom.charge_distance > geom.radius)) {
        throw DomainError("d", "charge must lie outside the solenoid (d > a)");
    }
    const double a_phi = geom.field * geom.radius * geom.radius / (2.0 * geom.charge_distance);
    return {0.0, geom.charge * a_phi / kSpeedOfLight, 0.0};
}

std::vector<ConvergenceRow> convergence_study(const SolenoidChargeGeometry& geom, int levels) {
    if (levels < 2) throw DomainError("levels", "convergence study needs at least 2 levels");
    geom.validate();
    const double exact = norm(analytic_solenoid_momentum(geom));
    std::vector<ConvergenceRow> rows;
    for (int level = 0; level < levels; ++level) {
        const int shrink = 1 << (levels - 1 - level);
        const Grid grid{std::max(2, geom.grid.radial / shrink), std::max(2, geom.grid.azimuthal / shrink),
                        std::max(2, geom.grid.axial / shrink)};
        const double halflength = geom.halflength() / shrink;
        const Evaluation e = evaluate(geom, grid, halflength);
        const double magnitude = norm(e.momentum);
        const double error = exact > 0.0 ? std::abs(magnitude - exact) / exact : magnitude;
        rows.push_back({halflength, grid, magnitude, error, e.tail});
    }
    return rows;
}

}  // namespace etherdrift::fieldmomentum
