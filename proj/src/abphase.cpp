#include "etherdrift/abphase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "etherdrift/errors.hpp"
#include "etherdrift/numerics.hpp"

namespace etherdrift::abphase {

namespace {

using units::kSpeedOfLight;

constexpr double kRelativeTolerance = 1e-10;
constexpr std::size_t kMaxSubdivisions = std::size_t{1} << 24;

Vec3 unit(const Vec3& v) {
    const double len = norm(v);
    if (!(len > 0.0)) throw DomainError("axis", "flux-line axis must be non-zero");
    return v / len;
}

Vec3 perpendicular_offset(const SolenoidVectorPotential& s, const Vec3& axis, const Vec3& x) {
    const Vec3 r = x - s.point;
    return r - dot(r, axis) * axis;
}

// Closest approach of segment [a, b] to the flux line.
double distance_to_axis(const SolenoidVectorPotential& s, const Vec3& a, const Vec3& b) {
    const Vec3 axis = unit(s.axis);
    const Vec3 pa = perpendicular_offset(s, axis, a);
    const Vec3 d = perpendicular_offset(s, axis, b) - pa;
    const double dd = dot(d, d);
    double t = dd > 0.0 ? -dot(pa, d) / dd : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return norm(pa + t * d);
}

struct Estimate {
    double value;
    double magnitude;  // midpoint estimate of \int |Q . dx|
};

Estimate midpoint(const InteractionField& field, const Vec3& a, const Vec3& delta, std::size_t n) {
    const double h = 1.0 / static_cast<double>(n);
    const Vec3 step = delta * h;
    std::vector<double> terms(n);
    double magnitude = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const Vec3 x = a + delta * ((static_cast<double>(k) + 0.5) * h);
        const double term = dot(evaluate(field, x), step);
        terms[k] = term;
        magnitude += std::abs(term);
    }
    return {numerics::pairwise_sum<double>(terms), magnitude};
}

double segment_phase(const InteractionField& field, const Vec3& a, const Vec3& b) {
    if (const auto* s = std::get_if<SolenoidVectorPotential>(&field)) {
        if (distance_to_axis(*s, a, b) <= 1e-12 * std::max(norm(b - a), 1.0)) {
            throw SingularityError("path crosses the flux-line axis");
        }
    }
    const Vec3 delta = b - a;
    Estimate coarse = midpoint(field, a, delta, 1);
    for (std::size_t n = 2; n <= kMaxSubdivisions; n *= 2) {
        const Estimate fine = midpoint(field, a, delta, n);
        const double scale = std::max(std::abs(fine.value), fine.magnitude);
        if (scale == 0.0 || std::abs(fine.value - coarse.value) < kRelativeTolerance * scale) {
            return fine.value;
        }
        coarse = fine;
    }
    throw ConvergenceError("segment phase integral did not reach 1e-10 relative change");
}

}  // namespace

double ab_coupling(units::UnitSystem system, const units::PhysicalConstants& k) {
    if (system == units::UnitSystem::SI) return k.e / k.hbar;
    return k.e_esu() / (k.hbar_cgs() * k.c_cgs());
}

Path::Path(std::vector<Vec3> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw InputError("path needs at least 2 vertices");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!is_finite(vertices_[i])) {
            throw InputError("path vertex " + std::to_string(i) + " is not finite");
        }
        if (i > 0 && vertices_[i] == vertices_[i - 1]) {
            throw InputError("path vertices " + std::to_string(i - 1) + " and " +
                             std::to_string(i) + " coincide");
        }
    }
}

Path Path::closed(std::vector<Vec3> vertices) {
    if (!vertices.empty()) vertices.push_back(vertices.front());
    return Path(std::move(vertices));
}

double Path::length() const noexcept {
    double total = 0.0;
    for (std::size_t i = 1; i < vertices_.size(); ++i) total += norm(vertices_[i] - vertices_[i - 1]);
    return total;
}

Path Path::reversed() const { return Path(std::vector<Vec3>(vertices_.rbegin(), vertices_.rend())); }

Path Path::concatenate(const Path& head, const Path& tail) {
    if (!(head.vertices_.back() == tail.vertices_.front())) {
        throw InputError("paths do not share an endpoint");
    }
    std::vector<Vec3> joined = head.vertices_;
    joined.insert(joined.end(), tail.vertices_.begin() + 1, tail.vertices_.end());
    return Path(std::move(joined));
}

Vec3 fresnel_momentum(double omega, double n, const Vec3& u) {
    if (!(n >= 1.0)) throw DomainError("n", "refractive index must be >= 1");
    if (!(omega > 0.0)) throw DomainError("omega", "angular frequency must be positive");
    return u * (-(omega / (kSpeedOfLight * kSpeedOfLight)) * (n * n - 1.0));
}

Vec3 evaluate(const InteractionField& field, const Vec3& x) {
    return std::visit(
        [&x](const auto& f) -> Vec3 {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, UniformQ>) {
                return f.q;
            } else if constexpr (std::is_same_v<T, FresnelFlow>) {
                return fresnel_momentum(f.omega, f.n, f.u);
            } else {
                const Vec3 axis = unit(f.axis);
                const Vec3 r_perp = perpendicular_offset(f, axis, x);
                const double rho2 = dot(r_perp, r_perp);
                if (!(rho2 > 0.0)) throw SingularityError("field evaluated on the flux-line axis");
                return cross(axis, r_perp) * (f.coupling * f.flux / (2.0 * std::numbers::pi * rho2));
            }
        },
        field);
}

double phase_line_integral(const InteractionField& field, const Path& path) {
    const auto v = path.vertices();
    std::vector<double> segments(path.segment_count());
    for (std::size_t i = 0; i < segments.size(); ++i) segments[i] = segment_phase(field, v[i], v[i + 1]);
    return numerics::pairwise_sum<double>(segments);
}

double scalar_phase(std::span<const double> potential_samples, double dt, double charge,
                    const units::PhysicalConstants& k) {
    if (potential_samples.size() < 2) throw InputError("scalar phase needs at least 2 samples");
    if (!(dt > 0.0)) throw DomainError("dt", "sample spacing must be positive");
    return charge / k.hbar * numerics::trapezoid(potential_samples, dt);
}

double magnetic_ab_phase(double vector_potential, double path_length, double charge_esu,
                         const units::PhysicalConstants& k) {
    if (!(path_length > 0.0)) throw DomainError("L", "path length must be positive");
    return charge_esu * vector_potential * path_length / (k.c_cgs() * k.hbar_cgs());
}

double interference_intensity(double phi1, double phi2, double amplitude) {
    if (!(amplitude >= 0.0)) throw DomainError("amplitude", "amplitude must be >= 0");
    return 2.0 * amplitude * amplitude * (1.0 + std::cos(phi1 - phi2));
}

}  // namespace etherdrift::abphase
