#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "etherdrift/abphase.hpp"
#include "etherdrift/errors.hpp"
#include "oracles.hpp"

using namespace etherdrift;
using namespace etherdrift::abphase;
using oracle::Real;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Signed angle swept around the z axis by a polyline; the line integral of
// A_phi = flux/(2 pi rho) along a straight segment is flux/(2 pi) times it.
double swept_angle(const std::vector<Vec3>& v) {
    double total = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double cross_z = v[i - 1].x * v[i].y - v[i - 1].y * v[i].x;
        const double dot_xy = v[i - 1].x * v[i].x + v[i - 1].y * v[i].y;
        total += std::atan2(cross_z, dot_xy);
    }
    return total;
}

std::vector<Vec3> polygon(int sides, double radius, double phase0, double z = 0.0) {
    std::vector<Vec3> v;
    for (int k = 0; k < sides; ++k) {
        const double t = phase0 + kTwoPi * k / sides;
        v.push_back({radius * std::cos(t), radius * std::sin(t), z});
    }
    return v;
}

SolenoidVectorPotential flux_line(double flux) {
    SolenoidVectorPotential s;
    s.flux = flux;
    return s;
}

}  // namespace

TEST_SUITE("abphase") {

TEST_CASE("path construction") {
    CHECK_THROWS_AS(Path({Vec3{}}), InputError);
    CHECK_THROWS_AS(Path({Vec3{}, Vec3{}}), InputError);
    CHECK_THROWS_AS(Path({Vec3{}, Vec3{std::nan(""), 0.0, 0.0}}), InputError);
    const Path p({{0, 0, 0}, {3, 4, 0}, {3, 4, 12}});
    CHECK(p.segment_count() == 2);
    CHECK(p.length() == doctest::Approx(17.0));
    CHECK(p.reversed().vertices().front() == Vec3{3, 4, 12});
    const auto loop = Path::closed({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}});
    CHECK(loop.segment_count() == 3);
    CHECK(loop.vertices().back() == loop.vertices().front());
    CHECK_THROWS_AS((void)Path::concatenate(p, Path({{9, 9, 9}, {1, 1, 1}})), InputError);
}

TEST_CASE("uniform field") {
    const InteractionField q = UniformQ{{2.5, 0.0, 0.0}};
    CHECK(phase_line_integral(q, Path({{0, 0, 0}, {4, 0, 0}})) == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(phase_line_integral(q, Path({{0, 0, 0}, {0, 4, 0}})) == 0.0);
    CHECK(phase_line_integral(q, Path::closed({{0, 0, 0}, {1, 0, 0}, {1, 2, 3}})) ==
          doctest::Approx(0.0).scale(1e-12));
}

TEST_CASE("Fresnel flow momentum") {
    CHECK(fresnel_momentum(3e15, 1.0, {10, 0, 0}) == Vec3{});
    CHECK(fresnel_momentum(3e15, 1.33, {0, 0, 0}) == Vec3{});

    const Real omega = 2 * oracle::pi * oracle::c / Real{633e-9};
    const Real n{1.33};
    const double expected = oracle::to_double(-(omega / (oracle::c * oracle::c)) * (n * n - 1) * 10);
    const auto q = fresnel_momentum(oracle::to_double(omega), 1.33, {10, 0, 0});
    CHECK(q.x == doctest::Approx(expected).epsilon(1e-14));
    CHECK(q.y == 0.0);
    CHECK(q.z == 0.0);

    oracle::Sampler rng(0xab1);
    for (int i = 0; i < 100; ++i) {
        const Vec3 u{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const auto qv = fresnel_momentum(1e15, rng.uniform(1.01, 2.0), u);
        CHECK(dot(qv, u) / (norm(qv) * norm(u)) == doctest::Approx(-1.0).epsilon(1e-12));
    }

    const InteractionField vacuum = FresnelFlow{3e15, 1.0, {10, 20, 30}};
    CHECK(phase_line_integral(vacuum, Path({{0, 0, 0}, {1, 2, 3}, {-5, 0, 1}})) == 0.0);
    CHECK(evaluate(vacuum, {1, 1, 1}) == Vec3{});
}

TEST_CASE("flow phase along the flow") {
    const InteractionField flow = FresnelFlow{3e15, 1.5, {0, 0, 5}};
    const auto q = fresnel_momentum(3e15, 1.5, {0, 0, 5});
    CHECK(phase_line_integral(flow, Path({{0, 0, 0}, {0, 0, 2}})) == doctest::Approx(2.0 * q.z).epsilon(1e-14));
}

TEST_CASE("coupling constants") {
    const auto& k = units::constants();
    CHECK(ab_coupling(units::UnitSystem::SI) == doctest::Approx(k.e / k.hbar).epsilon(1e-15));
    CHECK(ab_coupling(units::UnitSystem::Gaussian) ==
          doctest::Approx(k.e_esu() / (k.hbar_cgs() * k.c_cgs())).epsilon(1e-15));
    // one SI flux quantum is 1e8 maxwell; both couplings give pi for it
    CHECK(ab_coupling(units::UnitSystem::SI) * k.flux_quantum == doctest::Approx(std::numbers::pi).epsilon(1e-14));
    CHECK(ab_coupling(units::UnitSystem::Gaussian) * k.flux_quantum * 1e8 ==
          doctest::Approx(std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("solenoid field") {
    const InteractionField s = flux_line(kTwoPi);
    const auto coupling = flux_line(0.0).coupling;
    const auto q = evaluate(s, {2, 0, 5});
    CHECK(q.x == doctest::Approx(0.0));
    CHECK(q.y == doctest::Approx(coupling * 0.5).epsilon(1e-15));
    CHECK(q.z == 0.0);
    CHECK_THROWS_AS((void)evaluate(s, {0, 0, 3}), SingularityError);
    CHECK_THROWS_AS((void)phase_line_integral(s, Path({{-1, 0, 0}, {1, 0, 0}})), SingularityError);

    // divergence-free: central difference of the Q field away from the axis
    const double h = 1e-5;
    const Vec3 x{0.7, -0.4, 0.1};
    const double div = (evaluate(s, x + Vec3{h, 0, 0}).x - evaluate(s, x - Vec3{h, 0, 0}).x +
                        evaluate(s, x + Vec3{0, h, 0}).y - evaluate(s, x - Vec3{0, h, 0}).y) /
                       (2.0 * h);
    CHECK(std::abs(div) <= 1e-6 * norm(evaluate(s, x)));
}

TEST_CASE("closed loops around the flux line pick up the enclosed flux") {
    const auto& k = units::constants();
    const auto field = flux_line(k.flux_quantum);
    const double expected = field.coupling * k.flux_quantum;

    const auto square = Path::closed({{-1, -1, 0}, {1, -1, 0}, {1, 1, 0}, {-1, 1, 0}});
    const auto circle = Path::closed(polygon(64, 0.3, 0.1, 2.0));
    const auto wedge = Path::closed({{0.2, -0.1, 0}, {3, 0.5, 1}, {-2, 4, -1}, {-0.5, -3, 0.5}});
    for (const auto& loop : {square, circle, wedge}) {
        CHECK(phase_line_integral(field, loop) == doctest::Approx(expected).epsilon(1e-8));
        CHECK(phase_line_integral(field, loop.reversed()) == doctest::Approx(-expected).epsilon(1e-8));
    }
    CHECK(expected == doctest::Approx(std::numbers::pi).epsilon(1e-14));

    const auto outside = Path::closed({{2, 2, 0}, {3, 2, 0}, {3, 3, 0}});
    CHECK(std::abs(phase_line_integral(field, outside)) <= 1e-8 * expected);

    auto twice = polygon(12, 1.0, 0.0);
    auto second = polygon(12, 2.0, 0.05);
    twice.push_back(twice.front());
    twice.insert(twice.end(), second.begin(), second.end());
    twice.push_back(second.front());
    twice.push_back(twice.front());
    CHECK(phase_line_integral(field, Path(twice)) == doctest::Approx(2.0 * expected).epsilon(1e-8));
}

TEST_CASE("open paths match the swept-angle oracle") {
    const auto field = flux_line(3.3e-15);
    oracle::Sampler rng(0xab2);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Vec3> v;
        for (int i = 0; i < 5; ++i) v.push_back({rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-1, 1)});
        bool near_axis = false;
        for (std::size_t i = 1; i < v.size(); ++i) {
            const Vec3 d = v[i] - v[i - 1];
            const double t = std::clamp(-(v[i - 1].x * d.x + v[i - 1].y * d.y) / (d.x * d.x + d.y * d.y), 0.0, 1.0);
            const Vec3 p = v[i - 1] + d * t;
            near_axis = near_axis || std::hypot(p.x, p.y) < 0.05;
        }
        if (near_axis) continue;
        const double expected = field.coupling * field.flux / kTwoPi * swept_angle(v);
        CHECK(phase_line_integral(field, Path(v)) == doctest::Approx(expected).epsilon(1e-9).scale(1e-6));
    }
}

TEST_CASE("two half paths differ by the enclosed phase") {
    const auto field = flux_line(1e-15);
    const Path upper({{-1, 0, 0}, {-1, 1, 0}, {1, 1, 0}, {1, 0, 0}});
    const Path lower({{-1, 0, 0}, {-1, -1, 0}, {1, -1, 0}, {1, 0, 0}});
    const double diff = phase_line_integral(field, lower) - phase_line_integral(field, upper);
    CHECK(diff == doctest::Approx(field.coupling * field.flux).epsilon(1e-9));
}

TEST_CASE("additivity and reversal") {
    oracle::Sampler rng(0xab3);
    const InteractionField fields[] = {
        UniformQ{{1.0, -2.0, 0.5}},
        FresnelFlow{2e15, 1.3, {3, 1, -2}},
        flux_line(2e-15),
    };
    for (const auto& field : fields) {
        for (int i = 0; i < 10; ++i) {
            const Vec3 a{rng.uniform(1, 3), rng.uniform(1, 3), 0};
            const Vec3 b{rng.uniform(1, 3), rng.uniform(-3, -1), 1};
            const Vec3 c{rng.uniform(-3, -1), rng.uniform(-3, 3), -1};
            const Path head({a, b});
            const Path tail({b, c});
            const auto joined = Path::concatenate(head, tail);
            CHECK(joined.segment_count() == 2);
            const double sum = phase_line_integral(field, head) + phase_line_integral(field, tail);
            CHECK(phase_line_integral(field, joined) == doctest::Approx(sum).epsilon(1e-12));
            CHECK(phase_line_integral(field, joined.reversed()) ==
                  doctest::Approx(-phase_line_integral(field, joined)).epsilon(1e-12));
        }
    }
}

TEST_CASE("scalar phase") {
    const auto& k = units::constants();
    const std::vector<double> zero(10, 0.0);
    CHECK(scalar_phase(zero, 1e-3, k.e) == 0.0);
    CHECK_THROWS_AS((void)scalar_phase(std::vector<double>{1.0}, 1e-3, k.e), InputError);

    const double expected_ms = oracle::to_double(oracle::charge * Real{"1e-6"} * Real{"1e-3"} / oracle::hbar);
    const std::vector<double> one_uv(11, 1e-6);
    CHECK(scalar_phase(one_uv, 1e-4, k.e) == doctest::Approx(expected_ms).epsilon(1e-13));
    CHECK(scalar_phase(one_uv, 1e-4, k.e) == doctest::Approx(1.519267e6).epsilon(1e-6));
    const std::vector<double> pair(2, 1e-6);
    CHECK(scalar_phase(pair, 1e-9, k.e) == doctest::Approx(1.519).epsilon(1e-3));

    // trapezoid is exact for a linear ramp
    std::vector<double> ramp;
    for (int i = 0; i <= 100; ++i) ramp.push_back(2.0 * i / 100.0);
    CHECK(scalar_phase(ramp, 0.01, k.e) == doctest::Approx(k.e / k.hbar).epsilon(1e-13));
}

TEST_CASE("magnetic AB phase") {
    const auto& k = units::constants();
    const double e = k.e_esu();
    CHECK(magnetic_ab_phase(0.0, 2.0, e) == 0.0);
    CHECK(magnetic_ab_phase(3.0, 4.0, e) == doctest::Approx(2.0 * magnetic_ab_phase(3.0, 2.0, e)).epsilon(1e-15));
    const double coupling = e / (k.c_cgs() * k.hbar_cgs());
    const InteractionField q = UniformQ{{coupling * 3.0, 0, 0}};
    CHECK(magnetic_ab_phase(3.0, 2.0, e) ==
          doctest::Approx(phase_line_integral(q, Path({{0, 0, 0}, {2, 0, 0}}))).epsilon(1e-14));
    CHECK_THROWS_AS((void)magnetic_ab_phase(1.0, 0.0, e), DomainError);
}

TEST_CASE("interference intensity") {
    CHECK(interference_intensity(0.3, 0.3, 2.0) == doctest::Approx(16.0));
    CHECK(interference_intensity(std::numbers::pi, 0.0, 2.0) == doctest::Approx(0.0).scale(1e-12));
    CHECK(interference_intensity(std::numbers::pi / 2, 0.0, 2.0) == doctest::Approx(8.0));
    CHECK_THROWS_AS((void)interference_intensity(0.0, 0.0, -1.0), DomainError);

    oracle::Sampler rng(0xab4);
    for (int i = 0; i < 200; ++i) {
        const double p1 = rng.uniform(-20, 20);
        const double p2 = rng.uniform(-20, 20);
        const double a = rng.uniform(0, 3);
        const double value = interference_intensity(p1, p2, a);
        CHECK(value >= -1e-12);
        CHECK(value <= 4 * a * a + 1e-12);
        CHECK(interference_intensity(p2, p1, a) == doctest::Approx(value).scale(a * a));
        CHECK(interference_intensity(p1 + kTwoPi, p2, a) == doctest::Approx(value).scale(a * a).epsilon(1e-12));
    }
}

}
