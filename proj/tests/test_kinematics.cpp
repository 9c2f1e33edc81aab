#include <doctest.h>

#include <cmath>

#include "etherdrift/errors.hpp"
#include "etherdrift/kinematics.hpp"
#include "etherdrift/units.hpp"
#include "oracles.hpp"

using namespace etherdrift;
using namespace etherdrift::kinematics;
using oracle::Real;

namespace {
constexpr double c = units::kSpeedOfLight;
}

TEST_SUITE("kinematics") {

TEST_CASE("drag coefficient") {
    CHECK(fresnel_drag_coefficient(1.0) == 0.0);
    const Real n{"1.33"};
    CHECK(fresnel_drag_coefficient(1.33) ==
          doctest::Approx(oracle::to_double(1 - 1 / (n * n))).epsilon(1e-15));
    CHECK(fresnel_drag_coefficient(1e9) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS((void)fresnel_drag_coefficient(0.99), DomainError);
}

TEST_CASE("drag coefficient is monotone in n") {
    double previous = -1.0;
    for (double n = 1.0; n < 3.0; n += 0.01) {
        const double k = fresnel_drag_coefficient(n);
        CHECK(k > previous);
        previous = k;
    }
}

TEST_CASE("Fresnel speed") {
    CHECK(fresnel_speed(1.0, 1e4) == c);
    const Real n{"1.33"};
    const double expected = oracle::to_double(oracle::c / n + (1 - 1 / (n * n)) * 10);
    CHECK(fresnel_speed(1.33, 10.0) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(fresnel_speed(1.7, 0.0) == c / 1.7);
    CHECK_THROWS_AS((void)fresnel_speed(1.2, c), DomainError);
    CHECK_THROWS_AS((void)fresnel_speed(1.2, -c), DomainError);
}

TEST_CASE("effective Fresnel speed") {
    CHECK(effective_fresnel_speed(1.0003, 3e4, 0.0) == c / 1.0003);
    CHECK(effective_fresnel_speed(1.4, 123.0, 1.0) == fresnel_speed(1.4, 123.0));
    const Real n{"1.0003"};
    const double expected =
        oracle::to_double(oracle::c / n + Real{"6.1e-3"} * (1 - 1 / (n * n)) * 30000);
    CHECK(effective_fresnel_speed(1.0003, 3e4, kAirDragEffectiveness) ==
          doctest::Approx(expected).epsilon(1e-15));
    CHECK_THROWS_AS((void)effective_fresnel_speed(1.1, 1.0, -0.1), DomainError);
    CHECK_THROWS_AS((void)effective_fresnel_speed(1.1, 1.0, 1.1), DomainError);
}

TEST_CASE("domain errors name the parameter") {
    try {
        (void)fresnel_speed(0.5, 0.0);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(e.parameter() == "n");
        CHECK(std::string(e.kind()) == "domain");
    }
}

TEST_CASE("Fresnel speed offset is odd in u and the effective form is linear in e_f") {
    oracle::Sampler rng(0x4b1);
    for (int i = 0; i < 200; ++i) {
        const double n = rng.uniform(1.0, 2.0);
        const double u = rng.uniform(-1e6, 1e6);
        const double plus = fresnel_speed(n, u) - c / n;
        const double minus = fresnel_speed(n, -u) - c / n;
        CHECK(std::abs(plus + minus) <= 1e-7 * std::abs(plus) + 1e-7);

        const double e1 = rng.uniform(0.0, 1.0);
        const double e2 = rng.uniform(0.0, 1.0);
        const double mix = 0.5 * (e1 + e2);
        const double lhs = effective_fresnel_speed(n, u, mix) - c / n;
        const double rhs = 0.5 * ((effective_fresnel_speed(n, u, e1) - c / n) +
                                  (effective_fresnel_speed(n, u, e2) - c / n));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
    }
}

TEST_CASE("drag effectiveness estimate") {
    const auto ref = drag_effectiveness_estimate(6.1e-3 / 22.9, 1.0);
    CHECK(ref.value == doctest::Approx(kAirDragEffectiveness).epsilon(1e-14));
    CHECK_FALSE(ref.clamped);
    CHECK(drag_effectiveness_estimate(2.664e-4, 1.0).value == doctest::Approx(6.1e-3).epsilon(1e-3));
    CHECK(drag_effectiveness_estimate(0.0, 42.0).value == 0.0);
    const auto sat = drag_effectiveness_estimate(10.0, 1.0);
    CHECK(sat.value == 1.0);
    CHECK(sat.clamped);
}

TEST_CASE("Einstein composition") {
    CHECK(einstein_composed_speed(1.0, 0.5 * c) == doctest::Approx(c).epsilon(1e-15));
    CHECK(einstein_composed_speed(1.5, 0.0) == c / 1.5);
    const double expected = oracle::to_double(oracle::einstein(Real{"1.5"}, Real{1000}));
    CHECK(einstein_composed_speed(1.5, 1e3) == doctest::Approx(expected).epsilon(1e-15));
    CHECK_THROWS_AS((void)einstein_composed_speed(1.5, c), DomainError);
}

TEST_CASE("Tangherlini composition") {
    CHECK(tangherlini_composed_speed(1.0, 0.0) == c);
    oracle::Sampler rng(0x7a9);
    for (int i = 0; i < 100; ++i) {
        const double u = rng.uniform(-0.9, 0.9) * c;
        const double expected = oracle::to_double(oracle::c * oracle::c / (oracle::c + Real{u}));
        CHECK(tangherlini_composed_speed(1.0, u) == doctest::Approx(expected).epsilon(1e-14));
    }
    const double expected = oracle::to_double(oracle::tangherlini(Real{"1.5"}, Real{1000}));
    CHECK(tangherlini_composed_speed(1.5, 1e3) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("compose dispatches to the subtraction laws") {
    const double v = c / 1.2;
    CHECK(compose(Composition::Einstein, v, 1e5) == einstein_subtract(v, 1e5));
    CHECK(compose(Composition::Tangherlini, v, 1e5) == tangherlini_subtract(v, 1e5));
    CHECK(einstein_subtract(v, 1e5) == doctest::Approx(einstein_composed_speed(1.2, 1e5)).epsilon(1e-15));
}

TEST_CASE("laws agree on arm differences to first order") {
    // The one-way speeds differ at first order; what the two laws share is
    // 1/w_T - 1/w_E = u/c^2 independent of n, which cancels between arms.
    oracle::Sampler rng(0xe7);
    for (int i = 0; i < 500; ++i) {
        const double n = rng.uniform(1.0, 2.0);
        const double u = rng.uniform(-1e-3, 1e-3) * c;
        const Real rn{n};
        const Real ru{u};
        const Real gap = 1 / oracle::tangherlini(rn, ru) - 1 / oracle::einstein(rn, ru) - ru / (oracle::c * oracle::c);
        const double beta = u / c;
        CHECK(std::abs(oracle::to_double(gap)) <= 2.0 * beta * beta / c + 1e-300);

        const double lib_gap =
            1.0 / tangherlini_composed_speed(n, u) - 1.0 / einstein_composed_speed(n, u);
        CHECK(lib_gap == doctest::Approx(u / (c * c)).epsilon(3e-3));
    }
}

TEST_CASE("speeds stay positive and subluminal") {
    oracle::Sampler rng(0x51);
    for (int i = 0; i < 500; ++i) {
        const double n = rng.uniform(1.0 + 1e-9, 2.0);
        const double u = rng.uniform(-0.999, 0.999) * c / n;
        const double w = einstein_composed_speed(n, u);
        CHECK(w > 0.0);
        CHECK(w < c);
        CHECK(tangherlini_composed_speed(n, u) > 0.0);
        CHECK(fresnel_speed(n, u) > 0.0);

        const double small = rng.uniform(-1e-3, 1e-3) * c;
        CHECK(tangherlini_composed_speed(n, small) < c);
        CHECK(fresnel_speed(n, small) < c);
    }
    // Tangherlini one-way speeds may exceed c against the drift.
    CHECK(tangherlini_composed_speed(1.5, -c / 3.0) == doctest::Approx(1.125 * c).epsilon(1e-15));
}

TEST_CASE("exploratory media below unity") {
    CHECK_THROWS_AS((void)MediumSpec::make(0.0), DomainError);
    const auto plasma = MediumSpec::make(0.9, 0.0);
    CHECK(plasma.below_unity());
    CHECK(medium_speed(plasma, 1e3) == doctest::Approx(c / 0.9).epsilon(1e-15));
    const auto glass = MediumSpec::make(1.5, 1.0);
    CHECK_FALSE(glass.below_unity());
    CHECK(medium_speed(glass, 1e3) == fresnel_speed(1.5, 1e3));
}

TEST_CASE("flow projection") {
    const FlowState flow{Vec3{3e3, 4e3, 0.0}};
    CHECK(flow.along(Vec3{2.0, 0.0, 0.0}) == doctest::Approx(3e3));
    CHECK(flow.along(Vec3{0.0, -1.0, 0.0}) == doctest::Approx(-4e3));
    CHECK_THROWS_AS((void)flow.along(Vec3{}), DomainError);
    const FlowState fast{Vec3{c, 0.0, 0.0}};
    CHECK_THROWS_AS((void)fast.along(Vec3{1.0, 0.0, 0.0}), DomainError);
}

}
