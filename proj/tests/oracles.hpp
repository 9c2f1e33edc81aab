#pragma once

// Test-only reference computations, evaluated independently of the library's
// code paths: 50-digit arithmetic for closed forms and direct quadrature of
// integral representations for special functions.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstdint>
#include <random>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_50;

inline const Real c{299792458};
inline const Real pi = boost::math::constants::pi<Real>();
inline const Real planck{"6.62607015e-34"};
inline const Real hbar = planck / (2 * pi);
inline const Real charge{"1.602176634e-19"};

inline double to_double(const Real& x) { return x.convert_to<double>(); }

inline Real einstein(const Real& n, const Real& u) { return (c / n - u) / (1 - u / (c * n)); }
inline Real tangherlini(const Real& n, const Real& u) { return (c / n - u) / (1 - (u / c) * (u / c)); }

/// Lab-frame inverse speed of an interferometer arm (medium speed with e_f
/// drag in the preferred frame, then transformed with the chosen law).
inline Real inverse_arm_speed(const Real& n, const Real& ef, const Real& u, bool einstein_law) {
    const Real v = c / n + ef * (1 - 1 / (n * n)) * u;
    if (einstein_law) return (1 - u * v / (c * c)) / (v - u);
    return (1 - (u / c) * (u / c)) / (v - u);
}

/// I0(x) = (1/pi) \int_0^pi exp(x cos t) dt. The integrand is smooth and
/// periodic, so the trapezoid rule converges geometrically.
inline double bessel_i0_integral(double x, int panels = 96) {
    const Real rx{x};
    Real sum = 0;
    for (int k = 0; k <= panels; ++k) {
        const Real t = pi * k / panels;
        const Real w = (k == 0 || k == panels) ? Real{0.5} : Real{1};
        sum += w * exp(rx * cos(t));
    }
    return to_double(sum / panels);
}

/// K0(x) = \int_0^inf exp(-x cosh t) dt (trapezoid, doubly exponential decay).
inline double bessel_k0_integral(double x) {
    const long double h = 1.0L / 128.0L;
    const long double t_max = std::acosh(800.0L / x + 1.0L);
    long double sum = 0.5L * std::exp(-static_cast<long double>(x));
    for (long double t = h; t < t_max; t += h) sum += std::exp(-x * std::cosh(t));
    return static_cast<double>(sum * h);
}

/// Deterministic generator for hand-rolled property tests.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

private:
    std::mt19937_64 engine_;
};

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace oracle
