#pragma once

/**
 * @file units.hpp
 * @brief Physical constants, constant profiles and Gaussian-CGS / SI conversion.
 *
 * The canonical internal system is SI. Gaussian values are produced on demand
 * through `convert`. Two constant profiles exist:
 *   - Modern: exact SI-2019 defining constants; h/2e derived from them.
 *   - Paper:  identical, except the flux quantum h/2e is pinned to the rounded
 *             value 2.067e-15 T m^2 used in the photon-mass estimate.
 *
 * The photon Compton range m_gamma^-1 is treated as the *reduced* Compton
 * wavelength, m_gamma^-1 = hbar / (m_ph c) = lambda_C / 2pi.
 */

#include <numbers>
#include <string_view>

namespace etherdrift::units {

enum class UnitSystem { Gaussian, SI };
enum class Profile { Modern, Paper };

[[nodiscard]] std::string_view to_string(UnitSystem system) noexcept;
[[nodiscard]] std::string_view to_string(Profile profile) noexcept;
/// Accepts "modern" or "paper"; throws InputError otherwise.
[[nodiscard]] Profile parse_profile(std::string_view name);

inline constexpr double kSpeedOfLight = 299'792'458.0;        // m/s
inline constexpr double kPlanck = 6.626'070'15e-34;           // J s
inline constexpr double kReducedPlanck = kPlanck / (2.0 * std::numbers::pi);
inline constexpr double kElementaryCharge = 1.602'176'634e-19;  // C
inline constexpr double kPaperFluxQuantum = 2.067e-15;        // T m^2

/// One constant set, SI values. Gaussian views are derived member functions.
struct PhysicalConstants {
    Profile profile;
    double c;             ///< m/s
    double h;             ///< J s
    double hbar;          ///< J s
    double e;             ///< C
    double flux_quantum;  ///< h/2e in Wb (T m^2)

    [[nodiscard]] constexpr double c_cgs() const noexcept { return c * 100.0; }        // cm/s
    [[nodiscard]] constexpr double hbar_cgs() const noexcept { return hbar * 1.0e7; }  // erg s
    [[nodiscard]] constexpr double h_cgs() const noexcept { return h * 1.0e7; }        // erg s
    [[nodiscard]] constexpr double e_esu() const noexcept { return e * 10.0 * c; }     // statC
};

[[nodiscard]] const PhysicalConstants& constants(Profile profile = Profile::Modern) noexcept;

enum class Dimension {
    Dimensionless,
    Length,
    InverseLength,
    Mass,
    Time,
    Speed,
    Energy,
    Momentum,
    Charge,
    ElectricPotential,
    ElectricField,
    MagneticField,
    MagneticFlux,
    VectorPotential,
};

[[nodiscard]] std::string_view to_string(Dimension dimension) noexcept;
[[nodiscard]] std::string_view unit_symbol(Dimension dimension, UnitSystem system) noexcept;

/// Size of one Gaussian unit expressed in the corresponding SI unit.
[[nodiscard]] double si_per_gaussian(Dimension dimension) noexcept;

/// A value tagged with its dimension and the system it is expressed in.
struct Quantity {
    double value = 0.0;
    Dimension dimension = Dimension::Dimensionless;
    UnitSystem system = UnitSystem::SI;
};

[[nodiscard]] Quantity convert(const Quantity& q, UnitSystem target) noexcept;
/// As above, but first checks `q` carries `expected`; throws DimensionError.
[[nodiscard]] Quantity convert(const Quantity& q, Dimension expected, UnitSystem target);

/// Sum of two quantities of the same dimension, expressed in `a`'s system.
[[nodiscard]] Quantity add(const Quantity& a, const Quantity& b);

/// Photon rest mass (g) for a reduced Compton range (cm): hbar / (c lambda).
[[nodiscard]] double inverse_length_to_mass(double range_cm,
                                            const PhysicalConstants& k = constants());
/// Reduced Compton range (cm) for a photon rest mass (g).
[[nodiscard]] double mass_to_inverse_length(double mass_g,
                                            const PhysicalConstants& k = constants());

}  // namespace etherdrift::units
