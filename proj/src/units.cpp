#include "etherdrift/units.hpp"

#include <cmath>
#include <string>

#include "etherdrift/errors.hpp"

namespace etherdrift::units {

namespace {

constexpr PhysicalConstants kModern{
    Profile::Modern,         kSpeedOfLight, kPlanck, kReducedPlanck, kElementaryCharge,
    kPlanck / (2.0 * kElementaryCharge),
};

constexpr PhysicalConstants kPaper{
    Profile::Paper, kSpeedOfLight, kPlanck, kReducedPlanck, kElementaryCharge, kPaperFluxQuantum,
};

}  // namespace

std::string_view to_string(UnitSystem system) noexcept {
    return system == UnitSystem::SI ? "SI" : "Gaussian";
}

std::string_view to_string(Profile profile) noexcept {
    return profile == Profile::Modern ? "modern" : "paper";
}

Profile parse_profile(std::string_view name) {
    if (name == "modern") return Profile::Modern;
    if (name == "paper") return Profile::Paper;
    throw InputError("unknown constants profile '" + std::string(name) +
                     "' (expected modern or paper)");
}

const PhysicalConstants& constants(Profile profile) noexcept {
    return profile == Profile::Modern ? kModern : kPaper;
}

std::string_view to_string(Dimension dimension) noexcept {
    switch (dimension) {
        case Dimension::Dimensionless: return "dimensionless";
        case Dimension::Length: return "length";
        case Dimension::InverseLength: return "inverse_length";
        case Dimension::Mass: return "mass";
        case Dimension::Time: return "time";
        case Dimension::Speed: return "speed";
        case Dimension::Energy: return "energy";
        case Dimension::Momentum: return "momentum";
        case Dimension::Charge: return "charge";
        case Dimension::ElectricPotential: return "electric_potential";
        case Dimension::ElectricField: return "electric_field";
        case Dimension::MagneticField: return "magnetic_field";
        case Dimension::MagneticFlux: return "magnetic_flux";
        case Dimension::VectorPotential: return "vector_potential";
    }
    return "unknown";
}

std::string_view unit_symbol(Dimension dimension, UnitSystem system) noexcept {
    const bool si = system == UnitSystem::SI;
    switch (dimension) {
        case Dimension::Dimensionless: return "1";
        case Dimension::Length: return si ? "m" : "cm";
        case Dimension::InverseLength: return si ? "1/m" : "1/cm";
        case Dimension::Mass: return si ? "kg" : "g";
        case Dimension::Time: return "s";
        case Dimension::Speed: return si ? "m/s" : "cm/s";
        case Dimension::Energy: return si ? "J" : "erg";
        case Dimension::Momentum: return si ? "kg m/s" : "g cm/s";
        case Dimension::Charge: return si ? "C" : "statC";
        case Dimension::ElectricPotential: return si ? "V" : "statV";
        case Dimension::ElectricField: return si ? "V/m" : "statV/cm";
        case Dimension::MagneticField: return si ? "T" : "G";
        case Dimension::MagneticFlux: return si ? "Wb" : "Mx";
        case Dimension::VectorPotential: return si ? "T m" : "G cm";
    }
    return "?";
}

double si_per_gaussian(Dimension dimension) noexcept {
    switch (dimension) {
        case Dimension::Dimensionless: return 1.0;
        case Dimension::Length: return 1.0e-2;
        case Dimension::InverseLength: return 1.0e2;
        case Dimension::Mass: return 1.0e-3;
        case Dimension::Time: return 1.0;
        case Dimension::Speed: return 1.0e-2;
        case Dimension::Energy: return 1.0e-7;
        case Dimension::Momentum: return 1.0e-5;
        // 1 statC = 1/(10 c) C, 1 statV = c * 1e-6 V with c in m/s.
        case Dimension::Charge: return 1.0 / (10.0 * kSpeedOfLight);
        case Dimension::ElectricPotential: return kSpeedOfLight * 1.0e-6;
        case Dimension::ElectricField: return kSpeedOfLight * 1.0e-4;
        case Dimension::MagneticField: return 1.0e-4;
        case Dimension::MagneticFlux: return 1.0e-8;
        case Dimension::VectorPotential: return 1.0e-6;
    }
    return 1.0;
}

Quantity convert(const Quantity& q, UnitSystem target) noexcept {
    if (q.system == target) return q;
    const double factor = si_per_gaussian(q.dimension);
    const double value = target == UnitSystem::SI ? q.value * factor : q.value / factor;
    return {value, q.dimension, target};
}

Quantity convert(const Quantity& q, Dimension expected, UnitSystem target) {
    if (q.dimension != expected) {
        throw DimensionError("cannot convert " + std::string(to_string(q.dimension)) +
                             " quantity as " + std::string(to_string(expected)));
    }
    return convert(q, target);
}

Quantity add(const Quantity& a, const Quantity& b) {
    if (a.dimension != b.dimension) {
        throw DimensionError("cannot add " + std::string(to_string(a.dimension)) + " and " +
                             std::string(to_string(b.dimension)));
    }
    return {a.value + convert(b, a.system).value, a.dimension, a.system};
}

double inverse_length_to_mass(double range_cm, const PhysicalConstants& k) {
    if (!(range_cm > 0.0)) {
        throw DomainError("range_cm", "Compton range must be positive");
    }
    return k.hbar_cgs() / (k.c_cgs() * range_cm);
}

double mass_to_inverse_length(double mass_g, const PhysicalConstants& k) {
    if (!(mass_g > 0.0)) {
        throw DomainError("mass_g", "photon mass must be positive");
    }
    return k.hbar_cgs() / (k.c_cgs() * mass_g);
}

}  // namespace etherdrift::units
