#pragma once

#include <stdexcept>

// Internal unit system: micrometre, nanosecond, millielectronvolt.
// Velocities in um/ns are numerically identical to km/s.
namespace tflow {

namespace units {

inline constexpr double hbar_mev_ns = 6.582119569e-4;

inline constexpr double joule_per_mev = 1.602176634e-22;

// One internal mass unit (meV ns^2 / um^2) expressed in kilograms.
inline constexpr double kg_per_mass_unit = 1.602176634e-28;

inline constexpr double um_per_mm = 1.0e3;
inline constexpr double ns_per_ps = 1.0e-3;
inline constexpr double mev_per_uev = 1.0e-3;
// 1 GHz = 1/ns, so dissipation rates carry over unchanged.

}  // namespace units

/// Converts a mass in kg to internal units (meV ns^2 / um^2).
inline double mass_from_kg(double kg) {
  if (!(kg > 0.0)) throw std::invalid_argument("mass_from_kg: mass must be positive");
  return kg / units::kg_per_mass_unit;
}

inline double mass_to_kg(double internal) {
  if (!(internal > 0.0)) throw std::invalid_argument("mass_to_kg: mass must be positive");
  return internal * units::kg_per_mass_unit;
}

struct PhysicalConstants {
  double hbar = units::hbar_mev_ns;  // meV ns
  double mass = 0.0;                 // meV ns^2 / um^2

  static PhysicalConstants for_mass_kg(double kg) {
    return PhysicalConstants{units::hbar_mev_ns, mass_from_kg(kg)};
  }
};

}  // namespace tflow
