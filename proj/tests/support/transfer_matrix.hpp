#pragma once

// Brute-force stationary-state solver for the square barrier, kept
// independent of the closed forms it checks: the in-barrier coefficients come
// from a numeric 2x2 interface solve (Cramer), never from the derived
// matching expressions.

#include <complex>

#include "tunnelflow/units.hpp"

namespace tflow::test {

struct StationaryState {
  std::complex<double> c_plus;   // coefficient of e^{+iqx}
  std::complex<double> c_minus;  // coefficient of e^{-iqx}
  std::complex<double> q;        // in-barrier wavevector (i*kappa below the barrier)
  double k = 0.0;                // incident wavevector
  bool linear_basis = false;     // critical regime: psi = c_plus + c_minus * x
};

/// Matches the in-barrier solution to a unit transmitted wave e^{ikx} at x = a.
inline StationaryState solve_barrier(double energy_mev, double barrier_mev, double width_um,
                                     const PhysicalConstants& c) {
  StationaryState s;
  s.k = std::sqrt(2.0 * c.mass * energy_mev) / c.hbar;
  const std::complex<double> q2 = 2.0 * c.mass * std::complex<double>(energy_mev - barrier_mev) /
                                  (c.hbar * c.hbar);
  s.q = std::sqrt(q2);
  const std::complex<double> I(0.0, 1.0);
  const std::complex<double> rhs0 = std::exp(I * s.k * width_um);
  const std::complex<double> rhs1 = I * s.k * rhs0;

  if (std::abs(s.q) * width_um < 1.0e-8) {
    // Degenerate exponentials: use psi = alpha + beta x.
    s.linear_basis = true;
    s.c_minus = rhs1;                        // beta = psi'
    s.c_plus = rhs0 - rhs1 * width_um;       // alpha
    return s;
  }

  const std::complex<double> ep = std::exp(I * s.q * width_um);
  const std::complex<double> em = std::exp(-I * s.q * width_um);
  // [ ep       em      ] [c+]   [rhs0]
  // [ iq ep   -iq em   ] [c-] = [rhs1]
  const std::complex<double> det = ep * (-I * s.q * em) - em * (I * s.q * ep);
  s.c_plus = (rhs0 * (-I * s.q * em) - em * rhs1) / det;
  s.c_minus = (ep * rhs1 - rhs0 * (I * s.q * ep)) / det;
  return s;
}

inline std::complex<double> psi(const StationaryState& s, double x) {
  if (s.linear_basis) return s.c_plus + s.c_minus * x;
  const std::complex<double> I(0.0, 1.0);
  return s.c_plus * std::exp(I * s.q * x) + s.c_minus * std::exp(-I * s.q * x);
}

inline std::complex<double> dpsi(const StationaryState& s, double x) {
  if (s.linear_basis) return s.c_minus;
  const std::complex<double> I(0.0, 1.0);
  return I * s.q * (s.c_plus * std::exp(I * s.q * x) - s.c_minus * std::exp(-I * s.q * x));
}

/// Bohmian speed of the reconstructed state, km/s.
inline double velocity(const StationaryState& s, double x, const PhysicalConstants& c) {
  const std::complex<double> p = psi(s, x);
  const std::complex<double> dp = dpsi(s, x);
  return c.hbar / c.mass * std::imag(std::conj(p) * dp) / std::norm(p);
}

}  // namespace tflow::test
