#pragma once

// Closed-form weak-coupling energy, its long-distance (1/r^7) and London
// (1/r^6) asymptotes, and the instantaneous normal-mode analysis with the
// g = 1 and g = 2 instability thresholds.

#include <array>

#include "vdw/core_model.hpp"
#include "vdw/energy_full.hpp"

namespace vdw {

// Squared normal-mode frequencies in units of omega^2:
//   plus  = {1 - g/2, 1 - g/2, 1 - g}
//   minus = {1 + g/2, 1 + g/2, 1 + g}
// The sum of all six is exactly 6 (traceless coupling); entries of `plus`
// go negative below the thresholds.
struct NormalModeSpectrum {
  std::array<double, 3> omega_sq_plus{};
  std::array<double, 3> omega_sq_minus{};
};

struct Thresholds {
  double r1 = 0.0;  // (q^2 / (2 pi m omega^2))^(1/3); mode-3 softens here
  double r2 = 0.0;  // (q^2 / (4 pi m omega^2))^(1/3) = r1 / 2^(1/3)
  double x1 = 0.0;  // omega * r1 = kappa^(1/3)
  double x2 = 0.0;  // omega * r2 = (kappa/2)^(1/3)
};

// Leading weak-coupling energy in units of omega, by quadrature:
//   -(kappa^2 / (4 pi x^3)) int_0^inf e^{-2u} (u^4+2u^3+5u^2+6u+3)/(u^2+x^2)^2 du
double weak_energy_integral(const DimensionlessPoint& pt, double tol = 1e-10);

// Same quantity in closed form through aux_f / aux_g:
//   -(A / (32 pi^3 x^6)) [ x(6-x^2) + (3-7x^2+x^4) f(2x) + 2x(3-3x^2+x^4) g(2x) ],
// A = (2 pi kappa)^2.
double weak_energy_closed(const DimensionlessPoint& pt);

// Retarded long-distance tail: -23/(4 pi)^3 * (q^2/(m omega^2))^2 / r^7.
double vdw_asymptote(const AtomParams& p, double r);

// Non-retarded (London) limit: -(3/4) (q^2/(4 pi m omega))^2 / (omega r^6),
// equivalently -(3/16) omega g^2.
double london_energy(const AtomParams& p, double r);

NormalModeSpectrum normal_modes(const AtomParams& p, double r);

// Ground-state energy of the six instantaneous normal modes with the
// 3*omega self-energy subtracted, so the value vanishes as r -> inf.
// Negative squared frequencies contribute sqrt(|.|)/2 to the imaginary
// part. Result in absolute energy units.
ComplexEnergy instantaneous_energy(const AtomParams& p, double r);

// Throws std::domain_error for q = 0 (no threshold exists).
Thresholds thresholds(const AtomParams& p);

// Dimensionless threshold positions for a given coupling.
double threshold_x1(double kappa);  // kappa^(1/3)
double threshold_x2(double kappa);  // (kappa/2)^(1/3)

namespace detail {
// Shared form of the retarded 1/r^7 tail, -23/(4 pi)^3 q^4 g0^2 / r^7 with
// g0 the zero-frequency dipole correlator (harmonic case: 1/(m omega^2)).
// Routed through one helper so the harmonic reduction is bit-exact.
double retarded_tail_energy(double q, double g0, double r);
}  // namespace detail

}  // namespace vdw
