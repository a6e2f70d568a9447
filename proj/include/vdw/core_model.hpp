#pragma once

// Physical parameters, nondimensionalization and the per-polarization
// kernel entering the log-det interaction energy.
//
// Everything downstream depends on two numbers only:
//   x     = omega * r                    (distance in units of 1/omega)
//   kappa = (q^2 / 2 pi) * (omega / m)   (dimensionless coupling)
// and the coupling ratio g = kappa / x^3 controls the instability
// thresholds (g = 1 and g = 2).
//
// All types are immutable values; all operations are pure and thread-safe.

#include <stdexcept>

namespace vdw {

struct AtomParams {
  double q = 0.0;      // dipole coupling charge; enters only as q^2
  double m = 1.0;      // bound-electron mass, > 0
  double omega = 1.0;  // renormalized binding frequency, > 0
};

struct DimensionlessPoint {
  double x = 1.0;      // omega * r, > 0
  double kappa = 0.0;  // >= 0 (0 = free atoms)
};

enum class Mode { Parallel, Perp };

// One log argument of the interaction integrand: xi^2 e^{-2u} at (u, x, kappa).
struct ModeArgument {
  Mode mode = Mode::Parallel;
  double value = 0.0;  // >= 0
};

void validate(const AtomParams& p);        // throws std::invalid_argument
void validate(const DimensionlessPoint&);  // throws std::invalid_argument

// x = omega * r, kappa = q^2 omega / (2 pi m). Throws std::domain_error
// for r <= 0.
DimensionlessPoint nondimensionalize(const AtomParams& p, double r);

//   Parallel: (kappa/2)^2 (1 + u + u^2)^2 e^{-2u} / (x^2 (u^2 + x^2)^2)
//   Perp:      kappa^2    (1 + u)^2       e^{-2u} / (x^2 (u^2 + x^2)^2)
// Requires u >= 0. At u = 0 these reduce to (g/2)^2 and g^2.
ModeArgument mode_argument(Mode mode, double u, const DimensionlessPoint& pt);

// g = kappa / x^3.
double coupling_ratio(const DimensionlessPoint& pt);

}  // namespace vdw
