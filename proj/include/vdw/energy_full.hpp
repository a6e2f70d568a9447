#pragma once

// Exact interaction energy from the log-det integral, valid at any coupling.
//
//   E(x) = (1/x) int_0^inf du/(2 pi) [ 2 ln(1 - a_par(u)) + ln(1 - a_perp(u)) ]
//
// with a_mode = mode_argument(mode, u, pt). Where a_mode > 1 the logarithm
// picks up an imaginary part; with the branch Im ln(negative) = +pi the
// imaginary part of the energy is exactly
//
//   im = (2 mu_par + mu_perp) / (2 x),
//
// mu_mode being the total length of {u >= 0 : a_mode(u) > 1}. Those
// intervals are found by bracketed bisection and fed to the quadrature as
// breakpoints, so the real part integrates ln|1 - a| across its (integrable)
// logarithmic zeros.

#include <vector>

#include "vdw/core_model.hpp"

namespace vdw {

struct ComplexEnergy {
  double re = 0.0;         // real part
  double im = 0.0;         // imaginary part, >= 0
  double est_error = 0.0;  // absolute bound, covers both parts
};

// Maximal interval of u where the mode argument exceeds 1.
struct OnsetInterval {
  Mode mode = Mode::Parallel;
  double lo = 0.0;
  double hi = 0.0;
};

// Intervals where a_mode(u) > 1, per mode, endpoints located to 1e-14.
// Empty when the coupling ratio stays below the first threshold.
std::vector<OnsetInterval> imaginary_onsets(const DimensionlessPoint& pt);

// Energy in units of omega. tol is the relative quadrature tolerance;
// tol <= 0 throws std::domain_error.
ComplexEnergy energy_dimensionless(const DimensionlessPoint& pt,
                                   double tol = 1e-10);

// omega * energy_dimensionless(nondimensionalize(p, r)).
ComplexEnergy energy_physical(const AtomParams& p, double r,
                              double tol = 1e-10);

}  // namespace vdw
