#pragma once

// Adaptive quadrature over [0, inf) for exponentially (or faster-than-1/u^2)
// decaying integrands.
//
// The interval is cut at U = 8 * max(1, last breakpoint); [0, U] is covered
// by finite panels that never straddle a user breakpoint, and [U, inf) is
// mapped onto t in [0, 1) by u = U + t/(1-t). Each panel is estimated with
// the 15-point Kronrod / 7-point Gauss pair and the panel with the largest
// |K15 - G7| is bisected until the summed error estimate meets
// max(abs_tol, rel_tol * |value|) or the evaluation budget runs out.
//
// Kronrod nodes are interior points, so the integrand is never evaluated at
// a panel edge; integrable logarithmic singularities are handled by simply
// declaring them as breakpoints.

#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace vdw {

struct QuadResult {
  double value = 0.0;
  double est_error = 0.0;  // absolute
  long n_evals = 0;
};

// Budget exhausted before the tolerance was met; carries the best estimate.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadResult& best() const noexcept { return best_; }

 private:
  QuadResult best_;
};

using Integrand = std::function<double(double)>;

// Integrates f over [0, inf). Breakpoints must be strictly increasing and
// positive; tolerances positive. Throws std::invalid_argument on bad
// arguments, std::runtime_error if f produces NaN/inf, QuadratureError on
// non-convergence. Reentrant as long as f is.
QuadResult integrate_semi_infinite(const Integrand& f,
                                   std::span<const double> breakpoints,
                                   double abs_tol = 1e-12,
                                   double rel_tol = 1e-10,
                                   long max_evals = 500000);

}  // namespace vdw
