#pragma once

// Sine and cosine integrals and the two auxiliary functions built from them.
//
//   Si(x) = int_0^x sin(t)/t dt
//   Ci(x) = gamma + ln(x) + int_0^x (cos(t) - 1)/t dt
//   si(x) = Si(x) - pi/2
//
//   f(x)  = Ci(x) sin(x) - si(x) cos(x) = int_0^inf e^{-x t} / (1 + t^2) dt
//   g(x)  = -(Ci(x) cos(x) + si(x) sin(x)) = int_0^inf t e^{-x t} / (1 + t^2) dt
//
// For x <= 4, Si and Ci are summed from their power series and f, g are
// assembled from the definitions (no cancellation there). For x > 4 the
// defining combinations cancel catastrophically, so f and g are computed
// first from the complex continued fraction of e^{ix} E1(ix) = g - i f
// (modified Lentz), and Ci, si are reconstructed as
//   Ci = f sin - g cos,   si = -f cos - g sin.
//
// All functions are pure and thread-safe.

namespace vdw {

// Value with an absolute error bound.
struct SpecFunResult {
  double value = 0.0;
  double est_error = 0.0;
};

// Ci(x). Requires x > 0 (throws std::domain_error otherwise).
SpecFunResult cosine_integral(double x);

// Si(x). Requires x >= 0.
SpecFunResult sine_integral(double x);

// f(x) = Ci sin - si cos. Requires x >= 0; f(0) = pi/2.
SpecFunResult aux_f(double x);

// g(x) = -(Ci cos + si sin). Requires x > 0; diverges like -gamma - ln x
// at the origin (x == 0 throws std::range_error).
SpecFunResult aux_g(double x);

}  // namespace vdw
