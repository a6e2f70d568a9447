#include "vdw/core_model.hpp"

#include <cmath>

namespace vdw {

void validate(const AtomParams& p) {
  if (!(p.m > 0.0) || !std::isfinite(p.m))
    throw std::invalid_argument("AtomParams: m must be positive");
  if (!(p.omega > 0.0) || !std::isfinite(p.omega))
    throw std::invalid_argument("AtomParams: omega must be positive");
  if (!std::isfinite(p.q)) throw std::invalid_argument("AtomParams: q must be finite");
}

void validate(const DimensionlessPoint& pt) {
  if (!(pt.x > 0.0) || !std::isfinite(pt.x))
    throw std::invalid_argument("DimensionlessPoint: x must be positive");
  if (!(pt.kappa >= 0.0) || !std::isfinite(pt.kappa))
    throw std::invalid_argument("DimensionlessPoint: kappa must be >= 0");
}

DimensionlessPoint nondimensionalize(const AtomParams& p, double r) {
  validate(p);
  if (!(r > 0.0)) throw std::domain_error("nondimensionalize: requires r > 0");
  constexpr double two_pi = 6.283185307179586476925286766559;
  return {p.omega * r, p.q * p.q * p.omega / (two_pi * p.m)};
}

ModeArgument mode_argument(Mode mode, double u, const DimensionlessPoint& pt) {
  validate(pt);
  if (!(u >= 0.0)) throw std::domain_error("mode_argument: requires u >= 0");
  // e^{-2u} underflows well before this; returning 0 avoids inf * 0 when
  // the polynomial prefactor overflows at extreme u (tail-mapped points).
  if (u > 350.0) return {mode, 0.0};
  const double coef = (mode == Mode::Parallel) ? 0.5 * pt.kappa : pt.kappa;
  const double poly = (mode == Mode::Parallel) ? 1.0 + u + u * u : 1.0 + u;
  const double s =
      coef * poly * std::exp(-u) / (pt.x * (u * u + pt.x * pt.x));
  return {mode, s * s};
}

double coupling_ratio(const DimensionlessPoint& pt) {
  validate(pt);
  return pt.kappa / (pt.x * pt.x * pt.x);
}

}  // namespace vdw
