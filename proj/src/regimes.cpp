#include "vdw/regimes.hpp"

#include <cmath>
#include <limits>

#include "vdw/quadrature.hpp"
#include "vdw/specfun.hpp"

namespace vdw {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kTwoPi = 2.0 * kPi;

// sqrt(1+a) + sqrt(1-a) - 2 without cancellation, for |a| <= 1.
double sqrt_pair_sum_m2(double a) {
  const double p = std::sqrt(1.0 + a);
  const double m = std::sqrt(1.0 - a);
  return -2.0 * a * a / ((p + m) * (1.0 + p) * (1.0 + m));
}

}  // namespace

double weak_energy_integral(const DimensionlessPoint& pt, double tol) {
  validate(pt);
  if (!(tol > 0.0)) throw std::domain_error("weak_energy_integral: tol must be > 0");
  if (pt.kappa == 0.0) return 0.0;
  const double x2 = pt.x * pt.x;
  const auto integrand = [x2](double u) {
    const double d = u * u + x2;
    return std::exp(-2.0 * u) *
           (((u + 2.0) * u * u * u + (5.0 * u + 6.0) * u + 3.0)) / (d * d);
  };
  const QuadResult q = integrate_semi_infinite(integrand, {}, 1e-300, tol);
  return -pt.kappa * pt.kappa / (4.0 * kPi * pt.x * x2) * q.value;
}

double weak_energy_closed(const DimensionlessPoint& pt) {
  validate(pt);
  if (pt.kappa == 0.0) return 0.0;
  const double x = pt.x;
  const double x2 = x * x;
  const double x4 = x2 * x2;
  const double f2 = aux_f(2.0 * x).value;
  const double g2 = aux_g(2.0 * x).value;
  const double bracket = x * (6.0 - x2) + (3.0 - 7.0 * x2 + x4) * f2 +
                         2.0 * x * (3.0 - 3.0 * x2 + x4) * g2;
  const double a = kTwoPi * pt.kappa;  // A = (q^2 omega / m)^2 = a^2
  return -(a * a) / (32.0 * kPi * kPi * kPi) * bracket / (x2 * x4);
}

namespace detail {
double retarded_tail_energy(double q, double g0, double r) {
  const double q2 = q * q;
  const double c = 23.0 / (64.0 * kPi * kPi * kPi);  // 23/(4 pi)^3
  return -c * q2 * q2 * g0 * g0 / std::pow(r, 7);
}
}  // namespace detail

double vdw_asymptote(const AtomParams& p, double r) {
  validate(p);
  if (!(r > 0.0)) throw std::domain_error("vdw_asymptote: requires r > 0");
  return detail::retarded_tail_energy(p.q, 1.0 / (p.m * (p.omega * p.omega)), r);
}

double london_energy(const AtomParams& p, double r) {
  validate(p);
  if (!(r > 0.0)) throw std::domain_error("london_energy: requires r > 0");
  const double d = p.q * p.q / (4.0 * kPi * p.m * p.omega);
  const double r2 = r * r;
  return -0.75 * d * d / (p.omega * r2 * r2 * r2);
}

NormalModeSpectrum normal_modes(const AtomParams& p, double r) {
  const double g = coupling_ratio(nondimensionalize(p, r));
  NormalModeSpectrum s;
  s.omega_sq_plus = {1.0 - 0.5 * g, 1.0 - 0.5 * g, 1.0 - g};
  s.omega_sq_minus = {1.0 + 0.5 * g, 1.0 + 0.5 * g, 1.0 + g};
  return s;
}

ComplexEnergy instantaneous_energy(const AtomParams& p, double r) {
  const double g = coupling_ratio(nondimensionalize(p, r));
  ComplexEnergy e;
  if (g <= 1.0) {
    // Stable region: sum the three mode pairs through the cancellation-free
    // pair formula so tiny couplings keep full relative accuracy.
    e.re = p.omega * (sqrt_pair_sum_m2(0.5 * g) + 0.5 * sqrt_pair_sum_m2(g));
    e.im = 0.0;
  } else {
    const double lam[3] = {1.0 - 0.5 * g, 1.0 - 0.5 * g, 1.0 - g};
    double re_sum = 0.0, im_sum = 0.0;
    for (double l : lam) {
      if (l >= 0.0)
        re_sum += std::sqrt(l);
      else
        im_sum += std::sqrt(-l);
      re_sum += std::sqrt(2.0 - l);  // the partner mode, 1 + (1 - l') form
    }
    e.re = p.omega * (0.5 * re_sum - 3.0);
    e.im = p.omega * 0.5 * im_sum;
  }
  e.est_error = 8.0 * std::numeric_limits<double>::epsilon() * p.omega *
                (3.0 + std::abs(e.re));
  return e;
}

Thresholds thresholds(const AtomParams& p) {
  validate(p);
  if (p.q == 0.0)
    throw std::domain_error("thresholds: no threshold exists for q = 0");
  const double q2 = p.q * p.q;
  const double w2 = p.omega * p.omega;
  Thresholds t;
  t.r1 = std::cbrt(q2 / (kTwoPi * p.m * w2));
  t.r2 = std::cbrt(q2 / (2.0 * kTwoPi * p.m * w2));
  t.x1 = p.omega * t.r1;
  t.x2 = p.omega * t.r2;
  return t;
}

double threshold_x1(double kappa) {
  if (!(kappa > 0.0)) throw std::domain_error("threshold_x1: requires kappa > 0");
  return std::cbrt(kappa);
}

double threshold_x2(double kappa) {
  if (!(kappa > 0.0)) throw std::domain_error("threshold_x2: requires kappa > 0");
  return std::cbrt(0.5 * kappa);
}

}  // namespace vdw
