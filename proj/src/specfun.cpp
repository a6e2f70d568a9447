#include "vdw/specfun.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace vdw {

namespace {

constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
constexpr double kHalfPi = 1.570796326794896619231321691639751442;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Below this the power series for Si and Cin are used; above it the
// continued fraction. The two branches agree to ~1e-15 at the seam.
constexpr double kSeriesCutoff = 4.0;

struct SeriesResult {
  double si = 0.0;
  double cin = 0.0;  // Cin(x) = int_0^x (1 - cos t)/t dt
  double err = 0.0;
};

// Power series, alternating, converges for any x but only used for x <= 4:
//   Si(x)  = sum_{n>=0} (-1)^n x^{2n+1} / ((2n+1)(2n+1)!)
//   Cin(x) = sum_{n>=1} (-1)^{n+1} x^{2n} / ((2n)(2n)!)
SeriesResult si_cin_series(double x) {
  const double x2 = x * x;
  SeriesResult r;

  double term = x;
  double sum = x;
  double sum_abs = std::abs(x);
  for (int n = 1; n < 64; ++n) {
    const double k = 2.0 * n;
    term *= -x2 * (k - 1.0) / ((k + 1.0) * (k + 1.0) * k);
    sum += term;
    sum_abs += std::abs(term);
    if (std::abs(term) < kEps * sum_abs) break;
  }
  r.si = sum;
  r.err = 2.0 * kEps * sum_abs;

  term = 0.25 * x2;  // n = 1 term: x^2 / (2 * 2!)
  sum = term;
  sum_abs = term;
  for (int n = 2; n < 64; ++n) {
    const double k = 2.0 * n;
    term *= -x2 * (k - 2.0) / (k * k * (k - 1.0));
    sum += term;
    sum_abs += std::abs(term);
    if (std::abs(term) < kEps * sum_abs) break;
  }
  r.cin = sum;
  r.err += 2.0 * kEps * sum_abs;
  return r;
}

struct FgResult {
  double f = 0.0;
  double g = 0.0;
  double err = 0.0;
};

// Evaluates e^{ix} E1(ix) = g(x) - i f(x) by the modified Lentz continued
// fraction for the exponential integral,
//   e^z E1(z) = 1 / (z + 1 - 1/(z + 3 - 4/(z + 5 - 9/(...)))),   z = ix.
// Converges quickly for x > ~2; we only call it for x > 4.
FgResult fg_continued_fraction(double x) {
  using C = std::complex<double>;
  constexpr double tiny = 1e-290;

  C b(1.0, x);
  C c(1.0 / tiny, 0.0);
  C d = 1.0 / b;
  C h = d;
  for (int i = 2; i < 4000; ++i) {
    const double a = -double(i - 1) * double(i - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 0.25 * kEps) break;
  }
  FgResult r;
  r.f = -h.imag();
  r.g = h.real();
  r.err = 8.0 * kEps * std::abs(h);
  return r;
}

// f, g from the power-series Si/Ci (x in (0, 4]). The combinations do not
// cancel in this range.
FgResult fg_from_series(double x) {
  const SeriesResult s = si_cin_series(x);
  const double ci = kEulerGamma + std::log(x) - s.cin;
  const double si_small = s.si - kHalfPi;
  const double sn = std::sin(x);
  const double cs = std::cos(x);
  FgResult r;
  r.f = ci * sn - si_small * cs;
  r.g = -(ci * cs + si_small * sn);
  r.err = 2.0 * s.err + 4.0 * kEps * (std::abs(ci) + std::abs(si_small));
  return r;
}

}  // namespace

SpecFunResult cosine_integral(double x) {
  if (!(x > 0.0)) throw std::domain_error("cosine_integral: requires x > 0");
  if (x <= kSeriesCutoff) {
    const SeriesResult s = si_cin_series(x);
    const double v = kEulerGamma + std::log(x) - s.cin;
    return {v, s.err + 2.0 * kEps * (std::abs(std::log(x)) + 1.0)};
  }
  const FgResult fg = fg_continued_fraction(x);
  const double v = fg.f * std::sin(x) - fg.g * std::cos(x);
  return {v, fg.err + 4.0 * kEps * (std::abs(fg.f) + std::abs(fg.g))};
}

SpecFunResult sine_integral(double x) {
  if (!(x >= 0.0)) throw std::domain_error("sine_integral: requires x >= 0");
  if (x == 0.0) return {0.0, 0.0};
  if (x <= kSeriesCutoff) {
    const SeriesResult s = si_cin_series(x);
    return {s.si, s.err};
  }
  const FgResult fg = fg_continued_fraction(x);
  const double si_small = -fg.f * std::cos(x) - fg.g * std::sin(x);
  return {si_small + kHalfPi,
          fg.err + 4.0 * kEps * (std::abs(fg.f) + std::abs(fg.g) + 1.0)};
}

SpecFunResult aux_f(double x) {
  if (!(x >= 0.0)) throw std::domain_error("aux_f: requires x >= 0");
  if (x == 0.0) return {kHalfPi, kEps};
  const FgResult fg =
      (x <= kSeriesCutoff) ? fg_from_series(x) : fg_continued_fraction(x);
  return {fg.f, fg.err};
}

SpecFunResult aux_g(double x) {
  if (!(x >= 0.0)) throw std::domain_error("aux_g: requires x > 0");
  if (x == 0.0) throw std::range_error("aux_g: diverges at x = 0");
  const FgResult fg =
      (x <= kSeriesCutoff) ? fg_from_series(x) : fg_continued_fraction(x);
  return {fg.g, fg.err};
}

}  // namespace vdw
