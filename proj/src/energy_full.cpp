#include "vdw/energy_full.hpp"

#include <algorithm>
#include <cmath>

#include "vdw/quadrature.hpp"

namespace vdw {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kRootTol = 1e-14;
constexpr int kScanSamples = 4096;

double arg_value(Mode mode, double u, const DimensionlessPoint& pt) {
  return mode_argument(mode, u, pt).value;
}

// Bisect a_mode(u) - 1 = 0 inside [lo, hi]; the bracket carries a sign change.
double bisect_onset(Mode mode, const DimensionlessPoint& pt, double lo,
                    double hi) {
  double flo = arg_value(mode, lo, pt) - 1.0;
  for (int i = 0; i < 200 && hi - lo > kRootTol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = arg_value(mode, mid, pt) - 1.0;
    if ((flo > 0.0) == (fmid > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Sign scan on a uniform grid; returns the crossings of a_mode(u) = 1 plus
// whether the function starts above 1 at u = 0.
struct ScanResult {
  bool above_at_zero = false;
  std::vector<double> crossings;  // increasing
};

ScanResult scan_mode(Mode mode, const DimensionlessPoint& pt, double u_max) {
  ScanResult res;
  const double du = u_max / kScanSamples;
  double prev = arg_value(mode, 0.0, pt) - 1.0;
  res.above_at_zero = prev > 0.0;
  for (int i = 1; i <= kScanSamples; ++i) {
    const double u = i * du;
    const double cur = arg_value(mode, u, pt) - 1.0;
    if ((prev > 0.0) != (cur > 0.0))
      res.crossings.push_back(bisect_onset(mode, pt, u - du, u));
    prev = cur;
  }
  return res;
}

std::vector<OnsetInterval> onsets_for_mode(Mode mode,
                                           const DimensionlessPoint& pt) {
  if (pt.kappa == 0.0) return {};

  double u_max = 8.0 * std::max(1.0, pt.x);
  while (arg_value(mode, u_max, pt) >= 1e-12 && u_max < 1e9) u_max *= 2.0;

  ScanResult scan = scan_mode(mode, pt, u_max);

  // The parallel argument can have a single interior maximum; if it grazes
  // the line a = 1 between two grid points the coarse scan misses the bump.
  // Re-scan the cell around the sampled maximum when it gets close.
  if (scan.crossings.empty() && !scan.above_at_zero) {
    const double du = u_max / kScanSamples;
    double best_u = 0.0, best_a = arg_value(mode, 0.0, pt);
    for (int i = 1; i <= kScanSamples; ++i) {
      const double a = arg_value(mode, i * du, pt);
      if (a > best_a) {
        best_a = a;
        best_u = i * du;
      }
    }
    if (best_a > 0.9) {
      const double lo = std::max(0.0, best_u - du);
      const double hi = std::min(u_max, best_u + du);
      const double fine = (hi - lo) / kScanSamples;
      double prev = arg_value(mode, lo, pt) - 1.0;
      for (int i = 1; i <= kScanSamples; ++i) {
        const double u = lo + i * fine;
        const double cur = arg_value(mode, u, pt) - 1.0;
        if ((prev > 0.0) != (cur > 0.0))
          scan.crossings.push_back(bisect_onset(mode, pt, u - fine, u));
        prev = cur;
      }
    }
  }

  std::vector<OnsetInterval> out;
  std::size_t i = 0;
  if (scan.above_at_zero) {
    if (scan.crossings.empty()) return out;  // cannot happen: a decays to 0
    out.push_back({mode, 0.0, scan.crossings[0]});
    i = 1;
  }
  for (; i + 1 < scan.crossings.size(); i += 2)
    out.push_back({mode, scan.crossings[i], scan.crossings[i + 1]});
  return out;
}

}  // namespace

std::vector<OnsetInterval> imaginary_onsets(const DimensionlessPoint& pt) {
  validate(pt);
  std::vector<OnsetInterval> all = onsets_for_mode(Mode::Parallel, pt);
  std::vector<OnsetInterval> perp = onsets_for_mode(Mode::Perp, pt);
  all.insert(all.end(), perp.begin(), perp.end());
  return all;
}

ComplexEnergy energy_dimensionless(const DimensionlessPoint& pt, double tol) {
  validate(pt);
  if (!(tol > 0.0)) throw std::domain_error("energy_dimensionless: tol must be > 0");

  const std::vector<OnsetInterval> onsets = imaginary_onsets(pt);

  double measure_weighted = 0.0;  // 2 mu_par + mu_perp
  std::vector<double> breakpoints;
  for (const OnsetInterval& iv : onsets) {
    const double w = (iv.mode == Mode::Parallel) ? 2.0 : 1.0;
    measure_weighted += w * (iv.hi - iv.lo);
    if (iv.lo > 0.0) breakpoints.push_back(iv.lo);
    breakpoints.push_back(iv.hi);
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()),
                    breakpoints.end());

  const auto safe_log = [](double a) {
    return (a < 0.5) ? std::log1p(-a) : std::log(std::abs(1.0 - a));
  };
  const auto integrand = [&](double u) {
    return 2.0 * safe_log(arg_value(Mode::Parallel, u, pt)) +
           safe_log(arg_value(Mode::Perp, u, pt));
  };

  const QuadResult q =
      integrate_semi_infinite(integrand, breakpoints, 1e-300, tol, 500000);

  ComplexEnergy e;
  e.re = q.value / (kTwoPi * pt.x);
  e.im = measure_weighted / (2.0 * pt.x);
  e.est_error = q.est_error / (kTwoPi * pt.x) +
                2.0 * kRootTol * double(onsets.size() + 1) / (2.0 * pt.x);
  return e;
}

ComplexEnergy energy_physical(const AtomParams& p, double r, double tol) {
  validate(p);
  if (!(r > 0.0)) throw std::domain_error("energy_physical: requires r > 0");
  const ComplexEnergy e = energy_dimensionless(nondimensionalize(p, r), tol);
  return {p.omega * e.re, p.omega * e.im, p.omega * e.est_error};
}

}  // namespace vdw
