#include "vdw/general_potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "vdw/quadrature.hpp"
#include "vdw/regimes.hpp"

namespace vdw {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

// Fritsch-Carlson slopes for a monotone cubic Hermite through (x, y).
std::vector<double> monotone_slopes(const std::vector<double>& x,
                                    const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> h(n - 1), delta(n - 1), d(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    delta[i] = (y[i + 1] - y[i]) / h[i];
  }
  if (n == 2) {
    d[0] = d[1] = delta[0];
    return d;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      d[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  // One-sided three-point endpoint formula with the usual shape clamps.
  const auto endpoint = [](double h0, double h1, double d0, double d1) {
    double e = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (e * d0 <= 0.0)
      e = 0.0;
    else if (d0 * d1 < 0.0 && std::abs(e) > 3.0 * std::abs(d0))
      e = 3.0 * d0;
    return e;
  };
  d[0] = endpoint(h[0], h[1], delta[0], delta[1]);
  d[n - 1] = endpoint(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  return d;
}

double hermite(double x, double x0, double x1, double y0, double y1,
               double d0, double d1) {
  const double h = x1 - x0;
  const double s = (x - x0) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  return y0 * (2.0 * s3 - 3.0 * s2 + 1.0) + y1 * (3.0 * s2 - 2.0 * s3) +
         d0 * h * (s3 - 2.0 * s2 + s) + d1 * h * (s3 - s2);
}

}  // namespace

Correlator Correlator::harmonic(double m, double omega) {
  if (!(m > 0.0) || !(omega > 0.0))
    throw std::invalid_argument("Correlator::harmonic: m and omega must be positive");
  Correlator c;
  c.tabulated_ = false;
  c.m_ = m;
  c.omega_ = omega;
  return c;
}

Correlator Correlator::tabulated(std::vector<double> nu,
                                 std::vector<double> values) {
  if (nu.size() != values.size())
    throw std::invalid_argument("Correlator::tabulated: column length mismatch");
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (!std::isfinite(nu[i]) || !std::isfinite(values[i]))
      throw std::invalid_argument("Correlator::tabulated: non-finite sample");
    if (nu[i] < 0.0)
      throw std::invalid_argument("Correlator::tabulated: nu must be >= 0");
    if (values[i] <= 0.0)
      throw std::invalid_argument("Correlator::tabulated: G values must be positive");
    if (i > 0 && !(nu[i] > nu[i - 1]))
      throw std::invalid_argument("Correlator::tabulated: nu must be strictly increasing");
    if (i > 0 && values[i] > values[i - 1])
      throw std::invalid_argument("Correlator::tabulated: G must be non-increasing");
  }

  Correlator c;
  c.tabulated_ = true;
  std::size_t first = 0;
  if (!nu.empty() && nu[0] == 0.0) {
    c.has_zero_sample_ = true;
    c.g_zero_ = values[0];
    first = 1;
  }
  const std::size_t n = nu.size() - first;
  if (n < 2)
    throw std::invalid_argument(
        "Correlator::tabulated: need at least two positive-frequency samples");

  c.s_.resize(n);
  c.t_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.s_[i] = std::log(nu[first + i]);
    c.t_[i] = std::log(values[first + i]);
  }
  c.d_ = monotone_slopes(c.s_, c.t_);
  c.nu_first_ = nu[first];
  c.nu_last_ = nu.back();
  if (!c.has_zero_sample_) c.g_zero_ = values[first];

  // Tail constant: two-point least squares of ln G = ln c - 2 ln nu over
  // the final samples, i.e. the geometric mean of G nu^2.
  const std::size_t last = nu.size() - 1;
  const double c_last = values[last] * nu[last] * nu[last];
  const double c_prev = values[last - 1] * nu[last - 1] * nu[last - 1];
  c.tail_c_ = std::sqrt(c_last * c_prev);

  if (c.has_zero_sample_) {
    // End slope of the linear-nu Hermite piece on [0, nu_first], from the
    // log-log slope at the first node, clamped for monotone shape.
    const double g1 = values[first];
    double m1 = g1 * c.d_[0] / c.nu_first_;
    const double secant = (g1 - c.g_zero_) / c.nu_first_;
    if (secant == 0.0)
      m1 = 0.0;
    else if (m1 / secant > 3.0)
      m1 = 3.0 * secant;
    else if (m1 / secant < 0.0)
      m1 = 0.0;
    c.zero_slope_cap_ = m1;
  }
  return c;
}

double Correlator::operator()(double nu) const {
  if (!(nu >= 0.0)) throw std::domain_error("Correlator: requires nu >= 0");
  if (!tabulated_) return 1.0 / (m_ * (nu * nu + omega_ * omega_));
  if (nu == 0.0) return g_zero_;
  if (nu <= nu_first_) {
    // Flat below the first node (even function of nu), unless the file
    // pinned the origin, in which case a monotone Hermite piece bridges it.
    if (!has_zero_sample_) return std::exp(t_.front());
    return hermite(nu, 0.0, nu_first_, g_zero_, std::exp(t_.front()), 0.0,
                   zero_slope_cap_);
  }
  if (nu >= nu_last_) return tail_c_ / (nu * nu);
  const double s = std::log(nu);
  const auto it = std::upper_bound(s_.begin(), s_.end(), s);
  const std::size_t i = std::size_t(it - s_.begin()) - 1;
  return std::exp(hermite(s, s_[i], s_[i + 1], t_[i], t_[i + 1], d_[i], d_[i + 1]));
}

double Correlator::at_zero() const {
  if (!tabulated_) return 1.0 / (m_ * (omega_ * omega_));
  return g_zero_;
}

double Correlator::max_trusted_nu() const {
  return tabulated_ ? nu_last_ : std::numeric_limits<double>::infinity();
}

Correlator parse_correlator(std::istream& in, double omega) {
  std::string line;
  int line_no = 0;
  bool omega_units = false;
  std::vector<double> nu, g;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::string rest = line.substr(first + 1);
      std::istringstream hs(rest);
      std::string key, value;
      hs >> key >> value;
      if (key == "units:") {
        if (value == "omega")
          omega_units = true;
        else if (value == "absolute")
          omega_units = false;
        else
          throw CorrelatorParseError(
              "correlator file: unknown units '" + value + "' at line " +
                  std::to_string(line_no) + " (expected omega|absolute)",
              line_no);
      }
      continue;
    }
    std::istringstream ls(line);
    double a = 0.0, b = 0.0;
    std::string extra;
    if (!(ls >> a >> b))
      throw CorrelatorParseError("correlator file: expected two numeric columns at line " +
                                     std::to_string(line_no),
                                 line_no);
    if (ls >> extra)
      throw CorrelatorParseError("correlator file: trailing data at line " +
                                     std::to_string(line_no),
                                 line_no);
    nu.push_back(a);
    g.push_back(b);
  }
  if (nu.empty())
    throw CorrelatorParseError("correlator file: no data rows", line_no);
  if (omega_units) {
    if (!(omega > 0.0))
      throw std::invalid_argument(
          "correlator file declares '# units: omega'; a positive omega is required");
    for (double& v : nu) v *= omega;
  }
  try {
    return Correlator::tabulated(std::move(nu), std::move(g));
  } catch (const std::invalid_argument& e) {
    throw CorrelatorParseError(std::string("correlator file: ") + e.what(), line_no);
  }
}

Correlator load_correlator_file(const std::string& path, double omega) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open correlator file: " + path);
  return parse_correlator(in, omega);
}

namespace {

// Integrand weight mass lives in u <= ~10; beyond that the exponential has
// killed everything at the tolerances used here.
constexpr double kCoverageU = 10.0;

std::vector<double> table_breakpoints(const Correlator& c, double r) {
  std::vector<double> bps;
  if (c.is_tabulated()) {
    const double edge = c.max_trusted_nu() * r;
    if (edge > 0.0 && edge < 80.0) bps.push_back(edge);
  }
  return bps;
}

}  // namespace

double energy_general(const Correlator& c, double q, double r, double tol) {
  if (!(r > 0.0)) throw std::domain_error("energy_general: requires r > 0");
  if (!(tol > 0.0)) throw std::domain_error("energy_general: tol must be > 0");
  if (q == 0.0) return 0.0;
  if (c.is_tabulated() && c.max_trusted_nu() < kCoverageU / r) {
    throw CorrelatorRangeError(
        "energy_general: tabulated correlator covers nu <= " +
            std::to_string(c.max_trusted_nu()) + " but nu_max = " +
            std::to_string(kCoverageU / r) + " is required at r = " +
            std::to_string(r),
        kCoverageU / r);
  }
  const auto integrand = [&c, r](double u) {
    if (u > 350.0) return 0.0;
    const double gv = c(u / r);
    return std::exp(-2.0 * u) * gv * gv *
           ((u + 2.0) * u * u * u + (5.0 * u + 6.0) * u + 3.0);
  };
  const QuadResult qr =
      integrate_semi_infinite(integrand, table_breakpoints(c, r), 1e-300, tol);
  const double q2 = q * q;
  return -q2 * q2 / (16.0 * kPi * kPi * kPi * std::pow(r, 7)) * qr.value;
}

double asymptote_general(const Correlator& c, double q, double r) {
  if (!(r > 0.0)) throw std::domain_error("asymptote_general: requires r > 0");
  const double g0 = c.at_zero();
  if (!std::isfinite(g0))
    throw std::range_error("asymptote_general: correlator diverges at nu = 0");
  return detail::retarded_tail_energy(q, g0, r);
}

double london_general(const Correlator& c, double q, double r, double tol) {
  if (!(r > 0.0)) throw std::domain_error("london_general: requires r > 0");
  if (!(tol > 0.0)) throw std::domain_error("london_general: tol must be > 0");
  if (q == 0.0) return 0.0;
  std::vector<double> bps;
  if (c.is_tabulated()) {
    bps.push_back(c.max_trusted_nu());
  }
  const auto integrand = [&c](double nu) {
    const double gv = c(nu);
    return gv * gv;
  };
  const QuadResult qr = integrate_semi_infinite(integrand, bps, 1e-300, tol);
  const double q2 = q * q;
  const double r2 = r * r;
  return -3.0 * q2 * q2 / (16.0 * kPi * kPi * kPi * r2 * r2 * r2) * qr.value;
}

double london_general_alt(const Correlator& c, double q, double r, double tol) {
  return london_general(c, q, r, tol) * (kPi * kPi / 4.0);
}

}  // namespace vdw
