#pragma once

// Weak-coupling (order q^4) interaction energy for a general central
// binding potential, expressed through the frequency-space position
// autocorrelation G(nu) of the bound electron:
//
//   E(r) = -q^4/(16 pi^3 r^7) int_0^inf du e^{-2u} G(u/r)^2
//                                        (u^4 + 2u^3 + 5u^2 + 6u + 3)
//
// G can be the harmonic closed form 1/(m (nu^2 + omega^2)) or a tabulated
// function read from a two-column text file.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace vdw {

// Evaluable scalar correlator, positive and non-increasing in nu.
// Tabulated data is interpolated with a monotone piecewise cubic in
// (ln nu, ln G); past the last sample the tail is extrapolated as c/nu^2
// (kinetic-term decay), c fitted to the final two samples. Immutable after
// construction; evaluation is thread-safe.
class Correlator {
 public:
  static Correlator harmonic(double m, double omega);

  // nu strictly increasing, starting at 0 or near 0; values positive,
  // finite and non-increasing. Throws std::invalid_argument on violations.
  static Correlator tabulated(std::vector<double> nu, std::vector<double> values);

  double operator()(double nu) const;
  double at_zero() const;

  bool is_tabulated() const { return tabulated_; }
  // Largest trusted frequency: last table node, or +inf for closed forms.
  double max_trusted_nu() const;

 private:
  Correlator() = default;

  bool tabulated_ = false;
  // harmonic
  double m_ = 0.0;
  double omega_ = 0.0;
  // tabulated: log-log nodes with monotone-cubic slopes
  std::vector<double> s_;  // ln nu
  std::vector<double> t_;  // ln G
  std::vector<double> d_;  // dt/ds at the nodes
  double g_zero_ = 0.0;    // value at nu = 0
  double nu_first_ = 0.0;  // first positive node
  double nu_last_ = 0.0;
  double tail_c_ = 0.0;    // G ~ tail_c / nu^2 beyond nu_last
  bool has_zero_sample_ = false;
  double zero_slope_cap_ = 0.0;  // Hermite end slope for the [0, nu_first] piece
};

class CorrelatorParseError : public std::runtime_error {
 public:
  CorrelatorParseError(const std::string& what, int line)
      : std::runtime_error(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_ = 0;
};

// Tabulated correlator needs data beyond its last node to cover the
// integrand; carries the frequency range that would be required.
class CorrelatorRangeError : public std::runtime_error {
 public:
  CorrelatorRangeError(const std::string& what, double needed_nu_max)
      : std::runtime_error(what), needed_(needed_nu_max) {}
  double needed_nu_max() const noexcept { return needed_; }

 private:
  double needed_ = 0.0;
};

// Two whitespace-separated columns "nu g", '#' comments, optional header
// "# units: omega|absolute" (default absolute). When the file declares
// omega units the nu column is multiplied by `omega` (> 0 required then;
// the G column is used as given). Parse errors carry 1-based line numbers.
Correlator load_correlator_file(const std::string& path, double omega = 0.0);
Correlator parse_correlator(std::istream& in, double omega = 0.0);

// The reduced single integral above. Throws CorrelatorRangeError when a
// tabulated correlator does not reach nu = 10/r.
double energy_general(const Correlator& c, double q, double r,
                      double tol = 1e-10);

// Long-distance tail -23/(4 pi)^3 q^4 G(0)^2 / r^7; std::range_error if
// G(0) is not finite.
double asymptote_general(const Correlator& c, double q, double r);

// London limit: -3 q^4/(16 pi^3 r^6) int_0^inf G(nu)^2 dnu, the r -> 0
// reduction of energy_general.
double london_general(const Correlator& c, double q, double r,
                      double tol = 1e-10);

// Same integral under an alternative prefactor convention that circulates
// for this limit; exactly pi^2/4 times london_general. Diagnostic only.
double london_general_alt(const Correlator& c, double q, double r,
                          double tol = 1e-10);

}  // namespace vdw
