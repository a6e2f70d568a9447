#include "vdw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace vdw {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]
// (QUADPACK dqk15 values). Positive abscissae; odd indices are the
// embedded Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double err = 0.0;
  bool tail = false;  // panel lives in the mapped coordinate t
};

struct Workspace {
  const Integrand* f = nullptr;
  double u_split = 0.0;  // start of the mapped tail
  long n_evals = 0;
};

double eval_point(Workspace& ws, double coord, bool tail) {
  double u = coord;
  double jac = 1.0;
  if (tail) {
    const double om = 1.0 - coord;
    u = ws.u_split + coord / om;
    jac = 1.0 / (om * om);
  }
  ++ws.n_evals;
  const double y = (*ws.f)(u);
  if (!std::isfinite(y)) {
    throw std::runtime_error(
        "integrate_semi_infinite: integrand returned a non-finite value at u = " +
        std::to_string(u));
  }
  const double v = y * jac;
  if (!std::isfinite(v)) {
    throw std::runtime_error(
        "integrate_semi_infinite: non-finite tail-mapped value at u = " +
        std::to_string(u));
  }
  return v;
}

Panel make_panel(Workspace& ws, double a, double b, bool tail) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = eval_point(ws, c, tail);
  double k15 = kWgk[7] * fc;
  double g7 = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = eval_point(ws, c - dx, tail);
    const double f2 = eval_point(ws, c + dx, tail);
    k15 += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) g7 += kWg[j / 2] * (f1 + f2);
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.tail = tail;
  p.value = h * k15;
  p.err = h * std::abs(k15 - g7);
  return p;
}

// Heap ordering (max-heap on the error estimate, so the worst panel sits at
// the front); ties broken by position to keep runs deterministic.
bool heap_less(const Panel& lhs, const Panel& rhs) {
  if (lhs.err != rhs.err) return lhs.err < rhs.err;
  if (lhs.tail != rhs.tail) return lhs.tail;
  return lhs.a > rhs.a;
}

}  // namespace

QuadResult integrate_semi_infinite(const Integrand& f,
                                   std::span<const double> breakpoints,
                                   double abs_tol, double rel_tol,
                                   long max_evals) {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw std::invalid_argument("integrate_semi_infinite: tolerances must be positive");
  if (!f) throw std::invalid_argument("integrate_semi_infinite: null integrand");
  double prev = 0.0;
  for (double bp : breakpoints) {
    if (!(bp > prev) || !std::isfinite(bp))
      throw std::invalid_argument(
          "integrate_semi_infinite: breakpoints must be finite, positive and strictly increasing");
    prev = bp;
  }

  Workspace ws;
  ws.f = &f;
  const double bp_max = breakpoints.empty() ? 1.0 : breakpoints.back();
  ws.u_split = 8.0 * std::max(1.0, bp_max);

  const long initial_cost = 15L * (long(breakpoints.size()) + 2L);
  if (max_evals < initial_cost + 30)
    throw std::invalid_argument("integrate_semi_infinite: evaluation budget too small");

  std::vector<Panel> panels;
  panels.reserve(64);
  double lo = 0.0;
  for (double bp : breakpoints) {
    panels.push_back(make_panel(ws, lo, bp, false));
    lo = bp;
  }
  panels.push_back(make_panel(ws, lo, ws.u_split, false));
  panels.push_back(make_panel(ws, 0.0, 1.0, true));
  std::make_heap(panels.begin(), panels.end(), heap_less);

  // Panels too narrow to bisect get parked here and keep contributing.
  double locked_value = 0.0;
  double locked_err = 0.0;

  double total_value = 0.0;
  double total_err = 0.0;
  for (const Panel& p : panels) {
    total_value += p.value;
    total_err += p.err;
  }

  const auto result = [&]() {
    // Final clean resummation, largest magnitudes last.
    double v = locked_value;
    double e = locked_err;
    for (const Panel& p : panels) {
      v += p.value;
      e += p.err;
    }
    return QuadResult{v, e, ws.n_evals};
  };

  while (true) {
    const double target = std::max(abs_tol, rel_tol * std::abs(total_value));
    if (total_err <= target) return result();
    if (panels.empty() || ws.n_evals + 30 > max_evals) {
      const QuadResult best = result();
      throw QuadratureError(
          "integrate_semi_infinite: no convergence within " +
              std::to_string(max_evals) + " evaluations (est_error = " +
              std::to_string(best.est_error) + ")",
          best);
    }

    std::pop_heap(panels.begin(), panels.end(), heap_less);
    const Panel worst = panels.back();
    panels.pop_back();

    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a) || !(mid < worst.b)) {
      // Cannot be refined further at double precision; keeps contributing.
      locked_value += worst.value;
      locked_err += worst.err;
      continue;
    }

    const Panel left = make_panel(ws, worst.a, mid, worst.tail);
    const Panel right = make_panel(ws, mid, worst.b, worst.tail);
    total_value += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    panels.push_back(left);
    std::push_heap(panels.begin(), panels.end(), heap_less);
    panels.push_back(right);
    std::push_heap(panels.begin(), panels.end(), heap_less);
  }
}

}  // namespace vdw
