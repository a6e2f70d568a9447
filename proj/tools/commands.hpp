#pragma once

// Command implementations behind the vdw CLI. Split from main() so tests
// can drive them directly against string streams.
//
// Exit-code contract: 0 = all rows succeeded, 1 = usage/parse error,
// 2 = numerical failure on at least one row.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vdw/core_model.hpp"

namespace vdw::cli {

enum class Spacing { Linear, Log };

struct SweepSpec {
  double x_min = 0.0;
  double x_max = 0.0;
  int n_points = 256;
  Spacing spacing = Spacing::Log;
  double kappa = 0.0;
  double tol = 1e-10;
};

// Locale-independent shortest-ish formatting (12 significant digits).
std::string format_double(double v);

std::vector<double> make_grid(double lo, double hi, int n, Spacing spacing);

// Rows are computed concurrently (worker count capped by VDW_THREADS) and
// emitted in grid order. When `physical` is given the kappa of the spec is
// ignored and energies are in absolute units; otherwise they are in units
// of omega.
int cmd_energy(const SweepSpec& spec, const std::optional<AtomParams>& physical,
               std::ostream& out, std::ostream& err);

int cmd_thresholds(double kappa, const std::optional<AtomParams>& physical,
                   std::ostream& out, std::ostream& err);

int cmd_general(const std::string& correlator_path, double q,
                const std::vector<double>& r_list, double tol, double omega,
                std::ostream& out, std::ostream& err);

// Writes fig1.csv / fig1.gp (weak-coupling energy over x in [0.1, 10]) and
// fig2.csv / fig2.gp (full energy, kappa = 0.5, x in [0.3, 3], with the
// two threshold positions marked). Grid sizes are overridable for
// refinement checks.
int cmd_figures(const std::string& out_dir, std::ostream& err,
                int fig1_points = 512, int fig2_points = 256);

}  // namespace vdw::cli
