// vdw - interaction energy of two harmonically bound dipoles coupled to the
// electromagnetic vacuum. Subcommands: energy, thresholds, general, figures.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "commands.hpp"

namespace {

std::vector<double> parse_r_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vacuum interaction energy of two harmonically bound dipoles"};
  app.require_subcommand(1);

  // --- energy ---------------------------------------------------------
  auto* energy = app.add_subcommand(
      "energy", "Sweep the full log-det energy and its closed-form regimes over x");
  vdw::cli::SweepSpec spec;
  double q = 0.0, m = 1.0, omega = 1.0;
  bool log_spacing = false;
  std::string out_path;
  auto* kap = energy->add_option("--kappa", spec.kappa,
                                 "dimensionless coupling (q^2/2pi)(omega/m)");
  auto* eq = energy->add_option("--q", q, "dipole coupling charge");
  auto* em = energy->add_option("--m", m, "electron mass");
  auto* ew = energy->add_option("--omega", omega, "binding frequency");
  kap->excludes(eq)->excludes(em)->excludes(ew);
  energy->add_option("--x-min", spec.x_min, "lower end of x = omega r")->required();
  energy->add_option("--x-max", spec.x_max, "upper end of x")->required();
  energy->add_option("--points", spec.n_points, "grid size (>= 2)");
  energy->add_flag("--log", log_spacing, "log-spaced grid");
  energy->add_option("--tol", spec.tol, "relative quadrature tolerance");
  energy->add_option("--out", out_path, "output CSV path (default stdout)");

  // --- thresholds ------------------------------------------------------
  auto* thr = app.add_subcommand("thresholds",
                                 "Instability thresholds x1, x2 (and r1, r2)");
  double t_kappa = 0.0, t_q = 0.0, t_m = 1.0, t_omega = 1.0;
  auto* tkap = thr->add_option("--kappa", t_kappa, "dimensionless coupling");
  auto* tq = thr->add_option("--q", t_q, "dipole coupling charge");
  auto* tm = thr->add_option("--m", t_m, "electron mass");
  auto* tw = thr->add_option("--omega", t_omega, "binding frequency");
  tkap->excludes(tq)->excludes(tm)->excludes(tw);

  // --- general ---------------------------------------------------------
  auto* gen = app.add_subcommand(
      "general", "Energy for a tabulated dipole correlator G(nu)");
  std::string corr_path, r_csv;
  double g_q = 1.0, g_tol = 1e-10, g_omega = 0.0;
  gen->add_option("--correlator", corr_path, "two-column correlator file")
      ->required();
  gen->add_option("--q", g_q, "dipole coupling charge")->required();
  gen->add_option("--r", r_csv, "comma-separated list of distances")->required();
  gen->add_option("--tol", g_tol, "relative quadrature tolerance");
  gen->add_option("--omega", g_omega,
                  "frequency scale (required for '# units: omega' files)");
  std::string g_out_path;
  gen->add_option("--out", g_out_path, "output CSV path (default stdout)");

  // --- figures ---------------------------------------------------------
  auto* figs = app.add_subcommand("figures",
                                  "Emit fig1/fig2 CSV data and gnuplot scripts");
  std::string fig_dir = ".";
  figs->add_option("--out", fig_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const auto with_output = [&](const std::string& path, auto&& fn) -> int {
    if (path.empty()) return fn(std::cout);
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file: " << path << "\n";
      return 1;
    }
    return fn(f);
  };

  try {
    if (energy->parsed()) {
      spec.spacing = log_spacing ? vdw::cli::Spacing::Log : vdw::cli::Spacing::Linear;
      std::optional<vdw::AtomParams> phys;
      if (eq->count()) phys = vdw::AtomParams{q, m, omega};
      if (!eq->count() && !kap->count()) {
        std::cerr << "energy: either --kappa or --q/--m/--omega is required\n";
        return 1;
      }
      return with_output(out_path, [&](std::ostream& os) {
        return vdw::cli::cmd_energy(spec, phys, os, std::cerr);
      });
    }
    if (thr->parsed()) {
      std::optional<vdw::AtomParams> phys;
      if (tq->count()) phys = vdw::AtomParams{t_q, t_m, t_omega};
      if (!tq->count() && !tkap->count()) {
        std::cerr << "thresholds: either --kappa or --q/--m/--omega is required\n";
        return 1;
      }
      return vdw::cli::cmd_thresholds(t_kappa, phys, std::cout, std::cerr);
    }
    if (gen->parsed()) {
      std::vector<double> rs;
      try {
        rs = parse_r_list(r_csv);
      } catch (const std::exception&) {
        std::cerr << "general: could not parse --r list '" << r_csv << "'\n";
        return 1;
      }
      return with_output(g_out_path, [&](std::ostream& os) {
        return vdw::cli::cmd_general(corr_path, g_q, rs, g_tol, g_omega, os,
                                     std::cerr);
      });
    }
    if (figs->parsed()) {
      return vdw::cli::cmd_figures(fig_dir, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
