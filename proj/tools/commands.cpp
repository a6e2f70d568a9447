#include "commands.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>
#include <vector>

#include "vdw/energy_full.hpp"
#include "vdw/general_potential.hpp"
#include "vdw/quadrature.hpp"
#include "vdw/regimes.hpp"

namespace vdw::cli {

namespace {

unsigned worker_count(std::size_t n_jobs) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("VDW_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) n = unsigned(std::min<long>(v, 256));
  }
  return unsigned(std::min<std::size_t>(n, std::max<std::size_t>(1, n_jobs)));
}

// Runs fn(i) for i in [0, n) on a small worker pool, rethrowing the first
// failure. fn must be safe to call concurrently; results are indexed, so
// output order never depends on scheduling.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const unsigned workers = worker_count(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!failed.load(std::memory_order_relaxed)) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) break;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::vector<double> make_grid(double lo, double hi, int n, Spacing spacing) {
  std::vector<double> g(n);
  if (spacing == Spacing::Log) {
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
      g[i] = std::exp(llo + (lhi - llo) * i / double(n - 1));
  } else {
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / double(n - 1);
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

namespace {

struct EnergyRow {
  double x = 0.0;
  ComplexEnergy full;
  double weak = 0.0, vdw = 0.0, london = 0.0, g = 0.0;
  std::string error;
};

}  // namespace

int cmd_energy(const SweepSpec& spec, const std::optional<AtomParams>& physical,
               std::ostream& out, std::ostream& err) {
  if (!(spec.x_min > 0.0) || !(spec.x_max > spec.x_min) || spec.n_points < 2 ||
      !(spec.tol > 0.0)) {
    err << "energy: need 0 < x-min < x-max, points >= 2 and tol > 0\n";
    return 1;
  }
  AtomParams p;
  if (physical) {
    p = *physical;
  } else {
    if (!(spec.kappa > 0.0)) {
      err << "energy: kappa must be positive\n";
      return 1;
    }
    // Equivalent one-atom parameters with omega = m = 1, so energies come
    // out in units of omega.
    p = AtomParams{std::sqrt(2.0 * 3.141592653589793238462643 * spec.kappa),
                   1.0, 1.0};
  }
  try {
    validate(p);
  } catch (const std::exception& e) {
    err << "energy: " << e.what() << "\n";
    return 1;
  }

  const std::vector<double> grid =
      make_grid(spec.x_min, spec.x_max, spec.n_points, spec.spacing);
  std::vector<EnergyRow> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    EnergyRow& row = rows[i];
    row.x = grid[i];
    const double r = row.x / p.omega;
    try {
      const DimensionlessPoint pt = nondimensionalize(p, r);
      row.g = coupling_ratio(pt);
      row.full = energy_physical(p, r, spec.tol);
      row.weak = p.omega * weak_energy_closed(pt);
      row.vdw = vdw_asymptote(p, r);
      row.london = london_energy(p, r);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });

  out << "# x,re_full,im_full,e_weak_closed,e_vdw_asymptote,e_london,g_ratio,error\n";
  bool any_failed = false;
  for (const EnergyRow& row : rows) {
    if (row.error.empty()) {
      out << format_double(row.x) << ',' << format_double(row.full.re) << ','
          << format_double(row.full.im) << ',' << format_double(row.weak)
          << ',' << format_double(row.vdw) << ',' << format_double(row.london)
          << ',' << format_double(row.g) << ",\n";
    } else {
      any_failed = true;
      std::string msg = row.error;
      for (char& ch : msg)
        if (ch == ',' || ch == '\n') ch = ';';
      out << format_double(row.x) << ",nan,nan,nan,nan,nan,nan," << msg << "\n";
    }
  }
  return any_failed ? 2 : 0;
}

int cmd_thresholds(double kappa, const std::optional<AtomParams>& physical,
                   std::ostream& out, std::ostream& err) {
  try {
    if (physical) {
      const Thresholds t = thresholds(*physical);
      out << "x1 = " << format_double(t.x1) << "\n"
          << "x2 = " << format_double(t.x2) << "\n"
          << "r1 = " << format_double(t.r1) << "\n"
          << "r2 = " << format_double(t.r2) << "\n";
    } else {
      if (!(kappa > 0.0)) {
        err << "thresholds: kappa must be positive\n";
        return 1;
      }
      out << "x1 = " << format_double(threshold_x1(kappa)) << "\n"
          << "x2 = " << format_double(threshold_x2(kappa)) << "\n";
    }
  } catch (const std::exception& e) {
    err << "thresholds: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int cmd_general(const std::string& correlator_path, double q,
                const std::vector<double>& r_list, double tol, double omega,
                std::ostream& out, std::ostream& err) {
  if (r_list.empty()) {
    err << "general: need at least one r value\n";
    return 1;
  }
  for (double r : r_list) {
    if (!(r > 0.0)) {
      err << "general: r values must be positive\n";
      return 1;
    }
  }
  Correlator corr = Correlator::harmonic(1.0, 1.0);
  try {
    corr = load_correlator_file(correlator_path, omega);
  } catch (const std::exception& e) {
    err << "general: " << e.what() << "\n";
    return 1;
  }

  struct Row {
    double r = 0.0, e = 0.0, asy = 0.0, lon = 0.0;
    std::string error;
  };
  std::vector<Row> rows(r_list.size());
  parallel_for(r_list.size(), [&](std::size_t i) {
    Row& row = rows[i];
    row.r = r_list[i];
    try {
      row.e = energy_general(corr, q, row.r, tol);
      row.asy = asymptote_general(corr, q, row.r);
      row.lon = london_general(corr, q, row.r, tol);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });

  out << "# r,e_general,e_asymptote,e_london_general,error\n";
  bool any_failed = false;
  for (const Row& row : rows) {
    if (row.error.empty()) {
      out << format_double(row.r) << ',' << format_double(row.e) << ','
          << format_double(row.asy) << ',' << format_double(row.lon) << ",\n";
    } else {
      any_failed = true;
      std::string msg = row.error;
      for (char& ch : msg)
        if (ch == ',' || ch == '\n') ch = ';';
      out << format_double(row.r) << ",nan,nan,nan," << msg << "\n";
    }
  }
  return any_failed ? 2 : 0;
}

int cmd_figures(const std::string& out_dir, std::ostream& err, int fig1_points,
                int fig2_points) {
  namespace fs = std::filesystem;
  const fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);

  const auto open = [&](const char* name, std::ofstream& f) {
    f.open(dir / name, std::ios::binary);  // '\n' only, byte-reproducible
    if (!f) err << "figures: cannot write " << (dir / name).string() << "\n";
    return bool(f);
  };

  // fig 1: weak-coupling energy scaled by the global factor A.
  {
    std::ofstream f;
    if (!open("fig1.csv", f)) return 1;
    f << "# x,Ew_over_A\n";
    constexpr double kappa_unit_a = 0.15915494309189533576888376337251;  // 1/(2 pi): A = 1
    for (double x : make_grid(0.1, 10.0, fig1_points, Spacing::Log)) {
      const double ew = weak_energy_closed({x, kappa_unit_a});
      f << format_double(x) << ',' << format_double(ew) << "\n";
    }
  }
  {
    std::ofstream f;
    if (!open("fig1.gp", f)) return 1;
    f << "# gnuplot script for fig1.csv\n"
         "set datafile separator ','\n"
         "set logscale x\n"
         "set xlabel 'x = {/Symbol W} r'\n"
         "set ylabel 'E_w / A'\n"
         "set grid\n"
         "plot 'fig1.csv' using 1:2 with lines lw 2 title 'weak-coupling energy'\n";
  }

  // fig 2: real and imaginary parts at kappa = 0.5 with threshold markers.
  const double kappa = 0.5;
  const double x1 = threshold_x1(kappa);
  const double x2 = threshold_x2(kappa);
  {
    std::ofstream f;
    if (!open("fig2.csv", f)) return 1;
    f << "# x,re,im\n";
    const std::vector<double> grid = make_grid(0.3, 3.0, fig2_points, Spacing::Log);
    std::vector<ComplexEnergy> vals(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
      vals[i] = energy_dimensionless({grid[i], kappa}, 1e-10);
    });
    for (std::size_t i = 0; i < grid.size(); ++i)
      f << format_double(grid[i]) << ',' << format_double(vals[i].re) << ','
        << format_double(vals[i].im) << "\n";
  }
  {
    std::ofstream f;
    if (!open("fig2.gp", f)) return 1;
    f << "# gnuplot script for fig2.csv\n"
         "set datafile separator ','\n"
         "set xlabel 'x = {/Symbol W} r'\n"
         "set ylabel 'E / {/Symbol W}'\n"
         "set grid\n";
    f << "set arrow 1 from " << format_double(x1)
      << ", graph 0 to " << format_double(x1)
      << ", graph 1 nohead dashtype 2 lc rgb 'gray40'\n";
    f << "set arrow 2 from " << format_double(x2)
      << ", graph 0 to " << format_double(x2)
      << ", graph 1 nohead dashtype 2 lc rgb 'gray40'\n";
    f << "set label 1 'x_1' at " << format_double(x1) << ", graph 0.95\n"
      << "set label 2 'x_2' at " << format_double(x2) << ", graph 0.95\n";
    f << "plot 'fig2.csv' using 1:2 with lines lw 2 title 'Re',\\\n"
         "     'fig2.csv' using 1:3 with lines lw 2 title 'Im'\n";
  }
  return 0;
}

}  // namespace vdw::cli
