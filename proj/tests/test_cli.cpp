#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "vdw/general_potential.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("vdw_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
  const fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = env + " " + std::string(VDW_CLI_PATH) + " " + args +
                          " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

struct Csv {
  std::string header;
  std::vector<std::vector<std::string>> rows;
};

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      csv.header = line;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.push_back("");
    csv.rows.push_back(std::move(cells));
  }
  return csv;
}

double cell(const Csv& csv, std::size_t row, std::size_t col) {
  return std::stod(csv.rows.at(row).at(col));
}

}  // namespace

TEST_CASE("energy: minimal sweep framing") {
  const RunResult r = run_cli("energy --kappa 0.5 --x-min 1 --x-max 2 --points 2");
  CHECK(r.exit_code == 0);
  const Csv csv = parse_csv(r.out);
  CHECK(csv.header ==
        "# x,re_full,im_full,e_weak_closed,e_vdw_asymptote,e_london,g_ratio,error");
  REQUIRE(csv.rows.size() == 2);
  CHECK(cell(csv, 0, 0) == 1.0);
  CHECK(cell(csv, 1, 0) == 2.0);
}

TEST_CASE("energy: threshold structure at kappa = 0.5") {
  const RunResult r =
      run_cli("energy --kappa 0.5 --x-min 0.3 --x-max 3 --points 256 --log");
  CHECK(r.exit_code == 0);
  const Csv csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 256);
  int n_im_pos = 0;
  for (const auto& row : csv.rows) {
    const double x = std::stod(row[0]);
    const double im = std::stod(row[2]);
    if (x > 0.7937006) CHECK(im == 0.0);
    if (im > 0.0) ++n_im_pos;
  }
  CHECK(n_im_pos > 10);  // the unstable region is well sampled
}

TEST_CASE("energy: weak-coupling rows collapse onto the closed form") {
  const RunResult r =
      run_cli("energy --kappa 0.01 --x-min 5 --x-max 50 --points 16 --log");
  CHECK(r.exit_code == 0);
  const Csv csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 16);
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const double re = cell(csv, i, 1);
    const double weak = cell(csv, i, 3);
    CHECK(std::abs(re - weak) < 1e-4 * std::abs(re));
  }
}

TEST_CASE("energy: physical parameters and flag exclusivity") {
  const RunResult r = run_cli(
      "energy --q 0.5 --m 1 --omega 2 --x-min 1 --x-max 2 --points 3");
  CHECK(r.exit_code == 0);
  const Csv ok = parse_csv(r.out);
  REQUIRE(ok.rows.size() == 3);

  const RunResult both = run_cli(
      "energy --kappa 0.5 --q 1 --x-min 1 --x-max 2 --points 2");
  CHECK(both.exit_code == 1);
  const RunResult neither = run_cli("energy --x-min 1 --x-max 2 --points 2");
  CHECK(neither.exit_code == 1);
  const RunResult badgrid = run_cli("energy --kappa 0.5 --x-min 2 --x-max 1");
  CHECK(badgrid.exit_code == 1);
}

TEST_CASE("energy: deterministic output, also across thread caps") {
  const std::string args = "energy --kappa 0.4 --x-min 0.5 --x-max 2 --points 20 --log";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  const RunResult c = run_cli(args, "VDW_THREADS=1");
  const RunResult d = run_cli(args, "VDW_THREADS=7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out == d.out);
}

TEST_CASE("thresholds: digits and usage errors") {
  const RunResult r = run_cli("thresholds --kappa 0.5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("x1 = 0.793700525984") != std::string::npos);
  CHECK(r.out.find("x2 = 0.629960524947") != std::string::npos);
  CHECK(r.out.find("r1") == std::string::npos);  // no physical units given

  const RunResult phys = run_cli("thresholds --q 1 --m 1 --omega 1");
  CHECK(phys.exit_code == 0);
  CHECK(phys.out.find("r1 = ") != std::string::npos);
  CHECK(phys.out.find("r2 = ") != std::string::npos);

  CHECK(run_cli("thresholds --kappa 0").exit_code == 1);
  CHECK(run_cli("thresholds").exit_code == 1);
  CHECK(run_cli("thresholds --kappa 1 --q 1").exit_code == 1);
}

TEST_CASE("general: harmonic table vs built-in harmonic correlator") {
  const fs::path table = scratch_dir() / "harmonic.txt";
  {
    std::ofstream f(table);
    f << "# units: absolute\n";
    const int n = 2048;
    for (int i = 0; i < n; ++i) {
      const double nu =
          std::exp(std::log(1e-4) + (std::log(1e4) - std::log(1e-4)) * i / (n - 1));
      f << nu << " " << 1.0 / (nu * nu + 1.0) << "\n";
    }
  }
  const RunResult r =
      run_cli("general --correlator " + table.string() + " --q 0.5 --r 0.5,1,2,5");
  CHECK(r.exit_code == 0);
  const Csv csv = parse_csv(r.out);
  CHECK(csv.header == "# r,e_general,e_asymptote,e_london_general,error");
  REQUIRE(csv.rows.size() == 4);
  const vdw::Correlator harmonic = vdw::Correlator::harmonic(1.0, 1.0);
  for (std::size_t i = 0; i < 4; ++i) {
    const double rr = cell(csv, i, 0);
    const double e = cell(csv, i, 1);
    const double ref = vdw::energy_general(harmonic, 0.5, rr, 1e-10);
    CHECK(e < 0.0);
    CHECK(std::abs(e - ref) <= 1e-6 * std::abs(ref));
    CHECK(cell(csv, i, 2) ==
          doctest::Approx(vdw::asymptote_general(harmonic, 0.5, rr)).epsilon(1e-6));
  }

  // single r -> single data row
  const RunResult one =
      run_cli("general --correlator " + table.string() + " --q 0.5 --r 2");
  CHECK(parse_csv(one.out).rows.size() == 1);

  // empty file -> parse error, exit 1
  const fs::path empty = scratch_dir() / "empty.txt";
  std::ofstream(empty).close();
  CHECK(run_cli("general --correlator " + empty.string() + " --q 0.5 --r 1").exit_code == 1);

  // range shortfall -> numerical failure, exit 2, row sentinel
  const fs::path small = scratch_dir() / "small.txt";
  {
    std::ofstream f(small);
    for (int i = 0; i < 64; ++i) {
      const double nu = 1e-3 + i * (5.0 - 1e-3) / 63.0;
      f << nu << " " << 1.0 / (nu * nu + 1.0) << "\n";
    }
  }
  const RunResult shortr =
      run_cli("general --correlator " + small.string() + " --q 0.5 --r 0.01");
  CHECK(shortr.exit_code == 2);
  CHECK(shortr.out.find("nan") != std::string::npos);
}

TEST_CASE("figures: files, structure, reproducibility") {
  const fs::path dir1 = scratch_dir() / "figs1";
  const fs::path dir2 = scratch_dir() / "figs2";
  CHECK(run_cli("figures --out " + dir1.string()).exit_code == 0);
  CHECK(run_cli("figures --out " + dir2.string()).exit_code == 0);
  for (const char* name : {"fig1.csv", "fig2.csv", "fig1.gp", "fig2.gp"}) {
    CHECK(fs::exists(dir1 / name));
    CHECK(slurp(dir1 / name) == slurp(dir2 / name));  // byte-identical rerun
  }

  const Csv fig1 = parse_csv(slurp(dir1 / "fig1.csv"));
  CHECK(fig1.rows.size() >= 256);
  for (const auto& row : fig1.rows) CHECK(std::stod(row[1]) < 0.0);

  const Csv fig2 = parse_csv(slurp(dir1 / "fig2.csv"));
  bool any_pos = false;
  for (const auto& row : fig2.rows) {
    const double x = std::stod(row[0]);
    const double im = std::stod(row[2]);
    if (x > 0.7937006) CHECK(im == 0.0);
    if (x < 0.79 && im > 0.0) any_pos = true;
  }
  CHECK(any_pos);

  // threshold markers present in the gnuplot script
  const std::string gp = slurp(dir1 / "fig2.gp");
  CHECK(gp.find("0.793700525984") != std::string::npos);
  CHECK(gp.find("0.629960524947") != std::string::npos);
}
