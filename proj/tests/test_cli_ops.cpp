#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gaussent/cli_ops.hpp"
#include "test_support.hpp"

using namespace gaussent;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

std::vector<double> parse_row(const std::string& line) {
  std::vector<double> row;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    row.push_back(std::stod(cell));
  }
  return row;
}

// Column indices in trajectory CSVs.
constexpr int kTau = 0;
constexpr int kGammaT = 1;
constexpr int kSimon = 6;
constexpr int kNeg = 7;
constexpr int kPurity = 8;

int run_cli(const std::string& args) {
  const std::string cmd = std::string(GAUSSENT_CLI_PATH) + " " + args;
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("write_trajectories") {
  const fs::path dir = fresh_dir("gaussent_traj");
  cli::RunConfig config;
  config.r_list = {1.0};
  config.nbar_list = {0.5};
  config.grid = {5, 0.9975};
  config.out_dir = dir;

  const auto files = cli::write_trajectories(config);
  REQUIRE(files.size() == 1);
  CHECK(files[0].filename() == "trajectory_common_r1_nbar0.5.csv");

  const auto lines = lines_of(slurp(files[0]));
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "tau,gamma_t,n1,n2,c1,c2,simon_value,log_negativity,purity");
  const auto first = parse_row(lines[1]);
  REQUIRE(first.size() == 9);
  CHECK(first[kTau] == 0.0);
  CHECK(first[kGammaT] == 0.0);
  CHECK_NEAR(first[kNeg], 2.8853900817779268, 1e-9);
  CHECK_NEAR(first[kPurity], 1.0, 1e-9);
  const auto last = parse_row(lines[5]);
  CHECK_NEAR(last[kTau], 0.9975, 1e-12);
}

TEST_CASE("trajectories are byte deterministic") {
  const fs::path a = fresh_dir("gaussent_traj_a");
  const fs::path b = fresh_dir("gaussent_traj_b");
  cli::RunConfig config;
  config.model = ReservoirKind::IndependentReservoirs;
  config.r_list = {0.5, 1.0};
  config.nbar_list = {0.0, 2.5};
  config.grid = {40, 0.9};

  config.out_dir = a;
  const auto first = cli::write_trajectories(config);
  config.out_dir = b;
  const auto second = cli::write_trajectories(config);
  REQUIRE(first.size() == 4);
  REQUIRE(second.size() == 4);
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(slurp(first[i]) == slurp(second[i]));
  }
}

TEST_CASE("zero squeezing never shows negativity") {
  const fs::path dir = fresh_dir("gaussent_traj_zero");
  cli::RunConfig config;
  config.r_list = {0.0};
  config.nbar_list = {0.0, 0.5, 4.0};
  config.grid = {25, 0.9975};
  config.out_dir = dir;
  for (const auto& file : cli::write_trajectories(config)) {
    const auto lines = lines_of(slurp(file));
    for (std::size_t i = 1; i < lines.size(); ++i) {
      CHECK(parse_row(lines[i])[kNeg] == 0.0);
    }
  }
}

TEST_CASE("run config validation") {
  cli::RunConfig config;
  config.r_list = {1.0};
  config.nbar_list = {0.5};
  config.grid = {1, 0.9975};
  CHECK_THROWS_AS(cli::write_trajectories(config), DomainError);
  config.grid = {5, 1.0};
  CHECK_THROWS_AS(cli::write_trajectories(config), DomainError);
  config.grid = {5, 0.9975};
  config.precision = 0;
  CHECK_THROWS_AS(cli::write_trajectories(config), DomainError);
  config.precision = 18;
  CHECK_THROWS_AS(cli::write_trajectories(config), DomainError);
  config.precision = 12;
  config.r_list.clear();
  CHECK_THROWS_AS(cli::write_trajectories(config), DomainError);
  config.r_list = {1.0};
  config.nbar_list = {-0.5};
  CHECK_THROWS_AS(cli::write_trajectories(config), DomainError);
}

TEST_CASE("write_figure families") {
  const fs::path dir = fresh_dir("gaussent_figs");

  const auto fig1 = cli::write_figure(1, dir, 50);
  REQUIRE(fig1.size() == 6);  // five curves and a manifest
  const auto manifest = lines_of(slurp(dir / "fig1_manifest.csv"));
  REQUIRE(manifest.size() == 6);
  CHECK(manifest[0] == "file,figure,curve,model,r,nbar,axis,quantity,points");
  CHECK(manifest[1].find("fig1_curve0.csv,1,0,common,0,0.5,tau,log_negativity,50") == 0);
  for (std::size_t i = 0; i + 1 < fig1.size(); ++i) {
    CHECK(fs::exists(fig1[i]));
  }

  // r = 0 curve never entangled.
  const auto curve0 = lines_of(slurp(dir / "fig1_curve0.csv"));
  for (std::size_t i = 1; i < curve0.size(); ++i) {
    CHECK(parse_row(curve0[i])[kNeg] == 0.0);
  }

  // Strong squeezing keeps entanglement through the whole window.
  const auto curve4 = lines_of(slurp(dir / "fig1_curve4.csv"));
  CHECK(parse_row(curve4.back())[kNeg] > 0.0);

  CHECK_THROWS_AS(cli::write_figure(0, dir), DomainError);
  CHECK_THROWS_AS(cli::write_figure(7, dir), DomainError);
}

TEST_CASE("figure 4 curves with thermal occupation disentangle in finite time") {
  const fs::path dir = fresh_dir("gaussent_fig4");
  cli::write_figure(4, dir, 120);
  for (int k = 1; k <= 4; ++k) {
    const auto lines = lines_of(slurp(dir / ("fig4_curve" + std::to_string(k) + ".csv")));
    bool seen_zero = false;
    bool revived = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const double neg = parse_row(lines[i])[kNeg];
      if (seen_zero && neg > 0.0) {
        revived = true;
      }
      if (neg == 0.0) {
        seen_zero = true;
      }
    }
    CHECK(seen_zero);
    CHECK_FALSE(revived);
  }
}

TEST_CASE("figure 2 boundary curve decays towards zero") {
  const fs::path dir = fresh_dir("gaussent_fig2");
  cli::write_figure(2, dir, 120);
  // Curve 3 is N = exp(2), the survival boundary for r = 1.
  const auto lines = lines_of(slurp(dir / "fig2_curve3.csv"));
  const double late = parse_row(lines.back())[kNeg];
  CHECK(late > 0.0);
  CHECK(late < 0.01);
  const double mid = parse_row(lines[lines.size() / 2])[kNeg];
  CHECK(late < mid);
}

TEST_CASE("figure 5 reports purity on a gamma_t axis") {
  const fs::path dir = fresh_dir("gaussent_fig5");
  cli::write_figure(5, dir, 60);
  const auto manifest = slurp(dir / "fig5_manifest.csv");
  CHECK(manifest.find("gamma_t,purity") != std::string::npos);
  const auto lines = lines_of(slurp(dir / "fig5_curve3.csv"));  // r = 1
  REQUIRE(lines.size() == 61);
  const auto last = parse_row(lines.back());
  CHECK(last[kGammaT] == 5.0);
  double min_purity = 1.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    min_purity = std::min(min_purity, parse_row(lines[i])[kPurity]);
  }
  CHECK(min_purity < 0.9);
}

TEST_CASE("threshold_report") {
  const std::string plain = cli::threshold_report(0.5, std::nullopt);
  CHECK(plain.find("r* = 0.34657359028") != std::string::npos);
  CHECK(plain.find("nbar = 0.5") != std::string::npos);

  const std::string weak = cli::threshold_report(0.5, 0.1);
  CHECK(weak.find("disentangles at gamma_t = 0.208425439828") != std::string::npos);

  const std::string strong = cli::threshold_report(0.5, 1.0);
  CHECK(strong.find("survives") != std::string::npos);
  CHECK(strong.find("0.942695040889") != std::string::npos);

  const std::string vacuum = cli::threshold_report(0.0, std::nullopt);
  CHECK(vacuum.find("r* = 0 ") != std::string::npos);

  CHECK_THROWS_AS(cli::threshold_report(-1.0, std::nullopt), DomainError);
}

TEST_CASE("run_validation passes on the default grid") {
  const cli::ValidationReport report = cli::run_validation({});
  REQUIRE(report.checks.size() == 4);
  CHECK(report.checks[0].name == "oracle-agreement");
  CHECK(report.checks[1].name == "sign-agreement");
  CHECK(report.checks[2].name == "spectrum-oracle");
  CHECK(report.checks[3].name == "dfs-residual");
  for (const auto& check : report.checks) {
    CHECK(check.pass);
    CHECK(check.deviation < check.threshold);
  }
  CHECK(report.all_pass());
  CHECK(report.summary().find("oracle-agreement") != std::string::npos);
}

TEST_CASE("run_validation flags the unscaled diffusion control") {
  cli::ValidationOptions opts;
  opts.r_list = {0.5, 1.0};
  opts.nbar_list = {0.5};
  opts.unscaled_diffusion = true;
  const cli::ValidationReport report = cli::run_validation(opts);
  CHECK_FALSE(report.all_pass());
  CHECK_FALSE(report.checks[0].pass);  // oracle-agreement
  CHECK(report.checks[1].pass);
  CHECK(report.checks[2].pass);
  CHECK(report.checks[3].pass);
}

TEST_CASE("run_validation flags a too coarse step") {
  cli::ValidationOptions opts;
  opts.r_list = {1.0};
  opts.nbar_list = {0.5};
  opts.dt = 0.1;
  const cli::ValidationReport report = cli::run_validation(opts);
  CHECK_FALSE(report.checks[0].pass);
}

TEST_CASE("cli exit codes") {
  const fs::path dir = fresh_dir("gaussent_cli");
  const std::string null_io = " > /dev/null 2>&1";

  CHECK(run_cli("--help" + null_io) == 0);
  CHECK(run_cli(null_io) == 2);                 // missing subcommand
  CHECK(run_cli("--bogus" + null_io) == 2);     // unknown option
  CHECK(run_cli("figures 9" + null_io) == 2);   // out of range
  CHECK(run_cli("threshold --nbar -1" + null_io) == 2);
  CHECK(run_cli("trajectory --r 1 --nbar 0.5 --points 5 --tau-max 1.0 --out " + dir.string() + null_io) == 2);

  CHECK(run_cli("trajectory --r 1 --nbar 0.5 --points 5 --out " + dir.string() + null_io) == 0);
  CHECK(fs::exists(dir / "trajectory_common_r1_nbar0.5.csv"));

  CHECK(run_cli("figures 3 --points 30 --out " + (dir / "figs").string() + null_io) == 0);
  CHECK(fs::exists(dir / "figs" / "fig3_manifest.csv"));
}

TEST_CASE("cli threshold output") {
  const fs::path dir = fresh_dir("gaussent_cli_thr");
  const fs::path out = dir / "out.txt";
  CHECK(run_cli("threshold --nbar 0.5 --r 0.1 > " + out.string() + " 2>&1") == 0);
  const std::string text = slurp(out);
  CHECK(text.find("disentangles at gamma_t = 0.208425439828") != std::string::npos);
}

TEST_CASE("cli validate") {
  const fs::path dir = fresh_dir("gaussent_cli_val");
  const fs::path out = dir / "out.txt";
  const fs::path err = dir / "err.txt";

  CHECK(run_cli("validate --dt 0.005 > " + out.string() + " 2> " + err.string()) == 0);
  CHECK(slurp(out).find("validation passed") != std::string::npos);

  CHECK(run_cli("validate --dt 0.005 --r 1 --nbar 0.5 --debug-unscaled-diffusion > " + out.string() +
                " 2> " + err.string()) == 1);
  CHECK(slurp(err).find("oracle-agreement") != std::string::npos);
}

TEST_CASE("cli config file with flag precedence") {
  const fs::path dir = fresh_dir("gaussent_cli_cfg");
  const fs::path cfg = dir / "run.cfg";
  {
    std::ofstream out(cfg);
    out << "trajectory.model=independent\ntrajectory.points=7\n";
  }
  const std::string null_io = " > /dev/null 2>&1";

  CHECK(run_cli("--config " + cfg.string() + " trajectory --r 1 --nbar 0.5 --out " + dir.string() +
                null_io) == 0);
  const fs::path file = dir / "trajectory_independent_r1_nbar0.5.csv";
  REQUIRE(fs::exists(file));
  CHECK(lines_of(slurp(file)).size() == 8);  // header + 7 rows from the config

  CHECK(run_cli("--config " + cfg.string() + " trajectory --points 5 --r 1 --nbar 0.5 --out " +
                (dir / "override").string() + null_io) == 0);
  const fs::path smaller = dir / "override" / "trajectory_independent_r1_nbar0.5.csv";
  REQUIRE(fs::exists(smaller));
  CHECK(lines_of(slurp(smaller)).size() == 6);  // the flag wins
}
