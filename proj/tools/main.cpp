#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaussent/cli_ops.hpp"

namespace {

gaussent::ReservoirKind parse_model(const std::string& name) {
  return name == "independent" ? gaussent::ReservoirKind::IndependentReservoirs
                               : gaussent::ReservoirKind::CommonReservoir;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mode squeezed vacuum in thermal reservoirs: separability, log-negativity and purity"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "Flat key=value file, keys prefixed by the subcommand (e.g. trajectory.points=50); "
                 "command-line flags win on conflict");
  app.footer("GAUSSENT_SEED is reserved and currently ignored; every computation is deterministic.");

  std::string model_name = "common";
  std::vector<double> r_list;
  std::vector<double> nbar_list;
  int points = 400;
  double tau_max = 0.9975;
  std::string out_dir = ".";
  int precision = 12;

  auto* traj = app.add_subcommand("trajectory", "Write one trajectory CSV per (r, nbar) pair");
  traj->add_option("--model", model_name, "Reservoir model")
      ->check(CLI::IsMember({"common", "independent"}))
      ->capture_default_str();
  traj->add_option("--r", r_list, "Squeezing parameters")->required()->expected(-1);
  traj->add_option("--nbar", nbar_list, "Mean reservoir occupations")->required()->expected(-1);
  traj->add_option("--points", points, "Grid points")->check(CLI::Range(2, 10000000))->capture_default_str();
  traj->add_option("--tau-max", tau_max, "Last rescaled time, in (0, 1)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  traj->add_option("--out", out_dir, "Output directory")->capture_default_str();
  traj->add_option("--precision", precision, "Significant digits")->check(CLI::Range(1, 17))->capture_default_str();

  int figure_id = 0;
  std::string fig_out = ".";
  int fig_points = 400;
  int fig_precision = 12;
  auto* figs = app.add_subcommand("figures", "Write a bundled curve family (CSV set plus manifest)");
  figs->add_option("id", figure_id, "Figure preset, 1..6")->required()->check(CLI::Range(1, 6));
  figs->add_option("--out", fig_out, "Output directory")->capture_default_str();
  figs->add_option("--points", fig_points, "Grid points")->check(CLI::Range(2, 10000000))->capture_default_str();
  figs->add_option("--precision", fig_precision, "Significant digits")->check(CLI::Range(1, 17))->capture_default_str();

  double thr_nbar = 0.0;
  double thr_r = 0.0;
  auto* thr = app.add_subcommand("threshold", "Survival threshold r* for a common reservoir");
  thr->add_option("--nbar", thr_nbar, "Mean reservoir occupation")->required()->check(CLI::NonNegativeNumber);
  auto* thr_r_opt = thr->add_option("--r", thr_r, "Report the verdict for this squeezing parameter");

  gaussent::cli::ValidationOptions val_opts;
  auto* val = app.add_subcommand("validate", "Cross-validate closed forms against the moment integrator");
  val->add_option("--r", val_opts.r_list, "Squeezing grid")->expected(-1)->capture_default_str();
  val->add_option("--nbar", val_opts.nbar_list, "Occupation grid")->expected(-1)->capture_default_str();
  val->add_option("--dt", val_opts.dt, "Integrator step in units of 1/gamma")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  val->add_flag("--debug-unscaled-diffusion", val_opts.unscaled_diffusion,
                "Negative control: drop the rate factor from the diffusion matrix (runs at gamma = 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*traj) {
      gaussent::cli::RunConfig config{parse_model(model_name), r_list,   nbar_list,
                                      {points, tau_max},       out_dir,  precision};
      for (const auto& file : gaussent::cli::write_trajectories(config)) {
        std::printf("wrote %s\n", file.c_str());
      }
      return 0;
    }
    if (*figs) {
      for (const auto& file : gaussent::cli::write_figure(figure_id, fig_out, fig_points, fig_precision)) {
        std::printf("wrote %s\n", file.c_str());
      }
      return 0;
    }
    if (*thr) {
      const std::optional<double> r_query =
          thr_r_opt->count() > 0 ? std::optional<double>(thr_r) : std::nullopt;
      std::fputs(gaussent::cli::threshold_report(thr_nbar, r_query).c_str(), stdout);
      return 0;
    }
    const gaussent::cli::ValidationReport report = gaussent::cli::run_validation(val_opts);
    std::fputs(report.summary().c_str(), stdout);
    if (!report.all_pass()) {
      std::string failing;
      for (const auto& check : report.checks) {
        if (!check.pass) {
          failing += failing.empty() ? check.name : ", " + check.name;
        }
      }
      std::fprintf(stderr, "validation failed: %s\n", failing.c_str());
      return 1;
    }
    std::puts("validation passed");
    return 0;
  } catch (const gaussent::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
