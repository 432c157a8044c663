#include "gaussent/cli_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gaussent/entanglement.hpp"
#include "gaussent/moment_flow.hpp"

namespace gaussent::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kCsvHeader = "tau,gamma_t,n1,n2,c1,c2,simon_value,log_negativity,purity";

std::string sci(double value, int precision) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*e", precision - 1, value);
  return buf;
}

std::string param(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string file_tag(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

const char* model_name(ReservoirKind kind) {
  return kind == ReservoirKind::CommonReservoir ? "common" : "independent";
}

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  }
  return grid;
}

// Uniform tau grid mapped back to t through tau = 1 - exp(-rate t).
std::vector<double> tau_time_grid(ReservoirKind kind, const GridSpec& grid, double gamma) {
  const double rate = kind == ReservoirKind::CommonReservoir ? 2.0 * gamma : gamma;
  std::vector<double> times = linspace(0.0, grid.tau_max, grid.points);
  for (double& t : times) {
    t = -std::log1p(-t) / rate;
  }
  return times;
}

void validate_precision(int precision) {
  if (precision < 1 || precision > 17) {
    throw DomainError("precision must be between 1 and 17 significant digits");
  }
}

void validate_grid(const GridSpec& grid) {
  if (grid.points < 2) {
    throw DomainError("grid needs at least two points");
  }
  if (!(grid.tau_max > 0.0) || !(grid.tau_max < 1.0)) {
    throw DomainError("tau_max must lie strictly inside (0, 1)");
  }
}

void write_curve_csv(const fs::path& path, const std::vector<TrajectoryPoint>& points, double gamma,
                     int precision) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << kCsvHeader << '\n';
  for (const TrajectoryPoint& p : points) {
    out << sci(p.tau, precision) << ',' << sci(gamma * p.t, precision) << ','
        << sci(p.elems.n1, precision) << ',' << sci(p.elems.n2, precision) << ','
        << sci(p.elems.c1, precision) << ',' << sci(p.elems.c2, precision) << ','
        << sci(p.simon_value, precision) << ',' << sci(p.log_negativity, precision) << ','
        << sci(p.purity, precision) << '\n';
  }
  if (!out.flush()) {
    throw std::runtime_error("write to " + path.string() + " failed");
  }
}

struct CurveParams {
  double r = 0.0;
  double nbar = 0.0;
};

struct FigurePreset {
  ReservoirKind model = ReservoirKind::CommonReservoir;
  bool tau_axis = true;  // else uniform gamma*t in [0, 5]
  std::vector<CurveParams> curves;
};

FigurePreset figure_preset(int figure_id) {
  const std::vector<double> r_sweep{0.0, 0.1, 0.5, 1.0, 2.0};
  const std::vector<double> nbar_sweep{0.0, 0.5, 2.5, 0.5 * (std::exp(2.0) - 1.0), 4.0};
  const auto sweep_r = [&](double nbar) {
    std::vector<CurveParams> curves;
    for (const double r : r_sweep) curves.push_back({r, nbar});
    return curves;
  };
  const auto sweep_nbar = [&](double r) {
    std::vector<CurveParams> curves;
    for (const double nbar : nbar_sweep) curves.push_back({r, nbar});
    return curves;
  };
  switch (figure_id) {
    case 1:
      return {ReservoirKind::CommonReservoir, true, sweep_r(0.5)};
    case 2:
      return {ReservoirKind::CommonReservoir, true, sweep_nbar(1.0)};
    case 3:
      return {ReservoirKind::IndependentReservoirs, true, sweep_r(0.5)};
    case 4:
      return {ReservoirKind::IndependentReservoirs, true, sweep_nbar(1.0)};
    case 5:
      return {ReservoirKind::CommonReservoir, false, sweep_r(0.5)};
    case 6:
      return {ReservoirKind::CommonReservoir, false, sweep_nbar(1.0)};
    default:
      throw DomainError("unknown figure id (valid: 1..6)");
  }
}

int band_sign(double value, double band) {
  if (std::abs(value) < band) {
    return 0;
  }
  return value < 0.0 ? -1 : 1;
}

}  // namespace

std::vector<fs::path> write_trajectories(const RunConfig& config) {
  validate_grid(config.grid);
  validate_precision(config.precision);
  if (config.r_list.empty() || config.nbar_list.empty()) {
    throw DomainError("parameter lists must be non-empty");
  }
  fs::create_directories(config.out_dir);
  const std::vector<double> times = tau_time_grid(config.model, config.grid, 1.0);
  std::vector<fs::path> written;
  for (const double r : config.r_list) {
    for (const double nbar : config.nbar_list) {
      const ReservoirModel model(config.model, 1.0, nbar);
      const auto points = trajectory(r, model, times);
      const fs::path file = config.out_dir / ("trajectory_" + std::string(model_name(config.model)) + "_r" +
                                              file_tag(r) + "_nbar" + file_tag(nbar) + ".csv");
      write_curve_csv(file, points, 1.0, config.precision);
      written.push_back(file);
    }
  }
  return written;
}

std::vector<fs::path> write_figure(int figure_id, const fs::path& out_dir, int points, int precision) {
  const FigurePreset preset = figure_preset(figure_id);
  validate_grid({points, 0.9975});
  validate_precision(precision);
  fs::create_directories(out_dir);

  const std::vector<double> times = preset.tau_axis
                                        ? tau_time_grid(preset.model, {points, 0.9975}, 1.0)
                                        : linspace(0.0, 5.0, points);
  const char* quantity = preset.tau_axis ? "log_negativity" : "purity";

  std::vector<fs::path> written;
  std::ostringstream manifest;
  manifest << "file,figure,curve,model,r,nbar,axis,quantity,points\n";
  for (std::size_t k = 0; k < preset.curves.size(); ++k) {
    const CurveParams& curve = preset.curves[k];
    const ReservoirModel model(preset.model, 1.0, curve.nbar);
    const auto traj = trajectory(curve.r, model, times);
    const std::string name = "fig" + std::to_string(figure_id) + "_curve" + std::to_string(k) + ".csv";
    write_curve_csv(out_dir / name, traj, 1.0, precision);
    manifest << name << ',' << figure_id << ',' << k << ',' << model_name(preset.model) << ','
             << param(curve.r) << ',' << param(curve.nbar) << ','
             << (preset.tau_axis ? "tau" : "gamma_t") << ',' << quantity << ',' << points << '\n';
    written.push_back(out_dir / name);
  }
  const fs::path manifest_path = out_dir / ("fig" + std::to_string(figure_id) + "_manifest.csv");
  std::ofstream out(manifest_path, std::ios::binary);
  if (!out || !(out << manifest.str()).flush()) {
    throw std::runtime_error("cannot write " + manifest_path.string());
  }
  written.push_back(manifest_path);
  return written;
}

std::string threshold_report(double nbar, std::optional<double> r) {
  const double rstar = survival_threshold(nbar);
  std::ostringstream out;
  out << "survival threshold r* = " << param(rstar) << " for nbar = " << param(nbar) << '\n';
  if (r) {
    const ReservoirModel model = ReservoirModel::common(1.0, nbar);
    const std::optional<double> t = disentanglement_time(*r, model);
    out << "r = " << param(*r) << ": ";
    if (t) {
      out << "disentangles at gamma_t = " << param(*t) << '\n';
    } else {
      out << "survives (entangled for all times, asymptotic log-negativity "
          << param(asymptotic_negativity(*r, nbar)) << ")\n";
    }
  }
  return out.str();
}

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (const CheckResult& c : checks) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-16s max deviation %.3e (threshold %.0e) %s\n", c.name.c_str(),
                  c.deviation, c.threshold, c.pass ? "PASS" : "FAIL");
    out << line;
  }
  return out.str();
}

ValidationReport run_validation(const ValidationOptions& opts) {
  if (opts.r_list.empty() || opts.nbar_list.empty()) {
    throw DomainError("parameter lists must be non-empty");
  }
  if (!(opts.dt > 0.0) || !std::isfinite(opts.dt)) {
    throw DomainError("dt must be positive and finite");
  }
  double gamma = opts.gamma;
  if (opts.unscaled_diffusion && gamma == 1.0) {
    gamma = 2.0;  // the missing factor is invisible at gamma = 1
  }
  const double dt = opts.dt / gamma;
  const std::vector<double> probe_gamma_t{0.5, 1.0, 2.0, 5.0};
  const std::vector<double> sign_taus = linspace(0.0, 0.9975, 50);
  std::vector<double> dfs_times = linspace(0.0, 5.0, 11);
  for (double& t : dfs_times) {
    t /= gamma;
  }
  constexpr double kSignBand = 1e-12;

  double oracle_dev = 0.0;
  double sign_dev = 0.0;
  double spectrum_dev = 0.0;
  double dfs_dev = 0.0;

  for (const ReservoirKind kind : {ReservoirKind::CommonReservoir, ReservoirKind::IndependentReservoirs}) {
    for (const double r : opts.r_list) {
      for (const double nbar : opts.nbar_list) {
        const ReservoirModel model(kind, gamma, nbar);
        MomentFlow flow = build_moment_flow(model);
        if (opts.unscaled_diffusion) {
          flow.diffusion /= gamma;
        }
        const CovarianceMatrix4 v0 = tmsv_covariance({r});

        for (const double gt : probe_gamma_t) {
          const double t = gt / gamma;
          const Eigen::Matrix4d numeric = integrate(flow, v0, t, dt).matrix();
          const Eigen::Matrix4d closed = standard_form_covariance(evolve(r, model, t)).matrix();
          oracle_dev = std::max(oracle_dev, (numeric - closed).cwiseAbs().maxCoeff());
        }

        const double rate = kind == ReservoirKind::CommonReservoir ? 2.0 * gamma : gamma;
        for (const double tau : sign_taus) {
          const StandardFormElements e = evolve(r, model, -std::log1p(-tau) / rate);
          const CovarianceMatrix4 v = standard_form_covariance(e);
          const int full = band_sign(simon_full(v), kSignBand);
          const int reduced = band_sign(simon_reduced(e).simon_value, kSignBand);
          if (full * reduced == -1) {
            sign_dev = std::max(sign_dev,
                                std::min(std::abs(simon_full(v)), std::abs(simon_reduced(e).simon_value)));
          }
          const SymplecticSpectrum closed = symplectic_spectrum_pt(e);
          const SymplecticSpectrum general = symplectic_spectrum_general(v, true);
          spectrum_dev = std::max({spectrum_dev, std::abs(closed.lambda1 - general.lambda1),
                                   std::abs(closed.lambda2 - general.lambda2)});
        }

        if (kind == ReservoirKind::CommonReservoir) {
          dfs_dev = std::max(dfs_dev, dfs_residual(flow, v0, dfs_times, dt));
        }
      }
    }
  }

  ValidationReport report;
  report.checks.push_back({"oracle-agreement", oracle_dev, 1e-8, oracle_dev < 1e-8});
  report.checks.push_back({"sign-agreement", sign_dev, kSignBand, sign_dev < kSignBand});
  report.checks.push_back({"spectrum-oracle", spectrum_dev, 1e-10, spectrum_dev < 1e-10});
  report.checks.push_back({"dfs-residual", dfs_dev, 1e-8, dfs_dev < 1e-8});
  return report;
}

}  // namespace gaussent::cli
