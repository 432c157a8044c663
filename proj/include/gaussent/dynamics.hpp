#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gaussent/covariance.hpp"

namespace gaussent {

enum class ReservoirKind {
  CommonReservoir,       // both modes damped by one thermal bath
  IndependentReservoirs  // one identical bath per mode
};

/// Thermal reservoir with coupling rate gamma > 0 and mean occupation
/// nbar >= 0; the noise scale is N = 2*nbar + 1.
class ReservoirModel {
 public:
  ReservoirModel(ReservoirKind kind, double gamma, double nbar);

  static ReservoirModel common(double gamma, double nbar) {
    return {ReservoirKind::CommonReservoir, gamma, nbar};
  }
  static ReservoirModel independent(double gamma, double nbar) {
    return {ReservoirKind::IndependentReservoirs, gamma, nbar};
  }

  ReservoirKind kind() const { return kind_; }
  double gamma() const { return gamma_; }
  double nbar() const { return nbar_; }
  double noise_scale() const { return 2.0 * nbar_ + 1.0; }

  /// Natural rescaled time tau in [0, 1): 1 - exp(-2 gamma t) for the
  /// common reservoir, 1 - exp(-gamma t) for independent reservoirs.
  double rescaled_time(double t) const;

 private:
  ReservoirKind kind_;
  double gamma_;
  double nbar_;
};

struct TrajectoryPoint {
  double t = 0.0;
  double tau = 0.0;
  StandardFormElements elems;
  double simon_value = 0.0;
  double log_negativity = 0.0;
  double purity = 1.0;
};

/// Closed-form standard-form elements at time t for a squeezed vacuum with
/// parameter r in the common reservoir: with tau = 1 - exp(-2 gamma t),
///   n1 = cosh 2r + (N - e^{-2r}) tau / 2,  c1 = (N - e^{-2r}) tau / 2 - sinh 2r,
///   n2 = cosh 2r + (N - e^{+2r}) tau / 2,  c2 = (N - e^{+2r}) tau / 2 + sinh 2r.
StandardFormElements evolve_common(double r, const ReservoirModel& model, double t);

/// Independent reservoirs: with u = exp(-gamma t),
///   n1 = n2 = u cosh 2r + (1 - u) N,  c2 = -c1 = u sinh 2r.
StandardFormElements evolve_independent(double r, const ReservoirModel& model, double t);

/// Dispatch on model.kind().
StandardFormElements evolve(double r, const ReservoirModel& model, double t);

/// r* = ln(2*nbar + 1) / 2; squeezing at or above this survives the common
/// reservoir forever.
double survival_threshold(double nbar);

/// Time at which the state becomes separable, or nullopt when it stays
/// entangled for all times. r = 0 gives 0.
std::optional<double> disentanglement_time(double r, const ReservoirModel& model);

/// Long-time log-negativity in the common reservoir for |r| >= r*:
///   E_inf = (|r| - r*) / ln 2.
double asymptotic_negativity(double r, double nbar);

/// Evolves through an ascending grid of times and reports the standard-form
/// elements together with separability, log-negativity and purity.
std::vector<TrajectoryPoint> trajectory(double r, const ReservoirModel& model, std::span<const double> times);

}  // namespace gaussent
