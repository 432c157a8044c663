#include "gaussent/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "gaussent/entanglement.hpp"

namespace gaussent {

namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("time must be non-negative and finite");
  }
}

void require_squeezing(double r) {
  if (!std::isfinite(r)) {
    throw DomainError("squeezing parameter must be finite");
  }
}

void require_ascending(std::span<const double> times) {
  double prev = 0.0;
  for (const double t : times) {
    require_time(t);
    if (t < prev) {
      throw DomainError("time grid must be ascending");
    }
    prev = t;
  }
}

}  // namespace

ReservoirModel::ReservoirModel(ReservoirKind kind, double gamma, double nbar)
    : kind_(kind), gamma_(gamma), nbar_(nbar) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("coupling rate gamma must be positive and finite");
  }
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
    throw DomainError("mean occupation nbar must be non-negative and finite");
  }
}

double ReservoirModel::rescaled_time(double t) const {
  require_time(t);
  const double rate = kind_ == ReservoirKind::CommonReservoir ? 2.0 * gamma_ : gamma_;
  return -std::expm1(-rate * t);
}

StandardFormElements evolve_common(double r, const ReservoirModel& model, double t) {
  if (model.kind() != ReservoirKind::CommonReservoir) {
    throw DomainError("evolve_common needs a common-reservoir model");
  }
  require_squeezing(r);
  require_time(t);
  const double tau = -std::expm1(-2.0 * model.gamma() * t);
  const double n = model.noise_scale();
  const double ch = std::cosh(2.0 * r);
  const double sh = std::sinh(2.0 * r);
  const double gain_x = 0.5 * (n - std::exp(-2.0 * r)) * tau;
  const double gain_p = 0.5 * (n - std::exp(2.0 * r)) * tau;
  return {ch + gain_x, ch + gain_p, gain_x - sh, gain_p + sh};
}

StandardFormElements evolve_independent(double r, const ReservoirModel& model, double t) {
  if (model.kind() != ReservoirKind::IndependentReservoirs) {
    throw DomainError("evolve_independent needs an independent-reservoirs model");
  }
  require_squeezing(r);
  require_time(t);
  const double u = std::exp(-model.gamma() * t);
  const double n = u * std::cosh(2.0 * r) + (1.0 - u) * model.noise_scale();
  const double c = u * std::sinh(2.0 * r);
  return {n, n, -c, c};
}

StandardFormElements evolve(double r, const ReservoirModel& model, double t) {
  return model.kind() == ReservoirKind::CommonReservoir ? evolve_common(r, model, t)
                                                        : evolve_independent(r, model, t);
}

double survival_threshold(double nbar) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
    throw DomainError("mean occupation nbar must be non-negative and finite");
  }
  return 0.5 * std::log1p(2.0 * nbar);
}

std::optional<double> disentanglement_time(double r, const ReservoirModel& model) {
  require_squeezing(r);
  if (r == 0.0) {
    return 0.0;  // separable from the start
  }
  const double ar = std::abs(r);
  if (model.kind() == ReservoirKind::CommonReservoir) {
    if (ar >= survival_threshold(model.nbar())) {
      return std::nullopt;
    }
    const double n = model.noise_scale();
    return std::log((n - std::exp(-2.0 * ar)) / (n - std::exp(2.0 * ar))) / (2.0 * model.gamma());
  }
  if (model.nbar() == 0.0) {
    return std::nullopt;  // vacuum baths only ever shrink the negativity to 0 asymptotically
  }
  return std::log1p(-std::expm1(-2.0 * ar) / (2.0 * model.nbar())) / model.gamma();
}

double asymptotic_negativity(double r, double nbar) {
  require_squeezing(r);
  const double threshold = survival_threshold(nbar);
  const double ar = std::abs(r);
  if (ar < threshold * (1.0 - 1e-12)) {
    throw DomainError("asymptotic negativity requires |r| at or above the survival threshold");
  }
  return std::max((ar - threshold) / std::numbers::ln2, 0.0);
}

std::vector<TrajectoryPoint> trajectory(double r, const ReservoirModel& model, std::span<const double> times) {
  require_squeezing(r);
  require_ascending(times);
  std::vector<TrajectoryPoint> points;
  points.reserve(times.size());
  for (const double t : times) {
    const StandardFormElements e = evolve(r, model, t);
    points.push_back({t, model.rescaled_time(t), e, simon_reduced(e).simon_value, log_negativity(e), purity(e)});
  }
  return points;
}

}  // namespace gaussent
