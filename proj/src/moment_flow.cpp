#include "gaussent/moment_flow.hpp"

#include <cmath>

namespace gaussent {

namespace {

Eigen::Matrix4d flow_rhs(const MomentFlow& flow, const Eigen::Matrix4d& v) {
  return flow.diffusion - flow.drift * v - v * flow.drift.transpose();
}

Eigen::Matrix4d advance(const MomentFlow& flow, Eigen::Matrix4d v, double duration, double dt) {
  const auto steps = std::max<long long>(1, static_cast<long long>(std::ceil(duration / dt - 1e-12)));
  const double h = duration / static_cast<double>(steps);
  for (long long i = 0; i < steps; ++i) {
    const Eigen::Matrix4d k1 = flow_rhs(flow, v);
    const Eigen::Matrix4d k2 = flow_rhs(flow, v + 0.5 * h * k1);
    const Eigen::Matrix4d k3 = flow_rhs(flow, v + 0.5 * h * k2);
    const Eigen::Matrix4d k4 = flow_rhs(flow, v + h * k3);
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    v = 0.5 * (v + v.transpose()).eval();
    if (!v.allFinite()) {
      throw DivergenceError("moment integration produced non-finite values");
    }
  }
  return v;
}

}  // namespace

MomentFlow build_moment_flow(const ReservoirModel& model) {
  Eigen::Matrix4d pattern = Eigen::Matrix4d::Identity();
  if (model.kind() == ReservoirKind::CommonReservoir) {
    pattern(0, 2) = pattern(2, 0) = 1.0;
    pattern(1, 3) = pattern(3, 1) = 1.0;
  }
  const double g = model.gamma();
  return {0.5 * g * pattern, 0.5 * g * model.noise_scale() * pattern, model.kind(), g};
}

CovarianceMatrix4 integrate(const MomentFlow& flow, const CovarianceMatrix4& v0, double t_end, double dt) {
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw DomainError("integration time must be non-negative and finite");
  }
  if (t_end == 0.0) {
    return v0;
  }
  if (!(dt > 0.0) || !(dt <= t_end)) {
    throw DomainError("step must satisfy 0 < dt <= t_end");
  }
  return CovarianceMatrix4(advance(flow, v0.matrix(), t_end, dt));
}

double dfs_residual(const MomentFlow& flow, const CovarianceMatrix4& v0, std::span<const double> times,
                    double dt) {
  if (flow.kind != ReservoirKind::CommonReservoir) {
    throw DomainError("the difference mode decouples only for the common-reservoir flow");
  }
  if (dt <= 0.0) {
    dt = 1e-3 / flow.gamma;
  }
  const Eigen::Matrix2d d0 = sum_diff_decompose(v0).diff_block;
  Eigen::Matrix4d v = v0.matrix();
  double prev = 0.0;
  double residual = 0.0;
  for (const double t : times) {
    if (!(t >= prev) || !std::isfinite(t)) {
      throw DomainError("time grid must be ascending and non-negative");
    }
    if (t > prev) {
      v = advance(flow, v, t - prev, dt);
      prev = t;
    }
    const Eigen::Matrix2d d = sum_diff_decompose(CovarianceMatrix4(v)).diff_block;
    residual = std::max(residual, (d - d0).cwiseAbs().maxCoeff());
  }
  return residual;
}

}  // namespace gaussent
