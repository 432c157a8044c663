#pragma once

#include <span>

#include "gaussent/covariance.hpp"
#include "gaussent/dynamics.hpp"

namespace gaussent {

/// Linear second-moment flow dV/dt = -(A V + V A^T) + D.
/// Common reservoir: A = (gamma/2) M and D = (gamma N / 2) M with the
/// rank-two pattern M coupling x1-x2 and p1-p2; independent reservoirs:
/// A = (gamma/2) I, D = (gamma N / 2) I.
struct MomentFlow {
  Eigen::Matrix4d drift;
  Eigen::Matrix4d diffusion;
  ReservoirKind kind = ReservoirKind::CommonReservoir;
  double gamma = 1.0;
};

MomentFlow build_moment_flow(const ReservoirModel& model);

/// Classical fourth-order Runge-Kutta with uniform steps of at most dt; the
/// iterate is re-symmetrized after every step. Throws DivergenceError on
/// non-finite intermediates (e.g. a grossly unstable step size).
CovarianceMatrix4 integrate(const MomentFlow& flow, const CovarianceMatrix4& v0, double t_end, double dt);

/// Largest drift of the difference-mode block along an ascending time grid,
/// max_t || diff_block(V(t)) - diff_block(V(0)) ||_inf. The difference mode
/// decouples from a common reservoir, so this is an integration-quality
/// probe. dt <= 0 selects the default step 1e-3 / gamma.
double dfs_residual(const MomentFlow& flow, const CovarianceMatrix4& v0, std::span<const double> times,
                    double dt = 0.0);

}  // namespace gaussent
