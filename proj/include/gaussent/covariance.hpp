#pragma once

#include <Eigen/Dense>

#include "gaussent/errors.hpp"

namespace gaussent {

// Conventions: hbar = 1, quadrature ordering (x1, p1, x2, p2), vacuum
// variance 1/2. A physical state has every symplectic eigenvalue >= 1/2.

/// Entry-wise tolerance when checking the two-mode standard-form pattern.
inline constexpr double kStandardFormTol = 1e-10;

/// Purity slightly above 1 from rounding is clamped; beyond this it throws.
inline constexpr double kPurityClampTol = 1e-9;

/// Symmetric 4x4 covariance matrix of a two-mode Gaussian state.
/// Symmetry and finiteness are enforced on construction; physicality is a
/// separate query so that mildly unphysical matrices remain representable.
class CovarianceMatrix4 {
 public:
  explicit CovarianceMatrix4(const Eigen::Matrix4d& m);

  const Eigen::Matrix4d& matrix() const { return m_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  /// True when every symplectic eigenvalue satisfies 2*lambda >= 1 - tol.
  bool is_physical(double tol = 1e-9) const;

  /// The symplectic form Omega = diag(J, J), J = [[0, 1], [-1, 0]].
  static const Eigen::Matrix4d& symplectic_form();

 private:
  Eigen::Matrix4d m_;
};

struct SqueezedVacuumParams {
  double r = 0.0;  // squeezing parameter, any finite sign
};

/// Elements (n1, n2, c1, c2) of the sparse two-mode form
///   V = 1/2 * [[n1, 0, c1, 0], [0, n2, 0, c2],
///              [c1, 0, n1, 0], [0, c2, 0, n2]],
/// i.e. n1/n2 are twice the shared x/p variances and c1/c2 twice the
/// x1-x2 / p1-p2 cross correlations. Both reservoir models preserve this
/// pattern for all times.
struct StandardFormElements {
  double n1 = 1.0;
  double n2 = 1.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

/// 2x2 blocks of the covariance in the normalized sum/difference basis
/// (x_s, p_s, x_d, p_d) with x_s = (x1 + x2)/sqrt(2), x_d = (x2 - x1)/sqrt(2).
struct ModePartition {
  Eigen::Matrix2d sum_block;
  Eigen::Matrix2d diff_block;
  Eigen::Matrix2d cross_block;
};

/// Two-mode squeezed vacuum: n1 = n2 = cosh(2r), c2 = -c1 = sinh(2r).
CovarianceMatrix4 tmsv_covariance(const SqueezedVacuumParams& params);

CovarianceMatrix4 standard_form_covariance(const StandardFormElements& e);

/// Extracts (n1, n2, c1, c2); throws NotStandardFormError when the matrix
/// does not match the pattern within kStandardFormTol.
StandardFormElements to_standard_form(const CovarianceMatrix4& cov);

/// mu = 1 / sqrt((n1^2 - c1^2) * (n2^2 - c2^2)), clamped to 1 from above.
double purity(const StandardFormElements& e);

/// Gaussian Wigner density W(X) = exp(-X^T V^{-1} X / 2) / ((2 pi)^2 sqrt(det V)).
double wigner_density(const CovarianceMatrix4& cov, const Eigen::Vector4d& point);

/// Covariance blocks in the sum/difference basis.
ModePartition sum_diff_decompose(const CovarianceMatrix4& cov);

}  // namespace gaussent
