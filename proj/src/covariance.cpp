#include "gaussent/covariance.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace gaussent {

namespace {

constexpr double kAsymmetryTol = 1e-9;

const Eigen::Matrix4d& sum_diff_transform() {
  static const Eigen::Matrix4d t = [] {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = s;
    m(0, 2) = s;
    m(1, 1) = s;
    m(1, 3) = s;
    m(2, 0) = -s;
    m(2, 2) = s;
    m(3, 1) = -s;
    m(3, 3) = s;
    return m;
  }();
  return t;
}

}  // namespace

CovarianceMatrix4::CovarianceMatrix4(const Eigen::Matrix4d& m) {
  if (!m.allFinite()) {
    throw DomainError("covariance matrix has non-finite entries");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > kAsymmetryTol * scale) {
    throw DomainError("covariance matrix is not symmetric");
  }
  m_ = 0.5 * (m + m.transpose());
}

bool CovarianceMatrix4::is_physical(double tol) const {
  const Eigen::EigenSolver<Eigen::Matrix4d> solver(symplectic_form() * m_, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigenvalue computation for the symplectic product failed");
  }
  double lambda_min = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < 4; ++i) {
    lambda_min = std::min(lambda_min, std::abs(solver.eigenvalues()[i]));
  }
  return 2.0 * lambda_min >= 1.0 - tol;
}

const Eigen::Matrix4d& CovarianceMatrix4::symplectic_form() {
  static const Eigen::Matrix4d omega = [] {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 1) = 1.0;
    m(1, 0) = -1.0;
    m(2, 3) = 1.0;
    m(3, 2) = -1.0;
    return m;
  }();
  return omega;
}

CovarianceMatrix4 tmsv_covariance(const SqueezedVacuumParams& params) {
  if (!std::isfinite(params.r)) {
    throw DomainError("squeezing parameter must be finite");
  }
  const double n = std::cosh(2.0 * params.r);
  const double c = std::sinh(2.0 * params.r);
  return standard_form_covariance({n, n, -c, c});
}

CovarianceMatrix4 standard_form_covariance(const StandardFormElements& e) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = m(2, 2) = 0.5 * e.n1;
  m(1, 1) = m(3, 3) = 0.5 * e.n2;
  m(0, 2) = m(2, 0) = 0.5 * e.c1;
  m(1, 3) = m(3, 1) = 0.5 * e.c2;
  return CovarianceMatrix4(m);
}

StandardFormElements to_standard_form(const CovarianceMatrix4& cov) {
  const Eigen::Matrix4d& v = cov.matrix();
  const auto require_zero = [&](Eigen::Index i, Eigen::Index j) {
    if (std::abs(v(i, j)) > kStandardFormTol) {
      throw NotStandardFormError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                 ") breaks the standard-form sparsity pattern");
    }
  };
  require_zero(0, 1);
  require_zero(0, 3);
  require_zero(1, 2);
  require_zero(2, 3);
  if (std::abs(v(0, 0) - v(2, 2)) > kStandardFormTol || std::abs(v(1, 1) - v(3, 3)) > kStandardFormTol) {
    throw NotStandardFormError("diagonal variances differ between the modes");
  }
  return {v(0, 0) + v(2, 2), v(1, 1) + v(3, 3), v(0, 2) + v(2, 0), v(1, 3) + v(3, 1)};
}

double purity(const StandardFormElements& e) {
  const double radicand = (e.n1 * e.n1 - e.c1 * e.c1) * (e.n2 * e.n2 - e.c2 * e.c2);
  if (!(radicand > 0.0)) {
    throw UnphysicalStateError("standard-form elements do not describe a normalizable state");
  }
  const double mu = 1.0 / std::sqrt(radicand);
  if (mu > 1.0 + kPurityClampTol) {
    throw UnphysicalStateError("purity exceeds 1 beyond rounding tolerance");
  }
  return std::min(mu, 1.0);
}

double wigner_density(const CovarianceMatrix4& cov, const Eigen::Vector4d& point) {
  const Eigen::LLT<Eigen::Matrix4d> llt(cov.matrix());
  const double det = cov.matrix().determinant();
  if (llt.info() != Eigen::Success || !(det > 0.0)) {
    throw SingularCovarianceError("covariance matrix is not positive definite");
  }
  const double quad = point.dot(llt.solve(point));
  const double two_pi = 2.0 * std::numbers::pi;
  return std::exp(-0.5 * quad) / (two_pi * two_pi * std::sqrt(det));
}

ModePartition sum_diff_decompose(const CovarianceMatrix4& cov) {
  const Eigen::Matrix4d& t = sum_diff_transform();
  const Eigen::Matrix4d w = t * cov.matrix() * t.transpose();
  return {w.block<2, 2>(0, 0), w.block<2, 2>(2, 2), w.block<2, 2>(0, 2)};
}

}  // namespace gaussent
