#include "gaussent/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>

namespace gaussent {

namespace {

constexpr double kPairTol = 1e-9;

const Eigen::Matrix2d& j_form() {
  static const Eigen::Matrix2d j = (Eigen::Matrix2d() << 0.0, 1.0, -1.0, 0.0).finished();
  return j;
}

SymplecticSpectrum ascending(double a, double b) {
  return a <= b ? SymplecticSpectrum{a, b} : SymplecticSpectrum{b, a};
}

}  // namespace

double simon_full(const CovarianceMatrix4& cov) {
  const Eigen::Matrix4d& v = cov.matrix();
  const Eigen::Matrix2d a = v.block<2, 2>(0, 0);
  const Eigen::Matrix2d b = v.block<2, 2>(2, 2);
  const Eigen::Matrix2d c = v.block<2, 2>(0, 2);
  const Eigen::Matrix2d& j = j_form();
  const double det_a = a.determinant();
  const double det_b = b.determinant();
  const double corr = 0.25 - std::abs(c.determinant());
  const double cross = (a * j * c * j * b * j * c.transpose() * j).trace();
  return det_a * det_b + corr * corr - cross - 0.25 * (det_a + det_b);
}

SeparabilityVerdict simon_reduced(const StandardFormElements& e) {
  const double value = (e.n1 - std::abs(e.c1)) * (e.n2 - std::abs(e.c2)) - 1.0;
  return {value, value < 0.0};
}

SymplecticSpectrum symplectic_spectrum_pt(const StandardFormElements& e) {
  const double first = (e.n1 - e.c1) * (e.n2 + e.c2);
  const double second = (e.n1 + e.c1) * (e.n2 - e.c2);
  if (!(first > 0.0) || !(second > 0.0)) {
    throw UnphysicalStateError("partial-transpose spectrum has a non-positive radicand");
  }
  return ascending(0.5 * std::sqrt(first), 0.5 * std::sqrt(second));
}

double negativity_kernel(double lambda) {
  if (!(lambda > 0.0)) {
    throw DomainError("symplectic eigenvalue must be positive");
  }
  const double doubled = 2.0 * lambda;
  return doubled >= 1.0 ? 0.0 : -std::log2(doubled);
}

double log_negativity(const StandardFormElements& e) {
  const SymplecticSpectrum s = symplectic_spectrum_pt(e);
  return negativity_kernel(s.lambda1) + negativity_kernel(s.lambda2);
}

SymplecticSpectrum symplectic_spectrum_general(const CovarianceMatrix4& cov, bool partial_transpose) {
  Eigen::Matrix4d v = cov.matrix();
  if (partial_transpose) {
    // Momentum reversal on mode 2.
    v.row(3) *= -1.0;
    v.col(3) *= -1.0;
  }
  const Eigen::EigenSolver<Eigen::Matrix4d> solver(CovarianceMatrix4::symplectic_form() * v, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigenvalue computation for the symplectic product failed");
  }
  std::array<double, 4> moduli{};
  for (Eigen::Index i = 0; i < 4; ++i) {
    moduli[static_cast<std::size_t>(i)] = std::abs(solver.eigenvalues()[i]);
  }
  std::sort(moduli.begin(), moduli.end());
  if (moduli[1] - moduli[0] > kPairTol || moduli[3] - moduli[2] > kPairTol) {
    throw NumericalError("eigenvalue moduli of the symplectic product do not pair");
  }
  return {0.5 * (moduli[0] + moduli[1]), 0.5 * (moduli[2] + moduli[3])};
}

}  // namespace gaussent
