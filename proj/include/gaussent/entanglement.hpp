#pragma once

#include "gaussent/covariance.hpp"

namespace gaussent {

/// Symplectic eigenvalues sorted ascending (lambda1 <= lambda2).
struct SymplecticSpectrum {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

struct SeparabilityVerdict {
  double simon_value = 0.0;
  bool entangled = false;  // simon_value < 0
};

/// Separability functional on the full covariance blocks A, B, C:
///   det A det B + (1/4 - |det C|)^2 - tr[A J C J B J C^T J] - (det A + det B)/4.
/// Negative values certify entanglement.
double simon_full(const CovarianceMatrix4& cov);

/// Standard-form reduction (n1 - |c1|)(n2 - |c2|) - 1 with the same sign.
SeparabilityVerdict simon_reduced(const StandardFormElements& e);

/// Spectrum of the partial transpose in closed form,
///   lambda = sqrt((n1 -+ c1)(n2 +- c2)) / 2.
SymplecticSpectrum symplectic_spectrum_pt(const StandardFormElements& e);

/// F(lambda) = 0 for 2*lambda >= 1, else -log2(2*lambda).
double negativity_kernel(double lambda);

/// Logarithmic negativity E = F(lambda1) + F(lambda2) of the partial
/// transpose spectrum; 0 exactly for separable states.
double log_negativity(const StandardFormElements& e);

/// Moduli of the eigenvalues of Omega * V (optionally partially transposed
/// on mode 2), paired and sorted ascending. Works for any symmetric V, not
/// just standard-form states.
SymplecticSpectrum symplectic_spectrum_general(const CovarianceMatrix4& cov, bool partial_transpose);

}  // namespace gaussent
