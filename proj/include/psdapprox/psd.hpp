#pragma once

#include "psdapprox/hermitian.hpp"

namespace psdapprox {

/// A = plus - minus with both parts positive semi-definite and supported on
/// disjoint eigenvector sets.
struct PosNegParts {
  HermitianMatrix plus;
  HermitianMatrix minus;
  Signature signature;
};

struct NearestPsd {
  HermitianMatrix approximant;
  /// Frobenius distance from the input to the approximant.
  double distance;
};

struct PsdCheck {
  bool is_psd;
  double min_eigenvalue;
};

/// Result of comparing an arbitrary PSD-difference decomposition A = P - N
/// against the spectral one.
struct SlackReport {
  bool n_is_psd;
  double n_min_eigenvalue;
  /// Minimum eigenvalue of P - A_plus. Not asserted to be non-negative.
  double slack_min_eigenvalue;
};

/// Spectral split: eigenvalues above the zero threshold go to `plus`, those
/// below minus the threshold go (negated) to `minus`, the rest to neither.
PosNegParts split_pos_neg(const HermitianMatrix& a, double tol = kDefaultTol);
PosNegParts split_pos_neg(const Spectrum& spectrum);

/// The closest PSD matrix in Frobenius norm is A_plus, at distance ||A_minus||_F.
NearestPsd nearest_psd(const HermitianMatrix& a, double tol = kDefaultTol);

/// ||A - B||_F - ||A_minus||_F for PSD B; never below -tol * scale.
double optimality_gap(const HermitianMatrix& a, const HermitianMatrix& b, double tol = kDefaultTol);

PsdCheck is_psd(const HermitianMatrix& a, double tol = kDefaultTol);

/// Smallest eigenvalue of AB for PSD A and B, computed from the Hermitian
/// similar matrix A^{1/2} B A^{1/2}.
double psd_product_min_eig(const HermitianMatrix& a, const HermitianMatrix& b,
                           double tol = kDefaultTol);

/// Principal square root of a PSD matrix; eigenvalues below zero (within
/// tolerance) are clamped to zero.
HermitianMatrix psd_sqrt(const HermitianMatrix& a, double tol = kDefaultTol);

/// Requires P and P - A to be PSD; reports min eig(P - A_plus).
SlackReport decomposition_slack(const HermitianMatrix& a, const HermitianMatrix& p,
                                double tol = kDefaultTol);

}  // namespace psdapprox
