#pragma once

#include <cstdint>
#include <span>

#include "psdapprox/bipartite.hpp"
#include "psdapprox/psd.hpp"

namespace psdapprox {

/// Positive and negative parts of b (x) c from the factor splits:
/// plus = b+ (x) c+ + b- (x) c-, minus = b+ (x) c- + b- (x) c+.
PosNegParts tensor_split(const HermitianMatrix& b, const HermitianMatrix& c,
                         double tol = kDefaultTol);

/// Nearest PSD matrix to b (x) c; distance is
/// sqrt(||b+||^2 ||c-||^2 + ||b-||^2 ||c+||^2).
NearestPsd nearest_psd_tensor(const HermitianMatrix& b, const HermitianMatrix& c,
                              double tol = kDefaultTol);

/// Term-by-term approximation of sum_i a_i (x) b_i for commuting families.
struct CommutingFamilyApprox {
  /// sum_i (a_i+ (x) b_i+ + a_i- (x) b_i-)
  HermitianMatrix approximant;
  /// ||sum_i (a_i+ (x) b_i- + a_i- (x) b_i+)||_F
  double distance;
  /// ||(sum_i a_i (x) b_i)_-||_F, the true nearest-PSD distance.
  double exact_distance;
  /// ||approximant - (sum_i a_i (x) b_i)_+||_F; zero exactly when the
  /// term-wise split is additive.
  double additivity_gap;
};

/// Both families must be pairwise commuting and of equal length. The two
/// families are simultaneously diagonalized with seeds `seed` and `seed + 1`.
CommutingFamilyApprox commuting_family_approx(std::span<const HermitianMatrix> a_list,
                                              std::span<const HermitianMatrix> b_list,
                                              double tol = kDefaultTol, std::uint64_t seed = 0);

struct AdditivityResiduals {
  /// ||(A+B)+ - A+ - B+||_F
  double plus;
  /// ||(A+B)- - A- - B-||_F
  double minus;
  /// min eig(A+ + B+ - (A+B)+); non-negative when A+ + B+ dominates.
  double plus_dominance_min_eig;
  /// min eig(A- + B- - (A+B)-)
  double minus_dominance_min_eig;
};

/// Residuals for any Hermitian pair; no commutativity requirement.
AdditivityResiduals additivity_residuals(const HermitianMatrix& a, const HermitianMatrix& b,
                                         double tol = kDefaultTol);

/// additivity_residuals restricted to commuting pairs; throws
/// NonCommutingError otherwise.
AdditivityResiduals commuting_additivity_check(const HermitianMatrix& a, const HermitianMatrix& b,
                                               double tol = kDefaultTol);

/// One summand b (x) c of a bipartite Hermitian operator.
struct TensorTerm {
  HermitianMatrix b;
  HermitianMatrix c;
};

struct BoundReport {
  /// ||A - A+||_F for A = sum_i b_i (x) c_i
  double lhs;
  /// sum_i ||b_i - (b_i)+||_F * ||c_i - (c_i)+||_F
  double rhs;
  /// lhs <= rhs + tol * scale
  bool satisfied;
  /// A was PSD with unit trace, the case in which the bound is guaranteed.
  bool hypothesis_held;
};

BoundReport tensor_sum_bound_report(std::span<const TensorTerm> terms, double tol = kDefaultTol);

/// Folds each Schmidt weight into its first factor before splitting.
BoundReport tensor_sum_bound_report(const SchmidtDecomposition& decomposition,
                                    double tol = kDefaultTol);

}  // namespace psdapprox
