#pragma once

#include <cstddef>
#include <vector>

#include "psdapprox/hermitian.hpp"

namespace psdapprox {

/// Factor dimensions (m, n) of a bipartite space H1 (x) H2.
struct BipartiteDims {
  std::size_t dim_a;
  std::size_t dim_b;

  std::size_t total() const noexcept { return dim_a * dim_b; }
  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

/// Throws DimensionError unless `side` equals m * n (and both are positive).
void require_bipartite(std::size_t side, BipartiteDims dims);

/// Hermitian, PSD and unit-trace operator on a bipartite space. Only
/// constructed through make_density.
class DensityMatrix {
 public:
  const HermitianMatrix& hermitian() const noexcept { return rho_; }
  const MatrixC& matrix() const noexcept { return rho_.matrix(); }
  BipartiteDims dims() const noexcept { return dims_; }

 private:
  DensityMatrix(HermitianMatrix rho, BipartiteDims dims) : rho_(std::move(rho)), dims_(dims) {}
  friend DensityMatrix make_density(const MatrixC&, BipartiteDims, double, bool, HermitianPolicy);

  HermitianMatrix rho_;
  BipartiteDims dims_;
};

/// Validates Hermiticity, positivity and unit trace (in that order) and
/// reports the first violated invariant by name with its measured residual.
/// With `normalize`, the matrix is divided by its (positive) trace first.
DensityMatrix make_density(const MatrixC& a, BipartiteDims dims, double tol = kDefaultTol,
                           bool normalize = false,
                           HermitianPolicy policy = HermitianPolicy::reject);

enum class Subsystem { first, second };

/// Transposes the indices of one tensor factor. For `second`, every n x n
/// block is transposed in place; for `first`, the blocks trade places across
/// the block diagonal.
MatrixC partial_transpose(const MatrixC& a, BipartiteDims dims,
                          Subsystem subsystem = Subsystem::second);

struct PptResult {
  bool is_ppt;
  double min_eigenvalue;
};

PptResult ppt_check(const DensityMatrix& rho, double tol = kDefaultTol,
                    Subsystem subsystem = Subsystem::second);

struct SchmidtTerm {
  double weight;
  HermitianMatrix b;  ///< dim_a x dim_a, unit Frobenius norm
  HermitianMatrix c;  ///< dim_b x dim_b, unit Frobenius norm
};

/// A = sum_i weight_i * (b_i (x) c_i) with orthonormal Hermitian factors and
/// weights in descending order.
struct SchmidtDecomposition {
  BipartiteDims dims;
  std::vector<SchmidtTerm> terms;
  /// Terms with weight <= tol * (largest weight) that were discarded.
  std::size_t dropped = 0;

  MatrixC reconstruct() const;
};

/// Operator-Schmidt decomposition of a Hermitian bipartite operator, computed
/// as the singular value decomposition of its real coefficient matrix in the
/// product of normalized generalized Gell-Mann bases.
SchmidtDecomposition operator_schmidt(const HermitianMatrix& a, BipartiteDims dims,
                                      double tol = kDefaultTol);
SchmidtDecomposition operator_schmidt(const DensityMatrix& rho, double tol = kDefaultTol);

/// Orthonormal basis of the real space of d x d Hermitian matrices under
/// <X, Y> = tr(XY): I/sqrt(d) first, then the symmetric, antisymmetric and
/// diagonal generalized Gell-Mann matrices, each scaled to unit norm.
std::vector<MatrixC> hermitian_basis(std::size_t d);

}  // namespace psdapprox
