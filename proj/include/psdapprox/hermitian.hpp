#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "psdapprox/matrix.hpp"

namespace psdapprox {

enum class HermitianPolicy {
  reject,      ///< throw PreconditionError when ||A - A^dagger||_F exceeds the bound
  symmetrize,  ///< replace A by (A + A^dagger) / 2
};

/// Square matrix accepted as Hermitian: ||A - A^dagger||_F <= tol * max(1, ||A||_F).
/// The measured residual is kept; the entries are stored exactly as given
/// unless the caller asked for symmetrization.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(MatrixC m, double tol = kDefaultTol,
                           HermitianPolicy policy = HermitianPolicy::reject);

  /// Wraps a matrix that is Hermitian up to rounding (the result of an
  /// internal computation) by taking its Hermitian part.
  static HermitianMatrix hermitian_part(const MatrixC& m);

  const MatrixC& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }
  double hermiticity_residual() const noexcept { return residual_; }

 private:
  struct Trusted {};
  HermitianMatrix(Trusted, MatrixC m, double residual) : m_(std::move(m)), residual_(residual) {}

  MatrixC m_;
  double residual_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Eigen-decomposition A = Q diag(eigenvalues) Q^dagger with eigenvalues sorted
/// descending; column k of `vectors` pairs with eigenvalues[k]. Eigenvalues with
/// |lambda| <= zero_threshold are classified as zero in the signature.
struct Spectrum {
  std::vector<double> eigenvalues;
  MatrixC vectors;
  Signature signature;
  double zero_threshold = 0.0;

  double min_eigenvalue() const { return eigenvalues.back(); }
  double max_eigenvalue() const { return eigenvalues.front(); }
};

/// Q diag(values) Q^dagger packaged as a Hermitian matrix.
HermitianMatrix hermitian_with_spectrum(const MatrixC& q, std::span<const double> values);

inline constexpr int kMaxJacobiSweeps = 100;

/// Cyclic complex Jacobi. Converges once the off-diagonal Frobenius mass is at
/// most tol * ||A||_F and then runs one polishing sweep. Ties in the sorted
/// output keep ascending diagonal position, so results are deterministic.
Spectrum hermitian_eig(const HermitianMatrix& a, double tol = kDefaultTol);

/// ||AB - BA||_F.
double commutator_residual(const HermitianMatrix& a, const HermitianMatrix& b);

struct SimultaneousDiagonalization {
  MatrixC q;
  /// diagonals[i][k] is the k-th diagonal entry of Q^dagger F_i Q.
  std::vector<std::vector<double>> diagonals;
};

inline constexpr int kSimultaneousDiagAttempts = 3;

/// Diagonalizes a pairwise-commuting family with a single unitary by
/// eigen-decomposing a randomly weighted sum (weights in [0.5, 1.5] drawn
/// from `seed`), retrying with fresh weights when a member is not diagonalized
/// to within tol * max(1, ||F_i||_F).
SimultaneousDiagonalization simultaneous_diag(std::span<const HermitianMatrix> family,
                                              double tol = kDefaultTol, std::uint64_t seed = 0);

/// Throws NonCommutingError naming the worst pair when some commutator
/// exceeds tol * max(1, ||F_i||_F) * max(1, ||F_j||_F).
void require_commuting(std::span<const HermitianMatrix> family, double tol);

}  // namespace psdapprox
