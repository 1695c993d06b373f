#include "psdapprox/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "psdapprox/error.hpp"

namespace psdapprox {

namespace {

double off_diagonal_mass(const MatrixC& w) {
  double sum = 0.0;
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j)
      if (i != j) sum += std::norm(w(i, j));
  return std::sqrt(sum);
}

MatrixC hermitian_part_of(const MatrixC& m) {
  MatrixC h = m + conj_transpose(m);
  h *= 0.5;
  for (std::size_t i = 0; i < h.rows(); ++i) h(i, i) = h(i, i).real();
  return h;
}

// Applies the unitary rotation J acting on coordinates (p, q) that annihilates
// w(p, q): J = diag(1, conj(phase)) * [[c, s], [-s, c]] on that plane.
void jacobi_rotate(MatrixC& w, MatrixC& v, std::size_t p, std::size_t q) {
  const Complex apq = w(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase_conj = std::conj(apq / r);

  const double theta = (w(q, q).real() - w(p, p).real()) / (2.0 * r);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * phase_conj;
  const Complex jqq = c * phase_conj;

  const std::size_t n = w.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex wkp = w(k, p);
    const Complex wkq = w(k, q);
    w(k, p) = wkp * jpp + wkq * jqp;
    w(k, q) = wkp * jpq + wkq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex wpk = w(p, k);
    const Complex wqk = w(q, k);
    w(p, k) = std::conj(jpp) * wpk + std::conj(jqp) * wqk;
    w(q, k) = std::conj(jpq) * wpk + std::conj(jqq) * wqk;
  }
  w(p, q) = 0.0;
  w(q, p) = 0.0;
  w(p, p) = w(p, p).real();
  w(q, q) = w(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

}  // namespace

HermitianMatrix::HermitianMatrix(MatrixC m, double tol, HermitianPolicy policy)
    : m_(std::move(m)), residual_(0.0) {
  if (!m_.is_square()) {
    throw DimensionError("Hermitian matrix must be square, got " + std::to_string(m_.rows()) +
                         "x" + std::to_string(m_.cols()));
  }
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  residual_ = frobenius_norm(m_ - conj_transpose(m_));
  if (policy == HermitianPolicy::symmetrize) {
    m_ = hermitian_part_of(m_);
    return;
  }
  const double bound = tol * tolerance_scale(m_);
  if (residual_ > bound) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: ||A - A^dagger||_F = " << residual_ << " exceeds " << bound
        << " (pass the symmetrize option to use (A + A^dagger)/2)";
    throw PreconditionError("hermitian", residual_, msg.str());
  }
}

HermitianMatrix HermitianMatrix::hermitian_part(const MatrixC& m) {
  if (!m.is_square()) throw DimensionError("Hermitian part requires a square matrix");
  const double residual = frobenius_norm(m - conj_transpose(m));
  return HermitianMatrix(Trusted{}, hermitian_part_of(m), residual);
}

HermitianMatrix hermitian_with_spectrum(const MatrixC& q, std::span<const double> values) {
  return HermitianMatrix::hermitian_part(from_eigenbasis(q, values));
}

Spectrum hermitian_eig(const HermitianMatrix& a, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  const std::size_t n = a.dim();
  MatrixC w = hermitian_part_of(a.matrix());
  MatrixC v = MatrixC::identity(n);

  const double norm = frobenius_norm(w);
  const double target = tol * norm;
  bool converged = false;
  bool polished = false;
  double off = off_diagonal_mass(w);
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off <= target) {
      if (polished || off == 0.0) {
        converged = true;
        break;
      }
      polished = true;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(w, v, p, q);
    off = off_diagonal_mass(w);
  }
  if (!converged && off <= target) converged = true;
  if (!converged) {
    std::ostringstream msg;
    msg << "Jacobi eigensolver did not converge in " << kMaxJacobiSweeps
        << " sweeps; off-diagonal residual " << off;
    throw ConvergenceError(off, msg.str());
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return w(x, x).real() > w(y, y).real();
  });

  Spectrum s{std::vector<double>(n), MatrixC(n, n), Signature{}, tol * tolerance_scale(a.matrix())};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    s.eigenvalues[k] = w(src, src).real();
    for (std::size_t i = 0; i < n; ++i) s.vectors(i, k) = v(i, src);
    if (s.eigenvalues[k] > s.zero_threshold) {
      ++s.signature.positive;
    } else if (s.eigenvalues[k] < -s.zero_threshold) {
      ++s.signature.negative;
    } else {
      ++s.signature.zero;
    }
  }
  return s;
}

double commutator_residual(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("commutator: dimensions differ (" + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
  }
  return frobenius_norm(matmul(a.matrix(), b.matrix()) - matmul(b.matrix(), a.matrix()));
}

void require_commuting(std::span<const HermitianMatrix> family, double tol) {
  double worst_excess = 0.0;
  std::size_t worst_i = 0;
  std::size_t worst_j = 0;
  double worst_residual = 0.0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const double residual = commutator_residual(family[i], family[j]);
      const double bound =
          tol * tolerance_scale(family[i].matrix()) * tolerance_scale(family[j].matrix());
      if (residual > bound && residual / bound > worst_excess) {
        worst_excess = residual / bound;
        worst_i = i;
        worst_j = j;
        worst_residual = residual;
      }
    }
  }
  if (worst_excess > 0.0) {
    std::ostringstream msg;
    msg << "family is not commuting: worst pair (" << worst_i << ", " << worst_j
        << ") has ||[F_i, F_j]||_F = " << worst_residual;
    throw NonCommutingError(worst_i, worst_j, worst_residual, msg.str());
  }
}

SimultaneousDiagonalization simultaneous_diag(std::span<const HermitianMatrix> family, double tol,
                                              std::uint64_t seed) {
  if (family.empty()) throw InvalidArgument("simultaneous_diag: family is empty");
  const std::size_t n = family.front().dim();
  for (const auto& f : family) {
    if (f.dim() != n) throw DimensionError("simultaneous_diag: family members differ in size");
  }
  require_commuting(family, tol);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.5, 1.5);
  double worst = 0.0;
  for (int attempt = 0; attempt < kSimultaneousDiagAttempts; ++attempt) {
    MatrixC combined(n, n);
    for (const auto& f : family) combined += f.matrix() * Complex(weight(rng));
    const Spectrum s = hermitian_eig(HermitianMatrix::hermitian_part(combined), tol);
    const MatrixC qh = conj_transpose(s.vectors);

    SimultaneousDiagonalization out{s.vectors, {}};
    out.diagonals.reserve(family.size());
    bool ok = true;
    worst = 0.0;
    for (const auto& f : family) {
      MatrixC rotated = matmul(qh, matmul(f.matrix(), s.vectors));
      std::vector<double> d(n);
      for (std::size_t k = 0; k < n; ++k) {
        d[k] = rotated(k, k).real();
        rotated(k, k) -= d[k];
      }
      const double residual = frobenius_norm(rotated);
      worst = std::max(worst, residual);
      if (residual > tol * tolerance_scale(f.matrix())) ok = false;
      out.diagonals.push_back(std::move(d));
    }
    if (ok) return out;
  }
  std::ostringstream msg;
  msg << "simultaneous_diag: could not separate degenerate eigenspaces after "
      << kSimultaneousDiagAttempts << " attempts; worst off-diagonal residual " << worst;
  throw ConvergenceError(worst, msg.str());
}

}  // namespace psdapprox
