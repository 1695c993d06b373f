#include "psdapprox/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "psdapprox/error.hpp"
#include "psdapprox/psd.hpp"

namespace psdapprox {

void require_bipartite(std::size_t side, BipartiteDims dims) {
  if (dims.dim_a == 0 || dims.dim_b == 0 || dims.total() != side) {
    throw DimensionError("bipartite dims " + std::to_string(dims.dim_a) + "x" +
                         std::to_string(dims.dim_b) + " do not match side length " +
                         std::to_string(side));
  }
}

DensityMatrix make_density(const MatrixC& a, BipartiteDims dims, double tol, bool normalize,
                           HermitianPolicy policy) {
  if (!a.is_square()) throw DimensionError("density matrix must be square");
  require_bipartite(a.rows(), dims);

  MatrixC m = a;
  if (normalize) {
    const Complex tr = trace(m);
    if (!(tr.real() > 0.0) || std::abs(tr.imag()) > tol * tolerance_scale(m)) {
      std::ostringstream msg;
      msg << "cannot normalize: trace " << tr.real() << (tr.imag() < 0 ? " - " : " + ")
          << std::abs(tr.imag()) << "i is not a positive real";
      throw PreconditionError("positive_trace", tr.real(), msg.str());
    }
    m *= 1.0 / tr.real();
  }

  HermitianMatrix h(std::move(m), tol, policy);
  const PsdCheck psd = is_psd(h, tol);
  if (!psd.is_psd) {
    std::ostringstream msg;
    msg << "density matrix is not PSD: minimum eigenvalue " << psd.min_eigenvalue;
    throw PreconditionError("psd", psd.min_eigenvalue, msg.str());
  }
  const double trace_residual = std::abs(trace(h.matrix()) - Complex(1.0));
  if (trace_residual > tol * tolerance_scale(h.matrix())) {
    std::ostringstream msg;
    msg << "density matrix does not have unit trace: |tr(A) - 1| = " << trace_residual;
    throw PreconditionError("unit_trace", trace_residual, msg.str());
  }
  return DensityMatrix(std::move(h), dims);
}

MatrixC partial_transpose(const MatrixC& a, BipartiteDims dims, Subsystem subsystem) {
  if (!a.is_square()) throw DimensionError("partial_transpose: matrix must be square");
  require_bipartite(a.rows(), dims);
  const std::size_t m = dims.dim_a;
  const std::size_t n = dims.dim_b;
  MatrixC out(a.rows(), a.cols());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          out(i * n + k, j * n + l) = subsystem == Subsystem::second ? a(i * n + l, j * n + k)
                                                                     : a(j * n + k, i * n + l);
        }
  return out;
}

PptResult ppt_check(const DensityMatrix& rho, double tol, Subsystem subsystem) {
  const MatrixC pt = partial_transpose(rho.matrix(), rho.dims(), subsystem);
  const PsdCheck check = is_psd(HermitianMatrix::hermitian_part(pt), tol);
  return PptResult{check.is_psd, check.min_eigenvalue};
}

std::vector<MatrixC> hermitian_basis(std::size_t d) {
  std::vector<MatrixC> basis;
  basis.reserve(d * d);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  MatrixC id = MatrixC::identity(d);
  id *= 1.0 / std::sqrt(static_cast<double>(d));
  basis.push_back(std::move(id));

  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      MatrixC sym(d, d);
      sym(j, k) = inv_sqrt2;
      sym(k, j) = inv_sqrt2;
      basis.push_back(std::move(sym));

      MatrixC anti(d, d);
      anti(j, k) = Complex(0.0, -inv_sqrt2);
      anti(k, j) = Complex(0.0, inv_sqrt2);
      basis.push_back(std::move(anti));
    }

  for (std::size_t l = 1; l < d; ++l) {
    const double c = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
    MatrixC diag(d, d);
    for (std::size_t j = 0; j < l; ++j) diag(j, j) = c;
    diag(l, l) = -c * static_cast<double>(l);
    basis.push_back(std::move(diag));
  }
  return basis;
}

MatrixC SchmidtDecomposition::reconstruct() const {
  MatrixC sum(dims.total(), dims.total());
  for (const auto& term : terms) sum += kron(term.b.matrix(), term.c.matrix()) * term.weight;
  return sum;
}

namespace {

// tr(A (G (x) H)) = sum_{k,l} X[k][l] H[l][k] with X[k][l] = sum_{i,j} A(ik, jl) G(j, i).
MatrixC partial_contraction(const MatrixC& a, const MatrixC& g, BipartiteDims dims) {
  const std::size_t m = dims.dim_a;
  const std::size_t n = dims.dim_b;
  MatrixC x(n, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Complex gji = g(j, i);
      if (gji == Complex{}) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) x(k, l) += a(i * n + k, j * n + l) * gji;
    }
  return x;
}

double trace_of_product(const MatrixC& x, const MatrixC& h) {
  Complex t{};
  for (std::size_t k = 0; k < x.rows(); ++k)
    for (std::size_t l = 0; l < x.cols(); ++l) t += x(k, l) * h(l, k);
  return t.real();
}

MatrixC combine(const std::vector<MatrixC>& basis, const std::vector<double>& coefficients) {
  MatrixC out(basis.front().rows(), basis.front().cols());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coefficients[k] != 0.0) out += basis[k] * coefficients[k];
  }
  return out;
}

}  // namespace

SchmidtDecomposition operator_schmidt(const HermitianMatrix& a, BipartiteDims dims, double tol) {
  require_bipartite(a.dim(), dims);
  const auto basis_a = hermitian_basis(dims.dim_a);
  const auto basis_b = hermitian_basis(dims.dim_b);
  const std::size_t ra = basis_a.size();
  const std::size_t rb = basis_b.size();

  // Singular values of the real ra x rb coefficient matrix C are the positive
  // eigenvalues of the symmetric embedding [[0, C], [C^T, 0]]; the matching
  // eigenvector is (u, v) / sqrt(2).
  MatrixC embedding(ra + rb, ra + rb);
  for (std::size_t alpha = 0; alpha < ra; ++alpha) {
    const MatrixC x = partial_contraction(a.matrix(), basis_a[alpha], dims);
    for (std::size_t beta = 0; beta < rb; ++beta) {
      const double coefficient = trace_of_product(x, basis_b[beta]);
      embedding(alpha, ra + beta) = coefficient;
      embedding(ra + beta, alpha) = coefficient;
    }
  }
  const Spectrum s = hermitian_eig(HermitianMatrix::hermitian_part(embedding), tol);

  SchmidtDecomposition out{dims, {}, 0};
  const std::size_t rank_bound = std::min(ra, rb);
  const double largest = s.eigenvalues.front();
  const double sqrt2 = std::sqrt(2.0);
  for (std::size_t k = 0; k < rank_bound; ++k) {
    const double sigma = s.eigenvalues[k];
    if (!(largest > 0.0) || sigma <= tol * largest) {
      ++out.dropped;
      continue;
    }
    std::vector<double> u(ra);
    std::vector<double> v(rb);
    for (std::size_t alpha = 0; alpha < ra; ++alpha) u[alpha] = sqrt2 * s.vectors(alpha, k).real();
    for (std::size_t beta = 0; beta < rb; ++beta) v[beta] = sqrt2 * s.vectors(ra + beta, k).real();
    out.terms.push_back(SchmidtTerm{sigma, HermitianMatrix::hermitian_part(combine(basis_a, u)),
                                    HermitianMatrix::hermitian_part(combine(basis_b, v))});
  }
  return out;
}

SchmidtDecomposition operator_schmidt(const DensityMatrix& rho, double tol) {
  return operator_schmidt(rho.hermitian(), rho.dims(), tol);
}

}  // namespace psdapprox
