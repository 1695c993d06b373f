#include "psdapprox/psd.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "psdapprox/error.hpp"

namespace psdapprox {

namespace {

void require_psd(const HermitianMatrix& m, double tol, const char* name) {
  const PsdCheck check = is_psd(m, tol);
  if (!check.is_psd) {
    std::ostringstream msg;
    msg << name << " is not positive semi-definite: minimum eigenvalue " << check.min_eigenvalue;
    throw PreconditionError(std::string(name) + "_psd", check.min_eigenvalue, msg.str());
  }
}

}  // namespace

PosNegParts split_pos_neg(const Spectrum& spectrum) {
  const std::size_t n = spectrum.eigenvalues.size();
  std::vector<double> plus(n, 0.0);
  std::vector<double> minus(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = spectrum.eigenvalues[k];
    if (lambda > spectrum.zero_threshold) {
      plus[k] = lambda;
    } else if (lambda < -spectrum.zero_threshold) {
      minus[k] = -lambda;
    }
  }
  return PosNegParts{hermitian_with_spectrum(spectrum.vectors, plus),
                     hermitian_with_spectrum(spectrum.vectors, minus), spectrum.signature};
}

PosNegParts split_pos_neg(const HermitianMatrix& a, double tol) {
  return split_pos_neg(hermitian_eig(a, tol));
}

NearestPsd nearest_psd(const HermitianMatrix& a, double tol) {
  PosNegParts parts = split_pos_neg(a, tol);
  const double distance = frobenius_norm(parts.minus.matrix());
  return NearestPsd{std::move(parts.plus), distance};
}

double optimality_gap(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
  if (a.dim() != b.dim()) throw DimensionError("optimality_gap: dimensions differ");
  require_psd(b, tol, "b");
  const PosNegParts parts = split_pos_neg(a, tol);
  return frobenius_norm(a.matrix() - b.matrix()) - frobenius_norm(parts.minus.matrix());
}

PsdCheck is_psd(const HermitianMatrix& a, double tol) {
  const Spectrum s = hermitian_eig(a, tol);
  const double min_eig = s.min_eigenvalue();
  return PsdCheck{min_eig >= -tol * tolerance_scale(a.matrix()), min_eig};
}

HermitianMatrix psd_sqrt(const HermitianMatrix& a, double tol) {
  const Spectrum s = hermitian_eig(a, tol);
  if (s.min_eigenvalue() < -s.zero_threshold) {
    std::ostringstream msg;
    msg << "square root requires a PSD matrix; minimum eigenvalue " << s.min_eigenvalue();
    throw PreconditionError("psd", s.min_eigenvalue(), msg.str());
  }
  std::vector<double> roots(s.eigenvalues.size());
  std::transform(s.eigenvalues.begin(), s.eigenvalues.end(), roots.begin(),
                 [](double x) { return std::sqrt(std::max(x, 0.0)); });
  return hermitian_with_spectrum(s.vectors, roots);
}

double psd_product_min_eig(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
  if (a.dim() != b.dim()) throw DimensionError("psd_product_min_eig: dimensions differ");
  require_psd(a, tol, "a");
  require_psd(b, tol, "b");
  const MatrixC root = psd_sqrt(a, tol).matrix();
  const MatrixC similar = matmul(root, matmul(b.matrix(), root));
  return hermitian_eig(HermitianMatrix::hermitian_part(similar), tol).min_eigenvalue();
}

SlackReport decomposition_slack(const HermitianMatrix& a, const HermitianMatrix& p, double tol) {
  if (a.dim() != p.dim()) throw DimensionError("decomposition_slack: dimensions differ");
  require_psd(p, tol, "p");
  const HermitianMatrix n = HermitianMatrix::hermitian_part(p.matrix() - a.matrix());
  const PsdCheck n_check = is_psd(n, tol);
  if (!n_check.is_psd) {
    std::ostringstream msg;
    msg << "p - a is not positive semi-definite: minimum eigenvalue " << n_check.min_eigenvalue;
    throw PreconditionError("p_minus_a_psd", n_check.min_eigenvalue, msg.str());
  }
  const PosNegParts parts = split_pos_neg(a, tol);
  const HermitianMatrix slack = HermitianMatrix::hermitian_part(p.matrix() - parts.plus.matrix());
  return SlackReport{true, n_check.min_eigenvalue, hermitian_eig(slack, tol).min_eigenvalue()};
}

}  // namespace psdapprox
