#include "psdapprox/tensor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "psdapprox/error.hpp"

namespace psdapprox {

namespace {

double euclidean_norm(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

struct SignedParts {
  std::vector<double> plus;
  std::vector<double> minus;
};

SignedParts split_values(const std::vector<double>& values, double threshold) {
  SignedParts parts{std::vector<double>(values.size(), 0.0),
                    std::vector<double>(values.size(), 0.0)};
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] > threshold) {
      parts.plus[k] = values[k];
    } else if (values[k] < -threshold) {
      parts.minus[k] = -values[k];
    }
  }
  return parts;
}

void require_uniform_dim(std::span<const HermitianMatrix> family, const char* name) {
  for (const auto& f : family) {
    if (f.dim() != family.front().dim()) {
      throw DimensionError(std::string(name) + ": family members differ in size");
    }
  }
}

}  // namespace

PosNegParts tensor_split(const HermitianMatrix& b, const HermitianMatrix& c, double tol) {
  const PosNegParts pb = split_pos_neg(b, tol);
  const PosNegParts pc = split_pos_neg(c, tol);
  const MatrixC& bp = pb.plus.matrix();
  const MatrixC& bm = pb.minus.matrix();
  const MatrixC& cp = pc.plus.matrix();
  const MatrixC& cm = pc.minus.matrix();

  const Signature& sb = pb.signature;
  const Signature& sc = pc.signature;
  Signature sig;
  sig.positive = sb.positive * sc.positive + sb.negative * sc.negative;
  sig.negative = sb.positive * sc.negative + sb.negative * sc.positive;
  sig.zero = b.dim() * c.dim() - sig.positive - sig.negative;

  return PosNegParts{HermitianMatrix::hermitian_part(kron(bp, cp) + kron(bm, cm)),
                     HermitianMatrix::hermitian_part(kron(bp, cm) + kron(bm, cp)), sig};
}

NearestPsd nearest_psd_tensor(const HermitianMatrix& b, const HermitianMatrix& c, double tol) {
  const PosNegParts pb = split_pos_neg(b, tol);
  const PosNegParts pc = split_pos_neg(c, tol);
  const double bp = frobenius_norm(pb.plus.matrix());
  const double bm = frobenius_norm(pb.minus.matrix());
  const double cp = frobenius_norm(pc.plus.matrix());
  const double cm = frobenius_norm(pc.minus.matrix());
  const MatrixC approx = kron(pb.plus.matrix(), pc.plus.matrix()) +
                         kron(pb.minus.matrix(), pc.minus.matrix());
  return NearestPsd{HermitianMatrix::hermitian_part(approx),
                    std::sqrt(bp * bp * cm * cm + bm * bm * cp * cp)};
}

CommutingFamilyApprox commuting_family_approx(std::span<const HermitianMatrix> a_list,
                                              std::span<const HermitianMatrix> b_list, double tol,
                                              std::uint64_t seed) {
  if (a_list.empty() || a_list.size() != b_list.size()) {
    throw InvalidArgument("commuting_family_approx: families must be non-empty and of equal length");
  }
  require_uniform_dim(a_list, "commuting_family_approx");
  require_uniform_dim(b_list, "commuting_family_approx");

  const SimultaneousDiagonalization da = simultaneous_diag(a_list, tol, seed);
  const SimultaneousDiagonalization db = simultaneous_diag(b_list, tol, seed + 1);
  const std::size_t na = a_list.front().dim();
  const std::size_t nb = b_list.front().dim();
  const MatrixC q = kron(da.q, db.q);

  // Everything is diagonal in the product basis Qa (x) Qb.
  std::vector<double> plus(na * nb, 0.0);
  std::vector<double> minus(na * nb, 0.0);
  std::vector<double> sum(na * nb, 0.0);
  for (std::size_t i = 0; i < a_list.size(); ++i) {
    const SignedParts sa = split_values(da.diagonals[i], tol * tolerance_scale(a_list[i].matrix()));
    const SignedParts sb = split_values(db.diagonals[i], tol * tolerance_scale(b_list[i].matrix()));
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k) {
        const std::size_t slot = j * nb + k;
        plus[slot] += sa.plus[j] * sb.plus[k] + sa.minus[j] * sb.minus[k];
        minus[slot] += sa.plus[j] * sb.minus[k] + sa.minus[j] * sb.plus[k];
        sum[slot] += da.diagonals[i][j] * db.diagonals[i][k];
      }
  }

  const SignedParts exact = split_values(sum, tol * std::max(1.0, euclidean_norm(sum)));
  std::vector<double> gap(plus.size());
  for (std::size_t slot = 0; slot < plus.size(); ++slot) gap[slot] = plus[slot] - exact.plus[slot];

  return CommutingFamilyApprox{hermitian_with_spectrum(q, plus), euclidean_norm(minus),
                               euclidean_norm(exact.minus), euclidean_norm(gap)};
}

AdditivityResiduals additivity_residuals(const HermitianMatrix& a, const HermitianMatrix& b,
                                         double tol) {
  if (a.dim() != b.dim()) throw DimensionError("additivity_residuals: dimensions differ");
  const PosNegParts pa = split_pos_neg(a, tol);
  const PosNegParts pb = split_pos_neg(b, tol);
  const PosNegParts ps = split_pos_neg(HermitianMatrix::hermitian_part(a.matrix() + b.matrix()), tol);

  const MatrixC plus_excess = pa.plus.matrix() + pb.plus.matrix() - ps.plus.matrix();
  const MatrixC minus_excess = pa.minus.matrix() + pb.minus.matrix() - ps.minus.matrix();
  return AdditivityResiduals{
      frobenius_norm(plus_excess), frobenius_norm(minus_excess),
      hermitian_eig(HermitianMatrix::hermitian_part(plus_excess), tol).min_eigenvalue(),
      hermitian_eig(HermitianMatrix::hermitian_part(minus_excess), tol).min_eigenvalue()};
}

AdditivityResiduals commuting_additivity_check(const HermitianMatrix& a, const HermitianMatrix& b,
                                               double tol) {
  const std::array<HermitianMatrix, 2> pair{a, b};
  require_commuting(pair, tol);
  return additivity_residuals(a, b, tol);
}

BoundReport tensor_sum_bound_report(std::span<const TensorTerm> terms, double tol) {
  if (terms.empty()) throw InvalidArgument("tensor_sum_bound_report: no terms");
  const std::size_t db = terms.front().b.dim();
  const std::size_t dc = terms.front().c.dim();

  MatrixC a(db * dc, db * dc);
  double rhs = 0.0;
  for (const auto& term : terms) {
    if (term.b.dim() != db || term.c.dim() != dc) {
      throw DimensionError("tensor_sum_bound_report: terms have inconsistent factor sizes");
    }
    a += kron(term.b.matrix(), term.c.matrix());
    const double b_minus = frobenius_norm(split_pos_neg(term.b, tol).minus.matrix());
    const double c_minus = frobenius_norm(split_pos_neg(term.c, tol).minus.matrix());
    rhs += b_minus * c_minus;
  }

  const HermitianMatrix total = HermitianMatrix::hermitian_part(a);
  const double scale = tolerance_scale(total.matrix());
  const Spectrum s = hermitian_eig(total, tol);
  const double lhs = frobenius_norm(total.matrix() - split_pos_neg(s).plus.matrix());
  const bool psd = s.min_eigenvalue() >= -tol * scale;
  const bool unit_trace = std::abs(trace(total.matrix()) - Complex(1.0)) <= tol * scale;
  return BoundReport{lhs, rhs, lhs <= rhs + tol * scale, psd && unit_trace};
}

BoundReport tensor_sum_bound_report(const SchmidtDecomposition& decomposition, double tol) {
  if (decomposition.terms.empty()) {
    // Zero operator: nothing to approximate and no state to speak of.
    return BoundReport{0.0, 0.0, true, false};
  }
  std::vector<TensorTerm> terms;
  terms.reserve(decomposition.terms.size());
  for (const auto& t : decomposition.terms) {
    terms.push_back(TensorTerm{HermitianMatrix::hermitian_part(t.b.matrix() * t.weight), t.c});
  }
  return tensor_sum_bound_report(terms, tol);
}

}  // namespace psdapprox
