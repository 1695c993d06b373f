#pragma once

// Reference computations that do not go through the Jacobi eigensolver.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "psdapprox/matrix.hpp"

namespace psdapprox::testing {

inline double max_abs_diff(const MatrixC& a, const MatrixC& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return worst;
}

inline double diff_norm(const MatrixC& a, const MatrixC& b) { return frobenius_norm(a - b); }

/// Roots of lambda^2 - tr lambda + det for a 2x2 Hermitian matrix, descending.
inline std::array<double, 2> closed_form_eigenvalues_2x2(const MatrixC& a) {
  const double p = a(0, 0).real();
  const double d = a(1, 1).real();
  const double half_gap = 0.5 * (p - d);
  const double radius = std::sqrt(half_gap * half_gap + std::norm(a(0, 1)));
  const double mid = 0.5 * (p + d);
  return {mid + radius, mid - radius};
}

inline Complex det3(const MatrixC& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Trigonometric solution of the characteristic cubic of a 3x3 Hermitian
/// matrix, descending.
inline std::array<double, 3> closed_form_eigenvalues_3x3(const MatrixC& a) {
  const double q = trace(a).real() / 3.0;
  MatrixC shifted = a - MatrixC::identity(3) * Complex(q);
  const double p = frobenius_norm(shifted) / std::sqrt(6.0);
  if (p == 0.0) return {q, q, q};
  shifted *= 1.0 / p;
  const double r = std::clamp(det3(shifted).real() / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  const double e2 = 3.0 * q - e1 - e3;
  std::array<double, 3> out{e1, e2, e3};
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Largest elementwise gap between two multisets of reals.
inline double multiset_gap(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return INFINITY;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

inline double positive_part(double x) { return x > 0.0 ? x : 0.0; }
inline double negative_part(double x) { return x < 0.0 ? -x : 0.0; }

}  // namespace psdapprox::testing
