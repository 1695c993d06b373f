#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "psdapprox/matrix.hpp"

namespace psdapprox {

/// Spectra (alpha, beta, gamma) of A, B and C = A + B, each of common length
/// and sorted descending.
class SpectrumTriple {
 public:
  /// Throws InvalidArgument on unsorted, non-finite or mismatched input.
  SpectrumTriple(std::vector<double> alpha, std::vector<double> beta, std::vector<double> gamma);

  const std::vector<double>& alpha() const noexcept { return alpha_; }
  const std::vector<double>& beta() const noexcept { return beta_; }
  const std::vector<double>& gamma() const noexcept { return gamma_; }
  std::size_t size() const noexcept { return alpha_.size(); }

 private:
  std::vector<double> alpha_;
  std::vector<double> beta_;
  std::vector<double> gamma_;
};

/// Strictly increasing 1-based index subset of {1..n}.
using IndexSet = std::vector<int>;

struct IndexTriple {
  IndexSet i;
  IndexSet j;
  IndexSet k;

  friend bool operator==(const IndexTriple&, const IndexTriple&) = default;
  friend auto operator<=>(const IndexTriple&, const IndexTriple&) = default;
};

/// The Horn set T_r^n in lexicographic (I, J, K) order.
struct HornTripleSet {
  int n;
  int r;
  std::vector<IndexTriple> triples;
};

inline constexpr int kMaxHornDimension = 6;

/// sum of the entries of an index set.
int index_weight(const IndexSet& s);

/// All triples of r-subsets with |I| + |J| = |K| + r(r+1)/2 (the set U_r^n).
std::vector<IndexTriple> weight_triples(int n, int r);

/// T_r^n for 1 <= r < n <= 6. T_1^n = U_1^n; for r >= 2 a triple of U_r^n is
/// kept when, for every p < r and every (F, G, H) in T_p^r,
///   sum_{f in F} i_f + sum_{g in G} j_g <= sum_{h in H} k_h + p(p+1)/2.
/// Results are memoized per (n, r); concurrent callers are safe.
const HornTripleSet& horn_sets(int n, int r);

enum class InequalityKind {
  trace,          ///< sum gamma = sum alpha + sum beta
  upper,          ///< sum_K gamma <= sum_I alpha + sum_J beta
  complementary,  ///< sum_{K^c} gamma >= sum_{I^c} alpha + sum_{J^c} beta
  weyl,           ///< gamma_{i+j-1} <= alpha_i + beta_j
  practical,      ///< lo_k <= gamma_k <= hi_k
};

struct Violation {
  InequalityKind kind;
  int r;  ///< cardinality of the triple; 0 for trace and practical entries
  IndexTriple triple;
  double lhs;
  double rhs;
  /// Signed margin oriented so that negative means violated.
  double slack;
};

struct InequalityReport {
  std::size_t checked = 0;
  std::vector<Violation> violations;
  /// sum gamma - sum alpha - sum beta
  double trace_residual = 0.0;

  bool ok() const noexcept { return violations.empty(); }
};

/// Trace identity plus every Horn inequality (and its complementary form) for
/// every r < n. An inequality is reported when its slack is below -tol.
InequalityReport horn_check(const SpectrumTriple& t, double tol = kDefaultTol);

/// gamma_{i+j-1} <= alpha_i + beta_j for all i + j - 1 <= n.
InequalityReport weyl_check(const SpectrumTriple& t, double tol = kDefaultTol);

struct Interval {
  double lo;
  double hi;
};

/// lo_k = max_{i+j=n+k} (alpha_i + beta_j), hi_k = min_{i+j=k+1} (alpha_i + beta_j).
std::vector<Interval> practical_bounds(std::span<const double> alpha, std::span<const double> beta);

/// Checks gamma_k against practical_bounds.
InequalityReport practical_bounds_check(const SpectrumTriple& t, double tol = kDefaultTol);

/// Spectrum of U diag(alpha) U^dagger + V diag(beta) V^dagger. alpha and beta
/// may be in any order; the returned triple is sorted.
SpectrumTriple sum_spectrum(std::span<const double> alpha, std::span<const double> beta,
                            const MatrixC& u, const MatrixC& v, double tol = kDefaultTol);

/// sum_spectrum with independent seeded random unitaries.
SpectrumTriple sum_spectrum_oracle(std::span<const double> alpha, std::span<const double> beta,
                                   std::uint64_t seed, double tol = kDefaultTol);

}  // namespace psdapprox
