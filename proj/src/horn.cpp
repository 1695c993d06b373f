#include "psdapprox/horn.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <utility>

#include "psdapprox/error.hpp"
#include "psdapprox/hermitian.hpp"
#include "psdapprox/random.hpp"

namespace psdapprox {

namespace {

void require_descending(std::span<const double> v, const char* name) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!std::isfinite(v[k])) {
      throw InvalidArgument(std::string(name) + " has a non-finite entry at position " +
                            std::to_string(k + 1));
    }
    if (k > 0 && v[k] > v[k - 1]) {
      throw InvalidArgument(std::string(name) + " is not sorted descending at position " +
                            std::to_string(k + 1));
    }
  }
}

std::vector<IndexSet> subsets(int n, int r) {
  std::vector<IndexSet> out;
  IndexSet current(static_cast<std::size_t>(r));
  std::iota(current.begin(), current.end(), 1);
  while (true) {
    out.push_back(current);
    int pos = r - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n - r + pos + 1) --pos;
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < r; ++q)
      current[static_cast<std::size_t>(q)] = current[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

IndexSet complement(const IndexSet& s, int n) {
  IndexSet out;
  std::size_t pos = 0;
  for (int x = 1; x <= n; ++x) {
    if (pos < s.size() && s[pos] == x) {
      ++pos;
    } else {
      out.push_back(x);
    }
  }
  return out;
}

double sum_over(const std::vector<double>& values, const IndexSet& s) {
  double total = 0.0;
  for (int idx : s) total += values[static_cast<std::size_t>(idx - 1)];
  return total;
}

// Sum of the entries of `s` picked out by the 1-based positions in `positions`.
int positional_weight(const IndexSet& s, const IndexSet& positions) {
  int total = 0;
  for (int f : positions) total += s[static_cast<std::size_t>(f - 1)];
  return total;
}

bool passes_recursive_conditions(const IndexTriple& t, int r) {
  for (int p = 1; p < r; ++p) {
    for (const IndexTriple& fgh : horn_sets(r, p).triples) {
      const int lhs = positional_weight(t.i, fgh.i) + positional_weight(t.j, fgh.j);
      const int rhs = positional_weight(t.k, fgh.k) + p * (p + 1) / 2;
      if (lhs > rhs) return false;
    }
  }
  return true;
}

struct HornCache {
  std::shared_mutex mutex;
  std::map<std::pair<int, int>, std::unique_ptr<HornTripleSet>> sets;
};

HornCache& horn_cache() {
  static HornCache cache;
  return cache;
}

}  // namespace

SpectrumTriple::SpectrumTriple(std::vector<double> alpha, std::vector<double> beta,
                               std::vector<double> gamma)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
  if (alpha_.empty() || alpha_.size() != beta_.size() || alpha_.size() != gamma_.size()) {
    throw InvalidArgument("spectrum triple needs three non-empty sequences of equal length");
  }
  require_descending(alpha_, "alpha");
  require_descending(beta_, "beta");
  require_descending(gamma_, "gamma");
}

int index_weight(const IndexSet& s) { return std::accumulate(s.begin(), s.end(), 0); }

std::vector<IndexTriple> weight_triples(int n, int r) {
  const auto all = subsets(n, r);
  const int shift = r * (r + 1) / 2;
  std::vector<IndexTriple> out;
  for (const auto& i : all)
    for (const auto& j : all)
      for (const auto& k : all)
        if (index_weight(i) + index_weight(j) == index_weight(k) + shift) out.push_back({i, j, k});
  return out;
}

const HornTripleSet& horn_sets(int n, int r) {
  if (n < 2 || n > kMaxHornDimension || r < 1 || r >= n) {
    throw InvalidArgument("horn_sets requires 1 <= r < n <= " + std::to_string(kMaxHornDimension) +
                          ", got n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
  HornCache& cache = horn_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.sets.find({n, r}); it != cache.sets.end()) return *it->second;
  }

  // Built outside the lock: the filter recurses into horn_sets(r, p).
  auto set = std::make_unique<HornTripleSet>(HornTripleSet{n, r, {}});
  for (auto& t : weight_triples(n, r)) {
    if (r == 1 || passes_recursive_conditions(t, r)) set->triples.push_back(std::move(t));
  }

  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.sets.try_emplace({n, r}, std::move(set));
  return *it->second;
}

InequalityReport horn_check(const SpectrumTriple& t, double tol) {
  const int n = static_cast<int>(t.size());
  if (n > kMaxHornDimension) {
    throw InvalidArgument("horn_check supports n <= " + std::to_string(kMaxHornDimension));
  }
  const auto& alpha = t.alpha();
  const auto& beta = t.beta();
  const auto& gamma = t.gamma();

  InequalityReport report;
  const double sum_alpha = std::accumulate(alpha.begin(), alpha.end(), 0.0);
  const double sum_beta = std::accumulate(beta.begin(), beta.end(), 0.0);
  const double sum_gamma = std::accumulate(gamma.begin(), gamma.end(), 0.0);
  report.trace_residual = sum_gamma - sum_alpha - sum_beta;
  ++report.checked;
  if (std::abs(report.trace_residual) > tol) {
    report.violations.push_back(Violation{InequalityKind::trace, 0, {}, sum_gamma,
                                          sum_alpha + sum_beta,
                                          -std::abs(report.trace_residual)});
  }

  for (int r = 1; r < n; ++r) {
    for (const IndexTriple& triple : horn_sets(n, r).triples) {
      const double lhs = sum_over(gamma, triple.k);
      const double rhs = sum_over(alpha, triple.i) + sum_over(beta, triple.j);
      ++report.checked;
      if (rhs - lhs < -tol) {
        report.violations.push_back(Violation{InequalityKind::upper, r, triple, lhs, rhs, rhs - lhs});
      }

      const double c_lhs = sum_over(gamma, complement(triple.k, n));
      const double c_rhs =
          sum_over(alpha, complement(triple.i, n)) + sum_over(beta, complement(triple.j, n));
      ++report.checked;
      if (c_lhs - c_rhs < -tol) {
        report.violations.push_back(
            Violation{InequalityKind::complementary, r, triple, c_lhs, c_rhs, c_lhs - c_rhs});
      }
    }
  }
  return report;
}

InequalityReport weyl_check(const SpectrumTriple& t, double tol) {
  const int n = static_cast<int>(t.size());
  InequalityReport report;
  report.trace_residual = std::accumulate(t.gamma().begin(), t.gamma().end(), 0.0) -
                          std::accumulate(t.alpha().begin(), t.alpha().end(), 0.0) -
                          std::accumulate(t.beta().begin(), t.beta().end(), 0.0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; i + j - 1 <= n; ++j) {
      const int k = i + j - 1;
      const double lhs = t.gamma()[static_cast<std::size_t>(k - 1)];
      const double rhs = t.alpha()[static_cast<std::size_t>(i - 1)] +
                         t.beta()[static_cast<std::size_t>(j - 1)];
      ++report.checked;
      if (rhs - lhs < -tol) {
        report.violations.push_back(
            Violation{InequalityKind::weyl, 1, IndexTriple{{i}, {j}, {k}}, lhs, rhs, rhs - lhs});
      }
    }
  }
  return report;
}

std::vector<Interval> practical_bounds(std::span<const double> alpha, std::span<const double> beta) {
  if (alpha.empty() || alpha.size() != beta.size()) {
    throw InvalidArgument("practical_bounds: alpha and beta must be non-empty and of equal length");
  }
  require_descending(alpha, "alpha");
  require_descending(beta, "beta");
  const std::size_t n = alpha.size();
  std::vector<Interval> out(n);
  for (std::size_t k = 1; k <= n; ++k) {
    double lo = -std::numeric_limits<double>::infinity();
    for (std::size_t i = k; i <= n; ++i) lo = std::max(lo, alpha[i - 1] + beta[n + k - i - 1]);
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i <= k; ++i) hi = std::min(hi, alpha[i - 1] + beta[k - i]);
    out[k - 1] = Interval{lo, hi};
  }
  return out;
}

InequalityReport practical_bounds_check(const SpectrumTriple& t, double tol) {
  const auto bounds = practical_bounds(t.alpha(), t.beta());
  InequalityReport report;
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    const double g = t.gamma()[k];
    const IndexTriple where{{}, {}, {static_cast<int>(k + 1)}};
    report.checked += 2;
    if (g - bounds[k].lo < -tol) {
      report.violations.push_back(
          Violation{InequalityKind::practical, 0, where, g, bounds[k].lo, g - bounds[k].lo});
    }
    if (bounds[k].hi - g < -tol) {
      report.violations.push_back(
          Violation{InequalityKind::practical, 0, where, g, bounds[k].hi, bounds[k].hi - g});
    }
  }
  return report;
}

SpectrumTriple sum_spectrum(std::span<const double> alpha, std::span<const double> beta,
                            const MatrixC& u, const MatrixC& v, double tol) {
  if (alpha.empty() || alpha.size() != beta.size()) {
    throw InvalidArgument("sum_spectrum: alpha and beta must be non-empty and of equal length");
  }
  const MatrixC sum = from_eigenbasis(u, alpha) + from_eigenbasis(v, beta);
  std::vector<double> gamma = hermitian_eig(HermitianMatrix::hermitian_part(sum), tol).eigenvalues;

  std::vector<double> a(alpha.begin(), alpha.end());
  std::vector<double> b(beta.begin(), beta.end());
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  return SpectrumTriple(std::move(a), std::move(b), std::move(gamma));
}

SpectrumTriple sum_spectrum_oracle(std::span<const double> alpha, std::span<const double> beta,
                                   std::uint64_t seed, double tol) {
  Rng rng(seed);
  const MatrixC u = random_unitary(alpha.size(), rng);
  const MatrixC v = random_unitary(alpha.size(), rng);
  return sum_spectrum(alpha, beta, u, v, tol);
}

}  // namespace psdapprox
