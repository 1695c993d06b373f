#include <doctest.h>

#include <cmath>
#include <vector>

#include "psdapprox/error.hpp"
#include "psdapprox/random.hpp"
#include "psdapprox/tensor.hpp"
#include "support/oracles.hpp"

using namespace psdapprox;
using namespace psdapprox::testing;

namespace {

HermitianMatrix h(MatrixC m) { return HermitianMatrix(std::move(m)); }
HermitianMatrix diag(std::initializer_list<double> d) { return HermitianMatrix(MatrixC::diagonal(d)); }

MatrixC sum_of_krons(const std::vector<HermitianMatrix>& a, const std::vector<HermitianMatrix>& b) {
  MatrixC total = kron(a[0].matrix(), b[0].matrix());
  for (std::size_t i = 1; i < a.size(); ++i) total += kron(a[i].matrix(), b[i].matrix());
  return total;
}

// Positive part through the direct eigendecomposition of the assembled matrix.
MatrixC direct_plus(const MatrixC& m) {
  return split_pos_neg(HermitianMatrix::hermitian_part(m)).plus.matrix();
}

double min_eig_of(const HermitianMatrix& m) { return hermitian_eig(m).min_eigenvalue(); }

std::vector<double> random_diagonal(std::size_t n, Rng& rng) {
  std::normal_distribution<double> g;
  std::vector<double> d(n);
  for (auto& x : d) x = g(rng);
  return d;
}

}  // namespace

TEST_CASE("tensor_split examples") {
  const PosNegParts zz = tensor_split(diag({1, -1}), diag({1, -1}));
  CHECK(zz.plus.matrix() == MatrixC::diagonal({1, 0, 0, 1}));
  CHECK(zz.minus.matrix() == MatrixC::diagonal({0, 1, 1, 0}));
  CHECK(zz.signature == Signature{2, 2, 0});

  Rng rng(1);
  const PosNegParts psd = tensor_split(random_psd(2, rng), random_psd(3, rng));
  CHECK(frobenius_norm(psd.minus.matrix()) == 0.0);
}

TEST_CASE("tensor_split matches the direct split of the Kronecker product") {
  Rng rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const HermitianMatrix b = random_hermitian(1 + trial % 4, rng);
    const HermitianMatrix c = random_hermitian(1 + (trial / 4) % 4, rng);
    const PosNegParts factor = tensor_split(b, c);
    const PosNegParts direct =
        split_pos_neg(HermitianMatrix::hermitian_part(kron(b.matrix(), c.matrix())));
    CHECK(diff_norm(factor.plus.matrix(), direct.plus.matrix()) <= 1e-9);
    CHECK(diff_norm(factor.minus.matrix(), direct.minus.matrix()) <= 1e-9);
    CHECK(factor.signature == direct.signature);
  }
}

TEST_CASE("nearest_psd_tensor examples") {
  CHECK(nearest_psd_tensor(diag({1, -1}), diag({1, -1})).distance ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(nearest_psd_tensor(diag({1, -1}), h(MatrixC::identity(2))).distance ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  Rng rng(2);
  CHECK(nearest_psd_tensor(random_psd(3, rng), random_psd(2, rng)).distance == 0.0);
}

TEST_CASE("nearest_psd_tensor distance is a lower bound over PSD matrices") {
  Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + trial % 3;
    const std::size_t n = 1 + (trial / 3) % 3;
    const HermitianMatrix b = random_hermitian(m, rng);
    const HermitianMatrix c = random_hermitian(n, rng);
    const NearestPsd approx = nearest_psd_tensor(b, c);
    const MatrixC bc = kron(b.matrix(), c.matrix());
    CHECK(std::abs(frobenius_norm(bc - approx.approximant.matrix()) - approx.distance) <= 1e-9);
    const HermitianMatrix other = random_psd(m * n, rng);
    CHECK(frobenius_norm(bc - other.matrix()) >= approx.distance - 1e-9);
  }
}

TEST_CASE("commuting_family_approx: single pair reduces to nearest_psd_tensor") {
  Rng rng(3);
  const std::vector<HermitianMatrix> a{random_hermitian(2, rng)};
  const std::vector<HermitianMatrix> b{random_hermitian(3, rng)};
  const CommutingFamilyApprox fam = commuting_family_approx(a, b);
  const NearestPsd single = nearest_psd_tensor(a[0], b[0]);
  CHECK(diff_norm(fam.approximant.matrix(), single.approximant.matrix()) <= 1e-10);
  CHECK(std::abs(fam.distance - single.distance) <= 1e-10);
  CHECK(fam.additivity_gap <= 1e-10);
}

TEST_CASE("commuting_family_approx: diagonal families, slot by slot") {
  // Sum = diag(1,1,-1,-1) + diag(0,-2,0,0) = diag(1,-1,-1,-1).
  // Term-wise positive parts: diag(1,0) (x) I = diag(1,1,0,0); the second
  // term contributes nothing. Term-wise negative parts: diag(0,1) (x) I and
  // diag(2,0) (x) diag(0,1), summing to diag(0,2,1,1).
  const std::vector<HermitianMatrix> a{diag({1, -1}), diag({2, 0})};
  const std::vector<HermitianMatrix> b{diag({1, 1}), diag({0, -1})};
  const CommutingFamilyApprox fam = commuting_family_approx(a, b);
  CHECK(max_abs_diff(fam.approximant.matrix(), MatrixC::diagonal({1, 1, 0, 0})) < 1e-14);
  CHECK(fam.distance == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
  // The exact nearest PSD matrix is diag(1,0,0,0) at distance sqrt3.
  CHECK(max_abs_diff(direct_plus(sum_of_krons(a, b)), MatrixC::diagonal({1, 0, 0, 0})) < 1e-14);
  CHECK(fam.exact_distance == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(fam.additivity_gap == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("commuting_family_approx equals the direct split when slot signs agree") {
  // In a shared eigenbasis, sum_i (a_i (x) b_i)_+ is additive exactly when the
  // products a_i[s] b_i[t] share a sign for every slot (s, t). Families whose
  // members share one sign pattern and factors that are PSD guarantee this.
  Rng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 2 + trial % 3;
    const std::size_t n = 2 + (trial / 3) % 2;
    const MatrixC qa = random_unitary(m, rng);
    const MatrixC qb = random_unitary(n, rng);
    const std::vector<double> signs = random_diagonal(m, rng);
    std::vector<HermitianMatrix> a, b;
    for (int i = 0; i < 3; ++i) {
      std::vector<double> da = random_diagonal(m, rng);
      for (std::size_t k = 0; k < m; ++k) da[k] = std::copysign(std::abs(da[k]), signs[k]);
      std::vector<double> db = random_diagonal(n, rng);
      for (auto& x : db) x = std::abs(x);
      a.push_back(hermitian_with_spectrum(qa, da));
      b.push_back(hermitian_with_spectrum(qb, db));
    }
    const CommutingFamilyApprox fam = commuting_family_approx(a, b, kDefaultTol, trial);
    const MatrixC total = sum_of_krons(a, b);
    CHECK(diff_norm(fam.approximant.matrix(), direct_plus(total)) <= 1e-9);
    CHECK(std::abs(fam.distance - fam.exact_distance) <= 1e-9);
    CHECK(fam.additivity_gap <= 1e-9);
  }
}

TEST_CASE("commuting_family_approx bounds the exact distance from above") {
  // The term-wise approximant is PSD, so its distance can never beat the optimum.
  Rng rng(56);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 2 + trial % 2;
    const std::size_t n = 2 + (trial / 2) % 2;
    const MatrixC qa = random_unitary(m, rng);
    const MatrixC qb = random_unitary(n, rng);
    std::vector<HermitianMatrix> a, b;
    for (int i = 0; i < 2; ++i) {
      a.push_back(hermitian_with_spectrum(qa, random_diagonal(m, rng)));
      b.push_back(hermitian_with_spectrum(qb, random_diagonal(n, rng)));
    }
    const CommutingFamilyApprox fam = commuting_family_approx(a, b, kDefaultTol, trial);
    const MatrixC total = sum_of_krons(a, b);
    CHECK(min_eig_of(fam.approximant) >= -1e-9);
    CHECK(std::abs(frobenius_norm(total - fam.approximant.matrix()) - fam.distance) <= 1e-9);
    CHECK(fam.distance >= fam.exact_distance - 1e-9);
  }
}

TEST_CASE("commuting_family_approx input validation") {
  const std::vector<HermitianMatrix> nc{h(MatrixC{{0, 1}, {1, 0}}), diag({1, -1})};
  const std::vector<HermitianMatrix> ok{diag({1, 2}), diag({3, 4})};
  CHECK_THROWS_AS(commuting_family_approx(nc, ok), NonCommutingError);
  CHECK_THROWS_AS(commuting_family_approx(ok, nc), NonCommutingError);
  CHECK_THROWS_AS(commuting_family_approx(ok, std::vector<HermitianMatrix>{diag({1, 2})}),
                  InvalidArgument);
}

TEST_CASE("additivity residuals for commuting pairs") {
  SUBCASE("opposite signs in a slot break equality") {
    // A + B = diag(-1, 2): (A+B)_+ = diag(0, 2) while A_+ + B_+ = diag(1, 3).
    const AdditivityResiduals r = commuting_additivity_check(diag({1, -1}), diag({-2, 3}));
    CHECK(r.plus == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r.minus == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r.plus_dominance_min_eig == doctest::Approx(1.0));
    CHECK(r.minus_dominance_min_eig == doctest::Approx(1.0));
  }
  SUBCASE("A and 2A") {
    Rng rng(8);
    const HermitianMatrix a = random_hermitian(4, rng);
    const HermitianMatrix a2 = HermitianMatrix::hermitian_part(a.matrix() * Complex(2.0));
    const AdditivityResiduals r = commuting_additivity_check(a, a2);
    CHECK(r.plus <= 1e-9);
    CHECK(r.minus <= 1e-9);
  }
  SUBCASE("non-commuting input is rejected") {
    CHECK_THROWS_AS(commuting_additivity_check(h(MatrixC{{0, 1}, {1, 0}}), diag({1, -1})),
                    NonCommutingError);
  }
}

TEST_CASE("additivity holds for sign-compatible commuting pairs and dominance always holds") {
  Rng rng(91);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const MatrixC q = random_unitary(n, rng);
    const std::vector<double> da = random_diagonal(n, rng);
    std::vector<double> same = random_diagonal(n, rng);
    for (std::size_t k = 0; k < n; ++k) same[k] = std::copysign(std::abs(same[k]), da[k]);
    const HermitianMatrix a = hermitian_with_spectrum(q, da);

    const AdditivityResiduals compatible =
        commuting_additivity_check(a, hermitian_with_spectrum(q, same));
    CHECK(compatible.plus <= 1e-9);
    CHECK(compatible.minus <= 1e-9);

    const AdditivityResiduals generic =
        commuting_additivity_check(a, hermitian_with_spectrum(q, random_diagonal(n, rng)));
    CHECK(generic.plus_dominance_min_eig >= -1e-9);
    CHECK(generic.minus_dominance_min_eig >= -1e-9);
  }
}

TEST_CASE("additivity residual on a non-commuting pair is not small") {
  const AdditivityResiduals r = additivity_residuals(h(MatrixC{{0, 1}, {1, 0}}), diag({1, -1}));
  CHECK(r.plus > 0.1);
}

TEST_CASE("tensor_sum_bound_report examples") {
  SUBCASE("non-PSD single term") {
    const std::vector<TensorTerm> terms{{h(MatrixC::identity(2)), diag({1, -1})}};
    const BoundReport r = tensor_sum_bound_report(terms);
    CHECK(r.lhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r.rhs == 0.0);
    CHECK_FALSE(r.satisfied);
    CHECK_FALSE(r.hypothesis_held);
  }
  SUBCASE("Bell state decomposition") {
    const MatrixC bell{{0.5, 0, 0, 0.5}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0.5, 0, 0, 0.5}};
    const SchmidtDecomposition d = operator_schmidt(make_density(bell, {2, 2}));
    const BoundReport r = tensor_sum_bound_report(d);
    CHECK(r.lhs <= 1e-10);
    CHECK(r.rhs > 0.0);
    CHECK(r.satisfied);
    CHECK(r.hypothesis_held);
  }
  SUBCASE("random density matrices") {
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
      const BipartiteDims dims = trial % 2 ? BipartiteDims{2, 3} : BipartiteDims{2, 2};
      const DensityMatrix rho = make_density(random_density(dims.total(), rng).matrix(), dims);
      const BoundReport r = tensor_sum_bound_report(operator_schmidt(rho));
      CHECK(r.lhs <= 1e-9);
      CHECK(r.satisfied);
      CHECK(r.hypothesis_held);
    }
  }
  SUBCASE("explicit terms agree with the assembled matrix") {
    Rng rng(13);
    std::vector<TensorTerm> terms;
    for (int i = 0; i < 3; ++i) terms.push_back({random_hermitian(2, rng), random_hermitian(3, rng)});
    MatrixC total = kron(terms[0].b.matrix(), terms[0].c.matrix());
    for (std::size_t i = 1; i < terms.size(); ++i) total += kron(terms[i].b.matrix(), terms[i].c.matrix());
    const double lhs = nearest_psd(HermitianMatrix::hermitian_part(total)).distance;
    double rhs = 0.0;
    for (const auto& t : terms) rhs += nearest_psd(t.b).distance * nearest_psd(t.c).distance;
    const BoundReport r = tensor_sum_bound_report(terms);
    CHECK(r.lhs == doctest::Approx(lhs).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}
