#include <doctest.h>

#include <cmath>
#include <limits>

#include "psdapprox/error.hpp"
#include "psdapprox/hermitian.hpp"
#include "psdapprox/matrix.hpp"
#include "psdapprox/random.hpp"
#include "support/oracles.hpp"

using namespace psdapprox;
using psdapprox::testing::max_abs_diff;

namespace {
const Complex I1{0.0, 1.0};
}

TEST_CASE("frobenius_norm examples") {
  CHECK(frobenius_norm(MatrixC::identity(3)) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(frobenius_norm(MatrixC{{3, 4}, {0, 0}}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(frobenius_norm(MatrixC{{1, I1}, {-I1, 1}}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(frobenius_norm(MatrixC(3, 2)) == 0.0);
}

TEST_CASE("frobenius_norm does not overflow on huge entries") {
  const double big = 1e200;
  CHECK(frobenius_norm(MatrixC{{big, big}}) == doctest::Approx(big * std::sqrt(2.0)));
}

TEST_CASE("kron examples") {
  CHECK(kron(MatrixC::identity(2), MatrixC::identity(2)) == MatrixC::identity(4));
  CHECK(kron(MatrixC::diagonal({1, 2}), MatrixC::diagonal({3, 4})) ==
        MatrixC::diagonal({3, 4, 6, 8}));

  const MatrixC x{{0, 1}, {1, 0}};
  const MatrixC expected{{0, 0, 1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
  CHECK(kron(x, MatrixC::diagonal({1, -1})) == expected);
}

TEST_CASE("kron indexing on rectangular factors") {
  const MatrixC a{{1, 2, 3}};
  const MatrixC b{{1}, {I1}};
  const MatrixC c = kron(a, b);
  REQUIRE(c.rows() == 2);
  REQUIRE(c.cols() == 3);
  CHECK(c(1, 2) == 3.0 * I1);
  CHECK(c(0, 1) == Complex(2.0));
}

TEST_CASE("kron dimension guard") {
  CHECK_THROWS_AS(kron(MatrixC::identity(100), MatrixC::identity(100)), DimensionError);
  CHECK_THROWS_AS(kron(MatrixC::identity(3), MatrixC::identity(3), 8), DimensionError);
  CHECK_NOTHROW(kron(MatrixC::identity(64), MatrixC::identity(64)));
}

TEST_CASE("matmul and conj_transpose") {
  const MatrixC a{{1, I1}, {2, 3.0 - I1}};
  CHECK(matmul(MatrixC::identity(2), a) == a);
  CHECK(conj_transpose(MatrixC{{0, I1}, {0, 0}}) == MatrixC{{0, 0}, {-I1, 0}});
  CHECK(matmul(MatrixC::diagonal({1, 2}), MatrixC::diagonal({3, 4})) == MatrixC::diagonal({3, 8}));
  CHECK(conj_transpose(conj_transpose(a)) == a);
  CHECK_THROWS_AS(matmul(MatrixC(2, 3), MatrixC(2, 3)), DimensionError);
  CHECK_THROWS_AS(MatrixC(2, 2) + MatrixC(2, 3), DimensionError);
}

TEST_CASE("matrix construction validates its invariants") {
  CHECK_THROWS_AS(MatrixC(0, 2), DimensionError);
  CHECK_THROWS_AS(MatrixC(2, 2, std::vector<Complex>(3)), DimensionError);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(MatrixC(1, 1, {Complex(nan, 0.0)}), InvalidArgument);
  CHECK_THROWS_AS((MatrixC{{1, 2}, {3}}), DimensionError);
}

TEST_CASE("frobenius_norm is unitarily invariant") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const MatrixC a = random_complex(n, n, rng);
    // Unitaries taken from eigensolver output, as well as Givens products.
    const MatrixC u = hermitian_eig(random_hermitian(n, rng)).vectors;
    const MatrixC v = random_unitary(n, rng);
    const double lhs = frobenius_norm(matmul(u, matmul(a, v)));
    CHECK(std::abs(lhs - frobenius_norm(a)) <= 1e-10 * std::max(1.0, frobenius_norm(a)));
  }
}

TEST_CASE("from_eigenbasis builds Q diag Q^dagger") {
  const double s = 1.0 / std::sqrt(2.0);
  const MatrixC q{{s, s}, {s, -s}};
  const std::vector<double> values{1.0, -1.0};
  CHECK(max_abs_diff(from_eigenbasis(q, values), MatrixC{{0, 1}, {1, 0}}) < 1e-15);
}
