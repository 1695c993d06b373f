#include "psdapprox/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace psdapprox {

MatrixC random_complex(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> entries(rows * cols);
  for (auto& e : entries) {
    const double re = normal(rng);
    const double im = normal(rng);
    e = Complex(re, im);
  }
  return MatrixC(rows, cols, std::move(entries));
}

HermitianMatrix random_hermitian(std::size_t n, Rng& rng) {
  return HermitianMatrix::hermitian_part(random_complex(n, n, rng));
}

HermitianMatrix random_real_symmetric(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  MatrixC m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double x = normal(rng);
      m(i, j) = x;
      m(j, i) = x;
    }
  return HermitianMatrix::hermitian_part(m);
}

MatrixC random_unitary(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  MatrixC u = MatrixC::identity(n);
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const double theta = angle(rng);
      const double phi = angle(rng);
      const double c = std::cos(theta);
      const Complex s = std::polar(std::sin(theta), phi);
      // u <- u * G with G = [[c, -s], [conj(s), c]] on the (p, q) plane.
      for (std::size_t k = 0; k < n; ++k) {
        const Complex ukp = u(k, p);
        const Complex ukq = u(k, q);
        u(k, p) = ukp * c + ukq * std::conj(s);
        u(k, q) = -ukp * s + ukq * c;
      }
    }
  }
  return u;
}

HermitianMatrix random_psd(std::size_t n, Rng& rng, std::size_t rank) {
  if (rank == 0) rank = n;
  const MatrixC l = random_complex(n, rank, rng);
  return HermitianMatrix::hermitian_part(matmul(l, conj_transpose(l)));
}

HermitianMatrix random_density(std::size_t n, Rng& rng, std::size_t rank) {
  const HermitianMatrix p = random_psd(n, rng, rank);
  const double tr = trace(p.matrix()).real();
  return HermitianMatrix::hermitian_part(p.matrix() * Complex(1.0 / tr));
}

}  // namespace psdapprox
