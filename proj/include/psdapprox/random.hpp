#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "psdapprox/hermitian.hpp"
#include "psdapprox/matrix.hpp"

namespace psdapprox {

/// Every randomized routine takes an explicitly seeded engine.
using Rng = std::mt19937_64;

/// Entries with independent standard normal real and imaginary parts.
MatrixC random_complex(std::size_t rows, std::size_t cols, Rng& rng);

/// (G + G^dagger) / 2 for a standard complex Gaussian G.
HermitianMatrix random_hermitian(std::size_t n, Rng& rng);

/// Real symmetric counterpart of random_hermitian.
HermitianMatrix random_real_symmetric(std::size_t n, Rng& rng);

/// Product of n(n-1)/2 complex Givens rotations, one per coordinate pair,
/// with uniformly drawn angles and phases.
MatrixC random_unitary(std::size_t n, Rng& rng);

/// L L^dagger with L an n x rank complex Gaussian matrix.
HermitianMatrix random_psd(std::size_t n, Rng& rng, std::size_t rank = 0);

/// random_psd normalized to unit trace.
HermitianMatrix random_density(std::size_t n, Rng& rng, std::size_t rank = 0);

}  // namespace psdapprox
