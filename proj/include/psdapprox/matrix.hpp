#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace psdapprox {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;
inline constexpr std::size_t kDefaultKronMaxRows = 4096;

/// Dense complex matrix stored row-major. Always at least 1x1 and every
/// entry is finite.
class MatrixC {
 public:
  /// Zero matrix.
  MatrixC(std::size_t rows, std::size_t cols);
  MatrixC(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Row-wise literal, e.g. `MatrixC{{0, 1}, {1, 0}}`.
  MatrixC(std::initializer_list<std::initializer_list<Complex>> rows);

  static MatrixC identity(std::size_t n);
  static MatrixC diagonal(std::span<const double> values);
  static MatrixC diagonal(std::initializer_list<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }

  MatrixC& operator+=(const MatrixC& other);
  MatrixC& operator-=(const MatrixC& other);
  MatrixC& operator*=(Complex scalar) noexcept;

  friend MatrixC operator+(MatrixC lhs, const MatrixC& rhs) { return lhs += rhs; }
  friend MatrixC operator-(MatrixC lhs, const MatrixC& rhs) { return lhs -= rhs; }
  friend MatrixC operator*(MatrixC lhs, Complex scalar) { return lhs *= scalar; }
  friend MatrixC operator*(Complex scalar, MatrixC rhs) { return rhs *= scalar; }

  friend bool operator==(const MatrixC&, const MatrixC&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

MatrixC matmul(const MatrixC& a, const MatrixC& b);
MatrixC conj_transpose(const MatrixC& a);
MatrixC transpose(const MatrixC& a);

/// Kronecker product; entry (i*p + k, j*q + l) is a(i, j) * b(k, l) for b of
/// shape p x q. Throws DimensionError when the result would exceed `max_rows`
/// rows or columns.
MatrixC kron(const MatrixC& a, const MatrixC& b, std::size_t max_rows = kDefaultKronMaxRows);

double frobenius_norm(const MatrixC& a);
Complex trace(const MatrixC& a);

/// max(1, ||a||_F): the reference magnitude that relative tolerances multiply.
double tolerance_scale(const MatrixC& a);

/// Q * diag(values) * Q^dagger.
MatrixC from_eigenbasis(const MatrixC& q, std::span<const double> values);

}  // namespace psdapprox
