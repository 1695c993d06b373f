#include "psdapprox/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "psdapprox/error.hpp"

namespace psdapprox {

namespace {

void require_positive_shape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive, got " + std::to_string(rows) +
                         "x" + std::to_string(cols));
  }
}

void require_same_shape(const MatrixC& a, const MatrixC& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

}  // namespace

MatrixC::MatrixC(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  require_positive_shape(rows, cols);
  entries_.assign(rows * cols, Complex{});
}

MatrixC::MatrixC(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_positive_shape(rows, cols);
  if (entries_.size() != rows * cols) {
    throw DimensionError("expected " + std::to_string(rows * cols) + " entries, got " +
                         std::to_string(entries_.size()));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!std::isfinite(entries_[k].real()) || !std::isfinite(entries_[k].imag())) {
      throw InvalidArgument("non-finite matrix entry at index " + std::to_string(k));
    }
  }
}

MatrixC::MatrixC(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  require_positive_shape(rows_, cols_);
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

MatrixC MatrixC::identity(std::size_t n) {
  MatrixC m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

MatrixC MatrixC::diagonal(std::span<const double> values) {
  MatrixC m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

MatrixC MatrixC::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

MatrixC& MatrixC::operator+=(const MatrixC& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

MatrixC& MatrixC::operator-=(const MatrixC& other) {
  require_same_shape(*this, other, "subtract");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

MatrixC& MatrixC::operator*=(Complex scalar) noexcept {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

MatrixC matmul(const MatrixC& a, const MatrixC& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions differ (" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + ")");
  }
  MatrixC c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

MatrixC conj_transpose(const MatrixC& a) {
  MatrixC t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

MatrixC transpose(const MatrixC& a) {
  MatrixC t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

MatrixC kron(const MatrixC& a, const MatrixC& b, std::size_t max_rows) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > max_rows || cols > max_rows) {
    throw DimensionError("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " exceeds the configured maximum of " + std::to_string(max_rows));
  }
  MatrixC c(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return c;
}

double frobenius_norm(const MatrixC& a) {
  // Scaled accumulation keeps huge or tiny entries from overflowing.
  double scale = 0.0;
  for (const auto& e : a.entries()) scale = std::max({scale, std::abs(e.real()), std::abs(e.imag())});
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (const auto& e : a.entries()) {
    const double re = e.real() / scale;
    const double im = e.imag() / scale;
    sum += re * re + im * im;
  }
  return scale * std::sqrt(sum);
}

Complex trace(const MatrixC& a) {
  if (!a.is_square()) throw DimensionError("trace: matrix is not square");
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double tolerance_scale(const MatrixC& a) { return std::max(1.0, frobenius_norm(a)); }

MatrixC from_eigenbasis(const MatrixC& q, std::span<const double> values) {
  if (!q.is_square() || q.cols() != values.size()) {
    throw DimensionError("from_eigenbasis: basis and value count disagree");
  }
  const std::size_t n = q.rows();
  MatrixC out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = values[k];
    if (lambda == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex qik = q(i, k) * lambda;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += qik * std::conj(q(j, k));
    }
  }
  return out;
}

}  // namespace psdapprox
