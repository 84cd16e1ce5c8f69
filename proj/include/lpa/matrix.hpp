#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lpa/rational.hpp"

namespace lpa {

// Dense row-major matrix over exact rationals. Zero-sized dimensions are
// legal; a 3x0 matrix is how an arrow into a 0-dimensional space looks.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  // n x n matrix with small integer entries, full rank, drawn from seed.
  static Matrix random_invertible(std::size_t n, std::uint64_t seed);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  Matrix transpose() const;

  bool is_zero() const;
  std::size_t rank() const;
  // nullopt when singular or non-square.
  std::optional<Matrix> inverse() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  // Skips zero entries of the left factor, so products of sparse 0/1
  // operator matrices stay cheap.
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);

  Matrix& operator+=(const Matrix& other);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using RowVector = std::vector<Rational>;

// v * m with row-vector convention; requires v.size() == m.rows().
RowVector row_times(const RowVector& v, const Matrix& m);

// Rank of the rows, exact Gaussian elimination.
std::size_t rank_of_rows(std::vector<RowVector> rows, std::size_t width);

}  // namespace lpa
