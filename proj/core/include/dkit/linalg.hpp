#pragma once

#include <optional>
#include <vector>

#include "dkit/gaussian.hpp"

namespace dkit {

/// Dense row-major matrix over the Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> a_;
};

using Vector = std::vector<GaussianRational>;

/// In-place reduced row echelon form; returns the pivot columns.
/// Pivots are chosen by largest exact norm within each column.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {v : M v = 0}, one vector per free column, each normalized so
/// its first nonzero entry is 1.
std::vector<Vector> null_space(Matrix m);

/// Some solution of M v = b (free variables set to zero), or nullopt when
/// the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Exact determinant by fraction-free elimination.
GaussianRational determinant(Matrix m);

}  // namespace dkit
