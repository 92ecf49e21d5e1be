#pragma once

// Exact linear algebra over the rationals. Matrices are small (at most a few
// dozen rows), so a dense row-major representation is used throughout.

#include <optional>
#include <vector>

#include "kcell/rational.hpp"

namespace kcell {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  RationalVector row(int r) const;
  RationalVector col(int c) const;

  Matrix operator*(const Matrix& rhs) const;
  RationalVector operator*(const RationalVector& v) const;
  bool operator==(const Matrix& rhs) const = default;

  Matrix transposed() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form, computed in place. Returns the pivot columns.
/// Only the first `pivot_limit` columns are eligible as pivots (all columns
/// when negative), which lets callers reduce augmented systems.
std::vector<int> row_reduce(Matrix& m, int pivot_limit = -1);

int rank(Matrix m);

Rational determinant(Matrix m);

/// Solves A x = b. Returns nullopt when inconsistent or when the solution is
/// not unique.
std::optional<RationalVector> solve_unique(const Matrix& a, const RationalVector& b);

/// Any solution of A x = b (free variables set to zero), nullopt if inconsistent.
std::optional<RationalVector> solve_any(const Matrix& a, const RationalVector& b);

/// Dimension of the affine hull of a finite point set (-1 for the empty set).
int affine_dimension(const std::vector<RationalVector>& points);

}  // namespace kcell
