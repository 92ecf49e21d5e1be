#include "kcell/linalg.hpp"

#include <utility>

namespace kcell {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector Matrix::row(int r) const {
  return RationalVector(data_.begin() + size_t(r) * cols_, data_.begin() + size_t(r + 1) * cols_);
}

RationalVector Matrix::col(int c) const {
  RationalVector out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("matrix dimension mismatch");
  Matrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

RationalVector Matrix::operator*(const RationalVector& v) const {
  if (int(v.size()) != cols_) throw Error("matrix-vector dimension mismatch");
  RationalVector out(rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<int> row_reduce(Matrix& m, int pivot_limit) {
  const int limit = pivot_limit < 0 ? m.cols() : pivot_limit;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < limit && r < m.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    }
    const Rational inv = 1 / Rational(m(r, c));
    for (int j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(Matrix m) { return int(row_reduce(m).size()); }

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const int n = m.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i) {
      if (m(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) return 0;
    if (sel != c) {
      for (int j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

namespace {

Matrix augment(const Matrix& a, const RationalVector& b) {
  if (int(b.size()) != a.rows()) throw Error("right-hand side has wrong length");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  return aug;
}

bool consistent(const Matrix& reduced, size_t num_pivots) {
  for (int i = int(num_pivots); i < reduced.rows(); ++i) {
    if (reduced(i, reduced.cols() - 1) != 0) return false;
  }
  return true;
}

}  // namespace

std::optional<RationalVector> solve_unique(const Matrix& a, const RationalVector& b) {
  Matrix aug = augment(a, b);
  const auto pivots = row_reduce(aug, a.cols());
  if (!consistent(aug, pivots.size()) || int(pivots.size()) != a.cols()) return std::nullopt;
  RationalVector x(a.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(int(i), a.cols());
  return x;
}

std::optional<RationalVector> solve_any(const Matrix& a, const RationalVector& b) {
  Matrix aug = augment(a, b);
  const auto pivots = row_reduce(aug, a.cols());
  if (!consistent(aug, pivots.size())) return std::nullopt;
  RationalVector x(a.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(int(i), a.cols());
  return x;
}

int affine_dimension(const std::vector<RationalVector>& points) {
  if (points.empty()) return -1;
  const int dim = int(points[0].size());
  Matrix diffs(int(points.size()) - 1, dim);
  for (size_t i = 1; i < points.size(); ++i) {
    for (int j = 0; j < dim; ++j) diffs(int(i) - 1, j) = points[i][j] - points[0][j];
  }
  return rank(diffs);
}

}  // namespace kcell
