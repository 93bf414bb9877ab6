#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cohiso/scalar.hpp"

namespace cohiso {

/// Dense matrix over Q(sqrt(-3)); exact Gaussian elimination only, no pivots
/// by magnitude (pivot choice is positional, so results are deterministic).
class ScalarMatrix {
public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, ExactScalar(0)) {}

  static ScalarMatrix identity(std::size_t n) {
    ScalarMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ExactScalar(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  ExactScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExactScalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    ScalarMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<ExactScalar> apply(const std::vector<ExactScalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<ExactScalar> out(rows_, ExactScalar(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  ExactScalar determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    ScalarMatrix m(*this);
    ExactScalar det(1);
    for (std::size_t col = 0, row = 0; col < cols_ && row < rows_; ++col, ++row) {
      std::size_t pivot = row;
      while (pivot < rows_ && m(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) return ExactScalar(0);
      if (pivot != row) {
        m.swap_rows(pivot, row);
        det = -det;
      }
      det *= m(row, col);
      ExactScalar inv = m(row, col).inverse();
      for (std::size_t r = row + 1; r < rows_; ++r) {
        if (m(r, col).is_zero()) continue;
        ExactScalar factor = m(r, col) * inv;
        for (std::size_t c = col; c < cols_; ++c) m(r, c) -= factor * m(row, c);
      }
    }
    return det;
  }

  std::size_t rank() const {
    ScalarMatrix m(*this);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
      std::size_t pivot = rank;
      while (pivot < rows_ && m(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) continue;
      m.swap_rows(pivot, rank);
      ExactScalar inv = m(rank, col).inverse();
      for (std::size_t r = rank + 1; r < rows_; ++r) {
        if (m(r, col).is_zero()) continue;
        ExactScalar factor = m(r, col) * inv;
        for (std::size_t c = col; c < cols_; ++c) m(r, c) -= factor * m(rank, c);
      }
      ++rank;
    }
    return rank;
  }

  std::optional<ScalarMatrix> inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    ScalarMatrix m(*this);
    ScalarMatrix inv = identity(rows_);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t pivot = col;
      while (pivot < rows_ && m(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) return std::nullopt;
      m.swap_rows(pivot, col);
      inv.swap_rows(pivot, col);
      ExactScalar d = m(col, col).inverse();
      for (std::size_t c = 0; c < cols_; ++c) {
        m(col, c) *= d;
        inv(col, c) *= d;
      }
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == col || m(r, col).is_zero()) continue;
        ExactScalar factor = m(r, col);
        for (std::size_t c = 0; c < cols_; ++c) {
          m(r, c) -= factor * m(col, c);
          inv(r, c) -= factor * inv(col, c);
        }
      }
    }
    return inv;
  }

  /// Solves A x = b when a solution exists (A need not be square).
  std::optional<std::vector<ExactScalar>> solve(const std::vector<ExactScalar>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("rhs length mismatch");
    ScalarMatrix m(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
      m(i, cols_) = b[i];
    }
    std::vector<long> pivot_col(rows_, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
      std::size_t pivot = rank;
      while (pivot < rows_ && m(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) continue;
      m.swap_rows(pivot, rank);
      ExactScalar d = m(rank, col).inverse();
      for (std::size_t c = col; c <= cols_; ++c) m(rank, c) *= d;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == rank || m(r, col).is_zero()) continue;
        ExactScalar factor = m(r, col);
        for (std::size_t c = col; c <= cols_; ++c) m(r, c) -= factor * m(rank, c);
      }
      pivot_col[rank] = static_cast<long>(col);
      ++rank;
    }
    for (std::size_t r = rank; r < rows_; ++r)
      if (!m(r, cols_).is_zero()) return std::nullopt;
    std::vector<ExactScalar> x(cols_, ExactScalar(0));
    for (std::size_t r = 0; r < rank; ++r) x[static_cast<std::size_t>(pivot_col[r])] = m(r, cols_);
    return x;
  }

private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<ExactScalar> data_;
};

}  // namespace cohiso
