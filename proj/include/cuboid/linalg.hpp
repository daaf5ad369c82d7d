#pragma once

// Small dense linear algebra over an exact field.

#include <cstddef>
#include <utility>
#include <vector>

#include "cuboid/error.hpp"

namespace cuboid {

template <class K>
class Matrix {
 public:
  using Domain = typename K::Domain;

  Matrix(std::size_t rows, std::size_t cols, Domain domain)
      : rows_(rows), cols_(cols), domain_(std::move(domain)), data_(rows * cols, domain_.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Domain& domain() const { return domain_; }

  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_, domain_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::InvalidArgument, "matrix shape mismatch");
    Matrix m(a.rows_, b.cols_, a.domain_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) m(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return m;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) fail(ErrorCode::InvalidArgument, "vector length mismatch");
    std::vector<K> out(rows_, domain_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
      }
    }
    return out;
  }

 private:
  std::size_t rows_, cols_;
  Domain domain_;
  std::vector<K> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <class K>
std::vector<std::size_t> row_reduce(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    K inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      K f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m) {
  return row_reduce(m).size();
}

/// Basis of {v : m v = 0}.
template <class K>
std::vector<std::vector<K>> kernel(Matrix<K> m) {
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(m.cols(), m.domain().zero());
    v[free] = m.domain().one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Determinant by cofactor expansion over any commutative ring element type
/// (used on small matrices of polynomials).
template <class T>
T cofactor_determinant(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  T acc = m[0][0] - m[0][0];
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    T term = m[0][c] * cofactor_determinant(minor);
    if (c % 2) {
      acc = acc - term;
    } else {
      acc = acc + term;
    }
  }
  return acc;
}

}  // namespace cuboid
