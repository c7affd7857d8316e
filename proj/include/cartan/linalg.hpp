// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Small dense matrix type over exact or floating scalars, with row reduction
// based rank/kernel/solve and the characteristic polynomial. Sizes here are a
// few hundred at most, so everything is plain O(n^3) elimination.

#include <algorithm>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "cartan/scalar.hpp"

namespace cartan {

template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarTraits<S>::from_int(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = ScalarTraits<S>::conj((*this)(r, c));
    return out;
  }

  Matrix& operator+=(const Matrix& rhs) {
    check_same(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    check_same(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::dimension_mismatch, "matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (ScalarTraits<S>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const S& v) { return ScalarTraits<S>::is_zero(v); });
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, ScalarTraits<S>::magnitude(v));
    return m;
  }

  S trace() const {
    S t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Eigen::MatrixXcd to_eigen() const {
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = ScalarTraits<S>::to_complex((*this)(r, c));
    return out;
  }

 private:
  void check_same(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw Error(ErrorCode::dimension_mismatch, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Row-reduced echelon form in place. Returns pivot column per pivot row.
template <class S>
std::vector<std::size_t> row_reduce(Matrix<S>& a) {
  std::vector<std::size_t> pivots;
  const double scale = a.max_abs();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t best = a.rows();
    double best_mag = 0.0;
    for (std::size_t r = row; r < a.rows(); ++r) {
      if (!ScalarTraits<S>::pivot_ok(a(r, col), scale)) continue;
      double mag = ScalarTraits<S>::magnitude(a(r, col));
      if (best == a.rows() || mag > best_mag) {
        best = r;
        best_mag = mag;
        if constexpr (ScalarTraits<S>::mode == Mode::exact) break;
      }
    }
    if (best == a.rows()) continue;
    if (best != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(best, c), a(row, c));
    const S inv = ScalarTraits<S>::from_int(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      const S factor = a(r, col);
      if (ScalarTraits<S>::is_zero(factor)) continue;
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
std::size_t rank(Matrix<S> a) {
  return row_reduce(a).size();
}

/// Basis of the null space as the columns of the returned matrix.
template <class S>
Matrix<S> kernel(Matrix<S> a) {
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<S> out(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    out(f, k) = ScalarTraits<S>::from_int(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) out(pivots[r], k) = -a(r, f);
  }
  return out;
}

template <class S>
struct SolveResult {
  Matrix<S> x;
  double residual = 0.0;  ///< max |A x - B| entry
};

/// Solves A X = B for A of full column rank, in the least-residual sense only
/// when B is in range; the returned residual reports how far B is from it.
template <class S>
SolveResult<S> solve(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::dimension_mismatch, "solve: row count mismatch");
  Matrix<S> aug(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
  }
  auto pivots = row_reduce(aug);
  SolveResult<S> out{Matrix<S>(a.cols(), b.cols()), 0.0};
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= a.cols()) break;
    for (std::size_t c = 0; c < b.cols(); ++c) out.x(pivots[r], c) = aug(r, a.cols() + c);
  }
  Matrix<S> diff = a * out.x - b;
  out.residual = diff.max_abs();
  return out;
}

/// Coefficients c_0..c_n of det(t I - A), c_n = 1 (Faddeev-LeVerrier).
template <class S>
std::vector<S> characteristic_polynomial(const Matrix<S>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorCode::dimension_mismatch, "characteristic polynomial of a non-square matrix");
  std::vector<S> c(n + 1);
  c[n] = ScalarTraits<S>::from_int(1);
  Matrix<S> m(n, n);
  const Matrix<S> id = Matrix<S>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + id * c[n - k + 1];
    Matrix<S> am = a * m;
    c[n - k] = -am.trace() / ScalarTraits<S>::from_int(static_cast<std::int64_t>(k));
  }
  return c;
}

}  // namespace cartan
