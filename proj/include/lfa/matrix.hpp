#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lfa/errors.hpp"
#include "lfa/poly.hpp"

namespace lfa {

/// Small dense row-major matrix over a commutative ring T.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  template <class U, class Fn>
  Mat<U> map(Fn&& fn) const {
    Mat<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = fn((*this)(i, j));
    return out;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    require_square("trace");
    T acc{};
    for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
    return acc;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    same_shape(a, b);
    Mat r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    same_shape(a, b);
    Mat r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Mat r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Mat operator*(const T& s, const Mat& m) {
    Mat r(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.data_.size(); ++k) r.data_[k] = s * m.data_[k];
    return r;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Division-free cofactor expansion; intended for dimension <= 4.
  T det() const {
    require_square("det");
    std::vector<std::size_t> cols(cols_);
    for (std::size_t j = 0; j < cols_; ++j) cols[j] = j;
    return det_rec(0, cols);
  }

  /// Coefficients of det(lambda I - A), constant term first.
  std::vector<T> charpoly() const {
    require_square("charpoly");
    Mat<Poly<T>> shifted(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        Poly<T> e(-(*this)(i, j));
        if (i == j) e += Poly<T>::x();
        shifted(i, j) = std::move(e);
      }
    const Poly<T> p = shifted.det();
    std::vector<T> out;
    for (int k = 0; k <= static_cast<int>(rows_); ++k) out.push_back(p.coeff(k));
    return out;
  }

  /// Gauss-Jordan inverse over a field.
  Mat inverse() const {
    require_square("inverse");
    const std::size_t n = rows_;
    Mat a = *this;
    Mat inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && a(pivot, col).is_zero()) ++pivot;
      if (pivot == n) throw std::domain_error("Mat: singular matrix");
      if (pivot != col)
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(pivot, j), a(col, j));
          std::swap(inv(pivot, j), inv(col, j));
        }
      const T scale = T(1) / a(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) = a(col, j) * scale;
        inv(col, j) = inv(col, j) * scale;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || a(r, col).is_zero()) continue;
        const T f = a(r, col);
        for (std::size_t j = 0; j < n; ++j) {
          a(r, j) -= f * a(col, j);
          inv(r, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

 private:
  void require_square(const char* op) const {
    if (!is_square()) throw DimensionMismatch(std::string(op) + " of a non-square matrix");
  }
  static void same_shape(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix shapes differ");
  }

  T det_rec(std::size_t row, const std::vector<std::size_t>& cols) const {
    if (cols.empty()) return T(1);
    if (cols.size() == 1) return (*this)(row, cols[0]);
    T acc{};
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const T& e = (*this)(row, cols[k]);
      if (e.is_zero()) continue;
      std::vector<std::size_t> rest;
      rest.reserve(cols.size() - 1);
      for (std::size_t m = 0; m < cols.size(); ++m)
        if (m != k) rest.push_back(cols[m]);
      T minor = e * det_rec(row + 1, rest);
      if (k % 2 == 0)
        acc += minor;
      else
        acc -= minor;
    }
    return acc;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace lfa
