#pragma once

#include <stdexcept>
#include <vector>

#include "quotdt/field.hpp"

namespace quotdt {

/// Dense square-friendly matrix over an exact field F (Rat or Fp).
template <typename F>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative size");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  F& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const F& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: size mismatch in product");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (quotdt::is_zero(a(i, k))) continue;
        for (int j = 0; j < b.cols_; ++j) m(i, j) = m(i, j) + a(i, k) * b(k, j);
      }
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
    return m;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
    return m;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  F trace() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: trace of non-square matrix");
    F t{};
    for (int i = 0; i < rows_; ++i) t = t + (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!quotdt::is_zero(x)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
      if (!(data_[i] == o.data_[i])) return false;
    return true;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw std::invalid_argument("Matrix: vector length mismatch");
    std::vector<F> w(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) w[i] = w[i] + (*this)(i, j) * v[j];
    return w;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
  }

  int rows_, cols_;
  std::vector<F> data_;
};

template <typename F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
  return a * b - b * a;
}

/// Growing echelonized row space; rows are kept normalized with
/// strictly increasing pivot columns.
template <typename F>
class RowSpace {
 public:
  explicit RowSpace(int ambient) : ambient_(ambient) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return ambient_; }
  const std::vector<std::vector<F>>& rows() const { return rows_; }

  /// Inserts a vector; returns true when the dimension grew.
  bool insert(std::vector<F> v) {
    check_len(v);
    reduce(v);
    int piv = pivot_of(v);
    if (piv < 0) return false;
    F inv = field_inverse(v[piv]);
    for (auto& x : v) x = x * inv;
    // keep rows ordered by pivot column
    size_t pos = 0;
    while (pos < rows_.size() && pivot_of(rows_[pos]) < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  bool contains(std::vector<F> v) const {
    check_len(v);
    reduce(v);
    return pivot_of(v) < 0;
  }

 private:
  void check_len(const std::vector<F>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
      throw std::invalid_argument("RowSpace: vector length mismatch");
  }

  static int pivot_of(const std::vector<F>& v) {
    for (size_t j = 0; j < v.size(); ++j)
      if (!quotdt::is_zero(v[j])) return static_cast<int>(j);
    return -1;
  }

  void reduce(std::vector<F>& v) const {
    for (const auto& row : rows_) {
      int p = pivot_of(row);
      if (p < 0 || quotdt::is_zero(v[p])) continue;
      F c = v[p];
      for (int j = p; j < ambient_; ++j) v[j] = v[j] - c * row[j];
    }
  }

  int ambient_;
  std::vector<std::vector<F>> rows_;
};

}  // namespace quotdt
