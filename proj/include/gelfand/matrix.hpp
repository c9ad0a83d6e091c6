#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "gelfand/errors.hpp"

namespace gelfand {

/// Dense row-major matrix over a ring T.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : r_(rows), c_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& one = T(1), const T& zero = T()) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t i0, std::size_t j0, std::size_t nr, std::size_t nc) const {
    if (i0 + nr > r_ || j0 + nc > c_) throw ShapeError("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
    return b;
  }

  void set_block(std::size_t i0, std::size_t j0, const Matrix& b) {
    if (i0 + b.r_ > r_ || j0 + b.c_ > c_) throw ShapeError("block out of range");
    for (std::size_t i = 0; i < b.r_; ++i)
      for (std::size_t j = 0; j < b.c_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }
  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  Matrix& scale(const T& s) {
    for (auto& x : a_) x = s * x;
    return *this;
  }

  friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
  friend Matrix operator*(const T& s, Matrix x) { return x.scale(s); }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_)
      throw ShapeError("cannot multiply " + x.shape() + " by " + y.shape());
    Matrix p(x.r_, y.c_);
    if (x.c_ == 0) return p;
    for (std::size_t i = 0; i < x.r_; ++i) {
      for (std::size_t j = 0; j < y.c_; ++j) {
        T acc = x(i, 0) * y(0, j);
        for (std::size_t k = 1; k < x.c_; ++k)
          if (!x(i, k).is_zero()) acc += x(i, k) * y(k, j);
        p(i, j) = std::move(acc);
      }
    }
    return p;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) return false;
    for (std::size_t i = 0; i < x.a_.size(); ++i)
      if (!(x.a_[i] == y.a_[i])) return false;
    return true;
  }

  std::string shape() const { return std::to_string(r_) + "x" + std::to_string(c_); }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.r_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < m.c_; ++j) os << (j ? ", " : "") << m(i, j);
    }
    return os << "]";
  }

 private:
  void check_same(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw ShapeError("shape mismatch " + shape() + " vs " + o.shape());
  }

  std::size_t r_ = 0;
  std::size_t c_ = 0;
  std::vector<T> a_;
};

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack row mismatch");
  Matrix<T> m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw ShapeError("vstack column mismatch");
  Matrix<T> m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

template <class T>
Matrix<T> block_diag(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

template <class T>
Matrix<T> column(const std::vector<T>& v) {
  Matrix<T> m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

}  // namespace gelfand
