#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gelfand/matrix.hpp"

namespace gelfand {

/// Reduced row echelon form together with pivot columns.
template <class F>
struct Rref {
  Matrix<F> m;
  std::vector<std::size_t> pivots;
};

template <class F>
Rref<F> rref(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    F inv = m(row, col).inv();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      F f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

/// Basis of {x : m x = 0}; one vector per free column.
template <class F>
std::vector<std::vector<F>> kernel(const Matrix<F>& m) {
  Rref<F> r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
struct LinearSolution {
  std::optional<Matrix<F>> particular;      // empty when inconsistent
  std::vector<std::vector<F>> kernel_basis;
};

/// All X with a X = b.
template <class F>
LinearSolution<F> solve_linear(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve_linear: " + a.shape() + " vs " + b.shape());
  LinearSolution<F> out;
  out.kernel_basis = kernel(a);
  Rref<F> r = rref(hstack(a, b));
  std::size_t n = a.cols();
  Matrix<F> x(n, b.cols(), F(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= n) return out;  // pivot in the augmented part
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.m(i, n + j);
  }
  out.particular = std::move(x);
  return out;
}

template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
  return solve_linear(a, b).particular;
}

template <class F>
F det(Matrix<F> m) {
  if (m.rows() != m.cols()) throw ShapeError("det of non-square " + m.shape());
  std::size_t n = m.rows();
  F d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    F inv = m(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      F f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of non-square " + m.shape());
  std::size_t n = m.rows();
  Rref<F> r = rref(hstack(m, Matrix<F>::identity(n, F(1), F(0))));
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) throw Error("matrix is singular");
  return r.m.block(0, n, n, n);
}

/// Incrementally maintained subspace of F^n in reduced echelon form.
template <class F>
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : n_(ambient) {}

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::vector<F>>& basis() const { return rows_; }

  /// v minus its projection along the echelon basis; zero iff v is in the span.
  std::vector<F> reduce(std::vector<F> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const F& c = v[pivots_[i]];
      if (c.is_zero()) continue;
      F f = c;
      for (std::size_t j = 0; j < n_; ++j)
        if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
    }
    return v;
  }

  bool contains(const std::vector<F>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Adds v; returns true when the dimension grew.
  bool add(const std::vector<F>& v) {
    if (v.size() != n_) throw ShapeError("subspace vector of wrong length");
    auto r = reduce(v);
    std::size_t p = 0;
    while (p < n_ && r[p].is_zero()) ++p;
    if (p == n_) return false;
    F inv = r[p].inv();
    for (auto& x : r) x *= inv;
    for (auto& row : rows_) {
      if (row[p].is_zero()) continue;
      F f = row[p];
      for (std::size_t j = 0; j < n_; ++j)
        if (!r[j].is_zero()) row[j] -= f * r[j];
    }
    // keep rows sorted by pivot
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(r));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  /// Coordinates of v (assumed in the span) with respect to basis().
  std::vector<F> coords(const std::vector<F>& v) const {
    std::vector<F> c;
    c.reserve(pivots_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  /// Columns that are not pivots: coordinates on a complement.
  std::vector<std::size_t> free_columns() const {
    std::vector<bool> piv(n_, false);
    for (auto p : pivots_) piv[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_; ++j)
      if (!piv[j]) out.push_back(j);
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace gelfand
