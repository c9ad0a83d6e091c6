#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gelfand/algebra.hpp"
#include "gelfand/complex.hpp"

namespace gelfand {

/// Polynomial matrix: entry d is the coefficient of t^d.
using PolyMat = std::vector<Matrix<Scalar>>;

PolyMat poly_mul(const PolyMat& a, const PolyMat& b, std::size_t max_degree);
PolyMat poly_add(const PolyMat& a, const PolyMat& b);
PolyMat poly_scale(const Scalar& s, const PolyMat& a);
PolyMat poly_const(const Matrix<Scalar>& m);
PolyMat poly_monomial(const Matrix<Scalar>& m, std::size_t degree);

/// Complex n x n matrices as rational 2n x 2n matrices; a+bi -> (a -b; b a).
Matrix<Scalar> realify(const Matrix<Complex>& z);
Matrix<Complex> complexify_matrix(const Matrix<Scalar>& r);
/// Multiplication by i on the realified space.
Matrix<Scalar> complex_unit(std::size_t n);
/// Entrywise complex conjugation of a realified matrix.
Matrix<Scalar> conj_realified(const Matrix<Scalar>& r);
/// Unit matrix E_ij (1-based) of size n over a ring with 0 and 1.
Matrix<Scalar> unit_matrix(std::size_t n, std::size_t i, std::size_t j);
Matrix<Complex> complex_unit_matrix(std::size_t n, std::size_t i, std::size_t j, const Complex& c = Complex(1));

struct Generator {
  std::string label;
  int degree = 0;        // the generator is t^degree * m
  Matrix<Scalar> m;      // constant matrix
};

/// An R-order given by a homogeneous R-basis t^{d_k} M_k of matrices,
/// R = K[[t]]. The constant matrices M_k must be linearly independent.
/// truncate(N) is the quotient Gamma / t^N Gamma with K-basis t^s g_k,
/// 0 <= s < N, index s * rank + k.
class GradedOrder {
 public:
  GradedOrder() = default;
  GradedOrder(std::string name, std::vector<Generator> gens);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return gens_.size(); }
  std::size_t size() const { return gens_.empty() ? 0 : gens_[0].m.rows(); }
  const std::vector<Generator>& generators() const { return gens_; }
  int max_degree() const { return max_degree_; }

  /// Coefficients of c in the M_k; throws if c is outside their span.
  Vec expand(const Matrix<Scalar>& c) const;
  bool in_span(const Matrix<Scalar>& c) const;
  /// Coordinates of a polynomial matrix in Gamma / t^N Gamma.
  Vec coords(const PolyMat& p, int n_trunc) const;
  /// Polynomial matrix t^s g_k of basis element index = s * rank + k.
  PolyMat element(std::size_t index) const;
  std::size_t index_of(int s, std::size_t k) const { return static_cast<std::size_t>(s) * rank() + k; }
  std::size_t generator_index(const std::string& label) const;

  FinDimAlgebra truncate(int n_trunc) const;

 private:
  std::string name_;
  std::vector<Generator> gens_;
  int max_degree_ = 0;
  std::vector<std::size_t> pivot_entries_;
  Matrix<Scalar> left_inverse_;
  std::vector<std::vector<Term>> beta_;  // M_i M_j expanded, index i*rank+j
};

const GradedOrder& order_A();       // real Gelfand order
const GradedOrder& order_H();       // hereditary overorder of A
const GradedOrder& order_O();       // complex Gelfand order, realified
const GradedOrder& order_Lambda();  // finite-dimensional algebra with trivial t

/// id in {A, H, O, Lambda, A_mod_t}; Lambda ignores N.
FinDimAlgebra truncated_order(const std::string& id, int n_trunc);

/// Involution of O/t^N: swap indices 1 and 2 and conjugate entries.
Matrix<Scalar> involution_matrix(int n_trunc);
Matrix<Scalar> sigma_realified(const Matrix<Scalar>& m);

/// Matrix algebra M_n(Q) with basis E_ij (index i*n+j, 0-based).
FinDimAlgebra full_matrix_algebra(std::size_t n);
/// Matrix of a rational n x n matrix in the basis of full_matrix_algebra.
Vec matrix_coords(const Matrix<Scalar>& m);

/// C (x) alg over Q: basis 1(x)b_k (index k) and i(x)b_k (index dim + k).
FinDimAlgebra complexify(const FinDimAlgebra& alg);

// Explicit isomorphisms.

struct MapCheck {
  FinDimAlgebra source;
  FinDimAlgebra target;
  Matrix<Scalar> m;
  Verdict verdict;
};

/// Lambda -> A/tA.
MapCheck lambda_to_a_mod_t();
/// A/t^N -> (O/t^N)^G built from e, j, f, x1 = x, x2 = xj, y1 = y, y2 = -jy;
/// checked together with its inverse O^G -> A. `mutate` swaps the images of
/// x1 and x2 (a deliberately broken map).
MapCheck og_to_a_check(int n_trunc, bool mutate = false);
/// C[Gal(C/R)] -> M_2(Q).
MapCheck galois_to_matrix_check();
/// C (x) A/t^N -> O/t^N.
MapCheck complexification_check(int n_trunc);

struct IdempotentCheck {
  Verdict verdict;
  std::size_t crossed_dim = 0;
  std::size_t corner_dim = 0;
  std::size_t corner_semisimple_dim = 0;
  std::size_t corner_radical_dim = 0;
};
/// e*^{+-} = (1 +- i[s]) e* / 2 inside O/t^N [G]: orthogonal idempotents with
/// sum e*, [s] e*^{+-} = e*^{-+} [s]; plus the corner (e*^+ + e_+) B (e*^+ + e_+).
IdempotentCheck idempotent_conjugacy_check(int n_trunc);

/// Trivial action on Q: group algebra with idempotents (1 +- [s]) / 2.
Verdict group_algebra_check();

}  // namespace gelfand
