#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gelfand/linalg.hpp"
#include "gelfand/scalar.hpp"

namespace gelfand {

using Vec = std::vector<Scalar>;

struct Term {
  std::size_t index;
  Scalar coeff;
};

/// Sparse structure constants: entry i*dim+j lists b_i*b_j in the basis.
using ProductTable = std::vector<std::vector<Term>>;
using ProductFn = std::function<Vec(std::size_t, std::size_t)>;

/// Pass/fail with a human-readable reason.
struct Verdict {
  bool ok = true;
  std::string message;
  static Verdict pass() { return {}; }
  static Verdict fail(std::string m) { return {false, std::move(m)}; }
  explicit operator bool() const { return ok; }
};

class FinDimAlgebra {
 public:
  FinDimAlgebra() = default;
  FinDimAlgebra(std::vector<std::string> labels, Vec unit, ProductTable table);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }
  const ProductTable& table() const { return table_; }
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vec basis_vector(std::size_t i) const;
  Vec zero() const { return Vec(dim()); }
  Vec mul(const Vec& a, const Vec& b) const;
  /// Matrix of x -> a*x (column j is a*b_j).
  Matrix<Scalar> left_matrix(const Vec& a) const;
  Matrix<Scalar> right_matrix(const Vec& a) const;
  /// Trace of left multiplication by b_i, for every i.
  const Vec& basis_traces() const { return traces_; }

 private:
  std::vector<std::string> labels_;
  Vec unit_;
  ProductTable table_;
  Vec traces_;
};

/// Builds the structure constants by evaluating `product` on all basis pairs.
FinDimAlgebra build_algebra(std::vector<std::string> labels, Vec unit, const ProductFn& product);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& a);
bool is_zero(const Vec& a);
std::vector<Term> to_terms(const Vec& v);

Verdict check_associative(const FinDimAlgebra& alg);
Verdict check_unit(const FinDimAlgebra& alg);

/// Basis of the Jacobson radical (kernel of the trace form; characteristic 0).
Subspace<Scalar> radical(const FinDimAlgebra& alg);
Subspace<Scalar> center(const FinDimAlgebra& alg);
Subspace<Scalar> span(std::size_t ambient, const std::vector<Vec>& vectors);

/// Quotient by a two-sided ideal; basis = the free columns of `ideal`.
FinDimAlgebra quotient(const FinDimAlgebra& alg, const Subspace<Scalar>& ideal);

/// Subalgebra on a subspace closed under multiplication, with the given unit
/// (defaults to the ambient unit). Coordinates follow sub.basis().
FinDimAlgebra subalgebra(const FinDimAlgebra& alg, const Subspace<Scalar>& sub, std::optional<Vec> unit = std::nullopt);

/// Linear map between algebras; column j is the image of source basis j.
struct AlgebraMap {
  const FinDimAlgebra* source = nullptr;
  const FinDimAlgebra* target = nullptr;
  Matrix<Scalar> m;
  Vec apply(const Vec& x) const;
};

/// Unit preservation, multiplicativity on all basis pairs, bijectivity.
Verdict verify_algebra_map(const AlgebraMap& f);

/// Action of Z/2: sigma is the matrix of the involution on the basis.
struct GroupAction2 {
  const FinDimAlgebra* algebra = nullptr;
  Matrix<Scalar> sigma;
};

Verdict verify_action(const GroupAction2& act);

/// Gamma[G]: basis b_i[e] (index i), b_i[s] (index dim + i),
/// a[f] * b[g] = a phi_f(b) [fg].
FinDimAlgebra crossed_product(const FinDimAlgebra& gamma, const GroupAction2& act);

struct InvariantSubalgebra {
  FinDimAlgebra algebra;
  Subspace<Scalar> embedding;  // fixed vectors inside the ambient algebra
};
InvariantSubalgebra invariant_subalgebra(const GroupAction2& act);

struct CornerAlgebra {
  FinDimAlgebra algebra;
  Subspace<Scalar> embedding;
};
/// eps*A*eps with unit eps.
CornerAlgebra corner_algebra(const FinDimAlgebra& alg, const Vec& eps);

/// Monic minimal polynomial of x, lowest degree first.
Vec minimal_polynomial(const FinDimAlgebra& alg, const Vec& x);

/// (positive, negative, zero) counts of a symmetric form.
struct Signature {
  int pos = 0;
  int neg = 0;
  int zero = 0;
};
Signature signature(Matrix<Scalar> gram);
Matrix<Scalar> trace_form(const FinDimAlgebra& alg);

enum class Tri { yes, no, indeterminate };
std::string to_string(Tri t);

struct DivisionVerdict {
  Tri division = Tri::no;
  std::string real_type;  // "R", "C", "H" when division
  std::string reason;
  std::optional<Vec> imaginary_unit;  // j with j^2 = -1 in the C case, when rational
};

/// Decides whether R (x) alg is a division algebra (R, C or H).
DivisionVerdict is_division(const FinDimAlgebra& alg);

/// Dimensions of the semisimple quotient and its center.
struct SemisimpleSummary {
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  std::size_t center_dim = 0;
};
SemisimpleSummary semisimple_summary(const FinDimAlgebra& alg);

}  // namespace gelfand
