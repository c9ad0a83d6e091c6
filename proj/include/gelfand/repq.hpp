#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/algebra.hpp"
#include "gelfand/matrix.hpp"
#include "gelfand/scalar.hpp"

namespace gelfand {

using Mat = Matrix<Scalar>;

/// Linear data (U, V, X1, X2, Y1, Y2) with X_i: U -> V (v x u) and
/// Y_i: V -> U (u x v). Realized as an A-module on U + U + V with
///   x1 = (X1, -X2), x2 = (X2, X1) on U + U,  y1 = (Y1; Y2), y2 = (-Y2; Y1).
/// Valid data satisfy X1 Y2 + X2 Y1 = 0 with X1 Y1 - X2 Y2 nilpotent.
struct RepQObj {
  std::size_t u = 0;
  std::size_t v = 0;
  Mat X1, X2, Y1, Y2;

  RepQObj() = default;
  RepQObj(std::size_t u, std::size_t v);  // all maps zero
  RepQObj(Mat x1, Mat x2, Mat y1, Mat y2);

  std::pair<std::size_t, std::size_t> dimension_vector() const { return {u, v}; }
  /// Radicand of the entries (0 when all rational). Throws on mixed fields.
  long radicand() const;
};

/// S: V -> V' (v' x v); the map on U + U is (T1 -T2; T2 T1).
struct RepQMor {
  RepQObj source;
  RepQObj target;
  Mat S, T1, T2;
};

Verdict validate(const RepQObj& m);
/// Both commuting squares.
Verdict check_morphism(const RepQMor& f);

RepQMor identity_mor(const RepQObj& m);
RepQMor zero_mor(const RepQObj& m, const RepQObj& n);
/// g after f.
RepQMor compose(const RepQMor& g, const RepQMor& f);
RepQMor add(const RepQMor& f, const RepQMor& g);
RepQMor scale(const Scalar& s, const RepQMor& f);

/// Unknowns (S, T1, T2) flattened row-major in that order.
Vec flatten(const RepQMor& f);
RepQMor unflatten(const RepQObj& m, const RepQObj& n, const Vec& x);

/// Hom(M, N) as the solution space of the intertwiner system. basis[i] is
/// the solution with 1 in unknown free[i] and 0 in the other free unknowns,
/// so coords() just reads those entries.
struct HomSpace {
  RepQObj source;
  RepQObj target;
  std::vector<RepQMor> basis;
  std::vector<std::size_t> free;
  std::size_t dim() const { return basis.size(); }
  Vec coords(const RepQMor& f) const;
  bool contains(const RepQMor& f) const;
};

HomSpace hom_space(const RepQObj& m, const RepQObj& n);
std::vector<RepQMor> hom_basis(const RepQObj& m, const RepQObj& n);

/// End(M) on the Hom basis, unit = identity morphism.
FinDimAlgebra end_algebra(const RepQObj& m);

/// End(M) is a division algebra over R.
DivisionVerdict is_schurian(const RepQObj& m);
/// End(M)/rad End(M) is a division algebra over R (End is local).
DivisionVerdict is_indecomposable(const RepQObj& m);

struct IsoResult {
  bool isomorphic = false;
  std::optional<RepQMor> iso;  // invertible M -> N
  std::string reason;
};
/// Both arguments must be indecomposable (throws otherwise).
IsoResult is_isomorphic(const RepQObj& m, const RepQObj& n);
bool is_invertible(const RepQMor& f);

/// (V*, U*, X_i* = Y_i^T, Y_i* = X_i^T).
RepQObj dual(const RepQObj& m);
/// f: M -> N gives dual(f): dual(N) -> dual(M) with (S^T, T1^T, T2^T).
RepQMor dual_mor(const RepQMor& f);

RepQObj direct_sum(const RepQObj& a, const RepQObj& b);

/// Action matrices on U + U + V.
struct AModuleRealization {
  std::size_t dim = 0;
  Mat x1, x2, y1, y2, e, j, f;
};
AModuleRealization realize_as_module(const RepQObj& m);
Verdict verify_realization(const AModuleRealization& r);
/// Block matrix diag(T, S) of a morphism acting on U + U + V.
Mat realize_morphism(const RepQMor& f);

/// Action of the R-basis of A in generator order
/// e, j, tE11, tE12, E31, E32, E33, tE13, tE23, and of t.
std::vector<Mat> a_generator_action(const AModuleRealization& r);
Mat t_action(const AModuleRealization& r);
/// Dimension of the space of matrices commuting with all seven generators.
std::size_t a_linear_dim(const AModuleRealization& a, const AModuleRealization& b);

/// top(M) = S^a + T^b, computed as M / rad(A/t^N) M with N = 2u + v + 1.
std::pair<std::size_t, std::size_t> top(const RepQObj& m);
/// Submodule rad(A/t^N) M as a subspace of U + U + V.
Subspace<Scalar> radical_submodule(const RepQObj& m);

/// The six Schurian objects in order S, T, (b1), (b2), (c1), (c2).
struct NamedObj {
  std::string name;
  RepQObj obj;
};
std::vector<NamedObj> schurian_modules();

}  // namespace gelfand
