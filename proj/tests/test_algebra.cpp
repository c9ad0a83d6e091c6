#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gelfand/algebra.hpp"
#include "gelfand/orders.hpp"

using namespace gelfand;

namespace {

/// Upper triangular 2x2 matrices: basis E11, E12, E22.
FinDimAlgebra upper_triangular() {
  // matrix positions of the basis
  const std::pair<int, int> pos[3] = {{0, 0}, {0, 1}, {1, 1}};
  return build_algebra({"E11", "E12", "E22"}, Vec{Scalar(1), Scalar(0), Scalar(1)}, [&](std::size_t a, std::size_t b) {
    Vec out(3);
    if (pos[a].second != pos[b].first) return out;
    std::pair<int, int> p{pos[a].first, pos[b].second};
    for (std::size_t k = 0; k < 3; ++k)
      if (pos[k] == p) out[k] = Scalar(1);
    return out;
  });
}

FinDimAlgebra complex_numbers() {
  return build_algebra({"1", "i"}, Vec{Scalar(1), Scalar(0)}, [](std::size_t a, std::size_t b) {
    Vec out(2);
    if (a + b == 2)
      out[0] = Scalar(-1);
    else
      out[a + b] = Scalar(1);
    return out;
  });
}

FinDimAlgebra quaternions(long a2, long b2) {
  // basis 1, i, j, k with i^2 = a2, j^2 = b2, k = ij
  const long sq[4] = {1, a2, b2, -a2 * b2};
  return build_algebra({"1", "i", "j", "k"}, Vec{Scalar(1), Scalar(0), Scalar(0), Scalar(0)},
                       [&](std::size_t x, std::size_t y) {
                         Vec out(4);
                         if (x == 0) {
                           out[y] = Scalar(1);
                         } else if (y == 0) {
                           out[x] = Scalar(1);
                         } else if (x == y) {
                           out[0] = Scalar(sq[x]);
                         } else {
                           // ij = k, ji = -k, ik = a2 j, ki = -a2 j, jk = -b2 i, kj = b2 i
                           if (x == 1 && y == 2) out[3] = Scalar(1);
                           if (x == 2 && y == 1) out[3] = Scalar(-1);
                           if (x == 1 && y == 3) out[2] = Scalar(a2);
                           if (x == 3 && y == 1) out[2] = Scalar(-a2);
                           if (x == 2 && y == 3) out[1] = Scalar(-b2);
                           if (x == 3 && y == 2) out[1] = Scalar(b2);
                         }
                         return out;
                       });
}

}  // namespace

TEST_CASE("radical of the upper triangular algebra") {
  FinDimAlgebra u = upper_triangular();
  CHECK(check_associative(u));
  CHECK(check_unit(u));
  Subspace<Scalar> r = radical(u);
  CHECK(r.dim() == 1);
  CHECK(r.contains(u.basis_vector(1)));
  FinDimAlgebra q = quotient(u, r);
  CHECK(q.dim() == 2);
  CHECK(radical(q).dim() == 0);
}

TEST_CASE("matrix algebra is semisimple and central") {
  FinDimAlgebra m = full_matrix_algebra(2);
  CHECK(check_associative(m));
  CHECK(radical(m).dim() == 0);
  CHECK(center(m).dim() == 1);
  Signature s = signature(trace_form(m));
  CHECK(s.pos == 3);
  CHECK(s.neg == 1);
  CHECK(is_division(m).division == Tri::no);
}

TEST_CASE("division decisions") {
  DivisionVerdict c = is_division(complex_numbers());
  CHECK(c.division == Tri::yes);
  CHECK(c.real_type == "C");
  REQUIRE(c.imaginary_unit);
  FinDimAlgebra cn = complex_numbers();
  CHECK(cn.mul(*c.imaginary_unit, *c.imaginary_unit) == scale(Scalar(-1), cn.unit()));

  // Q x Q: split
  FinDimAlgebra split = build_algebra({"p", "q"}, Vec{Scalar(1), Scalar(1)}, [](std::size_t a, std::size_t b) {
    Vec out(2);
    if (a == b) out[a] = Scalar(1);
    return out;
  });
  CHECK(is_division(split).division == Tri::no);

  // Q(sqrt 2) as a Q-algebra: a field, but split over R
  FinDimAlgebra q2 = build_algebra({"1", "r"}, Vec{Scalar(1), Scalar(0)}, [](std::size_t a, std::size_t b) {
    Vec out(2);
    if (a + b == 2)
      out[0] = Scalar(2);
    else
      out[a + b] = Scalar(1);
    return out;
  });
  CHECK(is_division(q2).division == Tri::no);

  CHECK(is_division(quaternions(-1, -1)).division == Tri::yes);
  CHECK(is_division(quaternions(-1, -1)).real_type == "H");
  CHECK(is_division(quaternions(1, -1)).division == Tri::no);
  CHECK(is_division(upper_triangular()).division == Tri::no);
}

TEST_CASE("minimal polynomial") {
  FinDimAlgebra c = complex_numbers();
  Vec p = minimal_polynomial(c, c.basis_vector(1));
  CHECK(p == Vec{Scalar(1), Scalar(0), Scalar(1)});
  Vec one = minimal_polynomial(c, c.unit());
  CHECK(one == Vec{Scalar(-1), Scalar(1)});
}

TEST_CASE("identity map and broken maps") {
  FinDimAlgebra u = upper_triangular();
  CHECK(verify_algebra_map({&u, &u, Matrix<Scalar>::identity(3)}));
  CHECK(!verify_algebra_map({&u, &u, Matrix<Scalar>(3, 3)}));
}

TEST_CASE("crossed products") {
  FinDimAlgebra c = complex_numbers();
  Matrix<Scalar> conj = Matrix<Scalar>::identity(2);
  conj(1, 1) = Scalar(-1);
  FinDimAlgebra cg = crossed_product(c, {&c, conj});
  CHECK(cg.dim() == 4);
  CHECK(check_associative(cg));
  CHECK(is_division(cg).division == Tri::no);
  CHECK(center(cg).dim() == 1);

  // trivial action gives the group algebra structure constants exactly
  FinDimAlgebra g = crossed_product(c, {&c, Matrix<Scalar>::identity(2)});
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      Vec expect(4);
      Vec p = c.mul(c.basis_vector(a % 2), c.basis_vector(b % 2));
      std::size_t off = ((a / 2) ^ (b / 2)) * 2;
      expect[off] = p[0];
      expect[off + 1] = p[1];
      CHECK(g.mul(g.basis_vector(a), g.basis_vector(b)) == expect);
    }
  CHECK(group_algebra_check());

  Matrix<Scalar> bad = Matrix<Scalar>::identity(2);
  bad(1, 1) = Scalar(2);
  CHECK_THROWS(crossed_product(c, {&c, bad}));
}

TEST_CASE("invariants and corners") {
  FinDimAlgebra c = complex_numbers();
  Matrix<Scalar> conj = Matrix<Scalar>::identity(2);
  conj(1, 1) = Scalar(-1);
  InvariantSubalgebra inv = invariant_subalgebra({&c, conj});
  CHECK(inv.algebra.dim() == 1);

  FinDimAlgebra m = full_matrix_algebra(2);
  CHECK(corner_algebra(m, m.unit()).algebra.dim() == 4);
  CHECK(corner_algebra(m, m.basis_vector(0)).algebra.dim() == 1);
  CHECK_THROWS(corner_algebra(m, m.basis_vector(1)));
}

TEST_CASE("radical is a nilpotent two-sided ideal") {
  FinDimAlgebra a = truncated_order("A", 2);
  Subspace<Scalar> r = radical(a);
  for (const auto& v : r.basis())
    for (std::size_t i = 0; i < a.dim(); ++i) {
      CHECK(r.contains(a.mul(v, a.basis_vector(i))));
      CHECK(r.contains(a.mul(a.basis_vector(i), v)));
    }
  // J^k = 0 for some k: products of radical vectors eventually vanish
  std::vector<Vec> layer = r.basis();
  for (int k = 0; k < 10 && !layer.empty(); ++k) {
    Subspace<Scalar> next(a.dim());
    for (const auto& x : layer)
      for (const auto& y : r.basis()) next.add(a.mul(x, y));
    layer = next.basis();
  }
  CHECK(layer.empty());
}
