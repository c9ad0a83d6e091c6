#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gelfand/complex.hpp"
#include "gelfand/linalg.hpp"
#include "gelfand/series.hpp"

using gelfand::Matrix;
using gelfand::Scalar;

namespace {

Matrix<Scalar> mat(std::size_t r, std::size_t c, std::vector<long> v) {
  Matrix<Scalar> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(v[i * c + j]);
  return m;
}

}  // namespace

TEST_CASE("solve_linear basic cases") {
  auto s = gelfand::solve_linear(Matrix<Scalar>::identity(2), Matrix<Scalar>(2, 1));
  REQUIRE(s.particular);
  CHECK(s.particular->is_zero());
  CHECK(s.kernel_basis.empty());

  auto k = gelfand::solve_linear(mat(1, 2, {1, 1}), Matrix<Scalar>(1, 1));
  REQUIRE(k.kernel_basis.size() == 1);
  CHECK(k.kernel_basis[0] == std::vector<Scalar>{Scalar(-1), Scalar(1)});

  auto none = gelfand::solve_linear(mat(2, 1, {1, 1}), mat(2, 1, {1, 2}));
  CHECK(!none.particular);
  CHECK_THROWS_AS(gelfand::solve_linear(mat(2, 1, {1, 1}), Matrix<Scalar>(3, 1)), gelfand::ShapeError);
}

TEST_CASE("random systems solve exactly") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int it = 0; it < 30; ++it) {
    std::size_t r = 2 + it % 4, n = 3 + it % 3;
    Matrix<Scalar> a(r, n), x(n, 2);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar(c(rng));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < 2; ++j) x(i, j) = Scalar(c(rng));
    Matrix<Scalar> b = a * x;
    auto s = gelfand::solve_linear(a, b);
    REQUIRE(s.particular);
    CHECK(a * *s.particular == b);
    for (const auto& v : s.kernel_basis) CHECK((a * gelfand::column(v)).is_zero());
    CHECK(s.kernel_basis.size() + gelfand::rank(a) == n);
  }
}

TEST_CASE("determinant and inverse") {
  Matrix<Scalar> m = mat(3, 3, {2, 0, 1, 1, 1, 0, 0, 3, 1});
  CHECK(gelfand::det(m) == Scalar(5));
  CHECK(m * gelfand::inverse(m) == Matrix<Scalar>::identity(3));
  CHECK(gelfand::det(mat(2, 2, {1, 2, 2, 4})) == Scalar(0));
  CHECK_THROWS(gelfand::inverse(mat(2, 2, {1, 2, 2, 4})));
}

TEST_CASE("subspace membership and coordinates") {
  gelfand::Subspace<Scalar> s(3);
  CHECK(s.add({Scalar(1), Scalar(1), Scalar(0)}));
  CHECK(s.add({Scalar(0), Scalar(1), Scalar(1)}));
  CHECK(!s.add({Scalar(1), Scalar(2), Scalar(1)}));
  CHECK(s.contains({Scalar(2), Scalar(3), Scalar(1)}));
  CHECK(!s.contains({Scalar(0), Scalar(0), Scalar(1)}));
  auto c = s.coords({Scalar(2), Scalar(3), Scalar(1)});
  std::vector<Scalar> back(3);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < 3; ++j) back[j] += c[i] * s.basis()[i][j];
  CHECK(back == std::vector<Scalar>{Scalar(2), Scalar(3), Scalar(1)});
}

TEST_CASE("t-valuation of a series matrix") {
  auto mono = [](long c, int k) { return gelfand::Series::monomial(Scalar(c), k, 6); };
  Matrix<gelfand::Series> m(2, 2, gelfand::Series::zero(6));
  int v = gelfand::kInfinity;
  auto val = [&]() {
    v = gelfand::kInfinity;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) v = std::min(v, m(i, j).valuation());
    return v;
  };
  CHECK(val() == gelfand::kInfinity);
  m(0, 0) = mono(1, 1);
  m(0, 1) = mono(1, 2);
  m(1, 0) = mono(1, 3);
  CHECK(val() == 1);
}

TEST_CASE("complex linear algebra over Q(i)") {
  using gelfand::Complex;
  Matrix<Complex> m(2, 2);
  m(0, 0) = Complex::i();
  m(0, 1) = Complex(1);
  m(1, 0) = Complex(2);
  m(1, 1) = Complex(Scalar(0), Scalar(3));
  CHECK(gelfand::det(m) == Complex(-5));
  CHECK(m * gelfand::inverse(m) == Matrix<Complex>::identity(2));
}
