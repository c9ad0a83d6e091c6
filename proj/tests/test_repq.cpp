#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gelfand/repq.hpp"

using namespace gelfand;

namespace {

Mat small_random(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-2, 2);
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(d(rng));
  return m;
}

/// Random X's, then Y's drawn from the solution space of X1 Y2 + X2 Y1 = 0,
/// rejected until X1 Y1 - X2 Y2 is nilpotent.
RepQObj random_valid(std::mt19937& rng, std::size_t u, std::size_t v) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    RepQObj m(u, v);
    m.X1 = small_random(rng, v, u);
    m.X2 = small_random(rng, v, u);
    std::size_t n = 2 * u * v;
    Mat sys(v * v, n);
    for (std::size_t k = 0; k < n; ++k) {
      Mat y1(u, v), y2(u, v);
      (k < u * v ? y1 : y2)((k % (u * v)) / v, k % v) = Scalar(1);
      Mat r = m.X1 * y2 + m.X2 * y1;
      for (std::size_t i = 0; i < v * v; ++i) sys(i, k) = r(i / v, i % v);
    }
    std::uniform_int_distribution<int> d(-1, 1);
    Vec y(n);
    for (const auto& b : kernel(sys)) {
      Scalar c(d(rng));
      for (std::size_t i = 0; i < n; ++i) y[i] += c * b[i];
    }
    for (std::size_t k = 0; k < n; ++k) (k < u * v ? m.Y1 : m.Y2)((k % (u * v)) / v, k % v) = y[k];
    if (validate(m)) return m;
  }
  RepQObj m(u, v);
  m.X1 = small_random(rng, v, u);
  m.X2 = small_random(rng, v, u);
  return m;
}

RepQObj obj(const std::string& name) {
  for (auto& n : schurian_modules())
    if (n.name == name) return n.obj;
  throw Error("no such module");
}

Mat m11(long x) {
  Mat m(1, 1);
  m(0, 0) = Scalar(x);
  return m;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(RepQObj(1, 0)));
  RepQObj b(1, 1);
  b.Y1 = m11(1);
  CHECK(validate(b));
  b.X1 = m11(1);
  Verdict v = validate(b);
  CHECK(!v);
  CHECK(v.message.find("nilpotent") != std::string::npos);

  RepQObj mixed(1, 1);
  mixed.X1 = m11(1);
  mixed.Y2 = m11(1);
  CHECK(!validate(mixed));
  CHECK_THROWS_AS(RepQObj(Mat(2, 1), Mat(1, 1), Mat(1, 2), Mat(1, 2)), ShapeError);
}

TEST_CASE("hom spaces of small objects") {
  RepQObj s = obj("S"), t = obj("T");
  CHECK(hom_basis(s, t).empty());
  CHECK(hom_basis(t, s).empty());
  auto ss = hom_basis(s, s);
  CHECK(ss.size() == 2);
  HomSpace h = hom_space(s, s);
  RepQMor jmor = identity_mor(s);
  jmor.T1 = m11(0);
  jmor.T2 = m11(1);
  CHECK(h.contains(jmor));
  CHECK(hom_basis(obj("b1"), obj("b1")).size() == 1);
}

TEST_CASE("endomorphism algebras of the six Schurian objects") {
  const std::size_t dims[6] = {2, 1, 1, 1, 2, 2};
  auto six = schurian_modules();
  for (std::size_t i = 0; i < six.size(); ++i) {
    CAPTURE(six[i].name);
    CHECK(validate(six[i].obj));
    FinDimAlgebra e = end_algebra(six[i].obj);
    CHECK(e.dim() == dims[i]);
    CHECK(check_associative(e));
    CHECK(check_unit(e));
    DivisionVerdict d = is_schurian(six[i].obj);
    CHECK(d.division == Tri::yes);
    CHECK(d.real_type == (dims[i] == 2 ? "C" : "R"));
    CHECK(is_indecomposable(six[i].obj).division == Tri::yes);
  }
  int non_iso = 0;
  for (std::size_t i = 0; i < six.size(); ++i)
    for (std::size_t j = i + 1; j < six.size(); ++j)
      if (!is_isomorphic(six[i].obj, six[j].obj).isomorphic) ++non_iso;
  CHECK(non_iso == 15);
}

TEST_CASE("decomposable objects") {
  RepQObj s = obj("S");
  RepQObj ss = direct_sum(s, s);
  CHECK(end_algebra(ss).dim() == 8);
  CHECK(is_schurian(ss).division == Tri::no);
  CHECK(is_indecomposable(ss).division == Tri::no);
  CHECK(is_indecomposable(direct_sum(s, obj("T"))).division == Tri::no);
  CHECK_THROWS(is_isomorphic(ss, ss));
}

TEST_CASE("isomorphism certificates") {
  RepQObj s = obj("S");
  IsoResult r = is_isomorphic(s, s);
  REQUIRE(r.isomorphic);
  CHECK(check_morphism(*r.iso));
  CHECK(is_invertible(*r.iso));

  // a base change of c1 is isomorphic to c1
  RepQObj c1 = obj("c1");
  Mat g(2, 2);
  g(0, 0) = Scalar(1);
  g(0, 1) = Scalar(2);
  g(1, 1) = Scalar(-1);
  RepQObj c1b(g * c1.X1, g * c1.X2, c1.Y1 * inverse(g), c1.Y2 * inverse(g));
  IsoResult q = is_isomorphic(c1, c1b);
  REQUIRE(q.isomorphic);
  CHECK(check_morphism(*q.iso));
  CHECK(is_invertible(*q.iso));
  CHECK(!is_isomorphic(obj("b1"), obj("b2")).isomorphic);
}

TEST_CASE("duality") {
  auto six = schurian_modules();
  CHECK(is_isomorphic(dual(obj("S")), obj("S")).isomorphic);
  CHECK(is_isomorphic(dual(obj("b1")), obj("b2")).isomorphic);
  CHECK(is_isomorphic(dual(obj("c1")), obj("c2")).isomorphic);
  for (auto& n : six) {
    CHECK(dual(n.obj).dimension_vector() == n.obj.dimension_vector());
    CHECK(validate(dual(n.obj)));
    CHECK(is_isomorphic(dual(dual(n.obj)), n.obj).isomorphic);
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    RepQObj m = random_valid(rng, 1 + trial % 2, 1 + trial % 3);
    REQUIRE(validate(m));
    RepQObj dm = dual(m);
    CHECK(validate(dm));
    CHECK(dual(dm).X1 == m.X1);
    CHECK(dual(dm).Y2 == m.Y2);
    // contravariance on endomorphisms
    auto basis = hom_basis(m, m);
    for (const auto& f : basis)
      for (const auto& g : basis) {
        RepQMor lhs = dual_mor(compose(g, f));
        RepQMor rhs = compose(dual_mor(f), dual_mor(g));
        CHECK(check_morphism(dual_mor(f)));
        CHECK(flatten(lhs) == flatten(rhs));
      }
  }
}

TEST_CASE("realization") {
  AModuleRealization r = realize_as_module(obj("S"));
  CHECK(r.dim == 2);
  CHECK(r.e == Mat::identity(2));
  CHECK(r.f.is_zero());
  CHECK(r.j(0, 1) == Scalar(-1));
  CHECK(r.j(1, 0) == Scalar(1));
  AModuleRealization rt = realize_as_module(obj("T"));
  CHECK(rt.f == Mat::identity(1));
  CHECK(rt.e.is_zero());

  std::mt19937 rng(11);
  std::vector<RepQObj> family;
  for (auto& n : schurian_modules()) family.push_back(n.obj);
  for (int trial = 0; trial < 6; ++trial) family.push_back(random_valid(rng, 1 + trial % 2, 1 + trial % 2));
  for (const auto& m : family) {
    AModuleRealization a = realize_as_module(m);
    CHECK(verify_realization(a));
  }
  // Hom spaces match A-linear maps, and realized morphisms commute
  for (std::size_t i = 0; i < family.size(); i += 3)
    for (std::size_t j = 1; j < family.size(); j += 4) {
      AModuleRealization a = realize_as_module(family[i]), b = realize_as_module(family[j]);
      auto hb = hom_basis(family[i], family[j]);
      CHECK(hb.size() == a_linear_dim(a, b));
      for (const auto& f : hb) {
        Mat phi = realize_morphism(f);
        CHECK(phi * a.x1 == b.x1 * phi);
        CHECK(phi * a.y2 == b.y2 * phi);
        CHECK(phi * a.j == b.j * phi);
      }
    }
}

TEST_CASE("hom spaces are closed under composition") {
  std::mt19937 rng(3);
  RepQObj a = random_valid(rng, 1, 1), b = random_valid(rng, 2, 1), c = direct_sum(obj("S"), obj("b1"));
  HomSpace ac = hom_space(a, c);
  for (const auto& f : hom_basis(a, b))
    for (const auto& g : hom_basis(b, c)) CHECK(ac.contains(compose(g, f)));
}

TEST_CASE("tops") {
  CHECK(top(obj("S")) == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(top(obj("T")) == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(top(obj("c1")) == std::pair<std::size_t, std::size_t>{0, 2});
  CHECK(top(obj("c2")) == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(top(obj("b1")) == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(top(obj("b2")) == std::pair<std::size_t, std::size_t>{1, 0});
}
