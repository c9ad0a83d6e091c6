#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gelfand/io.hpp"
#include "gelfand/orders.hpp"

using namespace gelfand;

TEST_CASE("fields") {
  CHECK(field_from_string("Q") == 0);
  CHECK(field_from_string("sqrt2") == 2);
  CHECK(field_from_string("sqrt(5)") == 5);
  CHECK_THROWS_AS(field_from_string("sqrt4"), ParseError);
  CHECK_THROWS_AS(field_from_string("R"), ParseError);
  CHECK(field_from_json(json::parse(R"({"sqrt": 3})")) == 3);
  CHECK(field_to_json(0) == "Q");
}

TEST_CASE("scalars and matrices") {
  CHECK(scalar_from_json("3/6", 0, "x") == Scalar::rational(1, 2));
  CHECK(scalar_from_json(4, 0, "x") == Scalar(4));
  CHECK(scalar_from_json("1+sqrt(2)", 2, "x") == Scalar(1) + Scalar::sqrt_of(2));
  CHECK_THROWS_AS(scalar_from_json("1+sqrt(2)", 0, "x"), ParseError);
  CHECK_THROWS_AS(scalar_from_json("1/0", 0, "x"), ParseError);
  try {
    matrix_from_json(json::parse(R"([["1", "2"], ["3", "x"]])"), 2, 2, 0, "X1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("X1[1][1]") != std::string::npos);
  }
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"([["1"]])"), 1, 2, 0, "X"), ParseError);
}

TEST_CASE("module round trip") {
  for (const auto& [name, m] : schurian_modules()) {
    json j = to_json(m);
    RepQObj back = repq_from_json(j);
    CHECK(back.u == m.u);
    CHECK(back.v == m.v);
    CHECK(back.X1 == m.X1);
    CHECK(back.X2 == m.X2);
    CHECK(back.Y1 == m.Y1);
    CHECK(back.Y2 == m.Y2);
  }
  json q = json::parse(R"js({"field": {"sqrt": 2}, "u": 1, "v": 1, "Y1": [["sqrt(2)"]]})js");
  RepQObj m = repq_from_json(q);
  CHECK(m.Y1(0, 0) == Scalar::sqrt_of(2));
  CHECK(m.X1.is_zero());
  json bad = json::parse(R"js({"u": 1, "v": 1, "Y1": [["sqrt(2)"]]})js");
  CHECK_THROWS_AS(repq_from_json(bad), ParseError);
  CHECK_NOTHROW(repq_from_json(bad, 2));
}

TEST_CASE("morphism round trip") {
  RepQObj s = schurian_modules()[0].obj;
  RepQMor f = identity_mor(s);
  RepQMor g = morphism_from_json(to_json(f));
  CHECK(g.S == f.S);
  CHECK(g.T1 == f.T1);
  CHECK(g.T2 == f.T2);
  CHECK(check_morphism(g));
}

TEST_CASE("lattice maps and normal forms") {
  json j = json::parse(R"({"source": ["Q"], "target": ["Q"], "N": 6, "entries": [[["0", "1"]]]})");
  LatticeMap f = lattice_map_from_json(j, 8);
  CHECK(f.n_trunc == 6);
  CHECK(f.entries(0, 0).coeffs().size() == 6);
  CHECK(f.entries(0, 0).valuation() == 1);
  LatticeMap g = lattice_map_from_json(to_json(f), 8);
  CHECK(g.entries(0, 0) == f.entries(0, 0));
  json nodefault = json::parse(R"({"source": ["P"], "target": ["P"], "entries": [["0", "0"], ["0", "0"]]})");
  CHECK(lattice_map_from_json(nodefault, 5).n_trunc == 5);
  CHECK_THROWS_AS(lattice_map_from_json(json::parse(R"({"source": ["X"], "target": ["Q"], "entries": [["1"]]})"), 8),
                  ParseError);
  CHECK_THROWS_AS(lattice_map_from_json(json::parse(R"({"source": ["Q"], "target": ["Q"], "entries": [["1/0"]]})"), 8),
                  ParseError);

  NormalForm nf{NfCase::IId, 1, 0, Scalar::rational(1, 2)};
  json n = to_json(nf);
  CHECK(n["case"] == "II.d");
  CHECK(n["lambda"] == "1/2");
  CHECK(normal_form_from_json(n) == nf);
  NormalForm q{NfCase::IId, 0, 1, Scalar(1) + Scalar::sqrt_of(2)};
  CHECK(normal_form_from_json(to_json(q)) == q);
  NormalForm ia{NfCase::Ia, 2, 0, Scalar(1)};
  CHECK(normal_form_from_json(to_json(ia)) == ia);
}

TEST_CASE("algebra dump round trip") {
  FinDimAlgebra a = truncated_order("A", 2);
  FinDimAlgebra b = algebra_from_json(to_json(a));
  CHECK(b.dim() == a.dim());
  CHECK(b.labels() == a.labels());
  CHECK(b.unit() == a.unit());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) CHECK(b.mul(b.basis_vector(i), b.basis_vector(k)) == a.mul(a.basis_vector(i), a.basis_vector(k)));
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"dim": 1, "unit": ["1"], "sc": [[0, 0, 3, "1"]]})")), ParseError);
}

TEST_CASE("diagram round trip") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) {
    HCDiagram d = random_hc_diagram(rng, true);
    CHECK(hc_from_json(to_json(d)) == d);
  }
  CHECK(hc_from_json(to_json(HCDiagram{})) == HCDiagram{});
  json j = json::parse(R"({"window": [0, 2], "dims": {"0": 1, "2": 1}, "x": {"0": [[["1", "0"]]]}, "y": {"2": [[0]]}})");
  HCDiagram d = hc_from_json(j);
  CHECK(d.dim(2) == 1);
  CHECK(d.x_at(0)(0, 0) == Complex(1));
  CHECK_THROWS_AS(hc_from_json(json::parse(R"({"window": [0, 2], "dims": {"4": 1}})")), ParseError);
  CHECK_THROWS_AS(hc_from_json(json::parse(R"({"window": [1, 3], "dims": {}})")), ParseError);
}
