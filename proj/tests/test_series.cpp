#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gelfand/series.hpp"

using gelfand::Scalar;
using gelfand::Series;

namespace {

Series poly(std::vector<long> c, std::size_t n) {
  Series s(n);
  for (std::size_t i = 0; i < c.size() && i < n; ++i) s[i] = Scalar(c[i]);
  return s;
}

}  // namespace

TEST_CASE("series inversion") {
  CHECK(gelfand::series_invert(Series::one(4)) == Series::one(4));
  Series s = poly({1, 1}, 3);
  CHECK(gelfand::series_invert(s) == poly({1, -1, 1}, 3));
  CHECK_THROWS_AS(gelfand::series_invert(poly({0, 1}, 3)), gelfand::NotAUnit);
}

TEST_CASE("inverse times unit is one on random units") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int it = 0; it < 50; ++it) {
    std::vector<long> co(8);
    for (auto& x : co) x = c(rng);
    if (co[0] == 0) co[0] = 1;
    Series s = poly(co, 8);
    CHECK(s * s.inverse() == Series::one(8));
  }
}

TEST_CASE("valuation") {
  CHECK(Series::zero(5).valuation() == gelfand::kInfinity);
  CHECK(poly({0, 0, 3}, 5).valuation() == 2);
  CHECK(poly({0, 0, 3}, 2).valuation() == gelfand::kInfinity);
}

TEST_CASE("shift and division by t") {
  Series s = poly({1, 2, 3}, 4);
  CHECK(s.shift(1) == poly({0, 1, 2, 3}, 4));
  CHECK(s.shift(2) == poly({0, 0, 1, 2}, 4));
  CHECK(s.shift(2).div_t(2) == poly({1, 2, 0, 0}, 4));
  CHECK_THROWS(s.div_t(1));
}

TEST_CASE("mismatched orders throw") {
  CHECK_THROWS(poly({1}, 3) + poly({1}, 4));
  CHECK(Series() + poly({1, 2}, 3) == poly({1, 2}, 3));
}
