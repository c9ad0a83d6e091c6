#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gelfand/kernels.hpp"
#include "gelfand/orders.hpp"

using namespace gelfand;

namespace {

bool same(const ProductTable& a, const ProductTable& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t k = 0; k < a[i].size(); ++k)
      if (a[i][k].index != b[i][k].index || !(a[i][k].coeff == b[i][k].coeff)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parallel structure-constant table matches the serial reference") {
  FinDimAlgebra o = truncated_order("O", 2);
  ProductFn f = [&](std::size_t i, std::size_t j) { return o.mul(o.basis_vector(i), o.basis_vector(j)); };
  CHECK(same(kernels::build_table_serial(o.dim(), f), kernels::build_table_parallel(o.dim(), f)));
}

TEST_CASE("parallel associativity scan matches the serial reference") {
  FinDimAlgebra a = truncated_order("A", 2);
  CHECK(!kernels::associativity_defect_serial(a));
  CHECK(!kernels::associativity_defect_parallel(a));

  // corrupt one structure constant
  ProductTable t = a.table();
  t[3 * a.dim() + 5].push_back({0, Scalar(1)});
  FinDimAlgebra broken(a.labels(), a.unit(), t);
  auto s = kernels::associativity_defect_serial(broken);
  auto p = kernels::associativity_defect_parallel(broken);
  REQUIRE(s);
  REQUIRE(p);
  CHECK(*s == *p);
}

TEST_CASE("parallel trace Gram matrix matches the serial reference") {
  for (int n : {1, 2, 3}) {
    FinDimAlgebra h = truncated_order("H", n);
    CHECK(kernels::trace_gram_serial(h) == kernels::trace_gram_parallel(h));
  }
}
