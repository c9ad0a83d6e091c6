#include "gelfand/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gelfand::kernels {

namespace {

std::vector<Term> normalized(std::vector<Term> t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  std::vector<Term> out;
  for (auto& x : t) {
    if (!out.empty() && out.back().index == x.index)
      out.back().coeff += x.coeff;
    else
      out.push_back(std::move(x));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& x) { return x.coeff.is_zero(); }), out.end());
  return out;
}

bool same_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].index != b[i].index || !(a[i].coeff == b[i].coeff)) return false;
  return true;
}

bool triple_ok(const FinDimAlgebra& alg, std::size_t i, std::size_t j, std::size_t k) {
  std::vector<Term> bk{{k, Scalar(1)}};
  std::vector<Term> bi{{i, Scalar(1)}};
  auto lhs = mul_terms(alg, alg.product(i, j), bk);
  auto rhs = mul_terms(alg, bi, alg.product(j, k));
  return same_terms(lhs, rhs);
}

Scalar gram_entry(const FinDimAlgebra& alg, std::size_t i, std::size_t j) {
  Scalar acc;
  for (const auto& t : alg.product(i, j)) acc += t.coeff * alg.basis_traces()[t.index];
  return acc;
}

}  // namespace

std::vector<Term> mul_terms(const FinDimAlgebra& alg, const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Scalar c = x.coeff * y.coeff;
      for (const auto& z : alg.product(x.index, y.index)) out.push_back({z.index, c * z.coeff});
    }
  return normalized(std::move(out));
}

ProductTable build_table_serial(std::size_t dim, const ProductFn& product) {
  ProductTable t(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) t[i * dim + j] = to_terms(product(i, j));
  return t;
}

ProductTable build_table_parallel(std::size_t dim, const ProductFn& product) {
  ProductTable t(dim * dim);
  const long n = static_cast<long>(dim);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i)
    for (std::size_t j = 0; j < dim; ++j) t[i * dim + j] = to_terms(product(i, j));
  return t;
}

std::optional<std::array<std::size_t, 3>> associativity_defect_serial(const FinDimAlgebra& alg) {
  std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!triple_ok(alg, i, j, k)) return std::array<std::size_t, 3>{i, j, k};
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> associativity_defect_parallel(const FinDimAlgebra& alg) {
  std::size_t n = alg.dim();
  // smallest failing flat index, so the answer matches the serial scan
  std::size_t best = n * n * n;
  const long total = static_cast<long>(n * n);
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (long ij = 0; ij < total; ++ij) {
    std::size_t i = ij / n, j = ij % n;
    for (std::size_t k = 0; k < n; ++k) {
      if (!triple_ok(alg, i, j, k)) {
        best = std::min(best, static_cast<std::size_t>(ij) * n + k);
        break;
      }
    }
  }
  if (best == n * n * n) return std::nullopt;
  return std::array<std::size_t, 3>{best / (n * n), (best / n) % n, best % n};
}

Matrix<Scalar> trace_gram_serial(const FinDimAlgebra& alg) {
  std::size_t n = alg.dim();
  Matrix<Scalar> g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = gram_entry(alg, i, j);
  return g;
}

Matrix<Scalar> trace_gram_parallel(const FinDimAlgebra& alg) {
  std::size_t n = alg.dim();
  Matrix<Scalar> g(n, n);
  const long ln = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < ln; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = gram_entry(alg, i, j);
  return g;
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace gelfand::kernels
