// Serial reference vs OpenMP kernels on truncated orders.
// Usage: bench_kernels [N] [repeats]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "gelfand/kernels.hpp"
#include "gelfand/orders.hpp"

using namespace gelfand;

namespace {

template <class F>
double best_of(int repeats, F f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* kernel, const char* order, std::size_t dim, double serial, double parallel) {
  std::printf("%-14s %-3s %5zu %10.4f %10.4f %7.2fx\n", kernel, order, dim, serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 3;
  int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  if (n < 1 || repeats < 1) {
    std::fprintf(stderr, "usage: bench_kernels [N >= 1] [repeats >= 1]\n");
    return 1;
  }
  std::printf("threads: %d, N: %d, best of %d\n", kernels::thread_count(), n, repeats);
  std::printf("%-14s %-3s %5s %10s %10s %8s\n", "kernel", "alg", "dim", "serial s", "omp s", "speedup");
  for (const char* name : {"A", "H", "O"}) {
    FinDimAlgebra alg = truncated_order(name, n);
    ProductFn f = [&](std::size_t i, std::size_t j) { return alg.mul(alg.basis_vector(i), alg.basis_vector(j)); };
    ProductTable ts, tp;
    double s = best_of(repeats, [&] { ts = kernels::build_table_serial(alg.dim(), f); });
    double p = best_of(repeats, [&] { tp = kernels::build_table_parallel(alg.dim(), f); });
    row("table", name, alg.dim(), s, p);
    if (ts.size() != tp.size()) return 2;

    bool as = false, ap = false;
    s = best_of(repeats, [&] { as = kernels::associativity_defect_serial(alg).has_value(); });
    p = best_of(repeats, [&] { ap = kernels::associativity_defect_parallel(alg).has_value(); });
    row("associativity", name, alg.dim(), s, p);
    if (as != ap) return 2;

    Matrix<Scalar> gs, gp;
    s = best_of(repeats, [&] { gs = kernels::trace_gram_serial(alg); });
    p = best_of(repeats, [&] { gp = kernels::trace_gram_parallel(alg); });
    row("trace gram", name, alg.dim(), s, p);
    if (!(gs == gp)) return 2;
  }
  return 0;
}
