#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "gelfand/algebra.hpp"

namespace gelfand::kernels {

/// Structure-constant tables. The serial versions are the reference; the
/// parallel versions split the outer index over OpenMP threads and must
/// produce identical tables.
ProductTable build_table_serial(std::size_t dim, const ProductFn& product);
ProductTable build_table_parallel(std::size_t dim, const ProductFn& product);

/// First basis triple (i, j, k) with (b_i b_j) b_k != b_i (b_j b_k), if any.
std::optional<std::array<std::size_t, 3>> associativity_defect_serial(const FinDimAlgebra& alg);
std::optional<std::array<std::size_t, 3>> associativity_defect_parallel(const FinDimAlgebra& alg);

/// Gram matrix G_ij = Tr(L_{b_i b_j}).
Matrix<Scalar> trace_gram_serial(const FinDimAlgebra& alg);
Matrix<Scalar> trace_gram_parallel(const FinDimAlgebra& alg);

/// Number of threads OpenMP would use (1 without OpenMP).
int thread_count();

/// Sparse product of two sparse vectors.
std::vector<Term> mul_terms(const FinDimAlgebra& alg, const std::vector<Term>& a, const std::vector<Term>& b);

}  // namespace gelfand::kernels
