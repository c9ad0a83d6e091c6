#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/matrix.hpp"
#include "gelfand/repq.hpp"
#include "gelfand/series.hpp"

namespace gelfand {

/// The three indecomposable A-lattices, realized inside 3 x r matrices over
/// R = K[[t]]: P = A(E11 + E22) (r = 2), Q = A E33 and L = R^3 (r = 1).
enum class Lattice { P, Q, L };

std::string to_string(Lattice l);
Lattice lattice_from_string(const std::string& s);
std::size_t rank_of(Lattice l);
std::size_t rank_of(const std::vector<Lattice>& sum);

using SeriesMat = Matrix<Series>;

SeriesMat series_zero(std::size_t rows, std::size_t cols, std::size_t order);
SeriesMat series_identity(std::size_t n, std::size_t order);
/// Smallest valuation of the entries (kInfinity for the zero matrix).
int t_valuation(const SeriesMat& m);
Series det(const SeriesMat& m);
/// Inverse of a square matrix whose determinant is a unit.
SeriesMat series_inverse(const SeriesMat& m);

/// A morphism between direct sums of lattices, acting by right
/// multiplication: row block i holds the component F_i -> target.
struct LatticeMap {
  std::vector<Lattice> source;
  std::vector<Lattice> target;
  int n_trunc = 8;
  SeriesMat entries;
};

/// Whether right multiplication by m maps `source` into `target`
/// (checked on the R-generators modulo t^N).
Verdict check_hom(const SeriesMat& m, const std::vector<Lattice>& source, const std::vector<Lattice>& target);
Verdict check_hom(const LatticeMap& f);
/// In End(sum) with unit determinant.
Verdict check_automorphism(const SeriesMat& m, const std::vector<Lattice>& sum);

struct RationalIso {
  bool ok = false;
  int det_valuation = kInfinity;
  std::string reason;
};
/// det != 0 mod t^N with val(det) <= N - 2.
RationalIso rational_iso_check(const LatticeMap& f);

enum class NfCase { Ia, Ib, IIa, IIb, IIci, IIcii, IId };
std::string to_string(NfCase c);
NfCase nf_case_from_string(const std::string& s);

struct NormalForm {
  NfCase kase = NfCase::Ia;
  int k = 1;
  int l = 0;
  Scalar lambda = Scalar(1);  // II.d only

  /// II.d with l = 0: lambda -> 1/lambda when |lambda| > 1.
  NormalForm canonical() const;
  std::string str() const;
  friend bool operator==(const NormalForm& a, const NormalForm& b);
};

/// Throws on parameters outside the allowed ranges.
void check_ranges(const NormalForm& nf, bool require_canonical = false);
LatticeMap build_normal_map(const NormalForm& nf, int n_trunc);
std::pair<std::size_t, std::size_t> dimension_vector_formula(const NormalForm& nf);

struct PseudoDiag {
  Scalar lambda;
  Mat eta;  // in C = {(a -b; b a)}
  Mat xi;
};
/// eta (1 0; c d) xi = diag(1, lambda) with lambda the root of
/// v^2 - ((1 + c^2 + d^2)/d) v + 1 of absolute value <= 1. c, d rational.
PseudoDiag pseudo_diagonalize(const Scalar& c, const Scalar& d);

struct Reduction {
  NormalForm nf;
  SeriesMat eta;  // automorphism of the source
  SeriesMat xi;   // automorphism of the target
};
/// eta * phi * xi == build_normal_map(nf) mod t^N, re-verified before
/// returning. Throws NotRationalIso, RaiseTruncation, or Error for
/// unsupported source/target pairs.
Reduction reduce_to_normal_form(const LatticeMap& phi);
Verdict verify_reduction(const LatticeMap& phi, const Reduction& r);

/// coker(phi) as linear data; throws RaiseTruncation when the truncation
/// is too small to contain the cokernel.
RepQObj cokernel(const LatticeMap& phi);

/// Random element of Aut(sum): small integer coefficients, degree < 3.
SeriesMat random_automorphism(const std::vector<Lattice>& sum, int n_trunc, std::mt19937_64& rng);
/// u1 * build_normal_map(nf) * u2 with random automorphisms.
LatticeMap perturbed_normal_map(const NormalForm& nf, int n_trunc, std::mt19937_64& rng);

/// All normal forms with k, l <= bound (lambda from `lambdas` in case II.d).
std::vector<NormalForm> enumerate_normal_forms(int bound, const std::vector<Scalar>& lambdas);

}  // namespace gelfand
