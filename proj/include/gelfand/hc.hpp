#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gelfand/algebra.hpp"
#include "gelfand/complex.hpp"
#include "gelfand/matrix.hpp"

namespace gelfand {

using CMat = Matrix<Complex>;

CMat conj(const CMat& m);

/// Finite even-graded diagram M_{n_min} <-> ... <-> M_{n_max} over Q(i).
/// x_n: M_n -> M_{n+2}, y_n: M_n -> M_{n-2}; absent maps are zero. An
/// empty window (n_min > n_max) is the zero diagram.
struct HCDiagram {
  int n_min = 0;
  int n_max = -2;
  std::vector<std::size_t> dims;  // dims[(n - n_min) / 2]
  std::map<int, CMat> x;
  std::map<int, CMat> y;

  bool in_window(int n) const { return n >= n_min && n <= n_max && (n - n_min) % 2 == 0; }
  std::size_t dim(int n) const { return in_window(n) ? dims[static_cast<std::size_t>((n - n_min) / 2)] : 0; }
  CMat x_at(int n) const;
  CMat y_at(int n) const;
};

/// Window, dims and map shapes.
Verdict check_shape(const HCDiagram& d);

struct CasimirEntry {
  int n = 0;
  bool first_evaluable = false;   // (n^2 - 2n) + 4 x_{n-2} y_n, needs n-2 in the window
  bool second_evaluable = false;  // (n^2 + 2n) + 4 y_{n+2} x_n, needs n+2 in the window
  bool first_nilpotent = true;
  bool second_nilpotent = true;
  bool equal = true;  // only meaningful when both are evaluable
};

std::vector<CasimirEntry> casimir_report(const HCDiagram& d);
/// Shape, then the Casimir element on every component: each evaluable
/// expression nilpotent, and equal where both are evaluable.
Verdict validate_hc(const HCDiagram& d);
/// Both expressions have the same nilpotency status wherever both apply.
bool casimir_agree(const HCDiagram& d);

/// V- <-> V* <-> V+ with a-: V- -> V*, a+: V+ -> V*, b-: V* -> V-, b+: V* -> V+.
struct GelfandRep {
  std::size_t dm = 0, ds = 0, dp = 0;
  CMat am, ap, bm, bp;

  GelfandRep() = default;
  GelfandRep(std::size_t dm, std::size_t ds, std::size_t dp);  // zero maps
};

struct GelfandMor {
  GelfandRep source;
  GelfandRep target;
  CMat phi_m, phi_s, phi_p;
};

Verdict validate_gelfand(const GelfandRep& r);
Verdict check_gelfand_morphism(const GelfandMor& f);
bool operator==(const GelfandRep& a, const GelfandRep& b);
std::vector<GelfandMor> gelfand_hom_basis(const GelfandRep& r, const GelfandRep& s);

/// Reads M_{-2}, M_0, M_2; throws Error if the relation fails.
GelfandRep restrict_to_gelfand(const HCDiagram& d);
/// Diagram on the window {-2, 0, 2} whose restriction is r.
HCDiagram extend_by_zero(const GelfandRep& r);

GelfandRep conjugate_gelfand(const GelfandRep& r);
HCDiagram conjugate_hc(const HCDiagram& d);
bool operator==(const HCDiagram& a, const HCDiagram& b);

/// Module over O/t^N on V- + V+ + V* (complex indices 1, 2, 3), realified.
/// gens[k] is the action of the k-th basis generator of O.
struct OModule {
  int n_trunc = 0;
  std::size_t complex_dim = 0;
  std::vector<Matrix<Scalar>> gens;
  Matrix<Scalar> t;
  CMat eps_m, eps_p, eps_s, am, ap, bm, bp;
};

/// Throws RaiseTruncation when t^N does not vanish.
OModule quiver_to_O_module(const GelfandRep& r, int n_trunc);
/// Generator products against the structure constants of O, t central
/// and t^N = 0.
Verdict verify_O_module(const OModule& m);
/// Phi_target g = g Phi_source for every generator, Phi the block map of f.
Verdict transport_check(const GelfandMor& f, int n_trunc);
/// rho_{r'}(g) = P conj(rho_r(sigma g)) P^{-1} for r' the conjugate of r,
/// P the swap of the first two summands.
Verdict sigma_twist_check(const GelfandRep& r, int n_trunc);

std::size_t nilpotency_index(const CMat& m);
std::size_t nilpotency_index(const Matrix<Scalar>& m);

/// Restriction commutes with conjugation on the nose, validate_hc holds on
/// the conjugate, and the induced O-modules agree under the involution twist.
Verdict conjugation_square_check(const HCDiagram& d, int n_trunc = 8);

/// Random valid rep on dims <= max_dim; real entries unless complex_entries.
GelfandRep random_gelfand_rep(std::mt19937_64& rng, bool complex_entries, std::size_t max_dim = 3);
HCDiagram random_hc_diagram(std::mt19937_64& rng, bool complex_entries, std::size_t max_dim = 3);

}  // namespace gelfand
