#include "gelfand/lattice.hpp"

#include <algorithm>

#include "gelfand/complex.hpp"
#include "gelfand/orders.hpp"

namespace gelfand {

namespace {

struct LatticeGen {
  int degree;
  Mat m;  // 3 x r constant matrix
};

/// R-basis t^{d_k} M_k of a direct sum of lattices; the M_k form a basis of
/// all 3 x r matrices, so expansion is a single matrix-vector product.
class SumBasis {
 public:
  explicit SumBasis(const std::vector<Lattice>& sum) : r_(rank_of(sum)) {
    std::size_t off = 0;
    for (Lattice l : sum) {
      auto put = [&](int deg, std::size_t i, std::size_t j, const Scalar& c) {
        Mat m(3, r_);
        m(i, off + j) = c;
        return LatticeGen{deg, m};
      };
      if (l == Lattice::P) {
        LatticeGen e = put(0, 0, 0, Scalar(1));
        e.m(1, off + 1) = Scalar(1);
        LatticeGen j = put(0, 1, 0, Scalar(1));
        j.m(0, off + 1) = Scalar(-1);
        gens_.push_back(e);
        gens_.push_back(j);
        gens_.push_back(put(1, 0, 0, Scalar(1)));
        gens_.push_back(put(1, 0, 1, Scalar(1)));
        gens_.push_back(put(0, 2, 0, Scalar(1)));
        gens_.push_back(put(0, 2, 1, Scalar(1)));
      } else {
        int d = l == Lattice::Q ? 1 : 0;
        gens_.push_back(put(d, 0, 0, Scalar(1)));
        gens_.push_back(put(d, 1, 0, Scalar(1)));
        gens_.push_back(put(0, 2, 0, Scalar(1)));
      }
      off += rank_of(l);
    }
    std::size_t g = gens_.size();
    Mat b(g, g);
    for (std::size_t k = 0; k < g; ++k)
      for (std::size_t e = 0; e < g; ++e) b(e, k) = gens_[k].m(e / r_, e % r_);
    inv_ = inverse(b);
  }

  std::size_t size() const { return gens_.size(); }
  std::size_t cols() const { return r_; }
  const std::vector<LatticeGen>& gens() const { return gens_; }

  Vec expand(const Mat& c) const {
    std::size_t g = gens_.size();
    Vec beta(g);
    for (std::size_t k = 0; k < g; ++k)
      for (std::size_t e = 0; e < g; ++e) {
        const Scalar& x = c(e / r_, e % r_);
        if (!x.is_zero() && !inv_(k, e).is_zero()) beta[k] += inv_(k, e) * x;
      }
    return beta;
  }

  /// Adds the coordinates of t^degree * c to v (basis t^s g_k, index s*G+k,
  /// s < m). Returns false when t^degree * c is not in the lattice.
  bool accumulate(const Mat& c, int degree, int m, Vec& v) const {
    Vec beta = expand(c);
    for (std::size_t k = 0; k < beta.size(); ++k) {
      if (beta[k].is_zero()) continue;
      int s = degree - gens_[k].degree;
      if (s < 0) return false;
      if (s < m) v[static_cast<std::size_t>(s) * size() + k] += beta[k];
    }
    return true;
  }

 private:
  std::size_t r_;
  std::vector<LatticeGen> gens_;
  Mat inv_;
};

SeriesMat to_series(const Mat& m, std::size_t order) {
  SeriesMat s = series_zero(m.rows(), m.cols(), order);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s(i, j) = Series(order, m(i, j));
  return s;
}

/// Coefficient matrix of t^d.
Mat coefficient(const SeriesMat& m, std::size_t d) {
  Mat c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (d < m(i, j).order()) c(i, j) = m(i, j)[d];
  return c;
}

Mat rho(const Scalar& a, const Scalar& b) {
  Mat m(2, 2);
  m(0, 0) = a;
  m(0, 1) = -b;
  m(1, 0) = b;
  m(1, 1) = a;
  return m;
}

Mat rho(const Complex& z) { return rho(z.re(), z.im()); }

Series div_exact(const Series& a, const Series& b) { return a * b.inverse(); }

int row_valuation(const SeriesMat& m, std::size_t i) {
  int v = kInfinity;
  for (std::size_t j = 0; j < m.cols(); ++j) v = std::min(v, m(i, j).valuation());
  return v;
}

class Reducer {
 public:
  Reducer(const SeriesMat& phi, std::size_t order)
      : n_(order), cur(phi), eta(series_identity(phi.rows(), order)), xi(series_identity(phi.cols(), order)) {}

  void left(const SeriesMat& e) {
    cur = e * cur;
    eta = e * eta;
  }
  void right(const SeriesMat& x) {
    cur = cur * x;
    xi = xi * x;
  }
  void left(const Mat& e) { left(to_series(e, n_)); }
  void right(const Mat& x) { right(to_series(x, n_)); }

  /// row i += s * row r
  void add_row(std::size_t i, std::size_t r, const Series& s) {
    SeriesMat e = series_identity(cur.rows(), n_);
    e(i, r) = s;
    left(e);
  }
  /// col j += col c * s
  void add_col(std::size_t j, std::size_t c, const Series& s) {
    SeriesMat x = series_identity(cur.cols(), n_);
    x(c, j) = s;
    right(x);
  }
  void scale_row(std::size_t i, const Series& s) {
    SeriesMat e = series_identity(cur.rows(), n_);
    e(i, i) = s;
    left(e);
  }
  Scalar lead(std::size_t i, std::size_t j, int k) const {
    return static_cast<std::size_t>(k) < cur(i, j).order() ? cur(i, j)[k] : Scalar();
  }

  /// Row i has valuation k; make it (t^k, 0) using C on the right.
  void pivot_first(std::size_t i, int k) {
    Scalar a = lead(i, 0, k), b = lead(i, 1, k);
    Scalar n = a * a + b * b;
    right(rho(a / n, b / n));
    add_col(1, 0, -div_exact(cur(i, 1).div_t(k), cur(i, 0).div_t(k)));
    scale_row(i, cur(i, 0).div_t(k).inverse());
  }
  /// Row i has valuation k; make it (0, t^k).
  void pivot_second(std::size_t i, int k) {
    Scalar c = lead(i, 0, k), d = lead(i, 1, k);
    Scalar n = c * c + d * d;
    right(rho(d / n, -c / n));
    add_col(0, 1, -div_exact(cur(i, 0).div_t(k), cur(i, 1).div_t(k)));
    scale_row(i, cur(i, 1).div_t(k).inverse());
  }
  /// Clears column `col` of row r against pivot row i = (.., t^k, ..) and
  /// normalizes the remaining entry; returns its valuation.
  int finish_other(std::size_t r, std::size_t i, std::size_t col, int k) {
    add_row(r, i, -cur(r, col).div_t(k));
    std::size_t other = 1 - col;
    int v = cur(r, other).valuation();
    if (v == kInfinity) throw NotRationalIso("map is not a rational isomorphism");
    scale_row(r, cur(r, other).div_t(v).inverse());
    return v;
  }

  std::size_t n_;
  SeriesMat cur, eta, xi;
};

void guard(int k, int l, int n_trunc) {
  if (k + l > n_trunc - 2)
    throw RaiseTruncation("k + l = " + std::to_string(k + l) + " exceeds N - 2 = " + std::to_string(n_trunc - 2) +
                          "; raise N");
}

std::size_t order_of(const LatticeMap& f) { return static_cast<std::size_t>(f.n_trunc); }

}  // namespace

std::string to_string(Lattice l) {
  switch (l) {
    case Lattice::P: return "P";
    case Lattice::Q: return "Q";
    case Lattice::L: return "L";
  }
  return "?";
}

Lattice lattice_from_string(const std::string& s) {
  if (s == "P") return Lattice::P;
  if (s == "Q") return Lattice::Q;
  if (s == "L") return Lattice::L;
  throw ParseError("unknown lattice '" + s + "' (expected P, Q or L)");
}

std::size_t rank_of(Lattice l) { return l == Lattice::P ? 2 : 1; }

std::size_t rank_of(const std::vector<Lattice>& sum) {
  std::size_t r = 0;
  for (Lattice l : sum) r += rank_of(l);
  return r;
}

SeriesMat series_zero(std::size_t rows, std::size_t cols, std::size_t order) {
  return SeriesMat(rows, cols, Series(order));
}

SeriesMat series_identity(std::size_t n, std::size_t order) {
  return SeriesMat::identity(n, Series::one(order), Series(order));
}

int t_valuation(const SeriesMat& m) {
  int v = kInfinity;
  for (std::size_t i = 0; i < m.rows(); ++i) v = std::min(v, row_valuation(m, i));
  return v;
}

Series det(const SeriesMat& m) {
  if (m.rows() != m.cols()) throw ShapeError("det of non-square " + m.shape());
  std::size_t n = m.rows();
  if (n == 0) throw ShapeError("det of an empty matrix");
  if (n == 1) return m(0, 0);
  Series acc = m(0, 0) * Scalar(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    SeriesMat minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = m(i, c);
    Series term = m(0, j) * det(minor);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

SeriesMat series_inverse(const SeriesMat& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of non-square " + m.shape());
  std::size_t n = m.rows();
  std::size_t order = n ? m(0, 0).order() : 0;
  SeriesMat a = m;
  SeriesMat b = series_identity(n, order);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !a(p, c).is_unit()) ++p;
    if (p == n) throw NotAUnit();
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(b(p, j), b(c, j));
    }
    Series inv = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= inv;
      b(c, j) *= inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      Series f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        b(i, j) -= f * b(c, j);
      }
    }
  }
  return b;
}

Verdict check_hom(const SeriesMat& m, const std::vector<Lattice>& source, const std::vector<Lattice>& target) {
  if (m.rows() != rank_of(source) || m.cols() != rank_of(target))
    return Verdict::fail("matrix shape " + m.shape() + " does not match ranks " + std::to_string(rank_of(source)) +
                         " -> " + std::to_string(rank_of(target)));
  std::size_t order = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) order = std::max(order, m(i, j).order());
  SumBasis src(source), tgt(target);
  for (std::size_t g = 0; g < src.size(); ++g) {
    const LatticeGen& f = src.gens()[g];
    SeriesMat img = to_series(f.m, order) * m;
    for (std::size_t d = 0; d + f.degree < order; ++d) {
      Mat c = coefficient(img, d);
      if (c.is_zero()) continue;
      Vec sink(tgt.size() * (order + 1));
      if (!tgt.accumulate(c, static_cast<int>(d) + f.degree, static_cast<int>(order) + 1, sink))
        return Verdict::fail("generator " + std::to_string(g + 1) + " of the source is not mapped into the target (t^" +
                             std::to_string(d + f.degree) + " term)");
    }
  }
  return Verdict::pass();
}

Verdict check_hom(const LatticeMap& f) { return check_hom(f.entries, f.source, f.target); }

Verdict check_automorphism(const SeriesMat& m, const std::vector<Lattice>& sum) {
  Verdict v = check_hom(m, sum, sum);
  if (!v) return v;
  if (!det(m).is_unit()) return Verdict::fail("determinant is not a unit");
  return Verdict::pass();
}

RationalIso rational_iso_check(const LatticeMap& f) {
  if (rank_of(f.source) != rank_of(f.target)) throw ShapeError("rational_iso_check needs equal ranks");
  RationalIso out;
  Series d = det(f.entries);
  out.det_valuation = d.valuation();
  if (out.det_valuation == kInfinity) {
    out.reason = "determinant vanishes mod t^" + std::to_string(f.n_trunc);
    return out;
  }
  if (out.det_valuation > f.n_trunc - 2) {
    out.reason = "val(det) = " + std::to_string(out.det_valuation) + " exceeds N - 2; raise N";
    return out;
  }
  out.ok = true;
  return out;
}

std::string to_string(NfCase c) {
  switch (c) {
    case NfCase::Ia: return "I.a";
    case NfCase::Ib: return "I.b";
    case NfCase::IIa: return "II.a";
    case NfCase::IIb: return "II.b";
    case NfCase::IIci: return "II.c-i";
    case NfCase::IIcii: return "II.c-ii";
    case NfCase::IId: return "II.d";
  }
  return "?";
}

NfCase nf_case_from_string(const std::string& s) {
  for (NfCase c : {NfCase::Ia, NfCase::Ib, NfCase::IIa, NfCase::IIb, NfCase::IIci, NfCase::IIcii, NfCase::IId})
    if (to_string(c) == s) return c;
  throw ParseError("unknown normal-form case '" + s + "'");
}

NormalForm NormalForm::canonical() const {
  NormalForm n = *this;
  if (kase == NfCase::IId && l == 0 && lambda.abs() > Scalar(1)) n.lambda = lambda.inv();
  return n;
}

std::string NormalForm::str() const {
  std::string s = to_string(kase) + " k=" + std::to_string(k);
  if (kase != NfCase::Ia && kase != NfCase::Ib) s += " l=" + std::to_string(l);
  if (kase == NfCase::IId) s += " lambda=" + lambda.str();
  return s;
}

bool operator==(const NormalForm& a, const NormalForm& b) {
  bool lam = a.kase != NfCase::IId || a.lambda == b.lambda;
  bool ll = a.kase == NfCase::Ia || a.kase == NfCase::Ib || a.l == b.l;
  return a.kase == b.kase && a.k == b.k && ll && lam;
}

void check_ranges(const NormalForm& nf, bool require_canonical) {
  auto fail = [&](const std::string& why) { throw Error("normal form " + nf.str() + " out of range: " + why); };
  if (nf.k < 0 || nf.l < 0) fail("k and l must be nonnegative");
  switch (nf.kase) {
    case NfCase::Ia:
    case NfCase::Ib:
      if (nf.k < 1) fail("k >= 1 required");
      break;
    case NfCase::IIa: break;
    case NfCase::IIb:
      if (nf.k < 1) fail("Hom(L^2, P) = t M_2(R) forces k >= 1");
      break;
    case NfCase::IIci:
      if (nf.k < 1) fail("k >= 1 required");
      break;
    case NfCase::IIcii:
      if (nf.l < 1) fail("l >= 1 required");
      break;
    case NfCase::IId:
      if (nf.k < 1) fail("k >= 1 required");
      if (nf.lambda.is_zero()) fail("lambda must be nonzero");
      if (require_canonical && nf.l == 0 && nf.lambda.abs() > Scalar(1)) fail("|lambda| <= 1 required when l = 0");
      break;
  }
}

LatticeMap build_normal_map(const NormalForm& nf, int n_trunc) {
  check_ranges(nf);
  std::size_t n = static_cast<std::size_t>(n_trunc);
  auto mono = [&](int deg, const Scalar& c = Scalar(1)) { return Series::monomial(c, deg, n); };
  LatticeMap f;
  f.n_trunc = n_trunc;
  int k = nf.k, l = nf.l;
  switch (nf.kase) {
    case NfCase::Ia:
    case NfCase::Ib:
      f.source = {nf.kase == NfCase::Ia ? Lattice::Q : Lattice::L};
      f.target = {Lattice::Q};
      f.entries = series_zero(1, 1, n);
      f.entries(0, 0) = mono(k);
      break;
    default:
      f.target = {Lattice::P};
      f.entries = series_zero(2, 2, n);
      if (nf.kase == NfCase::IIa) f.source = {Lattice::Q, Lattice::Q};
      if (nf.kase == NfCase::IIb) f.source = {Lattice::L, Lattice::L};
      if (nf.kase == NfCase::IIci || nf.kase == NfCase::IIcii) f.source = {Lattice::L, Lattice::Q};
      if (nf.kase == NfCase::IId) f.source = {Lattice::P};
      if (nf.kase == NfCase::IIcii) {
        f.entries(0, 0) = mono(k + l);
        f.entries(1, 1) = mono(k);
      } else {
        f.entries(0, 0) = mono(k);
        f.entries(1, 1) = mono(k + l, nf.kase == NfCase::IId ? nf.lambda : Scalar(1));
      }
  }
  Verdict v = check_hom(f);
  if (!v) throw Error("normal form " + nf.str() + " violates the Hom constraints: " + v.message);
  return f;
}

std::pair<std::size_t, std::size_t> dimension_vector_formula(const NormalForm& nf) {
  auto z = [](int x) { return static_cast<std::size_t>(x); };
  int k = nf.k, l = nf.l;
  switch (nf.kase) {
    case NfCase::Ia: return {z(k), z(k)};
    case NfCase::Ib: return {z(k - 1), z(k)};
    case NfCase::IIa: return {z(2 * k + l + 1), z(2 * k + l)};
    case NfCase::IIb: return {z(2 * k + l - 1), z(2 * k + l)};
    default: return {z(2 * k + l), z(2 * k + l)};
  }
}

PseudoDiag pseudo_diagonalize(const Scalar& c, const Scalar& d) {
  if (d.is_zero()) throw Error("pseudo_diagonalize needs d != 0");
  if (!c.is_rational() || !d.is_rational()) throw Error("pseudo_diagonalize needs rational c and d");
  PseudoDiag out;
  Mat id = Mat::identity(2);
  if (c.is_zero() && (d == Scalar(1) || d == Scalar(-1))) {
    out.lambda = d;
    out.eta = id;
    out.xi = id;
    return out;
  }
  Scalar one(1), half = Scalar::rational(1, 2);
  auto roots = quad_roots(-(one + c * c + d * d) / d, one);
  out.lambda = d.sign() > 0 ? roots.second : roots.first;
  // z -> p z + q conj(z) represents (1 0; c d) on C = R^2
  Complex p(half * (one + d), half * c), q(half * (one - d), half * c);
  Complex big_p(half * (one + out.lambda)), big_q(half * (one - out.lambda));
  Complex mu = big_q * p / (big_p * q);
  Complex w = mu == Complex(-1) ? Complex::i() : Complex(1) + mu.conj();
  Complex z = big_p / (p * w);
  out.eta = rho(z);
  out.xi = rho(w);
  Mat m(2, 2);
  m(0, 0) = one;
  m(1, 0) = c;
  m(1, 1) = d;
  Mat target(2, 2);
  target(0, 0) = one;
  target(1, 1) = out.lambda;
  if (!(out.eta * m * out.xi == target)) throw Error("internal: pseudo-diagonalization certificate failed");
  return out;
}

Reduction reduce_to_normal_form(const LatticeMap& phi) {
  Verdict hv = check_hom(phi);
  if (!hv) throw Error("input is not a lattice homomorphism: " + hv.message);
  if (rank_of(phi.source) != rank_of(phi.target)) throw ShapeError("source and target ranks differ");
  RationalIso ri = rational_iso_check(phi);
  if (!ri.ok) {
    if (ri.det_valuation == kInfinity) throw NotRationalIso(ri.reason);
    throw RaiseTruncation(ri.reason);
  }
  const int n_trunc = phi.n_trunc;
  Reducer red(phi.entries, order_of(phi));
  NormalForm nf;
  const auto& s = phi.source;
  const auto& t = phi.target;
  using L = Lattice;

  if (t == std::vector<L>{L::Q} && (s == std::vector<L>{L::Q} || s == std::vector<L>{L::L})) {
    int k = red.cur(0, 0).valuation();
    if (k == 0) throw Error("map is an isomorphism; its cokernel is zero");
    guard(k, 0, n_trunc);
    red.scale_row(0, red.cur(0, 0).div_t(k).inverse());
    nf = {s[0] == L::Q ? NfCase::Ia : NfCase::Ib, k, 0, Scalar(1)};
  } else if (t == std::vector<L>{L::P} &&
             (s == std::vector<L>{L::Q, L::Q} || s == std::vector<L>{L::L, L::L})) {
    int k = t_valuation(red.cur);
    if (row_valuation(red.cur, 0) != k) {
      Mat swap(2, 2);
      swap(0, 1) = Scalar(1);
      swap(1, 0) = Scalar(1);
      red.left(swap);
    }
    red.pivot_first(0, k);
    int l = red.finish_other(1, 0, 0, k) - k;
    guard(k, l, n_trunc);
    nf = {s[0] == L::Q ? NfCase::IIa : NfCase::IIb, k, l, Scalar(1)};
  } else if (t == std::vector<L>{L::P} && s == std::vector<L>{L::L, L::Q}) {
    int kl = row_valuation(red.cur, 0), kq = row_valuation(red.cur, 1);
    if (kl <= kq) {
      red.pivot_first(0, kl);
      int l = red.finish_other(1, 0, 0, kl) - kl;
      guard(kl, l, n_trunc);
      nf = {NfCase::IIci, kl, l, Scalar(1)};
    } else {
      red.pivot_second(1, kq);
      int l = red.finish_other(0, 1, 1, kq) - kq;
      guard(kq, l, n_trunc);
      nf = {NfCase::IIcii, kq, l, Scalar(1)};
    }
  } else if (t == std::vector<L>{L::P} && s == std::vector<L>{L::P}) {
    int k = t_valuation(red.cur);
    if (k == 0) throw Error("map is an automorphism of P; its cokernel is zero");
    if (red.lead(0, 0, k).is_zero() && red.lead(0, 1, k).is_zero()) red.left(rho(Scalar(0), Scalar(-1)));
    Scalar a = red.lead(0, 0, k), b = red.lead(0, 1, k);
    Scalar n = a * a + b * b;
    red.right(rho(a / n, b / n));
    Scalar c = red.lead(1, 0, k), d = red.lead(1, 1, k);
    if (!d.is_zero()) {
      guard(k, 0, n_trunc);
      PseudoDiag pd = pseudo_diagonalize(c, d);
      red.left(pd.eta);
      red.right(pd.xi);
      SeriesMat core = series_zero(2, 2, order_of(phi));
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) core(i, j) = red.cur(i, j).div_t(k);
      Mat diag(2, 2);
      diag(0, 0) = Scalar(1);
      diag(1, 1) = pd.lambda;
      red.right(series_inverse(core) * to_series(diag, order_of(phi)));
      nf = {NfCase::IId, k, 0, pd.lambda};
    } else {
      Scalar m = Scalar(1) + c * c;
      red.left(rho(Scalar(1) / m, -c / m));
      red.add_col(1, 0, -div_exact(red.cur(0, 1).div_t(k), red.cur(0, 0).div_t(k)));
      red.add_row(1, 0, -div_exact(red.cur(1, 0).div_t(k), red.cur(0, 0).div_t(k)));
      int v = red.cur(1, 1).valuation();
      if (v == kInfinity) throw NotRationalIso("map is not a rational isomorphism");
      int l = v - k;
      guard(k, l, n_trunc);
      Series u1 = red.cur(0, 0).div_t(k);
      Series w = red.cur(1, 1).div_t(v);
      Scalar lambda = w[0] / u1[0];
      SeriesMat e = series_zero(2, 2, order_of(phi));
      e(0, 0) = u1.inverse();
      e(1, 1) = w.inverse() * lambda;
      red.left(e);
      nf = {NfCase::IId, k, l, lambda};
    }
  } else {
    std::string src, tgt;
    for (L x : s) src += to_string(x);
    for (L x : t) tgt += to_string(x);
    throw Error("unsupported lattice map " + src + " -> " + tgt +
                " (expected Q->Q, L->Q, QQ->P, LL->P, LQ->P or P->P)");
  }
  Reduction r{nf, red.eta, red.xi};
  Verdict v = verify_reduction(phi, r);
  if (!v) throw Error("internal: reduction certificate failed: " + v.message);
  return r;
}

Verdict verify_reduction(const LatticeMap& phi, const Reduction& r) {
  Verdict a = check_automorphism(r.eta, phi.source);
  if (!a) return Verdict::fail("eta: " + a.message);
  Verdict b = check_automorphism(r.xi, phi.target);
  if (!b) return Verdict::fail("xi: " + b.message);
  LatticeMap target = build_normal_map(r.nf, phi.n_trunc);
  if (target.source != phi.source || target.target != phi.target)
    return Verdict::fail("normal form has different source or target");
  if (!(r.eta * phi.entries * r.xi == target.entries)) return Verdict::fail("eta * phi * xi != normal form");
  return Verdict::pass();
}

RepQObj cokernel(const LatticeMap& phi) {
  Verdict hv = check_hom(phi);
  if (!hv) throw Error("input is not a lattice homomorphism: " + hv.message);
  const int m = phi.n_trunc - 1;
  if (m < 1) throw RaiseTruncation("truncation order too small");
  SumBasis src(phi.source), tgt(phi.target);
  const std::size_t g = tgt.size();
  const std::size_t amb = g * static_cast<std::size_t>(m);
  Subspace<Scalar> image(amb);
  for (const auto& f : src.gens()) {
    SeriesMat fx = to_series(f.m, order_of(phi)) * phi.entries;
    for (int s = 0; s + f.degree <= m; ++s) {
      Vec v(amb);
      for (int d = 0; d < m + 1 - s - f.degree; ++d) {
        Mat c = coefficient(fx, static_cast<std::size_t>(d));
        if (c.is_zero()) continue;
        if (!tgt.accumulate(c, d + s + f.degree, m, v)) throw Error("image leaves the target lattice");
      }
      image.add(v);
    }
  }
  for (std::size_t k = 0; k < g; ++k) {
    Vec v(amb);
    v[static_cast<std::size_t>(m - 1) * g + k] = Scalar(1);
    if (!image.contains(v))
      throw RaiseTruncation("t^" + std::to_string(m - 1) + " * target is not in the image; raise N");
  }
  std::vector<std::size_t> free = image.free_columns();
  const std::size_t n = free.size();
  if (n == 0) return RepQObj(0, 0);

  // action of a (degree deg) on the quotient basis
  auto action = [&](const Mat& a, int deg) {
    Mat out(n, n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t idx = free[col];
      int s = static_cast<int>(idx / g);
      const LatticeGen& gk = tgt.gens()[idx % g];
      Vec v(amb);
      if (!tgt.accumulate(a * gk.m, s + gk.degree + deg, m, v)) throw Error("internal: target is not an A-module");
      v = image.reduce(v);
      for (std::size_t row = 0; row < n; ++row) out(row, col) = v[free[row]];
    }
    return out;
  };
  auto u = [](std::size_t i, std::size_t j) { return unit_matrix(3, i, j); };
  Mat e = action(u(1, 1) + u(2, 2), 0);
  Mat j = action(u(2, 1) - u(1, 2), 0);
  Mat f = action(u(3, 3), 0);
  Mat x1 = action(u(3, 1), 0);
  Mat x2 = action(u(3, 2), 0);
  Mat y1 = action(u(1, 3), 1);
  Mat y2 = action(u(2, 3), 1);

  auto col = [&](const Mat& a, std::size_t c) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = a(i, c);
    return v;
  };
  auto apply = [&](const Mat& a, const Vec& v) {
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
    return r;
  };
  std::vector<Vec> us, vs;
  Subspace<Scalar> espan(n), fspan(n);
  for (std::size_t c = 0; c < n; ++c) {
    Vec w = col(e, c);
    if (espan.add(w)) {
      us.push_back(w);
      espan.add(apply(j, w));
    }
    Vec z = col(f, c);
    if (fspan.add(z)) vs.push_back(z);
  }
  std::size_t du = us.size(), dv = vs.size();
  if (2 * du + dv != n) throw Error("internal: e + f does not split the cokernel");
  Mat basis(n, n);
  for (std::size_t i = 0; i < du; ++i) {
    Vec ju = apply(j, us[i]);
    for (std::size_t r = 0; r < n; ++r) {
      basis(r, i) = us[i][r];
      basis(r, du + i) = ju[r];
    }
  }
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t r = 0; r < n; ++r) basis(r, 2 * du + i) = vs[i][r];
  Mat binv = inverse(basis);
  auto conj = [&](const Mat& a) { return binv * a * basis; };
  Mat cx1 = conj(x1), cy1 = conj(y1);
  RepQObj obj(cx1.block(2 * du, 0, dv, du), -cx1.block(2 * du, du, dv, du), cy1.block(0, 2 * du, du, dv),
              cy1.block(du, 2 * du, du, dv));
  Verdict valid = validate(obj);
  if (!valid) throw Error("internal: cokernel data invalid: " + valid.message);
  AModuleRealization r = realize_as_module(obj);
  if (!(r.e == conj(e) && r.j == conj(j) && r.f == conj(f) && r.x1 == cx1 && r.x2 == conj(x2) && r.y1 == cy1 &&
        r.y2 == conj(y2)))
    throw Error("internal: cokernel action does not match its realization");
  return obj;
}

SeriesMat random_automorphism(const std::vector<Lattice>& sum, int n_trunc, std::mt19937_64& rng) {
  std::size_t order = static_cast<std::size_t>(n_trunc);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::size_t r = rank_of(sum);
  std::vector<Lattice> col_type;
  std::vector<std::size_t> block_start;
  for (Lattice l : sum)
    for (std::size_t i = 0; i < rank_of(l); ++i) {
      col_type.push_back(l);
      block_start.push_back(i);
    }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    SeriesMat m = series_zero(r, r, order);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t d = 0; d < 3 && d < order; ++d) m(i, j)[d] = Scalar(coef(rng));
    // constant terms: L -> Q, L -> P, P -> Q vanish; P -> P lies in C
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Lattice a = col_type[i], b = col_type[j];
        if ((a == Lattice::L && b != Lattice::L) || (a == Lattice::P && b == Lattice::Q)) m(i, j)[0] = Scalar(0);
      }
    for (std::size_t i = 0; i + 1 < r; ++i)
      if (col_type[i] == Lattice::P && block_start[i] == 0) {
        m(i + 1, i + 1)[0] = m(i, i)[0];
        m(i + 1, i)[0] = -m(i, i + 1)[0];
        for (std::size_t j = 0; j < r; ++j)
          if (j != i && j != i + 1 && col_type[j] == Lattice::P) {
            m(i, j)[0] = Scalar(0);
            m(i + 1, j)[0] = Scalar(0);
          }
      }
    if (check_automorphism(m, sum)) return m;
  }
  throw Error("could not draw a random automorphism");
}

LatticeMap perturbed_normal_map(const NormalForm& nf, int n_trunc, std::mt19937_64& rng) {
  LatticeMap f = build_normal_map(nf, n_trunc);
  SeriesMat u1 = random_automorphism(f.source, n_trunc, rng);
  SeriesMat u2 = random_automorphism(f.target, n_trunc, rng);
  f.entries = u1 * f.entries * u2;
  return f;
}

std::vector<NormalForm> enumerate_normal_forms(int bound, const std::vector<Scalar>& lambdas) {
  std::vector<NormalForm> out;
  for (int k = 1; k <= bound; ++k) out.push_back({NfCase::Ia, k, 0, Scalar(1)});
  for (int k = 1; k <= bound; ++k) out.push_back({NfCase::Ib, k, 0, Scalar(1)});
  for (int k = 0; k <= bound; ++k)
    for (int l = 0; l <= bound; ++l) out.push_back({NfCase::IIa, k, l, Scalar(1)});
  for (int k = 1; k <= bound; ++k)
    for (int l = 0; l <= bound; ++l) out.push_back({NfCase::IIb, k, l, Scalar(1)});
  for (int k = 1; k <= bound; ++k)
    for (int l = 0; l <= bound; ++l) out.push_back({NfCase::IIci, k, l, Scalar(1)});
  for (int k = 0; k <= bound; ++k)
    for (int l = 1; l <= bound; ++l) out.push_back({NfCase::IIcii, k, l, Scalar(1)});
  for (int k = 1; k <= bound; ++k)
    for (int l = 0; l <= bound; ++l)
      for (const auto& lam : lambdas) out.push_back({NfCase::IId, k, l, lam});
  return out;
}

}  // namespace gelfand
