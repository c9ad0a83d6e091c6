#include "gelfand/hc.hpp"

#include <algorithm>

#include "gelfand/linalg.hpp"
#include "gelfand/orders.hpp"

namespace gelfand {

namespace {

CMat eye(std::size_t n) { return CMat::identity(n); }

CMat cpower(const CMat& m, std::size_t k) {
  CMat p = eye(m.rows());
  for (std::size_t i = 0; i < k; ++i) p = p * m;
  return p;
}

bool nilpotent(const CMat& m) { return cpower(m, m.rows()).is_zero(); }

std::string sh(const CMat& m) { return m.shape(); }

Verdict expect_shape(const CMat& m, std::size_t r, std::size_t c, const std::string& what) {
  if (m.rows() != r || m.cols() != c)
    return Verdict::fail(what + " has shape " + sh(m) + ", expected " + std::to_string(r) + "x" + std::to_string(c));
  return Verdict::pass();
}

const FinDimAlgebra& o_mod_t3() {
  static const FinDimAlgebra a = truncated_order("O", 3);
  return a;
}

Complex random_entry(std::mt19937_64& rng, bool complex_entries) {
  std::uniform_int_distribution<int> d(-2, 2);
  int re = d(rng);
  int im = complex_entries ? d(rng) : 0;
  return Complex(Scalar(re), Scalar(im));
}

// unit lower times unit upper
CMat random_invertible(std::mt19937_64& rng, std::size_t n, bool complex_entries) {
  CMat l = eye(n), u = eye(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = random_entry(rng, complex_entries);
      u(j, i) = random_entry(rng, complex_entries);
    }
  return l * u;
}

// Columns of the identity / rows of the identity as rectangular blocks.
CMat first_columns(std::size_t n, std::size_t r) {
  CMat m(n, r);
  for (std::size_t i = 0; i < r; ++i) m(i, i) = Complex(1);
  return m;
}

// a- b- = G (E_r top) G^{-1} for a random factorization through dim v
void factor_through(std::mt19937_64& rng, bool cx, const CMat& g, const CMat& gi, const CMat& top, std::size_t v,
                    CMat& a, CMat& b) {
  std::size_t s = g.rows(), r = top.rows();
  CMat h = random_invertible(rng, v, cx);
  CMat hi = inverse(h);
  CMat k = first_columns(v, r).transpose();  // r x v, [I 0]
  CMat kp(v, r);                             // [I; R]
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < r; ++j) kp(i, j) = i < r ? Complex(i == j ? 1 : 0) : random_entry(rng, cx);
  CMat z(v, s);
  for (std::size_t i = r; i < v; ++i)
    for (std::size_t j = 0; j < s; ++j) z(i, j) = random_entry(rng, cx);
  a = g * first_columns(s, r) * k * hi;
  b = h * (kp * top + z) * gi;
}

struct Layout {
  std::size_t dm, dp, ds;
  std::size_t off(int idx) const { return idx == 1 ? 0 : idx == 2 ? dm : dm + dp; }
  std::size_t size(int idx) const { return idx == 1 ? dm : idx == 2 ? dp : ds; }
  std::size_t total() const { return dm + dp + ds; }
};

CMat place(const Layout& l, int i, int j, const CMat& blk) {
  CMat m(l.total(), l.total());
  if (blk.rows() != l.size(i) || blk.cols() != l.size(j)) throw ShapeError("block shape mismatch");
  m.set_block(l.off(i), l.off(j), blk);
  return m;
}

}  // namespace

CMat conj(const CMat& m) {
  CMat c = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).conj();
  return c;
}

std::size_t nilpotency_index(const CMat& m) {
  CMat p = eye(m.rows());
  for (std::size_t k = 0; k <= m.rows(); ++k) {
    if (p.is_zero()) return k;
    p = p * m;
  }
  return m.rows() + 1;
}

std::size_t nilpotency_index(const Matrix<Scalar>& m) {
  Matrix<Scalar> p = Matrix<Scalar>::identity(m.rows());
  for (std::size_t k = 0; k <= m.rows(); ++k) {
    if (p.is_zero()) return k;
    p = p * m;
  }
  return m.rows() + 1;
}

// HC diagrams

CMat HCDiagram::x_at(int n) const {
  auto it = x.find(n);
  if (it != x.end()) return it->second;
  return CMat(dim(n + 2), dim(n));
}

CMat HCDiagram::y_at(int n) const {
  auto it = y.find(n);
  if (it != y.end()) return it->second;
  return CMat(dim(n - 2), dim(n));
}

Verdict check_shape(const HCDiagram& d) {
  if (d.n_min > d.n_max) {
    if (!d.dims.empty() || !d.x.empty() || !d.y.empty()) return Verdict::fail("empty window carries data");
    return Verdict::pass();
  }
  if (d.n_min % 2 != 0 || d.n_max % 2 != 0) return Verdict::fail("window bounds must be even");
  std::size_t count = static_cast<std::size_t>((d.n_max - d.n_min) / 2 + 1);
  if (d.dims.size() != count) return Verdict::fail("expected " + std::to_string(count) + " dimensions");
  for (const auto& [n, m] : d.x) {
    if (!d.in_window(n)) return Verdict::fail("x_" + std::to_string(n) + " outside the window");
    if (Verdict v = expect_shape(m, d.dim(n + 2), d.dim(n), "x_" + std::to_string(n)); !v) return v;
  }
  for (const auto& [n, m] : d.y) {
    if (!d.in_window(n)) return Verdict::fail("y_" + std::to_string(n) + " outside the window");
    if (Verdict v = expect_shape(m, d.dim(n - 2), d.dim(n), "y_" + std::to_string(n)); !v) return v;
  }
  return Verdict::pass();
}

std::vector<CasimirEntry> casimir_report(const HCDiagram& d) {
  std::vector<CasimirEntry> out;
  for (int n = d.n_min; n <= d.n_max; n += 2) {
    CasimirEntry e;
    e.n = n;
    std::size_t dim = d.dim(n);
    CMat c1, c2;
    if (d.in_window(n - 2)) {
      e.first_evaluable = true;
      c1 = Complex(n * n - 2 * n) * eye(dim) + Complex(4) * (d.x_at(n - 2) * d.y_at(n));
      e.first_nilpotent = nilpotent(c1);
    }
    if (d.in_window(n + 2)) {
      e.second_evaluable = true;
      c2 = Complex(n * n + 2 * n) * eye(dim) + Complex(4) * (d.y_at(n + 2) * d.x_at(n));
      e.second_nilpotent = nilpotent(c2);
    }
    if (e.first_evaluable && e.second_evaluable) e.equal = c1 == c2;
    out.push_back(e);
  }
  return out;
}

Verdict validate_hc(const HCDiagram& d) {
  if (Verdict v = check_shape(d); !v) return v;
  for (const auto& e : casimir_report(d)) {
    std::string at = "M_" + std::to_string(e.n);
    if (!e.first_nilpotent) return Verdict::fail("Casimir not nilpotent on " + at + " (n^2-2n+4xy)");
    if (!e.second_nilpotent) return Verdict::fail("Casimir not nilpotent on " + at + " (n^2+2n+4yx)");
    if (!e.equal) return Verdict::fail("Casimir expressions differ on " + at);
  }
  return Verdict::pass();
}

bool casimir_agree(const HCDiagram& d) {
  for (const auto& e : casimir_report(d))
    if (e.first_evaluable && e.second_evaluable && e.first_nilpotent != e.second_nilpotent) return false;
  return true;
}

bool operator==(const HCDiagram& a, const HCDiagram& b) {
  int lo = std::min(a.n_min, b.n_min), hi = std::max(a.n_max, b.n_max);
  if (lo % 2 != 0) return false;
  for (int n = lo; n <= hi; n += 2) {
    if (a.dim(n) != b.dim(n)) return false;
    if (!(a.x_at(n) == b.x_at(n)) || !(a.y_at(n) == b.y_at(n))) return false;
  }
  return true;
}

// Gelfand quiver

GelfandRep::GelfandRep(std::size_t m, std::size_t s, std::size_t p)
    : dm(m), ds(s), dp(p), am(s, m), ap(s, p), bm(m, s), bp(p, s) {}

Verdict validate_gelfand(const GelfandRep& r) {
  for (Verdict v : {expect_shape(r.am, r.ds, r.dm, "a-"), expect_shape(r.ap, r.ds, r.dp, "a+"),
                    expect_shape(r.bm, r.dm, r.ds, "b-"), expect_shape(r.bp, r.dp, r.ds, "b+")})
    if (!v) return v;
  CMat c = r.am * r.bm;
  if (!(c == r.ap * r.bp)) return Verdict::fail("a-b- != a+b+");
  if (!nilpotent(c)) return Verdict::fail("a-b- is not nilpotent");
  return Verdict::pass();
}

bool operator==(const GelfandRep& a, const GelfandRep& b) {
  return a.dm == b.dm && a.ds == b.ds && a.dp == b.dp && a.am == b.am && a.ap == b.ap && a.bm == b.bm &&
         a.bp == b.bp;
}

Verdict check_gelfand_morphism(const GelfandMor& f) {
  const GelfandRep& r = f.source;
  const GelfandRep& s = f.target;
  for (Verdict v : {expect_shape(f.phi_m, s.dm, r.dm, "phi-"), expect_shape(f.phi_s, s.ds, r.ds, "phi*"),
                    expect_shape(f.phi_p, s.dp, r.dp, "phi+")})
    if (!v) return v;
  if (!(f.phi_s * r.am == s.am * f.phi_m)) return Verdict::fail("square at a- fails");
  if (!(f.phi_s * r.ap == s.ap * f.phi_p)) return Verdict::fail("square at a+ fails");
  if (!(f.phi_m * r.bm == s.bm * f.phi_s)) return Verdict::fail("square at b- fails");
  if (!(f.phi_p * r.bp == s.bp * f.phi_s)) return Verdict::fail("square at b+ fails");
  return Verdict::pass();
}

std::vector<GelfandMor> gelfand_hom_basis(const GelfandRep& r, const GelfandRep& s) {
  std::size_t nm = s.dm * r.dm, ns = s.ds * r.ds, np = s.dp * r.dp, unknowns = nm + ns + np;
  auto unflat = [&](const std::vector<Complex>& x) {
    GelfandMor f{r, s, CMat(s.dm, r.dm), CMat(s.ds, r.ds), CMat(s.dp, r.dp)};
    for (std::size_t i = 0; i < nm; ++i) f.phi_m(i / r.dm, i % r.dm) = x[i];
    for (std::size_t i = 0; i < ns; ++i) f.phi_s(i / r.ds, i % r.ds) = x[nm + i];
    for (std::size_t i = 0; i < np; ++i) f.phi_p(i / r.dp, i % r.dp) = x[nm + ns + i];
    return f;
  };
  std::size_t eqs = s.ds * r.dm + s.ds * r.dp + s.dm * r.ds + s.dp * r.ds;
  CMat sys(eqs, unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    std::vector<Complex> e(unknowns, Complex(0));
    e[k] = Complex(1);
    GelfandMor f = unflat(e);
    std::size_t row = 0;
    for (const CMat& d : {CMat(f.phi_s * r.am - s.am * f.phi_m), CMat(f.phi_s * r.ap - s.ap * f.phi_p),
                          CMat(f.phi_m * r.bm - s.bm * f.phi_s), CMat(f.phi_p * r.bp - s.bp * f.phi_s)})
      for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) sys(row++, k) = d(i, j);
  }
  std::vector<GelfandMor> out;
  for (const auto& v : kernel(sys)) out.push_back(unflat(v));
  return out;
}

GelfandRep restrict_to_gelfand(const HCDiagram& d) {
  GelfandRep r(d.dim(-2), d.dim(0), d.dim(2));
  r.am = d.x_at(-2);
  r.bm = d.y_at(0);
  r.ap = d.y_at(2);
  r.bp = d.x_at(0);
  if (Verdict v = validate_gelfand(r); !v) throw Error("restriction is not a Gelfand representation: " + v.message);
  return r;
}

HCDiagram extend_by_zero(const GelfandRep& r) {
  HCDiagram d;
  d.n_min = -2;
  d.n_max = 2;
  d.dims = {r.dm, r.ds, r.dp};
  d.x[-2] = r.am;
  d.y[0] = r.bm;
  d.y[2] = r.ap;
  d.x[0] = r.bp;
  return d;
}

GelfandRep conjugate_gelfand(const GelfandRep& r) {
  GelfandRep c(r.dp, r.ds, r.dm);
  c.am = conj(r.ap);
  c.bm = conj(r.bp);
  c.ap = conj(r.am);
  c.bp = conj(r.bm);
  return c;
}

HCDiagram conjugate_hc(const HCDiagram& d) {
  if (d.n_min > d.n_max) return d;
  HCDiagram c;
  c.n_min = -d.n_max;
  c.n_max = -d.n_min;
  c.dims.assign(d.dims.rbegin(), d.dims.rend());
  for (const auto& [n, m] : d.y) c.x[-n] = conj(m);
  for (const auto& [n, m] : d.x) c.y[-n] = conj(m);
  return c;
}

// O-modules

OModule quiver_to_O_module(const GelfandRep& r, int n_trunc) {
  if (Verdict v = validate_gelfand(r); !v) throw Error("invalid Gelfand representation: " + v.message);
  Layout l{r.dm, r.dp, r.ds};
  OModule m;
  m.n_trunc = n_trunc;
  m.complex_dim = l.total();
  m.eps_m = place(l, 1, 1, eye(r.dm));
  m.eps_p = place(l, 2, 2, eye(r.dp));
  m.eps_s = place(l, 3, 3, eye(r.ds));
  m.bm = place(l, 1, 3, r.bm);
  m.bp = place(l, 2, 3, r.bp);
  m.am = place(l, 3, 1, r.am);
  m.ap = place(l, 3, 2, r.ap);
  CMat ct = place(l, 1, 1, r.bm * r.am) + place(l, 2, 2, r.bp * r.ap) + place(l, 3, 3, r.am * r.bm);
  if (!cpower(ct, static_cast<std::size_t>(std::max(n_trunc, 0))).is_zero())
    throw RaiseTruncation("t^" + std::to_string(n_trunc) + " does not act as zero; raise N");
  // same slot order as the basis of O: E11 E22 E33 E13 E23 tE12 tE21 tE31 tE32
  const CMat slots[9] = {m.eps_m, m.eps_p, m.eps_s, m.bm, m.bp, m.bm * m.ap, m.bp * m.am, m.am, m.ap};
  for (const auto& c : slots) {
    m.gens.push_back(realify(c));
    m.gens.push_back(realify(Complex::i() * c));
  }
  m.t = realify(ct);
  return m;
}

Verdict verify_O_module(const OModule& m) {
  using M = Matrix<Scalar>;
  std::size_t dim = 2 * m.complex_dim;
  M id = M::identity(dim);
  M tn = id;
  for (int k = 0; k < m.n_trunc; ++k) tn = tn * m.t;
  if (!tn.is_zero()) return Verdict::fail("t^N does not vanish");
  for (const auto& g : m.gens)
    if (!(g * m.t == m.t * g)) return Verdict::fail("t is not central");
  const FinDimAlgebra& a = o_mod_t3();
  std::size_t rank = m.gens.size();
  std::vector<M> basis;
  M tp = id;
  for (int s = 0; s < 3; ++s) {
    for (const auto& g : m.gens) basis.push_back(tp * g);
    tp = tp * m.t;
  }
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t k = 0; k < rank; ++k) {
      M p(dim, dim);
      for (const auto& term : a.product(i, k)) p += term.coeff * basis[term.index];
      if (!(m.gens[i] * m.gens[k] == p))
        return Verdict::fail("O-relation fails for " + a.labels()[i] + " * " + a.labels()[k]);
    }
  return Verdict::pass();
}

Verdict transport_check(const GelfandMor& f, int n_trunc) {
  if (Verdict v = check_gelfand_morphism(f); !v) return v;
  OModule ms = quiver_to_O_module(f.source, n_trunc);
  OModule mt = quiver_to_O_module(f.target, n_trunc);
  Matrix<Scalar> phi = realify(block_diag(block_diag(f.phi_m, f.phi_p), f.phi_s));
  const auto& labels = order_O().generators();
  for (std::size_t k = 0; k < ms.gens.size(); ++k)
    if (!(phi * ms.gens[k] == mt.gens[k] * phi))
      return Verdict::fail("module map does not commute with " + labels[k].label);
  return Verdict::pass();
}

Verdict sigma_twist_check(const GelfandRep& r, int n_trunc) {
  const GradedOrder& o = order_O();
  GelfandRep rc = conjugate_gelfand(r);
  OModule m = quiver_to_O_module(r, n_trunc);
  OModule mc = quiver_to_O_module(rc, n_trunc);
  // V- + V+ + V*  ->  V+ + V- + V*
  std::size_t n = m.complex_dim;
  CMat p(n, n);
  for (std::size_t i = 0; i < r.dp; ++i) p(i, r.dm + i) = Complex(1);
  for (std::size_t i = 0; i < r.dm; ++i) p(r.dp + i, i) = Complex(1);
  for (std::size_t i = 0; i < r.ds; ++i) p(r.dm + r.dp + i, r.dm + r.dp + i) = Complex(1);
  Matrix<Scalar> pr = realify(p);
  for (std::size_t k = 0; k < o.rank(); ++k) {
    const Generator& g = o.generators()[k];
    Vec c = o.expand(sigma_realified(g.m));
    Matrix<Scalar> img(2 * n, 2 * n);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j].is_zero()) continue;
      if (o.generators()[j].degree != g.degree) return Verdict::fail("involution does not preserve degrees");
      img += c[j] * m.gens[j];
    }
    if (!(mc.gens[k] == pr * conj_realified(img) * pr.transpose()))
      return Verdict::fail("twisted action differs at " + g.label);
  }
  return Verdict::pass();
}

Verdict conjugation_square_check(const HCDiagram& d, int n_trunc) {
  if (Verdict v = validate_hc(d); !v) return Verdict::fail("input diagram invalid: " + v.message);
  HCDiagram dc = conjugate_hc(d);
  if (Verdict v = validate_hc(dc); !v) return Verdict::fail("conjugate diagram invalid: " + v.message);
  if (!(conjugate_hc(dc) == d)) return Verdict::fail("conjugation is not an involution");
  GelfandRep r = restrict_to_gelfand(d);
  GelfandRep left = restrict_to_gelfand(dc);
  GelfandRep right = conjugate_gelfand(r);
  if (!(left == right)) return Verdict::fail("restriction does not commute with conjugation");
  if (!(conjugate_gelfand(right) == r)) return Verdict::fail("quiver conjugation is not an involution");
  return sigma_twist_check(r, n_trunc);
}

GelfandRep random_gelfand_rep(std::mt19937_64& rng, bool complex_entries, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> dd(0, max_dim);
  std::size_t dm = dd(rng), ds = dd(rng), dp = dd(rng);
  std::uniform_int_distribution<std::size_t> dr(0, std::min({dm, dp, ds}));
  std::size_t r = dr(rng);
  // rows of a strictly upper triangular matrix: a nilpotent of rank <= r
  CMat top(r, ds);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < ds; ++j) top(i, j) = random_entry(rng, complex_entries);
  CMat g = random_invertible(rng, ds, complex_entries);
  CMat gi = inverse(g);
  GelfandRep rep(dm, ds, dp);
  factor_through(rng, complex_entries, g, gi, top, dm, rep.am, rep.bm);
  factor_through(rng, complex_entries, g, gi, top, dp, rep.ap, rep.bp);
  return rep;
}

HCDiagram random_hc_diagram(std::mt19937_64& rng, bool complex_entries, std::size_t max_dim) {
  return extend_by_zero(random_gelfand_rep(rng, complex_entries, max_dim));
}

}  // namespace gelfand
