#include "gelfand/repq.hpp"

#include <map>
#include <mutex>

#include "gelfand/orders.hpp"

namespace gelfand {

namespace {

Mat zeros(std::size_t r, std::size_t c) { return Mat(r, c); }
Mat eye(std::size_t n) { return Mat::identity(n); }

void require_shape(const Mat& m, std::size_t r, std::size_t c, const char* what) {
  if (m.rows() != r || m.cols() != c)
    throw ShapeError(std::string(what) + " has shape " + m.shape() + ", expected " + std::to_string(r) + "x" +
                     std::to_string(c));
}

void append(Vec& out, const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
}

std::string first_nonzero(const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero())
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + m(i, j).str();
  return "";
}

/// Residual of the two commuting squares, flattened.
Vec residual(const RepQObj& m, const RepQObj& n, const Mat& s, const Mat& t1, const Mat& t2) {
  Vec out;
  append(out, t1 * m.Y1 - t2 * m.Y2 - n.Y1 * s);
  append(out, t2 * m.Y1 + t1 * m.Y2 - n.Y2 * s);
  append(out, s * m.X1 - n.X1 * t1 + n.X2 * t2);
  append(out, s * m.X2 - n.X1 * t2 - n.X2 * t1);
  return out;
}

Mat power(const Mat& a, std::size_t k) {
  Mat p = eye(a.rows());
  for (std::size_t i = 0; i < k; ++i) p = p * a;
  return p;
}

Mat action_of(const Vec& coeffs, const std::vector<Mat>& basis_action, std::size_t dim) {
  Mat out(dim, dim);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) out += coeffs[i] * basis_action[i];
  return out;
}

/// rad(A/t^N) for the truncation orders used by top().
const Subspace<Scalar>& cached_radical(int n_trunc) {
  static std::mutex mu;
  static std::map<int, Subspace<Scalar>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n_trunc);
  if (it == cache.end()) it = cache.emplace(n_trunc, radical(truncated_order("A", n_trunc))).first;
  return it->second;
}

}  // namespace

RepQObj::RepQObj(std::size_t u_, std::size_t v_)
    : u(u_), v(v_), X1(zeros(v_, u_)), X2(zeros(v_, u_)), Y1(zeros(u_, v_)), Y2(zeros(u_, v_)) {}

RepQObj::RepQObj(Mat x1, Mat x2, Mat y1, Mat y2)
    : u(x1.cols()), v(x1.rows()), X1(std::move(x1)), X2(std::move(x2)), Y1(std::move(y1)), Y2(std::move(y2)) {
  require_shape(X2, v, u, "X2");
  require_shape(Y1, u, v, "Y1");
  require_shape(Y2, u, v, "Y2");
}

long RepQObj::radicand() const {
  Scalar acc;
  for (const Mat* m : {&X1, &X2, &Y1, &Y2})
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j)
        if (!(*m)(i, j).is_rational()) acc += Scalar(0, 1, (*m)(i, j).radicand());
  return acc.radicand();
}

Verdict validate(const RepQObj& m) {
  require_shape(m.X1, m.v, m.u, "X1");
  require_shape(m.X2, m.v, m.u, "X2");
  require_shape(m.Y1, m.u, m.v, "Y1");
  require_shape(m.Y2, m.u, m.v, "Y2");
  Mat mixed = m.X1 * m.Y2 + m.X2 * m.Y1;
  if (!mixed.is_zero()) return Verdict::fail("X1*Y2 + X2*Y1 != 0: " + first_nonzero(mixed));
  Mat c = m.X1 * m.Y1 - m.X2 * m.Y2;
  Mat p = power(c, m.v);
  if (!p.is_zero())
    return Verdict::fail("X1*Y1 - X2*Y2 is not nilpotent: its " + std::to_string(m.v) + "-th power has " +
                         first_nonzero(p));
  return Verdict::pass();
}

Verdict check_morphism(const RepQMor& f) {
  const RepQObj& m = f.source;
  const RepQObj& n = f.target;
  require_shape(f.S, n.v, m.v, "S");
  require_shape(f.T1, n.u, m.u, "T1");
  require_shape(f.T2, n.u, m.u, "T2");
  Vec r = residual(m, n, f.S, f.T1, f.T2);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!r[i].is_zero()) return Verdict::fail("commuting square violated at residual index " + std::to_string(i));
  return Verdict::pass();
}

RepQMor identity_mor(const RepQObj& m) { return {m, m, eye(m.v), eye(m.u), zeros(m.u, m.u)}; }

RepQMor zero_mor(const RepQObj& m, const RepQObj& n) {
  return {m, n, zeros(n.v, m.v), zeros(n.u, m.u), zeros(n.u, m.u)};
}

RepQMor compose(const RepQMor& g, const RepQMor& f) {
  if (g.source.u != f.target.u || g.source.v != f.target.v) throw ShapeError("morphisms are not composable");
  return {f.source, g.target, g.S * f.S, g.T1 * f.T1 - g.T2 * f.T2, g.T1 * f.T2 + g.T2 * f.T1};
}

RepQMor add(const RepQMor& f, const RepQMor& g) { return {f.source, f.target, f.S + g.S, f.T1 + g.T1, f.T2 + g.T2}; }

RepQMor scale(const Scalar& s, const RepQMor& f) { return {f.source, f.target, s * f.S, s * f.T1, s * f.T2}; }

Vec flatten(const RepQMor& f) {
  Vec out;
  append(out, f.S);
  append(out, f.T1);
  append(out, f.T2);
  return out;
}

RepQMor unflatten(const RepQObj& m, const RepQObj& n, const Vec& x) {
  RepQMor f = zero_mor(m, n);
  std::size_t k = 0;
  for (Mat* a : {&f.S, &f.T1, &f.T2})
    for (std::size_t i = 0; i < a->rows(); ++i)
      for (std::size_t j = 0; j < a->cols(); ++j) (*a)(i, j) = x.at(k++);
  if (k != x.size()) throw ShapeError("morphism vector of wrong length");
  return f;
}

Vec HomSpace::coords(const RepQMor& f) const {
  Vec x = flatten(f);
  Vec c;
  for (auto i : free) c.push_back(x[i]);
  return c;
}

bool HomSpace::contains(const RepQMor& f) const {
  Vec x = flatten(f);
  Vec c = coords(f);
  Vec recon(x.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (c[b].is_zero()) continue;
    Vec y = flatten(basis[b]);
    for (std::size_t i = 0; i < y.size(); ++i) recon[i] += c[b] * y[i];
  }
  return recon == x;
}

HomSpace hom_space(const RepQObj& m, const RepQObj& n) {
  std::size_t unknowns = n.v * m.v + 2 * n.u * m.u;
  RepQMor z = zero_mor(m, n);
  std::size_t eqs = residual(m, n, z.S, z.T1, z.T2).size();
  Mat sys(eqs, unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    Vec x(unknowns);
    x[k] = Scalar(1);
    RepQMor f = unflatten(m, n, x);
    Vec r = residual(m, n, f.S, f.T1, f.T2);
    for (std::size_t i = 0; i < eqs; ++i) sys(i, k) = r[i];
  }
  HomSpace h{m, n, {}, {}};
  Rref<Scalar> rr = rref(sys);
  std::vector<bool> pivot(unknowns, false);
  for (auto p : rr.pivots) pivot[p] = true;
  for (std::size_t k = 0; k < unknowns; ++k)
    if (!pivot[k]) h.free.push_back(k);
  for (auto& x : kernel(sys)) h.basis.push_back(unflatten(m, n, x));
  return h;
}

std::vector<RepQMor> hom_basis(const RepQObj& m, const RepQObj& n) { return hom_space(m, n).basis; }

FinDimAlgebra end_algebra(const RepQObj& m) {
  HomSpace h = hom_space(m, m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < h.dim(); ++i) labels.push_back("f" + std::to_string(i + 1));
  Vec unit = h.coords(identity_mor(m));
  return build_algebra(std::move(labels), std::move(unit),
                       [&](std::size_t a, std::size_t b) { return h.coords(compose(h.basis[a], h.basis[b])); });
}

DivisionVerdict is_schurian(const RepQObj& m) { return is_division(end_algebra(m)); }

DivisionVerdict is_indecomposable(const RepQObj& m) {
  FinDimAlgebra e = end_algebra(m);
  if (e.dim() == 0) return {Tri::no, "", "zero object", std::nullopt};
  return is_division(quotient(e, radical(e)));
}

bool is_invertible(const RepQMor& f) {
  if (f.S.rows() != f.S.cols() || f.T1.rows() != f.T1.cols()) return false;
  if (!f.S.empty() && det(f.S).is_zero()) return false;
  if (f.T1.empty()) return true;
  Mat t = vstack(hstack(f.T1, -f.T2), hstack(f.T2, f.T1));
  return !det(t).is_zero();
}

IsoResult is_isomorphic(const RepQObj& m, const RepQObj& n) {
  if (is_indecomposable(m).division != Tri::yes || is_indecomposable(n).division != Tri::yes)
    throw Error("is_isomorphic needs indecomposable objects; decompose the input first");
  IsoResult out;
  if (m.u != n.u || m.v != n.v) {
    out.reason = "dimension vectors differ";
    return out;
  }
  HomSpace mn = hom_space(m, n);
  HomSpace nm = hom_space(n, m);
  HomSpace mm = hom_space(m, m);
  FinDimAlgebra e = end_algebra(m);
  Subspace<Scalar> rad = radical(e);
  for (const auto& f : mn.basis)
    for (const auto& g : nm.basis)
      if (!rad.contains(mm.coords(compose(g, f)))) {
        if (!is_invertible(f)) throw Error("internal: split monomorphism between indecomposables is not invertible");
        out.isomorphic = true;
        out.iso = f;
        return out;
      }
  out.reason = "every composite M -> N -> M lies in rad End(M)";
  return out;
}

RepQObj dual(const RepQObj& m) { return RepQObj(m.Y1.transpose(), m.Y2.transpose(), m.X1.transpose(), m.X2.transpose()); }

RepQMor dual_mor(const RepQMor& f) {
  return {dual(f.target), dual(f.source), f.S.transpose(), f.T1.transpose(), f.T2.transpose()};
}

RepQObj direct_sum(const RepQObj& a, const RepQObj& b) {
  return RepQObj(block_diag(a.X1, b.X1), block_diag(a.X2, b.X2), block_diag(a.Y1, b.Y1), block_diag(a.Y2, b.Y2));
}

AModuleRealization realize_as_module(const RepQObj& m) {
  std::size_t u = m.u, v = m.v, n = 2 * u + v;
  AModuleRealization r;
  r.dim = n;
  r.x1 = r.x2 = r.y1 = r.y2 = r.e = r.j = r.f = Mat(n, n);
  r.x1.set_block(2 * u, 0, m.X1);
  r.x1.set_block(2 * u, u, -m.X2);
  r.x2.set_block(2 * u, 0, m.X2);
  r.x2.set_block(2 * u, u, m.X1);
  r.y1.set_block(0, 2 * u, m.Y1);
  r.y1.set_block(u, 2 * u, m.Y2);
  r.y2.set_block(0, 2 * u, -m.Y2);
  r.y2.set_block(u, 2 * u, m.Y1);
  r.e.set_block(0, 0, eye(2 * u));
  r.f.set_block(2 * u, 2 * u, eye(v));
  r.j.set_block(0, u, -eye(u));
  r.j.set_block(u, 0, eye(u));
  return r;
}

Verdict verify_realization(const AModuleRealization& r) {
  Mat id = eye(r.dim);
  auto check = [](const Mat& a, const Mat& b, const std::string& what) {
    return a == b ? Verdict::pass() : Verdict::fail(what);
  };
  Mat zero(r.dim, r.dim);
  for (Verdict v : {check(r.x1 * r.y1, r.x2 * r.y2, "x1y1 != x2y2"), check(r.x1 * r.y2, zero, "x1y2 != 0"),
                    check(r.x2 * r.y1, zero, "x2y1 != 0"), check(r.j * r.j, -r.e, "j^2 != -e"),
                    check(r.e + r.f, id, "e + f != 1"), check(r.e * r.e, r.e, "e^2 != e"),
                    check(r.e * r.j, r.j, "ej != j"), check(r.j * r.e, r.j, "je != j"),
                    check(r.f * r.x1, r.x1, "fx1 != x1"), check(r.x1 * r.e, r.x1, "x1e != x1"),
                    check(r.f * r.x2, r.x2, "fx2 != x2"), check(r.x2 * r.e, r.x2, "x2e != x2"),
                    check(r.e * r.y1, r.y1, "ey1 != y1"), check(r.y1 * r.f, r.y1, "y1f != y1"),
                    check(r.e * r.y2, r.y2, "ey2 != y2"), check(r.y2 * r.f, r.y2, "y2f != y2"),
                    check(r.x1 * r.j, -r.x2, "x1 j != -x2"), check(r.j * r.y1, r.y2, "j y1 != y2")})
    if (!v) return v;
  // t acts centrally and nilpotently; then A/t^N is spanned by t^s g_k, so
  // products of the nine generators decide everything. Their expansions have
  // t-exponent <= 2, hence A/t^3 holds them exactly.
  std::vector<Mat> gens = a_generator_action(r);
  Mat t = t_action(r);
  if (!power(t, r.dim).is_zero()) return Verdict::fail("t does not act nilpotently");
  for (const auto& g : gens)
    if (!(g * t == t * g)) return Verdict::fail("t is not central");
  FinDimAlgebra a = truncated_order("A", 3);
  std::vector<Mat> basis;
  Mat tp = id;
  for (int s = 0; s < 3; ++s) {
    for (const auto& g : gens) basis.push_back(tp * g);
    tp = tp * t;
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Mat p(r.dim, r.dim);
      for (const auto& term : a.product(i, k)) p += term.coeff * basis[term.index];
      if (!(gens[i] * gens[k] == p))
        return Verdict::fail("A-relation fails for " + a.labels()[i] + " * " + a.labels()[k]);
    }
  return Verdict::pass();
}

Mat realize_morphism(const RepQMor& f) {
  std::size_t u = f.source.u, up = f.target.u;
  Mat m(2 * up + f.target.v, 2 * u + f.source.v);
  m.set_block(0, 0, f.T1);
  m.set_block(0, u, -f.T2);
  m.set_block(up, 0, f.T2);
  m.set_block(up, u, f.T1);
  m.set_block(2 * up, 2 * u, f.S);
  return m;
}

std::vector<Mat> a_generator_action(const AModuleRealization& r) {
  return {r.e, r.j, r.y1 * r.x1, r.y1 * r.x2, r.x1, r.x2, r.f, r.y1, r.y2};
}

Mat t_action(const AModuleRealization& r) { return r.y1 * r.x1 + r.y2 * r.x2 + r.x1 * r.y1; }

std::size_t a_linear_dim(const AModuleRealization& a, const AModuleRealization& b) {
  // Phi: a -> b with Phi g_a = g_b Phi for the seven generators
  std::size_t rows = b.dim, cols = a.dim, unknowns = rows * cols;
  const Mat* ga[7] = {&a.x1, &a.x2, &a.y1, &a.y2, &a.e, &a.j, &a.f};
  const Mat* gb[7] = {&b.x1, &b.x2, &b.y1, &b.y2, &b.e, &b.j, &b.f};
  Mat sys(7 * unknowns, unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    Mat phi(rows, cols);
    phi(k / cols, k % cols) = Scalar(1);
    for (std::size_t g = 0; g < 7; ++g) {
      Mat d = phi * *ga[g] - *gb[g] * phi;
      for (std::size_t i = 0; i < unknowns; ++i) sys(g * unknowns + i, k) = d(i / cols, i % cols);
    }
  }
  return unknowns - rank(sys);
}

Subspace<Scalar> radical_submodule(const RepQObj& m) {
  AModuleRealization r = realize_as_module(m);
  int n_trunc = static_cast<int>(2 * m.u + m.v + 1);
  Mat t = t_action(r);
  if (!power(t, static_cast<std::size_t>(n_trunc)).is_zero()) throw Error("t does not act nilpotently");
  std::vector<Mat> gens = a_generator_action(r);
  std::vector<Mat> basis;
  Mat tp = eye(r.dim);
  for (int s = 0; s < n_trunc; ++s) {
    for (const auto& g : gens) basis.push_back(tp * g);
    tp = tp * t;
  }
  const Subspace<Scalar>& rad = cached_radical(n_trunc);
  Subspace<Scalar> out(r.dim);
  for (const auto& v : rad.basis()) {
    Mat a = action_of(v, basis, r.dim);
    for (std::size_t c = 0; c < r.dim; ++c) {
      Vec col(r.dim);
      for (std::size_t i = 0; i < r.dim; ++i) col[i] = a(i, c);
      out.add(col);
    }
  }
  return out;
}

std::pair<std::size_t, std::size_t> top(const RepQObj& m) {
  Subspace<Scalar> rad = radical_submodule(m);
  std::size_t e_rad = 0, f_rad = 0;
  // rad M is a submodule, so it splits along e + f
  Subspace<Scalar> e_part(rad.ambient()), f_part(rad.ambient());
  for (const auto& v : rad.basis()) {
    Vec a = v, b = v;
    for (std::size_t i = 0; i < v.size(); ++i) (i < 2 * m.u ? b[i] : a[i]) = Scalar(0);
    e_part.add(a);
    f_part.add(b);
  }
  e_rad = e_part.dim();
  f_rad = f_part.dim();
  return {(2 * m.u - e_rad) / 2, m.v - f_rad};
}

std::vector<NamedObj> schurian_modules() {
  auto one = [](std::size_t r, std::size_t c, std::vector<std::pair<std::size_t, std::size_t>> ones) {
    Mat a(r, c);
    for (auto [i, j] : ones) a(i, j) = Scalar(1);
    return a;
  };
  std::vector<NamedObj> out;
  out.push_back({"S", RepQObj(1, 0)});
  out.push_back({"T", RepQObj(0, 1)});
  RepQObj b1(1, 1);
  b1.Y1 = one(1, 1, {{0, 0}});
  out.push_back({"b1", b1});
  RepQObj b2(1, 1);
  b2.X1 = one(1, 1, {{0, 0}});
  out.push_back({"b2", b2});
  RepQObj c1(1, 2);
  c1.Y1 = one(1, 2, {{0, 0}});
  c1.Y2 = one(1, 2, {{0, 1}});
  out.push_back({"c1", c1});
  RepQObj c2(1, 2);
  c2.X1 = one(2, 1, {{0, 0}});
  c2.X2 = one(2, 1, {{1, 0}});
  out.push_back({"c2", c2});
  return out;
}

}  // namespace gelfand
