#include "gelfand/orders.hpp"

#include <map>

namespace gelfand {

PolyMat poly_mul(const PolyMat& a, const PolyMat& b, std::size_t max_degree) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = a[0].rows();
  std::size_t deg = std::min(a.size() + b.size() - 2, max_degree);
  PolyMat r(deg + 1, Matrix<Scalar>(n, n));
  for (std::size_t i = 0; i < a.size() && i <= deg; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= deg; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

PolyMat poly_add(const PolyMat& a, const PolyMat& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::size_t n = a[0].rows();
  PolyMat r(std::max(a.size(), b.size()), Matrix<Scalar>(n, a[0].cols()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

PolyMat poly_scale(const Scalar& s, const PolyMat& a) {
  PolyMat r = a;
  for (auto& m : r) m.scale(s);
  return r;
}

PolyMat poly_const(const Matrix<Scalar>& m) { return PolyMat{m}; }

PolyMat poly_monomial(const Matrix<Scalar>& m, std::size_t degree) {
  PolyMat r(degree + 1, Matrix<Scalar>(m.rows(), m.cols()));
  r[degree] = m;
  return r;
}

Matrix<Scalar> realify(const Matrix<Complex>& z) {
  Matrix<Scalar> r(2 * z.rows(), 2 * z.cols());
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) {
      const Complex& c = z(i, j);
      r(2 * i, 2 * j) = c.re();
      r(2 * i, 2 * j + 1) = -c.im();
      r(2 * i + 1, 2 * j) = c.im();
      r(2 * i + 1, 2 * j + 1) = c.re();
    }
  return r;
}

Matrix<Complex> complexify_matrix(const Matrix<Scalar>& r) {
  Matrix<Complex> z(r.rows() / 2, r.cols() / 2);
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) z(i, j) = Complex(r(2 * i, 2 * j), r(2 * i + 1, 2 * j));
  return z;
}

Matrix<Scalar> complex_unit(std::size_t n) {
  Matrix<Scalar> j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(2 * i, 2 * i + 1) = Scalar(-1);
    j(2 * i + 1, 2 * i) = Scalar(1);
  }
  return j;
}

Matrix<Scalar> conj_realified(const Matrix<Scalar>& r) {
  Matrix<Scalar> out = r;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if ((i % 2) != (j % 2)) out(i, j) = -out(i, j);
  return out;
}

Matrix<Scalar> unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix<Scalar> m(n, n);
  m(i - 1, j - 1) = Scalar(1);
  return m;
}

Matrix<Complex> complex_unit_matrix(std::size_t n, std::size_t i, std::size_t j, const Complex& c) {
  Matrix<Complex> m(n, n);
  m(i - 1, j - 1) = c;
  return m;
}

GradedOrder::GradedOrder(std::string name, std::vector<Generator> gens) : name_(std::move(name)), gens_(std::move(gens)) {
  std::size_t r = gens_.size();
  std::size_t n = size();
  for (const auto& g : gens_) max_degree_ = std::max(max_degree_, g.degree);
  Matrix<Scalar> flat(r, n * n);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) flat(k, i * n + j) = gens_[k].m(i, j);
  Rref<Scalar> rr = rref(flat);
  if (rr.pivots.size() != r) throw Error("order generators are linearly dependent");
  pivot_entries_ = rr.pivots;
  Matrix<Scalar> sub(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t k = 0; k < r; ++k) sub(a, k) = flat(k, pivot_entries_[a]);
  left_inverse_ = inverse(sub);
  beta_.resize(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) beta_[i * r + j] = to_terms(expand(gens_[i].m * gens_[j].m));
}

Vec GradedOrder::expand(const Matrix<Scalar>& c) const {
  std::size_t r = rank();
  std::size_t n = size();
  Vec rhs(r);
  for (std::size_t a = 0; a < r; ++a) rhs[a] = c(pivot_entries_[a] / n, pivot_entries_[a] % n);
  Vec beta(r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t a = 0; a < r; ++a)
      if (!left_inverse_(k, a).is_zero() && !rhs[a].is_zero()) beta[k] += left_inverse_(k, a) * rhs[a];
  Matrix<Scalar> back(n, n);
  for (std::size_t k = 0; k < r; ++k)
    if (!beta[k].is_zero()) back += beta[k] * gens_[k].m;
  if (!(back == c)) throw Error("matrix is not in the span of the generators of " + name_);
  return beta;
}

bool GradedOrder::in_span(const Matrix<Scalar>& c) const {
  try {
    expand(c);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Vec GradedOrder::coords(const PolyMat& p, int n_trunc) const {
  std::size_t r = rank();
  Vec v(r * n_trunc);
  for (std::size_t d = 0; d < p.size(); ++d) {
    if (p[d].is_zero()) continue;
    Vec beta = expand(p[d]);
    for (std::size_t k = 0; k < r; ++k) {
      if (beta[k].is_zero()) continue;
      int s = static_cast<int>(d) - gens_[k].degree;
      if (s < 0) throw Error("polynomial matrix is not in " + name_ + " (generator " + gens_[k].label + ")");
      if (s < n_trunc) v[index_of(s, k)] += beta[k];
    }
  }
  return v;
}

PolyMat GradedOrder::element(std::size_t index) const {
  std::size_t s = index / rank(), k = index % rank();
  return poly_monomial(gens_[k].m, s + gens_[k].degree);
}

std::size_t GradedOrder::generator_index(const std::string& label) const {
  for (std::size_t k = 0; k < gens_.size(); ++k)
    if (gens_[k].label == label) return k;
  throw Error("no generator " + label + " in " + name_);
}

FinDimAlgebra GradedOrder::truncate(int n_trunc) const {
  if (n_trunc < 1) throw Error("truncation order must be >= 1");
  std::size_t r = rank();
  std::vector<std::string> labels;
  for (int s = 0; s < n_trunc; ++s)
    for (const auto& g : gens_) labels.push_back(s == 0 ? g.label : "t^" + std::to_string(s) + "*" + g.label);
  Vec unit = coords(poly_const(Matrix<Scalar>::identity(size())), n_trunc);
  return build_algebra(std::move(labels), std::move(unit), [&](std::size_t a, std::size_t b) {
    Vec out(r * n_trunc);
    int s1 = static_cast<int>(a / r), s2 = static_cast<int>(b / r);
    std::size_t i = a % r, j = b % r;
    for (const auto& term : beta_[i * r + j]) {
      int e = s1 + s2 + gens_[i].degree + gens_[j].degree - gens_[term.index].degree;
      if (e < 0) throw Error(name_ + " is not closed under multiplication");
      if (e < n_trunc) out[index_of(e, term.index)] += term.coeff;
    }
    return out;
  });
}

namespace {

Generator gen(std::string label, int degree, Matrix<Scalar> m) { return {std::move(label), degree, std::move(m)}; }

GradedOrder make_A() {
  Matrix<Scalar> e = unit_matrix(3, 1, 1) + unit_matrix(3, 2, 2);
  Matrix<Scalar> j = unit_matrix(3, 2, 1) - unit_matrix(3, 1, 2);
  return GradedOrder("A", {gen("e", 0, e), gen("j", 0, j), gen("tE11", 1, unit_matrix(3, 1, 1)),
                           gen("tE12", 1, unit_matrix(3, 1, 2)), gen("E31", 0, unit_matrix(3, 3, 1)),
                           gen("E32", 0, unit_matrix(3, 3, 2)), gen("E33", 0, unit_matrix(3, 3, 3)),
                           gen("tE13", 1, unit_matrix(3, 1, 3)), gen("tE23", 1, unit_matrix(3, 2, 3))});
}

GradedOrder make_H() {
  std::vector<Generator> g;
  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}})
    g.push_back(gen("E" + std::to_string(i) + std::to_string(j), 0, unit_matrix(3, i, j)));
  g.push_back(gen("tE13", 1, unit_matrix(3, 1, 3)));
  g.push_back(gen("tE23", 1, unit_matrix(3, 2, 3)));
  return GradedOrder("H", std::move(g));
}

GradedOrder make_O() {
  struct Slot {
    int i, j, d;
  };
  const std::vector<Slot> slots{{1, 1, 0}, {2, 2, 0}, {3, 3, 0}, {1, 3, 0}, {2, 3, 0},
                                {1, 2, 1}, {2, 1, 1}, {3, 1, 1}, {3, 2, 1}};
  std::vector<Generator> g;
  for (const auto& s : slots) {
    std::string name = std::string(s.d ? "t" : "") + "E" + std::to_string(s.i) + std::to_string(s.j);
    g.push_back(gen(name, s.d, realify(complex_unit_matrix(3, s.i, s.j))));
    g.push_back(gen("i" + name, s.d, realify(complex_unit_matrix(3, s.i, s.j, Complex::i()))));
  }
  return GradedOrder("O", std::move(g));
}

GradedOrder make_Lambda() {
  Complex one(1), i = Complex::i();
  auto cu = [](int a, int b, const Complex& c) { return complex_unit_matrix(3, a, b, c); };
  std::vector<Generator> g;
  g.push_back(gen("a1", 0, realify(cu(1, 1, one) + cu(3, 3, one))));
  g.push_back(gen("a2", 0, realify(cu(1, 1, -i) + cu(3, 3, i))));
  g.push_back(gen("b1", 0, realify(cu(2, 1, one))));
  g.push_back(gen("b2", 0, realify(cu(2, 1, i))));
  g.push_back(gen("c1", 0, realify(cu(3, 2, one))));
  g.push_back(gen("c2", 0, realify(cu(3, 2, i))));
  g.push_back(gen("d1", 0, realify(cu(3, 1, one))));
  g.push_back(gen("d2", 0, realify(cu(3, 1, i))));
  g.push_back(gen("rho", 0, realify(cu(2, 2, one))));
  return GradedOrder("Lambda", std::move(g));
}

}  // namespace

const GradedOrder& order_A() {
  static const GradedOrder o = make_A();
  return o;
}
const GradedOrder& order_H() {
  static const GradedOrder o = make_H();
  return o;
}
const GradedOrder& order_O() {
  static const GradedOrder o = make_O();
  return o;
}
const GradedOrder& order_Lambda() {
  static const GradedOrder o = make_Lambda();
  return o;
}

FinDimAlgebra truncated_order(const std::string& id, int n_trunc) {
  if (id == "A") return order_A().truncate(n_trunc);
  if (id == "H") return order_H().truncate(n_trunc);
  if (id == "O") return order_O().truncate(n_trunc);
  if (id == "Lambda") return order_Lambda().truncate(1);
  if (id == "A_mod_t") return order_A().truncate(1);
  throw Error("unknown order '" + id + "' (expected A, H, O, Lambda, A_mod_t)");
}

Matrix<Scalar> sigma_realified(const Matrix<Scalar>& m) {
  // swap complex indices 1 and 2, i.e. real indices {0,1} <-> {2,3}
  Matrix<Scalar> p(6, 6);
  const std::size_t perm[6] = {2, 3, 0, 1, 4, 5};
  for (std::size_t i = 0; i < 6; ++i) p(perm[i], i) = Scalar(1);
  return conj_realified(p * m * p.transpose());
}

Matrix<Scalar> involution_matrix(int n_trunc) {
  const GradedOrder& o = order_O();
  std::size_t dim = o.rank() * n_trunc;
  Matrix<Scalar> s(dim, dim);
  for (std::size_t b = 0; b < dim; ++b) {
    PolyMat el = o.element(b);
    for (auto& m : el) m = sigma_realified(m);
    Vec c = o.coords(el, n_trunc);
    for (std::size_t a = 0; a < dim; ++a) s(a, b) = c[a];
  }
  return s;
}

FinDimAlgebra full_matrix_algebra(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  Vec unit(n * n);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = Scalar(1);
  return build_algebra(std::move(labels), std::move(unit), [n](std::size_t a, std::size_t b) {
    Vec out(n * n);
    if (a % n == b / n) out[(a / n) * n + b % n] = Scalar(1);
    return out;
  });
}

Vec matrix_coords(const Matrix<Scalar>& m) {
  Vec v(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
  return v;
}

FinDimAlgebra complexify(const FinDimAlgebra& alg) {
  std::size_t n = alg.dim();
  std::vector<std::string> labels;
  for (const auto& l : alg.labels()) labels.push_back(l);
  for (const auto& l : alg.labels()) labels.push_back("i*" + l);
  Vec unit(2 * n);
  for (std::size_t k = 0; k < n; ++k) unit[k] = alg.unit()[k];
  return build_algebra(std::move(labels), std::move(unit), [&alg, n](std::size_t a, std::size_t b) {
    // (i^p b_a)(i^q b_b) = i^{p+q} b_a b_b
    std::size_t p = a / n, q = b / n;
    Vec out(2 * n);
    Scalar sgn = (p + q == 2) ? Scalar(-1) : Scalar(1);
    std::size_t off = ((p + q) % 2) * n;
    for (const auto& t : alg.product(a % n, b % n)) out[off + t.index] += sgn * t.coeff;
    return out;
  });
}

namespace {

Matrix<Scalar> columns_to_matrix(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix<Scalar> m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

/// Images in O (realified polynomial matrices) of the R-generators of A.
std::vector<PolyMat> a_generator_images(bool mutate) {
  auto cu = [](int a, int b, const Complex& c) { return realify(complex_unit_matrix(3, a, b, c)); };
  Complex one(1), i = Complex::i();
  const std::size_t deg = 4;
  PolyMat e = poly_const(cu(1, 1, one) + cu(2, 2, one));
  PolyMat j = poly_const(cu(2, 2, i) - cu(1, 1, i));
  PolyMat f = poly_const(cu(3, 3, one));
  PolyMat x = poly_monomial(cu(3, 1, one) + cu(3, 2, one), 1);
  PolyMat y = poly_const(cu(1, 3, one) + cu(2, 3, one));
  PolyMat x1 = x;
  PolyMat x2 = poly_mul(x, j, deg);
  PolyMat y1 = y;
  PolyMat y2 = poly_scale(Scalar(-1), poly_mul(j, y, deg));
  if (mutate) std::swap(x1, x2);
  // E32 = -E31 j and tE23 = j tE13 in A, hence the signs
  PolyMat mx2 = poly_scale(Scalar(-1), x2);
  return {e, j, poly_mul(y1, x1, deg), poly_mul(y1, mx2, deg), x1, mx2, f, y1, poly_scale(Scalar(-1), y2)};
}

}  // namespace

MapCheck lambda_to_a_mod_t() {
  const GradedOrder& a = order_A();
  auto u = [](int i, int j) { return unit_matrix(3, i, j); };
  // images of a1, a2, b1, b2, c1, c2, d1, d2, rho
  std::vector<PolyMat> img{poly_const(u(1, 1) + u(2, 2)), poly_const(u(2, 1) - u(1, 2)),
                           poly_const(u(3, 1)),           poly_const(u(3, 2)),
                           poly_monomial(u(1, 3), 1),     poly_monomial(u(2, 3), 1),
                           poly_monomial(u(1, 1), 1),     poly_monomial(u(2, 1), 1),
                           poly_const(u(3, 3))};
  MapCheck out{truncated_order("Lambda", 1), truncated_order("A_mod_t", 1), {}, {}};
  std::vector<Vec> cols;
  for (const auto& p : img) cols.push_back(a.coords(p, 1));
  out.m = columns_to_matrix(cols, out.target.dim());
  out.verdict = verify_algebra_map({&out.source, &out.target, out.m});
  return out;
}

MapCheck og_to_a_check(int n_trunc, bool mutate) {
  if (n_trunc < 1) throw Error("truncation order must be >= 1");
  const GradedOrder& a = order_A();
  const GradedOrder& o = order_O();
  FinDimAlgebra a_n = a.truncate(n_trunc);
  FinDimAlgebra o_n = o.truncate(n_trunc);
  GroupAction2 act{&o_n, involution_matrix(n_trunc)};
  InvariantSubalgebra inv = invariant_subalgebra(act);

  std::vector<PolyMat> gens = a_generator_images(mutate);
  PolyMat two_t = poly_monomial(Scalar(2) * Matrix<Scalar>::identity(6), 1);
  std::size_t deg = n_trunc + static_cast<std::size_t>(o.max_degree());
  std::vector<Vec> cols;
  for (std::size_t b = 0; b < a_n.dim(); ++b) {
    std::size_t s = b / a.rank(), k = b % a.rank();
    PolyMat p = gens[k];
    for (std::size_t r = 0; r < s; ++r) p = poly_mul(two_t, p, deg);
    Vec in_o = o.coords(p, n_trunc);
    if (!inv.embedding.contains(in_o)) {
      Verdict v = Verdict::fail("image of " + a_n.labels()[b] + " is not invariant");
      return MapCheck{std::move(inv.algebra), std::move(a_n), {}, std::move(v)};
    }
    cols.push_back(inv.embedding.coords(in_o));
  }
  Matrix<Scalar> m = columns_to_matrix(cols, inv.algebra.dim());
  MapCheck out{std::move(inv.algebra), std::move(a_n), {}, {}};
  Verdict forward = verify_algebra_map({&out.target, &out.source, m});
  if (!forward) {
    out.m = m;
    out.verdict = Verdict::fail("A -> O^G: " + forward.message);
    return out;
  }
  out.m = inverse(m);
  out.verdict = verify_algebra_map({&out.source, &out.target, out.m});
  return out;
}

MapCheck galois_to_matrix_check() {
  // C as a Q-algebra with basis 1, i and complex conjugation
  FinDimAlgebra c = build_algebra({"1", "i"}, Vec{Scalar(1), Scalar(0)}, [](std::size_t a, std::size_t b) {
    Vec out(2);
    if (a + b == 2)
      out[0] = Scalar(-1);
    else
      out[a + b] = Scalar(1);
    return out;
  });
  Matrix<Scalar> conj(2, 2);
  conj(0, 0) = Scalar(1);
  conj(1, 1) = Scalar(-1);
  FinDimAlgebra cg = crossed_product(c, GroupAction2{&c, conj});
  auto m2 = [](long a, long b, long cc, long d) {
    Matrix<Scalar> m(2, 2);
    m(0, 0) = Scalar(a);
    m(0, 1) = Scalar(b);
    m(1, 0) = Scalar(cc);
    m(1, 1) = Scalar(d);
    return matrix_coords(m);
  };
  // 1[e], i[e], 1[s], i[s]
  std::vector<Vec> cols{m2(1, 0, 0, 1), m2(0, -1, 1, 0), m2(1, 0, 0, -1), m2(0, 1, 1, 0)};
  MapCheck out{std::move(cg), full_matrix_algebra(2), columns_to_matrix(cols, 4), {}};
  out.verdict = verify_algebra_map({&out.source, &out.target, out.m});
  return out;
}

MapCheck complexification_check(int n_trunc) {
  const GradedOrder& a = order_A();
  const GradedOrder& o = order_O();
  FinDimAlgebra a_n = a.truncate(n_trunc);
  std::vector<PolyMat> gens = a_generator_images(false);
  PolyMat two_t = poly_monomial(Scalar(2) * Matrix<Scalar>::identity(6), 1);
  PolyMat i_mat = poly_const(complex_unit(3));
  std::size_t deg = n_trunc + static_cast<std::size_t>(o.max_degree());
  std::vector<Vec> re_cols, im_cols;
  for (std::size_t b = 0; b < a_n.dim(); ++b) {
    std::size_t s = b / a.rank(), k = b % a.rank();
    PolyMat p = gens[k];
    for (std::size_t r = 0; r < s; ++r) p = poly_mul(two_t, p, deg);
    re_cols.push_back(o.coords(p, n_trunc));
    im_cols.push_back(o.coords(poly_mul(i_mat, p, deg), n_trunc));
  }
  std::vector<Vec> cols = re_cols;
  cols.insert(cols.end(), im_cols.begin(), im_cols.end());
  MapCheck out{complexify(a_n), o.truncate(n_trunc), {}, {}};
  out.m = columns_to_matrix(cols, out.target.dim());
  out.verdict = verify_algebra_map({&out.source, &out.target, out.m});
  return out;
}

IdempotentCheck idempotent_conjugacy_check(int n_trunc) {
  const GradedOrder& o = order_O();
  FinDimAlgebra o_n = o.truncate(n_trunc);
  GroupAction2 act{&o_n, involution_matrix(n_trunc)};
  FinDimAlgebra b = crossed_product(o_n, act);
  std::size_t n = o_n.dim();
  IdempotentCheck out;
  out.crossed_dim = b.dim();

  Vec star_e(2 * n), i_star_s(2 * n), sigma(2 * n), plus_e(2 * n);
  star_e[o.index_of(0, o.generator_index("E33"))] = Scalar(1);
  i_star_s[n + o.index_of(0, o.generator_index("iE33"))] = Scalar(1);
  plus_e[o.index_of(0, o.generator_index("E22"))] = Scalar(1);
  for (std::size_t k = 0; k < n; ++k) sigma[n + k] = o_n.unit()[k];
  Scalar half = Scalar::rational(1, 2);
  Vec ep = scale(half, add(star_e, i_star_s));
  Vec em = scale(half, sub(star_e, i_star_s));

  if (!(b.mul(ep, ep) == ep) || !(b.mul(em, em) == em)) {
    out.verdict = Verdict::fail("e*^+- are not idempotent");
    return out;
  }
  if (!is_zero(b.mul(ep, em)) || !is_zero(b.mul(em, ep))) {
    out.verdict = Verdict::fail("e*^+ and e*^- are not orthogonal");
    return out;
  }
  if (!(add(ep, em) == star_e)) {
    out.verdict = Verdict::fail("e*^+ + e*^- != e*");
    return out;
  }
  if (!(b.mul(sigma, ep) == b.mul(em, sigma)) || !(b.mul(sigma, em) == b.mul(ep, sigma))) {
    out.verdict = Verdict::fail("[s] e*^+- != e*^-+ [s]");
    return out;
  }
  CornerAlgebra corner = corner_algebra(b, add(ep, plus_e));
  out.corner_dim = corner.algebra.dim();
  SemisimpleSummary ss = semisimple_summary(corner.algebra);
  out.corner_semisimple_dim = ss.dim;
  out.corner_radical_dim = ss.radical_dim;
  std::size_t expected = order_A().rank() * n_trunc;
  if (out.corner_dim != expected) {
    out.verdict = Verdict::fail("corner algebra has dimension " + std::to_string(out.corner_dim) + ", expected " +
                                std::to_string(expected));
    return out;
  }
  if (ss.dim != 3) {
    out.verdict = Verdict::fail("corner algebra has semisimple quotient of dimension " + std::to_string(ss.dim));
    return out;
  }
  out.verdict = Verdict::pass();
  return out;
}

Verdict group_algebra_check() {
  FinDimAlgebra q = build_algebra({"1"}, Vec{Scalar(1)}, [](std::size_t, std::size_t) { return Vec{Scalar(1)}; });
  Matrix<Scalar> id = Matrix<Scalar>::identity(1);
  FinDimAlgebra g = crossed_product(q, GroupAction2{&q, id});
  // basis 1[e], 1[s]: [s]^2 = 1
  Vec s{Scalar(0), Scalar(1)};
  if (!(g.mul(s, s) == g.unit())) return Verdict::fail("[s]^2 != 1");
  Scalar half = Scalar::rational(1, 2);
  Vec p = scale(half, add(g.unit(), s));
  Vec m = scale(half, sub(g.unit(), s));
  if (!(g.mul(p, p) == p) || !(g.mul(m, m) == m)) return Verdict::fail("(1 +- [s])/2 not idempotent");
  if (!is_zero(g.mul(p, m))) return Verdict::fail("(1 +- [s])/2 not orthogonal");
  return Verdict::pass();
}

}  // namespace gelfand
