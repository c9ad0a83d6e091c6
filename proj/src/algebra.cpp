#include "gelfand/algebra.hpp"

#include <sstream>

#include "gelfand/kernels.hpp"

namespace gelfand {

FinDimAlgebra::FinDimAlgebra(std::vector<std::string> labels, Vec unit, ProductTable table)
    : labels_(std::move(labels)), unit_(std::move(unit)), table_(std::move(table)) {
  std::size_t n = labels_.size();
  if (unit_.size() != n || table_.size() != n * n) throw ShapeError("inconsistent algebra data");
  traces_.assign(n, Scalar());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : table_[i * n + j])
        if (t.index == j) traces_[i] += t.coeff;
}

FinDimAlgebra build_algebra(std::vector<std::string> labels, Vec unit, const ProductFn& product) {
  std::size_t n = labels.size();
  return FinDimAlgebra(std::move(labels), std::move(unit), kernels::build_table_parallel(n, product));
}

Vec FinDimAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim());
  v[i] = Scalar(1);
  return v;
}

Vec FinDimAlgebra::mul(const Vec& a, const Vec& b) const {
  std::size_t n = dim();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      for (const auto& t : table_[i * n + j]) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

Matrix<Scalar> FinDimAlgebra::left_matrix(const Vec& a) const {
  std::size_t n = dim();
  Matrix<Scalar> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : table_[i * n + j]) m(t.index, j) += a[i] * t.coeff;
  }
  return m;
}

Matrix<Scalar> FinDimAlgebra::right_matrix(const Vec& a) const {
  std::size_t n = dim();
  Matrix<Scalar> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : table_[j * n + i]) m(t.index, j) += a[i] * t.coeff;
  }
  return m;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& s, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x *= s;
  return r;
}

bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Term> to_terms(const Vec& v) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) t.push_back({i, v[i]});
  return t;
}

Verdict check_associative(const FinDimAlgebra& alg) {
  auto bad = kernels::associativity_defect_parallel(alg);
  if (!bad) return Verdict::pass();
  const auto& l = alg.labels();
  return Verdict::fail("associativity fails on (" + l[(*bad)[0]] + ", " + l[(*bad)[1]] + ", " + l[(*bad)[2]] + ")");
}

Verdict check_unit(const FinDimAlgebra& alg) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    Vec b = alg.basis_vector(i);
    if (!(alg.mul(alg.unit(), b) == b) || !(alg.mul(b, alg.unit()) == b))
      return Verdict::fail("unit axiom fails on " + alg.labels()[i]);
  }
  return Verdict::pass();
}

Subspace<Scalar> span(std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace<Scalar> s(ambient);
  for (const auto& v : vectors) s.add(v);
  return s;
}

Matrix<Scalar> trace_form(const FinDimAlgebra& alg) { return kernels::trace_gram_parallel(alg); }

Subspace<Scalar> radical(const FinDimAlgebra& alg) { return span(alg.dim(), kernel(trace_form(alg))); }

Subspace<Scalar> center(const FinDimAlgebra& alg) {
  std::size_t n = alg.dim();
  Matrix<Scalar> eqs(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec b = alg.basis_vector(i);
    Matrix<Scalar> d = alg.left_matrix(b) - alg.right_matrix(b);
    eqs.set_block(i * n, 0, d);
  }
  return span(n, kernel(eqs));
}

FinDimAlgebra quotient(const FinDimAlgebra& alg, const Subspace<Scalar>& ideal) {
  std::vector<std::size_t> free = ideal.free_columns();
  std::size_t q = free.size();
  auto project = [&](const Vec& v) {
    Vec r = ideal.reduce(v);
    Vec out(q);
    for (std::size_t a = 0; a < q; ++a) out[a] = r[free[a]];
    return out;
  };
  std::vector<std::string> labels;
  for (auto f : free) labels.push_back(alg.labels()[f]);
  return build_algebra(std::move(labels), project(alg.unit()), [&](std::size_t a, std::size_t b) {
    return project(alg.mul(alg.basis_vector(free[a]), alg.basis_vector(free[b])));
  });
}

FinDimAlgebra subalgebra(const FinDimAlgebra& alg, const Subspace<Scalar>& sub, std::optional<Vec> unit) {
  const auto& basis = sub.basis();
  Vec u = unit ? *unit : alg.unit();
  if (!sub.contains(u)) throw Error("subalgebra does not contain its unit");
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < basis.size(); ++a) labels.push_back("s" + std::to_string(a));
  return build_algebra(std::move(labels), sub.coords(u), [&](std::size_t a, std::size_t b) {
    Vec p = alg.mul(basis[a], basis[b]);
    if (!sub.contains(p)) throw Error("subspace is not closed under multiplication");
    return sub.coords(p);
  });
}

Vec AlgebraMap::apply(const Vec& x) const {
  Vec y(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) y[i] += m(i, j) * x[j];
  }
  return y;
}

Verdict verify_algebra_map(const AlgebraMap& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (f.m.rows() != t.dim() || f.m.cols() != s.dim())
    return Verdict::fail("map has shape " + f.m.shape() + " but algebras have dims " + std::to_string(s.dim()) +
                         " -> " + std::to_string(t.dim()));
  if (!(f.apply(s.unit()) == t.unit())) return Verdict::fail("unit is not preserved");
  std::vector<Vec> img(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) img[i] = f.apply(s.basis_vector(i));
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      Vec prod(s.dim());
      for (const auto& term : s.product(i, j)) prod[term.index] += term.coeff;
      if (!(f.apply(prod) == t.mul(img[i], img[j])))
        return Verdict::fail("not multiplicative on (" + s.labels()[i] + ", " + s.labels()[j] + ")");
    }
  if (s.dim() != t.dim() || rank(f.m) != s.dim()) return Verdict::fail("map is not bijective");
  return Verdict::pass();
}

Verdict verify_action(const GroupAction2& act) {
  const auto& a = *act.algebra;
  std::size_t n = a.dim();
  if (act.sigma.rows() != n || act.sigma.cols() != n) return Verdict::fail("involution has wrong shape");
  if (!(act.sigma * act.sigma == Matrix<Scalar>::identity(n))) return Verdict::fail("sigma^2 != 1");
  AlgebraMap f{&a, &a, act.sigma};
  return verify_algebra_map(f);
}

FinDimAlgebra crossed_product(const FinDimAlgebra& gamma, const GroupAction2& act) {
  Verdict v = verify_action(act);
  if (!v) throw Error("not a group action: " + v.message);
  std::size_t n = gamma.dim();
  std::vector<Vec> phi(n);
  for (std::size_t j = 0; j < n; ++j) {
    phi[j] = Vec(n);
    for (std::size_t i = 0; i < n; ++i) phi[j][i] = act.sigma(i, j);
  }
  std::vector<std::string> labels;
  for (const auto& l : gamma.labels()) labels.push_back(l + "[e]");
  for (const auto& l : gamma.labels()) labels.push_back(l + "[s]");
  Vec unit(2 * n);
  for (std::size_t i = 0; i < n; ++i) unit[i] = gamma.unit()[i];
  return build_algebra(std::move(labels), std::move(unit), [&](std::size_t a, std::size_t b) {
    std::size_t i = a % n, f = a / n;
    std::size_t j = b % n, g = b / n;
    Vec bj = f == 0 ? gamma.basis_vector(j) : phi[j];
    Vec p = gamma.mul(gamma.basis_vector(i), bj);
    Vec out(2 * n);
    std::size_t off = (f ^ g) * n;
    for (std::size_t k = 0; k < n; ++k) out[off + k] = p[k];
    return out;
  });
}

InvariantSubalgebra invariant_subalgebra(const GroupAction2& act) {
  std::size_t n = act.algebra->dim();
  Subspace<Scalar> fixed = span(n, kernel(act.sigma - Matrix<Scalar>::identity(n)));
  FinDimAlgebra alg = subalgebra(*act.algebra, fixed);
  return {std::move(alg), std::move(fixed)};
}

CornerAlgebra corner_algebra(const FinDimAlgebra& alg, const Vec& eps) {
  if (!(alg.mul(eps, eps) == eps)) throw Error("corner: element is not idempotent");
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < alg.dim(); ++i) vs.push_back(alg.mul(alg.mul(eps, alg.basis_vector(i)), eps));
  Subspace<Scalar> sub = span(alg.dim(), vs);
  FinDimAlgebra c = subalgebra(alg, sub, eps);
  return {std::move(c), std::move(sub)};
}

Vec minimal_polynomial(const FinDimAlgebra& alg, const Vec& x) {
  std::vector<Vec> powers{alg.unit()};
  Subspace<Scalar> s(alg.dim());
  s.add(alg.unit());
  while (true) {
    Vec next = alg.mul(powers.back(), x);
    if (!s.contains(next)) {
      s.add(next);
      powers.push_back(std::move(next));
      continue;
    }
    std::size_t k = powers.size();
    Matrix<Scalar> a(alg.dim(), k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < alg.dim(); ++i) a(i, j) = powers[j][i];
    auto c = solve(a, column(next));
    Vec poly(k + 1);
    for (std::size_t j = 0; j < k; ++j) poly[j] = -(*c)(j, 0);
    poly[k] = Scalar(1);
    return poly;
  }
}

Signature signature(Matrix<Scalar> g) {
  std::size_t n = g.rows();
  Signature sig;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      if (!done[i] && !g(i, i).is_zero()) p = i;
    if (p == n) {
      // all remaining diagonal entries vanish: fold an off-diagonal entry in
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && !g(i, j).is_zero()) {
            a = i;
            b = j;
            break;
          }
      if (a == n) break;
      for (std::size_t k = 0; k < n; ++k) g(a, k) += g(b, k);
      for (std::size_t k = 0; k < n; ++k) g(k, a) += g(k, b);
      p = a;
    }
    Scalar piv = g(p, p);
    (piv.sign() > 0 ? sig.pos : sig.neg)++;
    done[p] = true;
    Scalar inv = piv.inv();
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || g(i, p).is_zero()) continue;
      Scalar f = g(i, p) * inv;
      for (std::size_t k = 0; k < n; ++k) g(i, k) -= f * g(p, k);
      for (std::size_t k = 0; k < n; ++k) g(k, i) -= f * g(k, p);
    }
  }
  sig.zero = static_cast<int>(n) - sig.pos - sig.neg;
  return sig;
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes:
      return "yes";
    case Tri::no:
      return "no";
    default:
      return "indeterminate";
  }
}

namespace {

bool is_rational_square(const Scalar& s, Scalar& root) {
  if (!s.is_rational() || s.sign() < 0) return false;
  const mpq_class& q = s.rational_part();
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpq_class r(sqrt(n), sqrt(d));
  r.canonicalize();
  root = Scalar(r);
  return true;
}

}  // namespace

DivisionVerdict is_division(const FinDimAlgebra& alg) {
  DivisionVerdict out;
  std::size_t n = alg.dim();
  if (n == 0) {
    out.reason = "zero algebra";
    return out;
  }
  Subspace<Scalar> rad = radical(alg);
  if (rad.dim() > 0) {
    out.reason = "nonzero radical of dimension " + std::to_string(rad.dim());
    return out;
  }
  if (n == 1) {
    out.division = Tri::yes;
    out.real_type = "R";
    out.reason = "one-dimensional";
    return out;
  }
  Signature sig = signature(trace_form(alg));
  if (n == 2) {
    if (sig.pos == 1 && sig.neg == 1) {
      out.division = Tri::yes;
      out.real_type = "C";
      out.reason = "two-dimensional with indefinite trace form";
      // an element outside the scalars, completed to a square root of -1
      for (std::size_t i = 0; i < n; ++i) {
        Vec x = alg.basis_vector(i);
        Vec poly = minimal_polynomial(alg, x);
        if (poly.size() != 3) continue;
        Scalar p = poly[1], q = poly[0];
        Vec j0 = add(x, scale(p / Scalar(2), alg.unit()));
        Scalar c = q - p * p / Scalar(4);
        Scalar root;
        if (is_rational_square(c, root)) out.imaginary_unit = scale(root.inv(), j0);
        break;
      }
    } else {
      out.reason = "splits as R x R (trace form positive definite)";
    }
    return out;
  }
  if (n == 4) {
    std::size_t zdim = center(alg).dim();
    if (zdim == 1 && sig.pos == 1 && sig.neg == 3) {
      out.division = Tri::yes;
      out.real_type = "H";
      out.reason = "central of dimension 4 with trace form of signature (1,3)";
    } else {
      out.reason = zdim == 1 ? "split quaternion algebra M2(R)" : "center of dimension " + std::to_string(zdim);
    }
    return out;
  }
  out.reason = "semisimple of dimension " + std::to_string(n) + " is not R, C or H";
  return out;
}

SemisimpleSummary semisimple_summary(const FinDimAlgebra& alg) {
  SemisimpleSummary s;
  Subspace<Scalar> rad = radical(alg);
  s.radical_dim = rad.dim();
  FinDimAlgebra q = quotient(alg, rad);
  s.dim = q.dim();
  s.center_dim = center(q).dim();
  return s;
}

}  // namespace gelfand
