#include "gelfand/scalar.hpp"

#include <cctype>

namespace gelfand {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpq_class parse_rational(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) throw ParseError("malformed rational '" + std::string(s) + "'");
  mpz_class n{std::string(num)};
  mpz_class d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

Scalar::Scalar(mpq_class a, mpq_class b, long radicand) : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) != 0) {
    if (radicand <= 1) throw Error("radicand must be > 1");
    if (squarefree_part(mpz_class(radicand)) != radicand) throw Error("radicand must be squarefree");
  }
  normalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  return Scalar(mpq_class(mpz_class(num), mpz_class(den)));
}

Scalar Scalar::sqrt_of(long radicand) { return Scalar(0, 1, radicand); }

void Scalar::normalize() {
  if (sgn(b_) == 0) d_ = 0;
}

long Scalar::joint_radicand(const Scalar& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw FieldMismatch("cannot combine sqrt(" + std::to_string(d_) + ") and sqrt(" + std::to_string(o.d_) + ")");
}

Scalar Scalar::parse(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty scalar");
  auto p = s.find("sqrt(");
  if (p == std::string::npos) return Scalar(parse_rational(s));
  if (s.back() != ')') throw ParseError("malformed quadratic scalar '" + s + "'");
  std::string radicand = s.substr(p + 5, s.size() - p - 6);
  if (!is_digits(radicand)) throw ParseError("malformed radicand in '" + s + "'");
  long d = std::stol(radicand);
  std::string pre = s.substr(0, p);
  std::string coef;
  std::string rat;
  if (!pre.empty() && pre.back() == '*') {
    pre.pop_back();
    std::size_t split = 0;
    for (std::size_t i = pre.size(); i-- > 1;) {
      if (pre[i] == '+' || pre[i] == '-') {
        split = i;
        break;
      }
    }
    rat = pre.substr(0, split);
    coef = pre.substr(split);
  } else {
    // "sqrt(D)", "-sqrt(D)" or "a+sqrt(D)"
    std::size_t split = 0;
    for (std::size_t i = pre.size(); i-- > 0;) {
      if (pre[i] == '+' || pre[i] == '-') {
        split = i;
        break;
      }
    }
    if (!pre.empty() && (split + 1 != pre.size() || (pre[split] != '+' && pre[split] != '-'))) throw ParseError("malformed quadratic scalar '" + s + "'");
    rat = pre.substr(0, split);
    coef = pre.substr(split) + "1";
  }
  mpq_class a = rat.empty() ? mpq_class(0) : parse_rational(rat);
  mpq_class b = parse_rational(coef);
  mpz_class sf = squarefree_part(mpz_class(d));
  if (d <= 1 || sf != d) throw ParseError("radicand must be squarefree and > 1 in '" + s + "'");
  return Scalar(a, b, d);
}

std::string Scalar::str() const {
  if (d_ == 0) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) out = a_.get_str();
  if (sgn(b_) > 0 && !out.empty()) out += "+";
  out += b_.get_str() + "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

int Scalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  mpq_class lhs = a_ * a_;
  mpq_class rhs = b_ * b_ * d_;
  return lhs > rhs ? sa : sb;
}

mpq_class Scalar::norm() const { return a_ * a_ - b_ * b_ * d_; }

Scalar Scalar::inv() const {
  if (is_zero()) throw Error("division by zero");
  if (d_ == 0) return Scalar(mpq_class(1 / a_));
  mpq_class n = norm();
  return Scalar(mpq_class(a_ / n), mpq_class(-b_ / n), d_);
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.b_ = -r.b_;
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  long d = joint_radicand(o);
  a_ += o.a_;
  if (o.d_ != 0) b_ += o.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  long d = joint_radicand(o);
  a_ -= o.a_;
  if (o.d_ != 0) b_ -= o.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (d_ == 0 && o.d_ == 0) {
    a_ *= o.a_;
    return *this;
  }
  long d = joint_radicand(o);
  mpq_class a = a_ * o.a_ + b_ * o.b_ * d;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

mpz_class squarefree_part(const mpz_class& n) {
  if (n <= 0) throw Error("squarefree_part needs a positive integer");
  mpz_class rest = n;
  mpz_class out = 1;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  return out * rest;
}

std::pair<Scalar, Scalar> quad_roots(const Scalar& p, const Scalar& q) {
  if (!p.is_rational() || !q.is_rational()) throw Error("quad_roots needs rational coefficients");
  mpq_class pp = p.rational_part();
  mpq_class disc = pp * pp - 4 * q.rational_part();
  if (sgn(disc) < 0) throw Error("negative discriminant");
  // sqrt(n/d) = sqrt(n*d)/d
  mpz_class nd = disc.get_num() * disc.get_den();
  mpq_class half_minus_p = -pp / 2;
  if (sgn(nd) == 0) return {Scalar(half_minus_p), Scalar(half_minus_p)};
  if (mpz_perfect_square_p(nd.get_mpz_t())) {
    mpz_class r = sqrt(nd);
    mpq_class root(r, disc.get_den());
    root.canonicalize();
    return {Scalar(mpq_class(half_minus_p + root / 2)), Scalar(mpq_class(half_minus_p - root / 2))};
  }
  mpz_class sf = squarefree_part(nd);
  mpz_class m = sqrt(mpz_class(nd / sf));
  mpq_class coef(m, disc.get_den());
  coef.canonicalize();
  long d = sf.get_si();
  return {Scalar(half_minus_p, mpq_class(coef / 2), d), Scalar(half_minus_p, mpq_class(-coef / 2), d)};
}

}  // namespace gelfand
