#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "gelfand/errors.hpp"

namespace gelfand {

/// Exact element a + b*sqrt(D) of Q or of a real quadratic field Q(sqrt(D)).
///
/// D is squarefree and > 1. Values with b = 0 are stored as plain rationals
/// (radicand 0), so a quadratic number with vanishing irrational part
/// compares equal to the corresponding rational. Arithmetic between two
/// irrational values with different radicands throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : a_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(mpq_class q) : a_(std::move(q)) { a_.canonicalize(); }  // NOLINT
  Scalar(mpq_class a, mpq_class b, long radicand);

  static Scalar rational(long num, long den);
  static Scalar sqrt_of(long radicand);  // sqrt(D) for squarefree D > 1

  /// Parses "p", "p/q", "p/q+r/s*sqrt(D)", "r/s*sqrt(D)", "-sqrt(D)".
  static Scalar parse(std::string_view text);
  std::string str() const;

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& irrational_part() const { return b_; }
  long radicand() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return d_ == 0 && a_ == 1; }
  bool is_rational() const { return d_ == 0; }
  int sign() const;

  Scalar inv() const;
  Scalar conjugate() const;  // a - b*sqrt(D)
  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  /// a^2 - D b^2
  mpq_class norm() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  void normalize();
  long joint_radicand(const Scalar& o) const;

  mpq_class a_;
  mpq_class b_;
  long d_ = 0;
};

/// Both roots of v^2 + p v + q for rational p, q with p^2 - 4q >= 0.
/// Roots are rational when the discriminant is a perfect square, otherwise
/// they live in Q(sqrt(D)) with D the squarefree part of the discriminant.
/// The first root is the larger one.
std::pair<Scalar, Scalar> quad_roots(const Scalar& p, const Scalar& q);

/// Squarefree part s of a positive integer n (n = s * m^2).
mpz_class squarefree_part(const mpz_class& n);

}  // namespace gelfand
