#pragma once

#include <cstddef>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "gelfand/scalar.hpp"

namespace gelfand {

/// Valuation of the zero series.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Element of R/t^N R with R = K[[t]], K = Q or Q(sqrt D).
///
/// A default-constructed series has order 0 and acts as a zero of
/// unspecified order: adding it to a series of order N yields that series.
/// Any other combination of different orders throws.
class Series {
 public:
  Series() = default;
  explicit Series(std::size_t order) : c_(order) {}
  Series(std::size_t order, Scalar constant) : c_(order) {
    if (order > 0) c_[0] = std::move(constant);
  }
  explicit Series(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {}

  static Series zero(std::size_t order) { return Series(order); }
  static Series one(std::size_t order) { return Series(order, Scalar(1)); }
  /// c * t^k mod t^order
  static Series monomial(const Scalar& c, int k, std::size_t order);

  std::size_t order() const { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar constant() const { return c_.empty() ? Scalar() : c_[0]; }

  int valuation() const;
  bool is_zero() const { return valuation() == kInfinity; }
  bool is_unit() const { return !c_.empty() && !c_[0].is_zero(); }

  Series inverse() const;          // throws NotAUnit
  Series shift(int k) const;       // times t^k, truncated
  Series div_t(int k) const;       // exact division by t^k, zero-filled on top
  Series with_order(std::size_t n) const;

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  Series& operator*=(const Scalar& s);

  friend Series operator+(Series x, const Series& y) { return x += y; }
  friend Series operator-(Series x, const Series& y) { return x -= y; }
  friend Series operator*(Series x, const Series& y) { return x *= y; }
  friend Series operator*(Series x, const Scalar& s) { return x *= s; }
  friend Series operator*(const Scalar& s, Series x) { return x *= s; }
  friend bool operator==(const Series& x, const Series& y);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.str(); }

 private:
  std::size_t joint_order(const Series& o) const;
  std::vector<Scalar> c_;
};

Series series_invert(const Series& s);

}  // namespace gelfand
