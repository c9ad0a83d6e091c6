#pragma once

#include <ostream>
#include <string>

#include "gelfand/scalar.hpp"

namespace gelfand {

/// re + i*im with re, im in Q or Q(sqrt D).
class Complex {
 public:
  Complex() = default;
  Complex(int v) : re_(v) {}     // NOLINT(google-explicit-constructor)
  Complex(long v) : re_(v) {}    // NOLINT(google-explicit-constructor)
  Complex(Scalar re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Complex(Scalar re, Scalar im) : re_(std::move(re)), im_(std::move(im)) {}

  static Complex i() { return Complex(Scalar(0), Scalar(1)); }

  const Scalar& re() const { return re_; }
  const Scalar& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Complex conj() const { return Complex(re_, -im_); }
  Scalar norm() const { return re_ * re_ + im_ * im_; }
  Complex inv() const {
    Scalar n = norm();
    if (n.is_zero()) throw Error("division by zero");
    Scalar ni = n.inv();
    return Complex(re_ * ni, -im_ * ni);
  }

  Complex operator-() const { return Complex(-re_, -im_); }
  Complex& operator+=(const Complex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Scalar r = re_ * o.re_ - im_ * o.im_;
    Scalar m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  Complex& operator/=(const Complex& o) { return *this *= o.inv(); }

  friend Complex operator+(Complex x, const Complex& y) { return x += y; }
  friend Complex operator-(Complex x, const Complex& y) { return x -= y; }
  friend Complex operator*(Complex x, const Complex& y) { return x *= y; }
  friend Complex operator/(Complex x, const Complex& y) { return x /= y; }
  friend bool operator==(const Complex& x, const Complex& y) { return x.re_ == y.re_ && x.im_ == y.im_; }

  std::string str() const {
    if (im_.is_zero()) return re_.str();
    return "(" + re_.str() + ")+(" + im_.str() + ")*i";
  }
  friend std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << z.str(); }

 private:
  Scalar re_;
  Scalar im_;
};

}  // namespace gelfand
