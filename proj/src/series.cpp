#include "gelfand/series.hpp"

#include <sstream>

namespace gelfand {

Series Series::monomial(const Scalar& c, int k, std::size_t order) {
  Series s(order);
  if (k >= 0 && static_cast<std::size_t>(k) < order) s.c_[k] = c;
  return s;
}

int Series::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return kInfinity;
}

std::size_t Series::joint_order(const Series& o) const {
  if (c_.empty()) return o.c_.size();
  if (o.c_.empty() || o.c_.size() == c_.size()) return c_.size();
  throw Error("series of different truncation orders " + std::to_string(c_.size()) + " and " +
              std::to_string(o.c_.size()));
}

Series Series::inverse() const {
  if (!is_unit()) throw NotAUnit();
  std::size_t n = c_.size();
  std::vector<Scalar> r(n);
  Scalar a0inv = c_[0].inv();
  r[0] = a0inv;
  for (std::size_t k = 1; k < n; ++k) {
    Scalar acc;
    for (std::size_t j = 1; j <= k; ++j)
      if (!c_[j].is_zero()) acc += c_[j] * r[k - j];
    r[k] = -acc * a0inv;
  }
  return Series(std::move(r));
}

Series series_invert(const Series& s) { return s.inverse(); }

Series Series::shift(int k) const {
  if (k < 0) return div_t(-k);
  Series r(c_.size());
  for (std::size_t i = 0; i + k < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

Series Series::div_t(int k) const {
  if (k < 0) return shift(-k);
  for (std::size_t i = 0; i < c_.size() && i < static_cast<std::size_t>(k); ++i)
    if (!c_[i].is_zero()) throw Error("series not divisible by t^" + std::to_string(k));
  Series r(c_.size());
  for (std::size_t i = k; i < c_.size(); ++i) r.c_[i - k] = c_[i];
  return r;
}

Series Series::with_order(std::size_t n) const {
  Series r(n);
  for (std::size_t i = 0; i < n && i < c_.size(); ++i) r.c_[i] = c_[i];
  return r;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Series& Series::operator+=(const Series& o) {
  std::size_t n = joint_order(o);
  c_.resize(n);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  std::size_t n = joint_order(o);
  c_.resize(n);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Series& Series::operator*=(const Series& o) {
  std::size_t n = joint_order(o);
  if (c_.empty() || o.c_.empty()) {
    c_.assign(n, Scalar());
    return *this;
  }
  std::vector<Scalar> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  return *this;
}

Series& Series::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

bool operator==(const Series& x, const Series& y) {
  std::size_t n = std::max(x.c_.size(), y.c_.size());
  for (std::size_t i = 0; i < n; ++i) {
    Scalar a = i < x.c_.size() ? x.c_[i] : Scalar();
    Scalar b = i < y.c_.size() ? y.c_[i] : Scalar();
    if (!(a == b)) return false;
  }
  return true;
}

std::string Series::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i] << ")";
    if (i == 1) os << "t";
    if (i > 1) os << "t^" << i;
  }
  if (first) os << "0";
  os << " + O(t^" << c_.size() << ")";
  return os.str();
}

}  // namespace gelfand
