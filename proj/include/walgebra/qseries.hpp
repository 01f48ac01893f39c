#pragma once

#include <string>
#include <vector>

#include "walgebra/scalar.hpp"

namespace walgebra {

/// Truncated power series in q with an exact rational exponent offset:
/// q^offset * (c_0 + c_1 q + ... + c_N q^N).  Operations on two series
/// truncate to the minimum of the two truncation orders.
class QSeries {
 public:
  QSeries() : offset_(0), c_{Scalar(0)} {}
  QSeries(Rational offset, std::vector<Scalar> coeffs)
      : offset_(std::move(offset)), c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(Scalar(0));
  }

  static QSeries one(int order) {
    std::vector<Scalar> c(order + 1, Scalar(0));
    c[0] = Scalar(1);
    return QSeries(Rational(0), std::move(c));
  }

  /// 1 - q^j, truncated at the given order.
  static QSeries one_minus_qpow(int j, int order) {
    std::vector<Scalar> c(order + 1, Scalar(0));
    c[0] = Scalar(1);
    if (j <= order) c[j] = Scalar(-1);
    return QSeries(Rational(0), std::move(c));
  }

  /// prod_{j=1..order} (1 - q^j)^e truncated at q^order (factors with j >
  /// order cannot contribute).  e may be negative.
  static QSeries euler_product(int order, int e);

  /// prod over the given exponents d: (1 - q^d)^{-1}, truncated.  Used as the
  /// independent expansion oracle for graded-dimension checks.
  static QSeries inverse_product(const std::vector<int>& ds, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& offset() const { return offset_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const { return (i >= 0 && i <= order()) ? c_[i] : Scalar(0); }

  QSeries operator*(const QSeries& o) const {
    int n = std::min(order(), o.order());
    std::vector<Scalar> r(n + 1, Scalar(0));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n && j <= o.order(); ++j)
        if (i <= order()) r[i + j] += c_[i] * o.c_[j];
    return QSeries(offset_ + o.offset_, std::move(r));
  }

  QSeries operator+(const QSeries& o) const {
    if (offset_ != o.offset_) throw std::runtime_error("qseries offset mismatch in +");
    int n = std::min(order(), o.order());
    std::vector<Scalar> r(n + 1, Scalar(0));
    for (int i = 0; i <= n; ++i) r[i] = coeff(i) + o.coeff(i);
    return QSeries(offset_, std::move(r));
  }

  QSeries operator-(const QSeries& o) const {
    QSeries neg = o;
    for (auto& x : neg.c_) x = -x;
    return *this + neg;
  }

  QSeries scaled(const Scalar& s) const {
    QSeries r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Multiplicative inverse; requires a unit constant term.
  QSeries inverse() const {
    if (c_[0].is_zero()) throw DivisionByZero("series with zero constant term");
    std::vector<Scalar> r(c_.size(), Scalar(0));
    Scalar inv0 = Scalar(1) / c_[0];
    r[0] = inv0;
    for (int m = 1; m <= order(); ++m) {
      Scalar acc(0);
      for (int i = 1; i <= m; ++i) acc += coeff(i) * r[m - i];
      r[m] = -(inv0 * acc);
    }
    return QSeries(-offset_, std::move(r));
  }

  std::string to_string() const;

 private:
  Rational offset_;
  std::vector<Scalar> c_;
};

inline QSeries QSeries::euler_product(int order, int e) {
  QSeries base = QSeries::one(order);
  for (int j = 1; j <= order; ++j) {
    QSeries f = one_minus_qpow(j, order);
    int reps = e >= 0 ? e : -e;
    if (e < 0) f = f.inverse();
    for (int r = 0; r < reps; ++r) base = base * f;
  }
  return base;
}

inline QSeries QSeries::inverse_product(const std::vector<int>& ds, int order) {
  QSeries base = QSeries::one(order);
  for (int d : ds) {
    if (d > order) continue;
    base = base * one_minus_qpow(d, order).inverse();
  }
  return base;
}

inline std::string QSeries::to_string() const {
  std::string s = "q^(" + offset_.get_str() + ") * [";
  for (int i = 0; i <= order(); ++i) {
    if (i) s += ", ";
    s += c_[i].to_string();
  }
  return s + "]";
}

}  // namespace walgebra
