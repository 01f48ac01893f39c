#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "walgebra/errors.hpp"
#include "walgebra/rational.hpp"

namespace walgebra {

/// Dense univariate polynomial over Q in the formal level parameter.
/// Coefficient i belongs to k^i; no trailing zeros are stored, so the zero
/// polynomial has an empty coefficient vector. Degrees stay small (< 50) in
/// every planned computation, which is why the representation is dense.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
  }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly variable() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
  }

  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  Poly operator+(const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
  }

  Poly operator*(const Rational& s) const {
    if (s == 0) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  /// Quotient and remainder; the divisor must be nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    q = Poly();
    r = a;
    const int db = b.degree();
    const Rational lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
      int shift = r.degree() - db;
      Rational f = r.leading() / lb;
      // r -= f * k^shift * b; q += f * k^shift
      if (q.c_.size() < static_cast<size_t>(shift + 1)) q.c_.resize(shift + 1, Rational(0));
      q.c_[shift] += f;
      for (int i = 0; i <= db; ++i) r.c_[i + shift] -= f * b.c_[i];
      r.trim();
    }
    q.trim();
  }

  /// Exact division; throws if the remainder is nonzero.
  Poly divide_exact(const Poly& b) const {
    Poly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw DivisionByZero("inexact polynomial division");
    return q;
  }

  /// Monic gcd.
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly q, r;
      divmod(a, b, q, r);
      a = b;
      b = r;
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());
  }

  Rational eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  std::string to_string(const std::string& var = "k") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mon;
    if (i == 0) {
      mon = a.get_str();
    } else {
      if (a != 1) mon = a.get_str() + "*";
      mon += var;
      if (i > 1) mon += "^" + std::to_string(i);
    }
    s += mon;
  }
  return s;
}

}  // namespace walgebra
