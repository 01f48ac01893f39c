#pragma once

#include <string>

#include "walgebra/poly.hpp"

namespace walgebra {

/// Element of Q(k): a reduced ratio of polynomials in the level parameter k.
/// Canonical form: gcd(num, den) = 1 and the denominator is monic, so equal
/// values compare equal componentwise. Plain rationals are the degree-zero
/// case.
class Scalar {
 public:
  Scalar() : num_(), den_(Rational(1)) {}
  Scalar(int v) : num_(Rational(v)), den_(Rational(1)) {}  // NOLINT: implicit by design
  Scalar(const Rational& v) : num_(v), den_(Rational(1)) {}
  Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  static Scalar k() { return Scalar(Poly::variable(), Poly(Rational(1))); }
  static Scalar from_poly(Poly p) { return Scalar(std::move(p), Poly(Rational(1))); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.degree() == 0 && num_.coeff(0) == 1 && den_.degree() == 0; }
  bool is_rational() const { return num_.degree() <= 0 && den_.degree() == 0; }

  Rational as_rational() const {
    assert(is_rational());
    return num_.coeff(0) / den_.coeff(0);
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Scalar operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Scalar operator-(const Scalar& o) const { return *this + (-o); }

  Scalar operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    return Scalar(num_ * o.num_, den_ * o.den_);
  }

  Scalar operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero("scalar division by zero");
    return Scalar(num_ * o.den_, den_ * o.num_);
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// Evaluate at a rational level. Throws DivisionByZero at a pole.
  Rational eval(const Rational& kval) const {
    Rational d = den_.eval(kval);
    if (d == 0) throw DivisionByZero("evaluation at a pole");
    return num_.eval(kval) / d;
  }

  /// Serialized as "p(k)/q(k)" with integer coefficients (content cleared);
  /// the "/q(k)" part is omitted for polynomials.
  std::string to_string() const;

  int max_degree() const { return std::max(num_.degree(), den_.degree()); }

 private:
  void reduce() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(Rational(1));
      return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
    Rational lead = den_.leading();
    if (lead != 1) {
      Rational inv = Rational(1) / lead;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly num_, den_;
};

inline Scalar operator*(const Rational& a, const Scalar& b) { return Scalar(a) * b; }

inline std::string Scalar::to_string() const {
  // Clear coefficient denominators so both parts print with integer
  // coefficients; the printed pair is still reduced.
  Integer l = 1;
  for (const auto& c : num_.coeffs()) l = lcm(l, c.get_den());
  for (const auto& c : den_.coeffs()) l = lcm(l, c.get_den());
  Poly n = num_ * Rational(l);
  Poly d = den_ * Rational(l);
  Integer g = 0;
  for (const auto& c : n.coeffs()) g = gcd(g, c.get_num());
  for (const auto& c : d.coeffs()) g = gcd(g, c.get_num());
  if (g > 1) {
    Rational inv(Integer(1), g);
    inv.canonicalize();
    n = n * inv;
    d = d * inv;
  }
  if (d.degree() == 0 && d.coeff(0) == 1) return n.degree() > 0 ? "(" + n.to_string() + ")" : n.to_string();
  return "(" + n.to_string() + ")/(" + d.to_string() + ")";
}

}  // namespace walgebra
