#pragma once

#include <map>
#include <string>
#include <vector>

#include "walgebra/rational.hpp"
#include "walgebra/scalar.hpp"

namespace walgebra {

/// One creation mode a_{(-depth)} of generator `gen`, depth >= 1.
struct Mode {
  int gen = 0;
  int depth = 1;

  bool operator==(const Mode& o) const { return gen == o.gen && depth == o.depth; }
  /// Canonical ordering of a monomial: generator index ascending, then mode
  /// depth descending (deepest modes leftmost within a generator block).
  bool canonical_le(const Mode& o) const {
    if (gen != o.gen) return gen < o.gen;
    return depth >= o.depth;
  }
};

/// PBW word m_1 m_2 ... m_r applied to the vacuum; canonical iff each
/// adjacent pair satisfies canonical_le and no odd mode repeats.
using Monomial = std::vector<Mode>;

inline bool monomial_less(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].gen != b[i].gen) return a[i].gen < b[i].gen;
    if (a[i].depth != b[i].depth) return a[i].depth < b[i].depth;
  }
  return false;
}

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b); }
};

/// Finite linear combination of canonical monomials over Q(k). The zero
/// state has empty support.
class State {
 public:
  using Map = std::map<Monomial, Scalar, MonomialLess>;

  State() = default;
  static State vacuum(const Scalar& c = Scalar(1)) {
    State s;
    s.add(Monomial{}, c);
    return s;
  }
  static State monomial(Monomial m, const Scalar& c = Scalar(1)) {
    State s;
    s.add(std::move(m), c);
    return s;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }

  void add(Monomial m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_state(const State& o, const Scalar& c = Scalar(1)) {
    if (c.is_zero()) return;
    for (const auto& [m, x] : o.terms_) add(m, x * c);
  }

  State operator+(const State& o) const {
    State r = *this;
    r.add_state(o);
    return r;
  }
  State operator-(const State& o) const {
    State r = *this;
    r.add_state(o, Scalar(-1));
    return r;
  }
  State operator*(const Scalar& c) const {
    State r;
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
    return r;
  }
  State operator-() const { return *this * Scalar(-1); }

  bool operator==(const State& o) const { return terms_ == o.terms_; }
  bool operator!=(const State& o) const { return !(*this == o); }

  /// Coefficient of the vacuum monomial.
  Scalar vacuum_coeff() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Scalar(0) : it->second;
  }

 private:
  Map terms_;
};

/// Polynomial in lambda with State coefficients; c_[j] is the true
/// coefficient of lambda^j (so the j-th product a_(j) b equals j! * c_[j]).
class LambdaPoly {
 public:
  LambdaPoly() = default;
  explicit LambdaPoly(std::vector<State> coeffs) : c_(std::move(coeffs)) { trim(); }

  static LambdaPoly from_products(std::vector<State> products) {
    // products[j] = a_(j) b; divide by j!.
    for (size_t j = 0; j < products.size(); ++j)
      products[j] = products[j] * Scalar(Rational(Integer(1), factorial(static_cast<int>(j))));
    return LambdaPoly(std::move(products));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  State coeff(int j) const { return (j >= 0 && j <= degree()) ? c_[j] : State(); }
  /// The j-th product a_(j) b = j! * coeff(j).
  State product(int j) const { return coeff(j) * Scalar(Rational(factorial(j))); }

  void set_coeff(int j, const State& s) {
    if (static_cast<int>(c_.size()) <= j) c_.resize(j + 1);
    c_[j] = s;
    trim();
  }

  LambdaPoly operator+(const LambdaPoly& o) const {
    std::vector<State> r(std::max(c_.size(), o.c_.size()));
    for (size_t j = 0; j < r.size(); ++j) r[j] = coeff(static_cast<int>(j)) + o.coeff(static_cast<int>(j));
    return LambdaPoly(std::move(r));
  }
  LambdaPoly operator-(const LambdaPoly& o) const { return *this + (o * Scalar(-1)); }
  LambdaPoly operator*(const Scalar& s) const {
    std::vector<State> r = c_;
    for (auto& x : r) x = x * s;
    return LambdaPoly(std::move(r));
  }
  /// Multiply by lambda^p.
  LambdaPoly shifted(int p) const {
    std::vector<State> r(c_.size() + p);
    for (size_t j = 0; j < c_.size(); ++j) r[j + p] = c_[j];
    return LambdaPoly(std::move(r));
  }

  bool operator==(const LambdaPoly& o) const {
    int d = std::max(degree(), o.degree());
    for (int j = 0; j <= d; ++j)
      if (!(coeff(j) == o.coeff(j))) return false;
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<State> c_;
};

/// Polynomial in two formal variables (lambda, mu) with State coefficients;
/// used by the Jacobi identity check.
class LambdaMuPoly {
 public:
  State& at(int i, int j) { return c_[{i, j}]; }
  State get(int i, int j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? State() : it->second;
  }
  void add(int i, int j, const State& s) {
    auto& slot = c_[{i, j}];
    slot = slot + s;
    if (slot.is_zero()) c_.erase({i, j});
  }
  bool operator==(const LambdaMuPoly& o) const {
    for (const auto& [key, s] : c_)
      if (!(o.get(key.first, key.second) == s)) return false;
    for (const auto& [key, s] : o.c_)
      if (!(get(key.first, key.second) == s)) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& [key, s] : c_)
      if (!s.is_zero()) return false;
    return true;
  }
  const std::map<std::pair<int, int>, State>& terms() const { return c_; }

 private:
  std::map<std::pair<int, int>, State> c_;
};

}  // namespace walgebra
