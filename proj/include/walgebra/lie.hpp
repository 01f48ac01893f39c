#pragma once

#include <map>
#include <string>
#include <vector>

#include "walgebra/linalg.hpp"
#include "walgebra/rational.hpp"
#include "walgebra/scalar.hpp"

namespace walgebra {

/// Square matrix over Scalar with basic exact operations.
class SqMat {
 public:
  SqMat() : n_(0) {}
  explicit SqMat(int n) : n_(n), a_(n, std::vector<Scalar>(n, Scalar(0))) {}

  int n() const { return n_; }
  Scalar& at(int i, int j) { return a_[i][j]; }
  const Scalar& at(int i, int j) const { return a_[i][j]; }

  static SqMat unit(int n, int i, int j) {
    SqMat m(n);
    m.at(i, j) = Scalar(1);
    return m;
  }
  static SqMat identity(int n) {
    SqMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
  }

  SqMat operator*(const SqMat& o) const {
    SqMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int l = 0; l < n_; ++l) {
        if (a_[i][l].is_zero()) continue;
        for (int j = 0; j < n_; ++j) r.a_[i][j] += a_[i][l] * o.a_[l][j];
      }
    return r;
  }
  SqMat operator+(const SqMat& o) const {
    SqMat r = *this;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.a_[i][j] += o.a_[i][j];
    return r;
  }
  SqMat operator-(const SqMat& o) const {
    SqMat r = *this;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.a_[i][j] -= o.a_[i][j];
    return r;
  }
  SqMat operator*(const Scalar& s) const {
    SqMat r = *this;
    for (auto& row : r.a_)
      for (auto& x : row) x *= s;
    return r;
  }
  bool operator==(const SqMat& o) const { return a_ == o.a_; }

  SqMat bracket(const SqMat& o) const { return *this * o - o * *this; }

  Scalar trace() const {
    Scalar t(0);
    for (int i = 0; i < n_; ++i) t += a_[i][i];
    return t;
  }

  /// Exact inverse via Gauss-Jordan; throws on a singular matrix.
  SqMat inverse() const;

 private:
  int n_;
  std::vector<std::vector<Scalar>> a_;
};

/// Finite-dimensional Lie data of gl_n: matrix-unit basis, positive roots
/// with heights, the principal sl2 triple, and the bilinear forms used
/// throughout the reduction.
struct LieData {
  int n = 0;

  /// Positive roots of gl_n as index pairs (i, j), i < j (0-based), ordered
  /// by height then lexicographically.
  std::vector<std::pair<int, int>> pos_roots;

  SqMat e, h, f;  // principal triple: e = sum i(n-i) e_{i,i+1}, f = subdiagonal 1s

  explicit LieData(int n);

  int num_pos_roots() const { return static_cast<int>(pos_roots.size()); }
  int height(int alpha) const { return pos_roots[alpha].second - pos_roots[alpha].first; }

  /// Index of the positive root (i, j); -1 when out of range.
  int root_index(int i, int j) const;

  /// Structure constant of n: [x_a, x_b] = c * x_g for positive roots; the
  /// bracket of two root vectors e_{ij} e_{kl} is either 0 or another unit.
  /// Returns pairs (gamma, coeff) for [x_alpha, x_beta].
  std::vector<std::pair<int, Rational>> n_bracket(int alpha, int beta) const;

  /// chi(x) = (f | x) = tr(f x) on n; equals 1 on simple root vectors.
  Rational chi(int alpha) const { return height(alpha) == 1 ? Rational(1) : Rational(0); }

  // Bilinear forms evaluated on arbitrary matrices.
  static Scalar trace_form(const SqMat& x, const SqMat& y) { return (x * y).trace(); }
  Scalar killing_gl(const SqMat& x, const SqMat& y) const {
    return Scalar(Rational(2 * n)) * trace_form(x, y) - Scalar(Rational(2)) * x.trace() * y.trace();
  }
  /// kappa_0 = (1/2n) kappa_gl; restricts to the trace form on sl_n and is
  /// normalized so the highest root has square length 2.
  Scalar kappa0(const SqMat& x, const SqMat& y) const {
    return trace_form(x, y) - Scalar(Rational(1, n)) * x.trace() * y.trace();
  }
  /// kappa_b(x, y) = kappa(x, y) + (1/2) kappa_gl(x, y) for the chosen form
  /// kappa = k * trace (symbolic level).
  Scalar kappa_b_ktrace(const SqMat& x, const SqMat& y) const {
    return Scalar::k() * trace_form(x, y) + Scalar(Rational(1, 2)) * killing_gl(x, y);
  }
};

/// Characteristic polynomial det(tI - A), returned as coefficients c with
/// det(tI - A) = t^n + c[0] t^{n-1} + ... + c[n-1]; computed by the
/// Faddeev-LeVerrier recursion (division-free up to integer divisions).
std::vector<Scalar> char_poly(const SqMat& a);

/// Companion matrix of a_1 + a_2 t + ... + a_n t^n + ... (monic), with the
/// a_i in the last column (negated).
SqMat companion_matrix(const std::vector<Scalar>& a);

/// p_1(A), ..., p_n(A): the characteristic coefficients below the leading
/// term in the fixed convention det(tI-A) = t^n + sum_i p_i(A) t^{n-i}.
std::vector<Scalar> invariant_polys(int n, const SqMat& a);

/// Sparse multivariate polynomial over Q used for the symbolic slice
/// restriction; the exponent vector indexes h_1..h_n.
using Multi = std::map<std::vector<int>, Rational>;

Multi multi_add(const Multi& a, const Multi& b);
Multi multi_mul(const Multi& a, const Multi& b);
Multi multi_scale(const Multi& a, const Rational& c);
std::string multi_to_string(const Multi& m, const std::string& stem = "h");

/// p_i restricted to f + diag(h_1..h_n): expands det(tI - (f + diag)) in the
/// polynomial ring Q[h_1..h_n][t] and extracts the t^{n-i} coefficient.
Multi kostant_slice_restriction(int n, int i);

/// Elementary symmetric polynomial e_i(h_1..h_n), the expected value of the
/// slice restriction up to sign.
Multi elementary_symmetric(int n, int i);

struct KostantReport {
  bool in_f_plus_b = true;
  bool invariants_match = true;
  bool slice_points_separated = true;
  int samples = 0;
  bool ok() const { return in_f_plus_b && invariants_match && slice_points_separated; }
};

/// Random conjugation check of the slice: Ad(g)x stays in f + b for
/// unipotent upper-triangular g, the n invariants agree between x and
/// Ad(g)x, and distinct slice points have distinct invariant vectors.
KostantReport verify_kostant_freeness(int n, int samples, std::uint64_t seed);

/// dim(a + [g, f]) == n^2, the transversality rank computation.
bool check_transversality(int n);

/// The contracting C^*-action t^2 Ad(gamma(t)) fixes f and scales every
/// basis vector of b by a strictly positive power of t.
bool check_cstar_contraction(int n);

/// chi([n, n]) = 0 on all brackets of basis root vectors.
bool check_chi_character(int n);

}  // namespace walgebra
