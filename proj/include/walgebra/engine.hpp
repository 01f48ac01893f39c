#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "walgebra/presentation.hpp"

namespace walgebra {

struct AxiomReport {
  int trials = 0;
  int failures = 0;
  std::uint64_t seed = 0;
  std::string first_failure;  // offending triple, printed
  bool ok() const { return failures == 0; }
};

/// Lambda-bracket calculus over a presentation. States are PBW monomials of
/// creation modes on the vacuum; every product is computed by commuting
/// modes into canonical position with the bracket table, plus the usual
/// expansion rule for modes of composite states.
class VertexAlgebra {
 public:
  explicit VertexAlgebra(Presentation p) : p_(std::move(p)) {
    p_.refresh_bounds();
    p_.validate();
  }

  const Presentation& pres() const { return p_; }

  State gen_state(int g) const { return State::monomial({Mode{g, 1}}); }
  State gen_state(const std::string& name) const { return gen_state(p_.gen_index(name)); }

  /// a_{(m)} v for a single generator mode.
  State apply_gen(int g, int m, const State& v) const;

  /// s_{(m)} v for an arbitrary state s (m-th product).
  State apply_state(const State& s, int m, const State& v) const;

  /// Translation operator T (derivation; a_{(-n)} -> n a_{(-n-1)}).
  State translate(const State& s) const;
  State translate_pow(State s, int m) const {
    for (int i = 0; i < m; ++i) s = translate(s);
    return s;
  }

  /// Normally ordered product :ab: = a_{(-1)} b.
  State nop(const State& a, const State& b) const { return apply_state(a, -1, b); }

  /// [a_lambda b] via iterated mode products (the primary path).
  LambdaPoly bracket(const State& a, const State& b) const;

  /// [a_lambda b] via the Wick-formula recursion on monomial structure (the
  /// independent second path; must agree with bracket()).
  LambdaPoly bracket_wick(const State& a, const State& b) const;

  /// lambda-polynomial helpers.
  LambdaPoly lp_translate_arg(const LambdaPoly& p) const;           // (lambda+T) P
  LambdaPoly subst_neg_lambda_minus_T(const LambdaPoly& p) const;   // P(-lambda-T)
  State integrate_0_lambda_then_eval(const LambdaMuPoly& f) const;  // unused helper

  /// Bracket every coefficient: [a_lambda P(mu)] -> poly in (lambda, mu).
  LambdaMuPoly bracket_into(const State& a, const LambdaPoly& p) const;

  /// Sound upper bound B such that g_{(m)} v = 0 for every generator g and
  /// all m >= B.
  int ann_bound(const State& v) const;
  int ann_bound_mono(const Monomial& v) const;

  /// Sound upper bound for composite products: s_{(t)} v = 0 for t >= bound.
  int hard_bound(const Monomial& w, const State& v) const;

  // ---- randomized axiom suite -------------------------------------------

  /// Random homogeneous state of weight <= weight_cap (exact weight chosen
  /// by the generator), small integer coefficients.
  State random_state(Rng& rng, const Rational& weight_cap) const;

  /// Randomized verification of sesquilinearity, skew symmetry, Jacobi and
  /// both Wick formulas, plus the two-path agreement and quasi-commutativity.
  /// Weights of sampled states stay <= weight_cap.
  AxiomReport verify_axioms(const Rational& weight_cap, int trials, std::uint64_t seed,
                            bool throw_on_failure = false) const;

  // Individual identity residuals (zero iff the identity holds on the args).
  bool check_sesquilinearity(const State& a, const State& b) const;
  bool check_skew(const State& a, const State& b) const;
  bool check_jacobi(const State& a, const State& b, const State& c) const;
  bool check_wick1(const State& a, const State& b, const State& c) const;
  bool check_wick2(const State& a, const State& b, const State& c) const;
  bool check_quasi_commutativity(const State& a, const State& b) const;
  bool check_two_path(const State& a, const State& b) const;

  std::string to_string(const State& s) const;
  std::string to_string(const LambdaPoly& p) const;

 private:
  Presentation p_;

  void apply_gen_mono(int g, int m, const Monomial& mono, const Scalar& coeff, State& out) const;
  void apply_bracket_entry(const State& entry, int t, const Monomial& tail, const Scalar& coeff,
                           State& out) const;
};

}  // namespace walgebra
