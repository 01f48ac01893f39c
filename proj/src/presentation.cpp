#include "walgebra/presentation.hpp"

namespace walgebra {

State translate_short(const State& s) {
  State out;
  for (const auto& [m, c] : s.terms()) {
    if (m.empty()) continue;  // T|0> = 0
    if (m.size() != 1) throw std::logic_error("translate_short on a long monomial");
    out.add({Mode{m[0].gen, m[0].depth + 1}}, c * Scalar(Rational(m[0].depth)));
  }
  return out;
}

LambdaPoly subst_neg_lambda_minus_T_short(const LambdaPoly& p) {
  // sum_j c_j (-lambda - T)^j = sum_r lambda^r sum_{j>=r} (-1)^j binom(j, r) T^{j-r} c_j
  std::vector<State> out(p.degree() + 1);
  for (int j = 0; j <= p.degree(); ++j) {
    State tj = p.coeff(j);
    for (int r = j; r >= 0; --r) {
      // at this point tj = T^{j-r} c_j
      Rational f = binomial(j, r) * (j % 2 ? Rational(-1) : Rational(1));
      out[r] = out[r] + tj * Scalar(f);
      if (r > 0) tj = translate_short(tj);
    }
  }
  return LambdaPoly(std::move(out));
}

void Presentation::set_bracket_by_skew(int a, int b) {
  LambdaPoly p = subst_neg_lambda_minus_T_short(table_.at(a).at(b));
  Scalar sgn = (gens_[a].odd && gens_[b].odd) ? Scalar(1) : Scalar(-1);
  table_.at(b).at(a) = p * sgn;
}

void Presentation::refresh_bounds() {
  max_deg_ = 0;
  max_depth_ = 1;
  for (const auto& row : table_)
    for (const auto& p : row) {
      max_deg_ = std::max(max_deg_, p.degree());
      for (int j = 0; j <= p.degree(); ++j)
        for (const auto& [m, c] : p.coeff(j).terms())
          for (const auto& md : m) max_depth_ = std::max(max_depth_, md.depth);
    }
}

Rational Presentation::state_weight(const State& s) const {
  if (s.is_zero()) return Rational(0);
  Rational w = mono_weight(s.terms().begin()->first);
  for (const auto& [m, c] : s.terms())
    if (mono_weight(m) != w) throw NonHomogeneous("state is not weight homogeneous");
  return w;
}

bool Presentation::state_odd(const State& s) const {
  if (s.is_zero()) return false;
  bool o = mono_odd(s.terms().begin()->first);
  for (const auto& [m, c] : s.terms())
    if (mono_odd(m) != o) throw NonHomogeneous("state is not parity homogeneous");
  return o;
}

void Presentation::validate() const {
  const int n = num_gens();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const LambdaPoly& p = table_[a][b];
      for (int j = 0; j <= p.degree(); ++j) {
        for (const auto& [m, c] : p.coeff(j).terms()) {
          if (m.size() > 1)
            throw AxiomViolation("bracket table entry [" + gens_[a].name + "," + gens_[b].name +
                                 "] is not admissible (monomial length > 1)");
          Rational expect = gens_[a].weight + gens_[b].weight - j - 1;
          if (mono_weight(m) != expect)
            throw AxiomViolation("bracket table entry [" + gens_[a].name + "," + gens_[b].name +
                                 "] breaks weight additivity");
          if (mono_odd(m) != (gens_[a].odd != gens_[b].odd))
            throw AxiomViolation("bracket table entry breaks parity additivity");
          if (mono_charge(m) != gens_[a].charge + gens_[b].charge)
            throw AxiomViolation("bracket table entry breaks charge additivity");
        }
      }
    }
  // Skew consistency of the whole table: [b_la a] = -(-1)^{|a||b|} [a_{-la-T} b].
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      LambdaPoly rhs = subst_neg_lambda_minus_T_short(table_[a][b]) *
                       ((gens_[a].odd && gens_[b].odd) ? Scalar(1) : Scalar(-1));
      if (!(table_[b][a] == rhs))
        throw AxiomViolation("bracket table is not skew-consistent on (" + gens_[a].name + ", " +
                             gens_[b].name + ")");
    }
}

}  // namespace walgebra
