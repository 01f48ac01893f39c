#pragma once

#include <string>
#include <vector>

#include "walgebra/errors.hpp"
#include "walgebra/state.hpp"

namespace walgebra {

struct GenInfo {
  std::string name;
  bool odd = false;
  Rational weight = Rational(1);  // conformal weight, may be <= 0
  int charge = 0;                 // fermionic charge grading
};

/// A vertex superalgebra presented by generators and a lambda-bracket table.
/// Table entries must be "admissible": every monomial appearing in a bracket
/// coefficient has length <= 1 (a central term or a single creation mode).
/// That restriction makes the normal-ordering rewrite terminate and covers
/// every preset in this project.
class Presentation {
 public:
  int add_generator(const std::string& name, bool odd, Rational weight, int charge = 0) {
    gens_.push_back({name, odd, std::move(weight), charge});
    int id = static_cast<int>(gens_.size()) - 1;
    table_.resize(gens_.size());
    for (auto& row : table_) row.resize(gens_.size());
    return id;
  }

  void set_bracket(int a, int b, LambdaPoly p) { table_.at(a).at(b) = std::move(p); }

  /// Derive [b_lambda a] from [a_lambda b] by super skew symmetry
  /// [b_la a] = -(-1)^{|a||b|} [a_{-la-T} b]; valid structurally because
  /// admissible entries translate without the table.
  void set_bracket_by_skew(int a, int b);

  int num_gens() const { return static_cast<int>(gens_.size()); }
  const GenInfo& gen(int i) const { return gens_.at(i); }
  const LambdaPoly& bracket(int a, int b) const { return table_.at(a).at(b); }

  int gen_index(const std::string& name) const {
    for (int i = 0; i < num_gens(); ++i)
      if (gens_[i].name == name) return i;
    throw UnknownGenerator("unknown generator: " + name);
  }

  /// Largest lambda-degree over the whole table.
  int max_table_degree() const { return max_deg_; }
  /// Largest mode depth appearing inside table entries.
  int max_table_depth() const { return max_depth_; }

  Rational mono_weight(const Monomial& m) const {
    Rational w(0);
    for (const auto& md : m) w += gens_.at(md.gen).weight + md.depth - 1;
    return w;
  }
  bool mono_odd(const Monomial& m) const {
    int p = 0;
    for (const auto& md : m) p ^= gens_.at(md.gen).odd ? 1 : 0;
    return p != 0;
  }
  int mono_charge(const Monomial& m) const {
    int c = 0;
    for (const auto& md : m) c += gens_.at(md.gen).charge;
    return c;
  }

  /// Weight of a state when homogeneous; throws NonHomogeneous otherwise.
  Rational state_weight(const State& s) const;
  bool state_odd(const State& s) const;

  /// Validates admissibility, weight additivity of the table and skew
  /// consistency of every generator pair. Throws AxiomViolation on failure.
  void validate() const;

 private:
  std::vector<GenInfo> gens_;
  std::vector<std::vector<LambdaPoly>> table_;
  int max_deg_ = 0;
  int max_depth_ = 1;

  friend class VertexAlgebra;
  void refresh_bounds();
};

/// Structural translation operator on admissible (length <= 1) states:
/// T(u_{(-d)}|0>) = d u_{(-d-1)}|0>, T|0> = 0.
State translate_short(const State& s);

/// Substitute lambda -> -lambda - T in an admissible lambda-polynomial.
LambdaPoly subst_neg_lambda_minus_T_short(const LambdaPoly& p);

}  // namespace walgebra
