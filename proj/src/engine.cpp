#include "walgebra/engine.hpp"

#include <sstream>

namespace walgebra {

namespace {

Scalar fact_inv(int n) { return Scalar(Rational(Integer(1), factorial(n))); }

}  // namespace

// ---------------------------------------------------------------------------
// Generator mode action: straightening against the bracket table.
// ---------------------------------------------------------------------------

void VertexAlgebra::apply_bracket_entry(const State& entry, int t, const Monomial& tail,
                                        const Scalar& coeff, State& out) const {
  for (const auto& [m, ce] : entry.terms()) {
    if (m.empty()) {
      // central term: (c |0>)_{(t)} = c delta_{t,-1}
      if (t == -1) out.add(tail, coeff * ce);
      continue;
    }
    // single creation mode u_{(-d)}|0>, i.e. T^{d-1}u/(d-1)!:
    // (u_{(-d)}|0>)_{(t)} = (-1)^{d-1} binom(t, d-1) u_{(t-d+1)}
    int u = m[0].gen, d = m[0].depth;
    Rational f = binomial(t, d - 1);
    if (f == 0) continue;
    if ((d - 1) % 2) f = -f;
    apply_gen_mono(u, t - d + 1, tail, coeff * ce * Scalar(f), out);
  }
}

void VertexAlgebra::apply_gen_mono(int g, int m, const Monomial& mono, const Scalar& coeff,
                                   State& out) const {
  if (coeff.is_zero()) return;
  if (mono.empty()) {
    if (m < 0) out.add({Mode{g, -m}}, coeff);
    return;
  }
  const Mode head = mono[0];
  const bool g_odd = p_.gen(g).odd;
  const bool h_odd = p_.gen(head.gen).odd;

  if (m < 0) {
    Mode gm{g, -m};
    if (gm.canonical_le(head)) {
      if (g_odd && gm == head) return;  // odd mode squared
      Monomial r;
      r.reserve(mono.size() + 1);
      r.push_back(gm);
      r.insert(r.end(), mono.begin(), mono.end());
      out.add(std::move(r), coeff);
      return;
    }
  }

  Monomial tail(mono.begin() + 1, mono.end());

  // g_{(m)} b_{(-n)} X = +- b_{(-n)} (g_{(m)} X) + [g_{(m)}, b_{(-n)}] X
  Scalar swapped = (g_odd && h_odd) ? coeff * Scalar(-1) : coeff;
  State inner;
  apply_gen_mono(g, m, tail, swapped, inner);
  for (const auto& [mw, cw] : inner.terms()) apply_gen_mono(head.gen, -head.depth, mw, cw, out);

  // [g_{(m)}, b_{(-n)}] = sum_i binom(m, i) (g_{(i)} b)_{(m-n-i)}
  const LambdaPoly& tab = p_.bracket(g, head.gen);
  for (int i = 0; i <= tab.degree(); ++i) {
    Rational bi = binomial(m, i);
    if (bi == 0) continue;
    State entry = tab.product(i);
    if (entry.is_zero()) continue;
    apply_bracket_entry(entry, m - head.depth - i, tail, coeff * Scalar(bi), out);
  }
}

State VertexAlgebra::apply_gen(int g, int m, const State& v) const {
  if (g < 0 || g >= p_.num_gens()) throw UnknownGenerator("generator index out of range");
  State out;
  for (const auto& [mono, c] : v.terms()) apply_gen_mono(g, m, mono, c, out);
  return out;
}

// ---------------------------------------------------------------------------
// Composite mode action.
// ---------------------------------------------------------------------------

int VertexAlgebra::ann_bound_mono(const Monomial& v) const {
  int s = 0;
  const int c1 = p_.max_table_degree() + p_.max_table_depth();
  for (const auto& md : v) s += md.depth + c1;
  return s;
}

int VertexAlgebra::ann_bound(const State& v) const {
  int b = 0;
  for (const auto& [m, c] : v.terms()) b = std::max(b, ann_bound_mono(m));
  return b;
}

namespace {
int size_measure(const Monomial& m, int unit) {
  int s = (static_cast<int>(m.size()) + 1) * unit;
  for (const auto& md : m) s += md.depth;
  return s;
}
}  // namespace

int VertexAlgebra::hard_bound(const Monomial& w, const State& v) const {
  const int unit = p_.max_table_degree() + p_.max_table_depth() + 1;
  int sv = unit;
  for (const auto& [m, c] : v.terms()) sv = std::max(sv, size_measure(m, unit));
  return size_measure(w, unit) + 2 * sv + 4;
}

namespace {
bool is_vacuum_multiple(const State& s) {
  return s.is_zero() || (s.size() == 1 && s.terms().begin()->first.empty());
}
}  // namespace

State VertexAlgebra::apply_state(const State& s, int t, const State& v) const {
  // (w)_{(t)} v, recursively over the monomial structure of w.
  std::function<State(const Monomial&, int, const State&)> go =
      [&](const Monomial& w, int tt, const State& target) -> State {
    State res;
    if (target.is_zero()) return res;
    if (w.empty()) {
      if (tt == -1) res.add_state(target);
      return res;
    }
    if (is_vacuum_multiple(target)) {
      // s_{(t)}|0> = 0 for t >= 0, and T^p s / p! for t = -p-1.
      if (tt >= 0) return res;
      int p = -tt - 1;
      res.add_state(translate_pow(State::monomial(w), p), target.vacuum_coeff() * fact_inv(p));
      return res;
    }
    const int u = w[0].gen, d = w[0].depth;
    if (w.size() == 1) {
      // (u_{(-d)}|0>)_{(t)} = (-1)^{d-1} binom(t, d-1) u_{(t-d+1)}
      Rational f = binomial(tt, d - 1);
      if (f == 0) return res;
      if ((d - 1) % 2) f = -f;
      res.add_state(apply_gen(u, tt - d + 1, target), Scalar(f));
      return res;
    }
    Monomial y(w.begin() + 1, w.end());
    const int m = -d;
    const bool u_odd = p_.gen(u).odd;
    const bool y_odd = p_.mono_odd(y);
    // (a_{(m)}b)_{(t)} = sum_j (-1)^j binom(m,j) [ a_{(m-j)}(b_{(t+j)}c)
    //                     - (-1)^m sigma b_{(m+t-j)}(a_{(j)}c) ]
    const Scalar sigma_term = Scalar(((m % 2) ? -1 : 1) * ((u_odd && y_odd) ? -1 : 1) * -1);
    const int jmax = std::max(hard_bound(y, target) - tt, ann_bound(target));
    for (int j = 0; j <= jmax; ++j) {
      Rational bj = binomial(m, j);
      if (j % 2) bj = -bj;
      if (bj == 0) continue;
      State inner1 = go(y, tt + j, target);
      if (!inner1.is_zero()) res.add_state(apply_gen(u, m - j, inner1), Scalar(bj));
      State inner2 = apply_gen(u, j, target);
      if (!inner2.is_zero()) res.add_state(go(y, m + tt - j, inner2), Scalar(bj) * sigma_term);
    }
    return res;
  };
  State out;
  for (const auto& [w, c] : s.terms()) out.add_state(go(w, t, v), c);
  return out;
}

State VertexAlgebra::translate(const State& s) const {
  State out;
  for (const auto& [m, c] : s.terms()) {
    for (size_t i = 0; i < m.size(); ++i) {
      Monomial word = m;
      word[i].depth += 1;
      // refold into canonical form
      State acc = State::vacuum(c * Scalar(Rational(m[i].depth)));
      for (size_t idx = word.size(); idx-- > 0;) acc = apply_gen(word[idx].gen, -word[idx].depth, acc);
      out.add_state(acc);
    }
  }
  return out;
}

LambdaPoly VertexAlgebra::bracket(const State& a, const State& b) const {
  int jb = 0;
  for (const auto& [w, c] : a.terms()) jb = std::max(jb, hard_bound(w, b));
  std::vector<State> prods;
  for (int j = 0; j <= jb; ++j) prods.push_back(apply_state(a, j, b));
  return LambdaPoly::from_products(std::move(prods));
}

// ---------------------------------------------------------------------------
// lambda-polynomial helpers.
// ---------------------------------------------------------------------------

LambdaPoly VertexAlgebra::lp_translate_arg(const LambdaPoly& p) const {
  std::vector<State> out(p.degree() + 2);
  for (int j = 0; j <= p.degree(); ++j) {
    out[j + 1] = out[j + 1] + p.coeff(j);
    out[j] = out[j] + translate(p.coeff(j));
  }
  return LambdaPoly(std::move(out));
}

LambdaPoly VertexAlgebra::subst_neg_lambda_minus_T(const LambdaPoly& p) const {
  std::vector<State> out(p.degree() + 1);
  for (int j = 0; j <= p.degree(); ++j) {
    State tj = p.coeff(j);
    for (int r = j; r >= 0; --r) {
      Rational f = binomial(j, r) * (j % 2 ? Rational(-1) : Rational(1));
      out[r] = out[r] + tj * Scalar(f);
      if (r > 0) tj = translate(tj);
    }
  }
  return LambdaPoly(std::move(out));
}

LambdaMuPoly VertexAlgebra::bracket_into(const State& a, const LambdaPoly& p) const {
  LambdaMuPoly out;
  for (int j = 0; j <= p.degree(); ++j) {
    LambdaPoly q = bracket(a, p.coeff(j));
    for (int i = 0; i <= q.degree(); ++i) out.add(i, j, q.coeff(i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Wick-recursion path for the lambda bracket.
// ---------------------------------------------------------------------------

namespace {

// integrate a (lambda, mu)-polynomial in mu from 0 to lambda
LambdaPoly integrate_mu(const LambdaMuPoly& f) {
  std::vector<State> out;
  for (const auto& [key, s] : f.terms()) {
    int deg = key.first + key.second + 1;
    if (static_cast<int>(out.size()) <= deg) out.resize(deg + 1);
    out[deg] = out[deg] + s * Scalar(Rational(1, key.second + 1));
  }
  return LambdaPoly(std::move(out));
}

}  // namespace

LambdaPoly VertexAlgebra::bracket_wick(const State& a, const State& b) const {
  // [u_lambda c] for a generator u against an arbitrary state, by the first
  // Wick formula on the structure of c.
  std::function<LambdaPoly(int, const State&)> gen_right = [&](int u,
                                                               const State& c) -> LambdaPoly {
    LambdaPoly result;
    for (const auto& [v, cv] : c.terms()) {
      if (v.empty()) continue;  // [u_la |0>] = 0
      const int g = v[0].gen, d = v[0].depth;
      LambdaPoly base = p_.bracket(u, g);  // [u_la g]
      // y = g_{(-d)}|0> = T^{d-1} g/(d-1)!; [u_la y] = (la+T)^{d-1} base /(d-1)!
      LambdaPoly uy = base;
      for (int i = 0; i < d - 1; ++i) uy = lp_translate_arg(uy);
      uy = uy * fact_inv(d - 1);
      if (v.size() == 1) {
        result = result + uy * cv;
        continue;
      }
      Monomial z(v.begin() + 1, v.end());
      State zs = State::monomial(z);
      State ys = State::monomial({Mode{g, d}});
      // [u_la :y z:] = :[u_la y] z: + (-1)^{|u||y|} :y [u_la z]: + int_0^la [[u_la y]_mu z] dmu
      LambdaPoly term1;
      for (int i = 0; i <= uy.degree(); ++i) {
        LambdaPoly piece;
        piece.set_coeff(i, nop(uy.coeff(i), zs));
        term1 = term1 + piece;
      }
      LambdaPoly uz = gen_right(u, zs);
      LambdaPoly term2;
      for (int i = 0; i <= uz.degree(); ++i) {
        LambdaPoly piece;
        piece.set_coeff(i, nop(ys, uz.coeff(i)));
        term2 = term2 + piece;
      }
      Scalar s2 = (p_.gen(u).odd && p_.gen(g).odd) ? Scalar(-1) : Scalar(1);
      LambdaMuPoly inner;
      for (int i = 0; i <= uy.degree(); ++i) {
        LambdaPoly br = bracket_wick(uy.coeff(i), zs);
        for (int j = 0; j <= br.degree(); ++j) inner.add(i, j, br.coeff(j));
      }
      LambdaPoly term3 = integrate_mu(inner);
      result = result + (term1 + term2 * s2 + term3) * cv;
    }
    return result;
  };

  LambdaPoly result;
  for (const auto& [w, cw] : a.terms()) {
    if (w.empty()) continue;
    const int u = w[0].gen, d = w[0].depth;
    if (w.size() == 1) {
      // [T^{d-1}u/(d-1)! _la b] = (-la)^{d-1} [u_la b]/(d-1)!
      LambdaPoly p = gen_right(u, b);
      p = p.shifted(d - 1) * Scalar(Rational(((d - 1) % 2) ? -1 : 1)) * fact_inv(d - 1);
      result = result + p * cw;
      continue;
    }
    // w = :x y: with x = T^{d-1}u/(d-1)!, y the tail.
    Monomial ym(w.begin() + 1, w.end());
    State ys = State::monomial(ym);
    State xs = State::monomial({Mode{u, d}});
    bool x_odd = p_.gen(u).odd;
    bool y_odd = p_.mono_odd(ym);
    Scalar sgn = (x_odd && y_odd) ? Scalar(-1) : Scalar(1);

    // [x_la c]: from the generator bracket with the (-la)^{d-1} shift
    LambdaPoly xc = gen_right(u, b).shifted(d - 1) *
                    Scalar(Rational(((d - 1) % 2) ? -1 : 1)) * fact_inv(d - 1);
    LambdaPoly yc = bracket_wick(ys, b);

    // [:xy:_la c] = :(e^{T d/dla} x)[y_la c]: + (-1)^{|x||y|}:(e^{T d/dla} y)[x_la c]:
    //               + (-1)^{|x||y|} int_0^la [y_mu [x_{la-mu} c]] dmu
    auto dressed = [&](const State& front, const LambdaPoly& p) {
      // sum_r la^r sum_m binom(r+m, m) :(T^m front) p_{r+m}:
      std::vector<State> out(p.degree() + 1);
      State tm = front;
      for (int m = 0; m <= p.degree(); ++m) {
        for (int r = 0; r + m <= p.degree(); ++r)
          out[r] = out[r] + nop(tm, p.coeff(r + m)) * Scalar(binomial(r + m, m));
        tm = translate(tm);
      }
      return LambdaPoly(std::move(out));
    };
    LambdaPoly term1 = dressed(xs, yc);
    LambdaPoly term2 = dressed(ys, xc) * sgn;

    // [x_{la-mu} c] has coefficients in (la - mu); build F(la, mu) =
    // sum over nu-degree t of [y_mu (xc)_t] (la-mu)^t and integrate.
    LambdaMuPoly f;
    for (int t = 0; t <= xc.degree(); ++t) {
      LambdaPoly ybr = bracket_wick(ys, xc.coeff(t));
      // (la-mu)^t = sum_r binom(t,r) la^r (-mu)^{t-r}
      for (int s = 0; s <= ybr.degree(); ++s)
        for (int r = 0; r <= t; ++r) {
          Rational cf = binomial(t, r) * (((t - r) % 2) ? Rational(-1) : Rational(1));
          f.add(r, s + t - r, ybr.coeff(s) * Scalar(cf));
        }
    }
    LambdaPoly term3 = integrate_mu(f) * sgn;
    result = result + (term1 + term2 + term3) * cw;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Axiom suite.
// ---------------------------------------------------------------------------

bool VertexAlgebra::check_sesquilinearity(const State& a, const State& b) const {
  LambdaPoly ab = bracket(a, b);
  LambdaPoly lhs1 = bracket(translate(a), b);
  LambdaPoly rhs1 = ab.shifted(1) * Scalar(-1);
  if (!(lhs1 == rhs1)) return false;
  LambdaPoly lhs2 = bracket(a, translate(b));
  LambdaPoly rhs2 = lp_translate_arg(ab);
  return lhs2 == rhs2;
}

bool VertexAlgebra::check_skew(const State& a, const State& b) const {
  bool ao = p_.state_odd(a), bo = p_.state_odd(b);
  LambdaPoly lhs = bracket(b, a);
  LambdaPoly rhs = subst_neg_lambda_minus_T(bracket(a, b)) * ((ao && bo) ? Scalar(1) : Scalar(-1));
  return lhs == rhs;
}

bool VertexAlgebra::check_jacobi(const State& a, const State& b, const State& c) const {
  bool ao = p_.state_odd(a), bo = p_.state_odd(b);
  LambdaMuPoly lhs1 = bracket_into(a, bracket(b, c));  // la^i mu^j of [a_la [b_mu c]]
  LambdaMuPoly lhs;
  for (const auto& [key, s] : lhs1.terms()) lhs.add(key.first, key.second, s);
  LambdaMuPoly lhs2 = bracket_into(b, bracket(a, c));  // mu^i la^j — swap the roles
  Scalar koszul = (ao && bo) ? Scalar(-1) : Scalar(1);
  for (const auto& [key, s] : lhs2.terms())
    lhs.add(key.second, key.first, s * koszul * Scalar(-1));
  // rhs: [[a_la b]_{la+mu} c]
  LambdaMuPoly rhs;
  LambdaPoly ab = bracket(a, b);
  for (int i = 0; i <= ab.degree(); ++i) {
    LambdaPoly br = bracket(ab.coeff(i), c);
    for (int t = 0; t <= br.degree(); ++t)
      for (int r = 0; r <= t; ++r)
        rhs.add(i + r, t - r, br.coeff(t) * Scalar(binomial(t, r)));
  }
  return lhs == rhs;
}

bool VertexAlgebra::check_wick1(const State& a, const State& b, const State& c) const {
  bool ao = p_.state_odd(a), bo = p_.state_odd(b);
  LambdaPoly lhs = bracket(a, nop(b, c));
  LambdaPoly ab = bracket(a, b);
  LambdaPoly term1;
  for (int i = 0; i <= ab.degree(); ++i) {
    LambdaPoly piece;
    piece.set_coeff(i, nop(ab.coeff(i), c));
    term1 = term1 + piece;
  }
  LambdaPoly ac = bracket(a, c);
  LambdaPoly term2;
  for (int i = 0; i <= ac.degree(); ++i) {
    LambdaPoly piece;
    piece.set_coeff(i, nop(b, ac.coeff(i)));
    term2 = term2 + piece;
  }
  Scalar s2 = (ao && bo) ? Scalar(-1) : Scalar(1);
  LambdaMuPoly inner;
  for (int i = 0; i <= ab.degree(); ++i) {
    LambdaPoly br = bracket(ab.coeff(i), c);
    for (int j = 0; j <= br.degree(); ++j) inner.add(i, j, br.coeff(j));
  }
  LambdaPoly rhs = term1 + term2 * s2 + integrate_mu(inner);
  return lhs == rhs;
}

bool VertexAlgebra::check_wick2(const State& a, const State& b, const State& c) const {
  bool ao = p_.state_odd(a), bo = p_.state_odd(b);
  Scalar sgn = (ao && bo) ? Scalar(-1) : Scalar(1);
  LambdaPoly lhs = bracket(nop(a, b), c);
  LambdaPoly ac = bracket(a, c);
  LambdaPoly bc = bracket(b, c);
  auto dressed = [&](const State& front, const LambdaPoly& p) {
    std::vector<State> out(p.degree() + 1);
    State tm = front;
    for (int m = 0; m <= p.degree(); ++m) {
      for (int r = 0; r + m <= p.degree(); ++r)
        out[r] = out[r] + nop(tm, p.coeff(r + m)) * Scalar(binomial(r + m, m));
      tm = translate(tm);
    }
    return LambdaPoly(std::move(out));
  };
  LambdaPoly term1 = dressed(a, bc);
  LambdaPoly term2 = dressed(b, ac) * sgn;
  LambdaMuPoly f;
  for (int t = 0; t <= ac.degree(); ++t) {
    LambdaPoly ybr = bracket(b, ac.coeff(t));
    for (int s = 0; s <= ybr.degree(); ++s)
      for (int r = 0; r <= t; ++r) {
        Rational cf = binomial(t, r) * (((t - r) % 2) ? Rational(-1) : Rational(1));
        f.add(r, s + t - r, ybr.coeff(s) * Scalar(cf));
      }
  }
  LambdaPoly term3 = integrate_mu(f) * sgn;
  return lhs == term1 + term2 + term3;
}

bool VertexAlgebra::check_quasi_commutativity(const State& a, const State& b) const {
  bool ao = p_.state_odd(a), bo = p_.state_odd(b);
  State lhs = nop(a, b) - nop(b, a) * ((ao && bo) ? Scalar(-1) : Scalar(1));
  LambdaPoly ab = bracket(a, b);
  // int_{-T}^0 [a_la b] dla = sum_j (-1)^j T^{j+1} c_j / (j+1)
  State rhs;
  for (int j = 0; j <= ab.degree(); ++j) {
    State t = translate_pow(ab.coeff(j), j + 1);
    rhs.add_state(t, Scalar(Rational(j % 2 ? -1 : 1, j + 1)));
  }
  return lhs == rhs;
}

bool VertexAlgebra::check_two_path(const State& a, const State& b) const {
  return bracket(a, b) == bracket_wick(a, b);
}

State VertexAlgebra::random_state(Rng& rng, const Rational& weight_cap) const {
  const int ngen = p_.num_gens();
  for (int attempt = 0; attempt < 200; ++attempt) {
    // Sample a first monomial, then more with matching weight/parity/charge.
    auto sample_mono = [&]() -> Monomial {
      Monomial m;
      int len = static_cast<int>(rng.int_in(1, 3));
      for (int i = 0; i < len; ++i) {
        int g = static_cast<int>(rng.int_in(0, ngen - 1));
        int d = static_cast<int>(rng.int_in(1, 2));
        m.push_back({g, d});
      }
      return m;
    };
    Monomial first = sample_mono();
    if (p_.mono_weight(first) > weight_cap) continue;
    State s;
    auto canon = [&](const Monomial& m) {
      State acc = State::vacuum(Scalar(rat(rng.nonzero_int(3))));
      for (size_t i = m.size(); i-- > 0;) acc = apply_gen(m[i].gen, -m[i].depth, acc);
      return acc;
    };
    s.add_state(canon(first));
    int extra = static_cast<int>(rng.int_in(0, 2));
    for (int i = 0; i < extra; ++i) {
      Monomial m = sample_mono();
      if (p_.mono_weight(m) == p_.mono_weight(first) && p_.mono_odd(m) == p_.mono_odd(first) &&
          p_.mono_charge(m) == p_.mono_charge(first))
        s.add_state(canon(m));
    }
    if (!s.is_zero()) return s;
  }
  return gen_state(0);
}

AxiomReport VertexAlgebra::verify_axioms(const Rational& weight_cap, int trials,
                                         std::uint64_t seed, bool throw_on_failure) const {
  AxiomReport rep;
  rep.seed = seed;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    State a = random_state(rng, weight_cap);
    State b = random_state(rng, weight_cap);
    State c = random_state(rng, weight_cap);
    ++rep.trials;
    bool ok = check_sesquilinearity(a, b) && check_skew(a, b) && check_jacobi(a, b, c) &&
              check_wick1(a, b, c) && check_wick2(a, b, c) && check_two_path(a, b) &&
              check_quasi_commutativity(a, b);
    if (!ok) {
      ++rep.failures;
      if (rep.first_failure.empty())
        rep.first_failure = "a=" + to_string(a) + "; b=" + to_string(b) + "; c=" + to_string(c);
      if (throw_on_failure) throw AxiomViolation("axiom failure on triple: " + rep.first_failure);
    }
  }
  return rep;
}

std::string VertexAlgebra::to_string(const State& s) const {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string() << "*";
    for (const auto& md : m) os << p_.gen(md.gen).name << "(-" << md.depth << ")";
    os << "|0>";
  }
  return os.str();
}

std::string VertexAlgebra::to_string(const LambdaPoly& p) const {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (int j = 0; j <= p.degree(); ++j) {
    if (p.coeff(j).is_zero()) continue;
    os << "la^" << j << " . [" << to_string(p.coeff(j)) << "]  ";
  }
  return os.str();
}

}  // namespace walgebra
