#include "walgebra/lie.hpp"

#include <algorithm>

#include "walgebra/errors.hpp"

namespace walgebra {

SqMat SqMat::inverse() const {
  Matrix<Scalar> aug = zero_matrix<Scalar>(n_, 2 * n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) aug[i][j] = a_[i][j];
    aug[i][n_ + i] = Scalar(1);
  }
  row_reduce(aug);
  for (int i = 0; i < n_; ++i)
    if (!(aug[i][i] == Scalar(1))) throw DivisionByZero("singular matrix");
  SqMat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = aug[i][n_ + j];
  return r;
}

LieData::LieData(int n_in) : n(n_in), e(n_in), h(n_in), f(n_in) {
  for (int ht = 1; ht < n; ++ht)
    for (int i = 0; i + ht < n; ++i) pos_roots.emplace_back(i, i + ht);
  for (int i = 0; i + 1 < n; ++i) {
    e.at(i, i + 1) = Scalar(Rational((i + 1) * (n - i - 1)));
    f.at(i + 1, i) = Scalar(1);
  }
  for (int i = 0; i < n; ++i) h.at(i, i) = Scalar(Rational(n - 1 - 2 * i));
}

int LieData::root_index(int i, int j) const {
  for (size_t a = 0; a < pos_roots.size(); ++a)
    if (pos_roots[a].first == i && pos_roots[a].second == j) return static_cast<int>(a);
  return -1;
}

std::vector<std::pair<int, Rational>> LieData::n_bracket(int alpha, int beta) const {
  // [e_{ij}, e_{kl}] = d_{jk} e_{il} - d_{li} e_{kj}
  auto [i, j] = pos_roots[alpha];
  auto [k, l] = pos_roots[beta];
  std::vector<std::pair<int, Rational>> out;
  if (j == k) out.emplace_back(root_index(i, l), Rational(1));
  if (l == i) out.emplace_back(root_index(k, j), Rational(-1));
  return out;
}

std::vector<Scalar> char_poly(const SqMat& a) {
  // Faddeev-LeVerrier: M_1 = A, c_m = -tr(A M_m)/m, M_{m+1} = A M_m + c_m I.
  int n = a.n();
  std::vector<Scalar> c(n);
  SqMat m = SqMat::identity(n);
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    Scalar ck = m.trace() * Scalar(Rational(-1, k));
    c[k - 1] = ck;
    for (int i = 0; i < n; ++i) m.at(i, i) += ck;
  }
  return c;
}

SqMat companion_matrix(const std::vector<Scalar>& a) {
  int n = static_cast<int>(a.size());
  SqMat m(n);
  for (int i = 0; i + 1 < n; ++i) m.at(i + 1, i) = Scalar(1);
  for (int i = 0; i < n; ++i) m.at(i, n - 1) = -a[i];
  return m;
}

std::vector<Scalar> invariant_polys(int n, const SqMat& a) {
  if (a.n() != n) throw DimensionMismatch("matrix size does not match n");
  return char_poly(a);
}

Multi multi_add(const Multi& a, const Multi& b) {
  Multi r = a;
  for (const auto& [m, c] : b) {
    auto it = r.find(m);
    if (it == r.end())
      r.emplace(m, c);
    else {
      it->second += c;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

Multi multi_mul(const Multi& a, const Multi& b) {
  Multi r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(std::max(ma.size(), mb.size()), 0);
      for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      Rational c = ca * cb;
      auto it = r.find(m);
      if (it == r.end())
        r.emplace(std::move(m), c);
      else {
        it->second += c;
        if (it->second == 0) r.erase(it);
      }
    }
  return r;
}

Multi multi_scale(const Multi& a, const Rational& c) {
  Multi r;
  if (c == 0) return r;
  for (const auto& [m, x] : a) r.emplace(m, x * c);
  return r;
}

std::string multi_to_string(const Multi& m, const std::string& stem) {
  if (m.empty()) return "0";
  std::string s;
  for (const auto& [mono, c] : m) {
    if (!s.empty()) s += " + ";
    s += c.get_str();
    for (size_t i = 0; i < mono.size(); ++i)
      for (int p = 0; p < mono[i]; ++p) s += "*" + stem + std::to_string(i + 1);
  }
  return s;
}

namespace {

// det of a matrix with Multi entries, cofactor expansion along the first row.
Multi multi_det(const std::vector<std::vector<Multi>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  Multi det;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].empty()) continue;
    std::vector<std::vector<Multi>> minor(n - 1, std::vector<Multi>(n - 1));
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    Multi term = multi_mul(m[0][j], multi_det(minor));
    if (j % 2) term = multi_scale(term, Rational(-1));
    det = multi_add(det, term);
  }
  return det;
}

}  // namespace

Multi kostant_slice_restriction(int n, int i) {
  // Variables: index 0 is t, indices 1..n are h_1..h_n.
  // Entries of tI - (f + diag(h)).
  std::vector<std::vector<Multi>> m(n, std::vector<Multi>(n));
  auto var = [&](int idx, const Rational& c) {
    std::vector<int> e(n + 1, 0);
    e[idx] = 1;
    Multi r;
    r.emplace(std::move(e), c);
    return r;
  };
  for (int r = 0; r < n; ++r) {
    m[r][r] = multi_add(var(0, Rational(1)), var(r + 1, Rational(-1)));
    if (r + 1 < n) m[r + 1][r].emplace(std::vector<int>(n + 1, 0), Rational(-1));
  }
  Multi det = multi_det(m);
  // Extract the t^{n-i} coefficient and drop the t exponent slot.
  Multi out;
  for (const auto& [mono, c] : det) {
    if (mono[0] != n - i) continue;
    std::vector<int> e(mono.begin() + 1, mono.end());
    out.emplace(std::move(e), c);
  }
  return out;
}

Multi elementary_symmetric(int n, int i) {
  Multi r;
  std::vector<int> idx(i);
  // Iterate over i-subsets of {0..n-1}.
  for (int t = 0; t < i; ++t) idx[t] = t;
  while (true) {
    std::vector<int> e(n, 0);
    for (int t : idx) e[t] = 1;
    r.emplace(std::move(e), Rational(1));
    int t = i - 1;
    while (t >= 0 && idx[t] == n - i + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int s = t + 1; s < i; ++s) idx[s] = idx[s - 1] + 1;
  }
  if (i == 0) {
    r.clear();
    r.emplace(std::vector<int>(n, 0), Rational(1));
  }
  return r;
}

KostantReport verify_kostant_freeness(int n, int samples, std::uint64_t seed) {
  Rng rng(seed);
  KostantReport rep;
  rep.samples = samples;
  std::vector<std::vector<Scalar>> seen_invariants;
  std::vector<std::vector<Scalar>> seen_points;
  for (int s = 0; s < samples; ++s) {
    // Random slice point (companion matrix) and random unipotent g.
    std::vector<Scalar> a(n);
    for (auto& x : a) x = Scalar(rat(rng.int_in(-5, 5)));
    SqMat x = companion_matrix(a);
    SqMat g = SqMat::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.at(i, j) = Scalar(rat(rng.int_in(-5, 5)));
    SqMat ad = g * x * g.inverse();

    // Membership in f + b: subdiagonal ones, zero below it.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (j > i) continue;
        Scalar expect = (i == j + 1) ? Scalar(1) : Scalar(0);
        if (i > j && !(ad.at(i, j) == expect)) rep.in_f_plus_b = false;
      }

    std::vector<Scalar> inv_x = invariant_polys(n, x);
    std::vector<Scalar> inv_ad = invariant_polys(n, ad);
    if (inv_x != inv_ad) rep.invariants_match = false;

    for (size_t t = 0; t < seen_points.size(); ++t) {
      bool same_point = seen_points[t] == a;
      bool same_inv = seen_invariants[t] == inv_x;
      if (!same_point && same_inv) rep.slice_points_separated = false;
    }
    seen_points.push_back(a);
    seen_invariants.push_back(inv_x);
  }
  return rep;
}

bool check_transversality(int n) {
  // Columns: basis of a (last-column units) followed by ad(f) images of all
  // matrix units; the span must be all of gl_n.
  LieData lie(n);
  Matrix<Rational> cols;
  auto push = [&](const SqMat& m) {
    std::vector<Rational> v(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[i * n + j] = m.at(i, j).as_rational();
    cols.push_back(std::move(v));
  };
  for (int i = 0; i < n; ++i) push(SqMat::unit(n, i, n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) push(lie.f.bracket(SqMat::unit(n, i, j)));
  // rank of the transpose equals rank of the column span
  return rank(cols) == n * n;
}

bool check_cstar_contraction(int n) {
  // rho(t) e_{ij} = t^{2(j - i + 1)} e_{ij}: weight 0 exactly on the
  // subdiagonal (the f-part), strictly positive on b.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int w = 2 * (j - i + 1);
      if (i == j + 1 && w != 0) return false;
      if (j >= i && w <= 0) return false;
    }
  return true;
}

bool check_chi_character(int n) {
  LieData lie(n);
  for (int a = 0; a < lie.num_pos_roots(); ++a)
    for (int b = 0; b < lie.num_pos_roots(); ++b)
      for (const auto& [g, c] : lie.n_bracket(a, b)) {
        if (g < 0) return false;  // bracket left n
        if (c * lie.chi(g) != 0) return false;
      }
  return true;
}

}  // namespace walgebra
