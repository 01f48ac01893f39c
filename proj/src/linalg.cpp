#include "walgebra/linalg.hpp"

namespace walgebra {

int rank_fraction_free(const Matrix<Scalar>& m) {
  if (m.empty() || m[0].empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();

  // Clear denominators row by row: multiply each row by the lcm of its
  // denominators so Bareiss runs over Q[k].
  std::vector<std::vector<Poly>> a(rows, std::vector<Poly>(cols));
  for (size_t i = 0; i < rows; ++i) {
    Poly l(Rational(1));
    for (size_t j = 0; j < cols; ++j) {
      const Poly& d = m[i][j].den();
      Poly g = Poly::gcd(l, d);
      l = l * d.divide_exact(g);
    }
    for (size_t j = 0; j < cols; ++j) a[i][j] = m[i][j].num() * l.divide_exact(m[i][j].den());
  }

  Poly prev(Rational(1));
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    // Pick the nonzero pivot of smallest degree to keep growth down.
    size_t sel = rows;
    for (size_t i = r; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      if (sel == rows || a[i][c].degree() < a[sel][c].degree()) sel = i;
    }
    if (sel == rows) continue;
    std::swap(a[r], a[sel]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]).divide_exact(prev);
      a[i][c] = Poly();
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

int rank_at(const Matrix<Scalar>& m, const Rational& kval) {
  if (m.empty()) return 0;
  Matrix<Rational> e(m.size(), std::vector<Rational>(m[0].size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[0].size(); ++j) e[i][j] = m[i][j].eval(kval);
  return rank(std::move(e));
}

}  // namespace walgebra
