#pragma once

#include <optional>
#include <vector>

#include "walgebra/poly.hpp"
#include "walgebra/scalar.hpp"

namespace walgebra {

/// Dense matrix over an exact field element type (Rational or Scalar).
template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
Matrix<T> zero_matrix(size_t rows, size_t cols) {
  return Matrix<T>(rows, std::vector<T>(cols, T(0)));
}

template <class T>
bool is_zero_entry(const T& x) {
  return x == T(0);
}
inline bool is_zero_entry(const Scalar& x) { return x.is_zero(); }

/// Row-reduce in place (Gauss-Jordan over the field); returns pivot columns.
template <class T>
std::vector<int> row_reduce(Matrix<T>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = rows;
    for (size_t i = r; i < rows; ++i)
      if (!is_zero_entry(m[i][c])) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    T inv = T(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero_entry(m[i][c])) continue;
      T f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

template <class T>
int rank(Matrix<T> m) {
  return static_cast<int>(row_reduce(m).size());
}

/// Solve A x = b over the field; returns nullopt when inconsistent. A is
/// given column-major as a list of column vectors.
template <class T>
std::optional<std::vector<T>> solve_columns(const std::vector<std::vector<T>>& cols,
                                            const std::vector<T>& b) {
  size_t n = b.size(), m = cols.size();
  Matrix<T> aug = zero_matrix<T>(n, m + 1);
  for (size_t j = 0; j < m; ++j)
    for (size_t i = 0; i < n; ++i) aug[i][j] = cols[j][i];
  for (size_t i = 0; i < n; ++i) aug[i][m] = b[i];
  std::vector<int> piv = row_reduce(aug);
  for (int p : piv)
    if (p == static_cast<int>(m)) return std::nullopt;  // pivot in the rhs column
  std::vector<T> x(m, T(0));
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug[k][m];
  return x;
}

/// Kernel basis of the matrix (solutions of m x = 0).
template <class T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  std::vector<int> piv = row_reduce(m);
  std::vector<bool> is_piv(cols, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<std::vector<T>> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    std::vector<T> v(cols, T(0));
    v[c] = T(1);
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m[k][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Fraction-free rank over Q(k): rows are cleared to Q[k] and reduced with
/// Bareiss one-step elimination (exact division by the previous pivot).
/// The symbolic rank is sanity-checked at random rational specializations of
/// k by the callers that care.
int rank_fraction_free(const Matrix<Scalar>& m);

/// Rank after evaluating every entry at the given rational level.
int rank_at(const Matrix<Scalar>& m, const Rational& kval);

}  // namespace walgebra
