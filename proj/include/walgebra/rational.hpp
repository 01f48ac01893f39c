#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace walgebra {

/// Exact rational number. All arithmetic in the library is exact; there is
/// no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Generalized binomial coefficient binom(m, j) for integer m (possibly
/// negative) and j >= 0.
inline Rational binomial(long m, int j) {
  if (j < 0) return 0;
  Rational r = 1;
  for (int i = 0; i < j; ++i) {
    r *= Rational(m - i);
    r /= Rational(i + 1);
  }
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_from_string(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Small random rationals / integers for property tests. Deterministic for a
/// fixed seed; every randomized suite records its seed in the report.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long int_in(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(eng_);
  }

  /// Nonzero integer with |value| <= bound.
  long nonzero_int(long bound) {
    long v = 0;
    while (v == 0) v = int_in(-bound, bound);
    return v;
  }

  Rational rational(long num_bound, long den_bound) {
    return rat(int_in(-num_bound, num_bound), int_in(1, den_bound));
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace walgebra
