// Independent reference computations for the tests. Nothing here calls the
// library's triangle or formula code: values are produced with plain rational
// or integer arithmetic at concrete points.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "qwhitney/laurent_poly.hpp"

namespace oracle {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalRows = std::vector<std::vector<Rational>>;
using IntegerRows = std::vector<std::vector<Integer>>;

inline Rational rpow(const Rational& x, std::int64_t e) {
  Rational out = 1;
  const Rational base = e >= 0 ? x : Rational(1) / x;
  for (std::int64_t i = 0; i < (e >= 0 ? e : -e); ++i) out *= base;
  return out;
}

// [n]_x = (1 - x^n) / (1 - x) at a concrete x != 1.
inline Rational bracket(std::int64_t n, const Rational& x) { return (Rational(1) - rpow(x, n)) / (Rational(1) - x); }

inline Rational cell(const RationalRows& rows, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Expands prod_i (a_i + b_i u) at a concrete q and returns the coefficient list.
inline std::vector<Rational> expand_linear(const std::vector<std::pair<Rational, Rational>>& factors) {
  std::vector<Rational> c{1};
  for (const auto& [a, b] : factors) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += a * c[i];
      next[i + 1] += b * c[i];
    }
    c = std::move(next);
  }
  return c;
}

// [t + s]_q = [s]_q + q^s [t]_q as a linear factor in u = [t]_q.
inline std::pair<Rational, Rational> linear(std::int64_t s, const Rational& x) { return {bracket(s, x), rpow(x, s)}; }

// First kind: coefficients of prod_{i<n} [t - r - i m]_q in powers of u.
inline RationalRows whitney1_at(std::int64_t m, std::int64_t r, std::int64_t nmax, const Rational& x) {
  RationalRows rows;
  for (std::int64_t n = 0; n <= nmax; ++n) {
    std::vector<std::pair<Rational, Rational>> factors;
    for (std::int64_t i = 0; i < n; ++i) factors.push_back(linear(-r - i * m, x));
    rows.push_back(expand_linear(factors));
  }
  return rows;
}

// Second kind as the inverse of the first-kind matrix, by Gaussian
// elimination on rationals.
inline RationalRows whitney2_at(std::int64_t m, std::int64_t r, std::int64_t nmax, const Rational& x) {
  const auto w = whitney1_at(m, r, nmax, x);
  RationalRows inv(static_cast<std::size_t>(nmax) + 1);
  for (std::int64_t n = 0; n <= nmax; ++n) {
    auto& row = inv[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    // Solve sum_k W[n,k] w[k,j] = delta_{nj} for j = n down to 0.
    for (std::int64_t j = n; j >= 0; --j) {
      Rational acc = n == j ? Rational(1) : Rational(0);
      for (std::int64_t k = j + 1; k <= n; ++k) acc -= row[static_cast<std::size_t>(k)] * cell(w, k, j);
      row[static_cast<std::size_t>(j)] = acc / cell(w, j, j);
    }
  }
  return inv;
}

// Whitney-Lah: solve [t + 2r | m]^(n) = sum_k L[n,k] [t | m]_k coefficientwise in u.
inline RationalRows lah_at(std::int64_t m, std::int64_t r, std::int64_t nmax, const Rational& x) {
  RationalRows falling;  // coefficient rows of [t|m]_k
  for (std::int64_t k = 0; k <= nmax; ++k) {
    std::vector<std::pair<Rational, Rational>> factors;
    for (std::int64_t i = 0; i < k; ++i) factors.push_back(linear(-i * m, x));
    falling.push_back(expand_linear(factors));
  }
  RationalRows rows;
  for (std::int64_t n = 0; n <= nmax; ++n) {
    std::vector<std::pair<Rational, Rational>> factors;
    for (std::int64_t i = 0; i < n; ++i) factors.push_back(linear(2 * r + i * m, x));
    auto target = expand_linear(factors);
    std::vector<Rational> row(static_cast<std::size_t>(n) + 1, Rational(0));
    // Triangular solve from the top power of u downwards.
    for (std::int64_t k = n; k >= 0; --k) {
      const auto ki = static_cast<std::size_t>(k);
      const Rational coeff = target[ki] / falling[ki][ki];
      row[ki] = coeff;
      for (std::size_t i = 0; i <= ki; ++i) target[i] -= coeff * falling[ki][i];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ----- integer q -> 1 oracles ------------------------------------------------

inline Integer factorial(std::int64_t n) {
  Integer out = 1;
  for (std::int64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// Stirling numbers of the second kind by inclusion-exclusion.
inline Integer stirling2(std::int64_t n, std::int64_t k) {
  Integer sum = 0;
  for (std::int64_t j = 0; j <= k; ++j) {
    Integer p = 1;
    for (std::int64_t i = 0; i < n; ++i) p *= j;
    const Integer term = binomial(k, j) * p;
    sum += (k - j) % 2 == 0 ? term : Integer(-term);
  }
  return sum / factorial(k);
}

// Unsigned Lah numbers n!/k! C(n-1, k-1).
inline Integer classical_lah(std::int64_t n, std::int64_t k) {
  if (n == 0 && k == 0) return 1;
  if (k < 1 || k > n) return 0;
  return factorial(n) / factorial(k) * binomial(n - 1, k - 1);
}

// Bell numbers by the Bell triangle.
inline std::vector<Integer> bell_numbers(std::int64_t nmax) {
  std::vector<Integer> bell{1};
  std::vector<Integer> row{1};
  for (std::int64_t n = 1; n <= nmax; ++n) {
    std::vector<Integer> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

// r-Whitney-Lah numbers at q = 1 via the Cheon-Jung recurrence.
inline IntegerRows cheon_jung(std::int64_t m, std::int64_t r, std::int64_t nmax) {
  IntegerRows rows{{Integer(1)}};
  for (std::int64_t n = 1; n <= nmax; ++n) {
    std::vector<Integer> row(static_cast<std::size_t>(n) + 1, Integer(0));
    const auto& prev = rows.back();
    for (std::int64_t k = 0; k <= n; ++k) {
      Integer v = 0;
      if (k >= 1) v += prev[static_cast<std::size_t>(k - 1)];
      if (k <= n - 1) v += Integer(2 * r + k * m + (n - 1) * m) * prev[static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(k)] = v;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ----- helpers ---------------------------------------------------------------

// Dense constructor: coefficients of q^low, q^(low+1), ...
inline qwhitney::LaurentPoly poly(std::int64_t low, std::initializer_list<long> coeffs) {
  std::vector<qwhitney::LaurentPoly::Term> terms;
  std::int64_t e = low;
  for (long c : coeffs) terms.push_back({e++, qwhitney::BigCoeff(c)});
  return qwhitney::LaurentPoly::from_terms(std::move(terms));
}

inline qwhitney::LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 6, int exp_range = 8, long coeff_range = 20) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<std::int64_t> exp(-exp_range, exp_range);
  std::uniform_int_distribution<long> coeff(-coeff_range, coeff_range);
  std::vector<qwhitney::LaurentPoly::Term> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) terms.push_back({exp(rng), qwhitney::BigCoeff(coeff(rng))});
  return qwhitney::LaurentPoly::from_terms(std::move(terms));
}

}  // namespace oracle
