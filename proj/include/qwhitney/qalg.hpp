#pragma once

#include <cstdint>

#include "qwhitney/laurent_poly.hpp"

namespace qwhitney {

/// The q-integer [n]_q = (1 - q^n)/(1 - q). For n >= 1 this is
/// 1 + q + ... + q^(n-1); for n <= -1 it is -(q^n + ... + q^-1).
LaurentPoly q_bracket(std::int64_t n);

/// [k]_{q^m}! = prod_{i=1..k} [i]_{q^m}. Throws std::invalid_argument for
/// k < 0 or m < 1.
LaurentPoly q_factorial_base(std::int64_t k, std::int64_t m);

/// Gaussian binomial in base q^m, zero outside 0 <= j <= k.
/// Throws std::invalid_argument for m < 1.
LaurentPoly q_binomial_base(std::int64_t k, std::int64_t j, std::int64_t m);

/// All Gaussian binomials C[k, 0..k] in base q^m, one q-Pascal row.
std::vector<LaurentPoly> q_binomial_row(std::int64_t k, std::int64_t m);

/// n choose 2, for the exponents q^{m binom(k,2)} that appear everywhere.
constexpr std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace qwhitney
