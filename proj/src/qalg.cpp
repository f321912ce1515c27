#include "qwhitney/qalg.hpp"

#include <stdexcept>
#include <vector>

namespace qwhitney {

LaurentPoly q_bracket(std::int64_t n) {
  std::vector<LaurentPoly::Term> terms;
  if (n > 0) {
    terms.reserve(static_cast<std::size_t>(n));
    for (std::int64_t e = 0; e < n; ++e) terms.push_back({e, BigCoeff(1)});
  } else if (n < 0) {
    terms.reserve(static_cast<std::size_t>(-n));
    for (std::int64_t e = n; e < 0; ++e) terms.push_back({e, BigCoeff(-1)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly q_factorial_base(std::int64_t k, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("q_factorial_base: m must be >= 1");
  if (k < 0) throw std::invalid_argument("q_factorial_base: k must be >= 0");
  LaurentPoly out(1L);
  for (std::int64_t i = 1; i <= k; ++i) out *= q_bracket(i).with_base_power(m);
  return out;
}

std::vector<LaurentPoly> q_binomial_row(std::int64_t k, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("q_binomial: m must be >= 1");
  if (k < 0) throw std::invalid_argument("q_binomial: k must be >= 0");
  // q-Pascal: C[i, j] = C[i-1, j-1] + q^{m j} C[i-1, j].
  std::vector<LaurentPoly> row{LaurentPoly(1L)};
  for (std::int64_t i = 1; i <= k; ++i) {
    std::vector<LaurentPoly> next(static_cast<std::size_t>(i) + 1);
    next[0] = LaurentPoly(1L);
    next[static_cast<std::size_t>(i)] = LaurentPoly(1L);
    for (std::int64_t j = 1; j < i; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      next[uj] = row[uj - 1] + row[uj].shifted(checked_mul(m, j));
    }
    row = std::move(next);
  }
  return row;
}

LaurentPoly q_binomial_base(std::int64_t k, std::int64_t j, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("q_binomial_base: m must be >= 1");
  if (j < 0 || j > k) return {};
  return q_binomial_row(k, m)[static_cast<std::size_t>(j)];
}

}  // namespace qwhitney
