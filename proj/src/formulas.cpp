#include "qwhitney/formulas.hpp"

#include <stdexcept>

#include "qwhitney/qalg.hpp"

namespace qwhitney {

std::string_view variant_name(Variant v) {
  return v == Variant::Verbatim ? "VERBATIM" : "CORRECTED";
}

namespace {

LaurentPoly sign(std::int64_t exponent) { return LaurentPoly(exponent % 2 == 0 ? 1L : -1L); }

// prod_{i=0}^{n-1} [start + i m]_q
LaurentPoly rising_product(std::int64_t start, std::int64_t m, std::int64_t n) {
  LaurentPoly out(1L);
  for (std::int64_t i = 0; i < n; ++i) out *= q_bracket(start + i * m);
  return out;
}

// The alternating Gaussian-binomial weights (-1)^{k-j} q^{m binom(k-j,2)} C[k,j]_{q^m}.
std::vector<LaurentPoly> difference_weights(std::int64_t k, std::int64_t m) {
  auto weights = q_binomial_row(k, m);
  for (std::int64_t j = 0; j <= k; ++j) {
    auto& w = weights[static_cast<std::size_t>(j)];
    w = sign(k - j) * w.shifted(m * choose2(k - j));
  }
  return weights;
}

}  // namespace

LaurentPoly newton_denominator(std::int64_t k, std::int64_t m) {
  return q_factorial_base(k, m) * q_bracket(m).pow(static_cast<unsigned>(k));
}

LaurentPoly q_difference(const GridFunction& f, std::int64_t k, std::int64_t h) {
  if (k < 0) throw std::invalid_argument("q_difference: order k must be >= 0");
  if (h < 1) throw std::invalid_argument("q_difference: step h must be >= 1");
  const auto weights = difference_weights(k, h);
  LaurentPoly acc;
  for (std::int64_t j = 0; j <= k; ++j) acc += weights[static_cast<std::size_t>(j)] * f(j * h);
  return acc;
}

LaurentPoly whitney2_explicit(Params p, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return {};
  const auto binom = q_binomial_row(k, p.m);
  LaurentPoly sum;
  for (std::int64_t j = 0; j <= k; ++j) {
    const std::int64_t d = k - j;
    LaurentPoly term = binom[static_cast<std::size_t>(j)].shifted(p.m * choose2(d)) *
                       q_bracket(j * p.m + p.r).pow(static_cast<unsigned>(n));
    if (d % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return lp_exact_div(sum, newton_denominator(k, p.m));
}

LaurentPoly whitney2_egf_coeff(Params p, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return {};
  // The n-th coefficient of e_q([x + r]_q [t]_q) in [t]_q^n / [n]_q! is [x + r]_q^n.
  const GridFunction coefficient = [&](std::int64_t x) {
    return q_bracket(x + p.r).pow(static_cast<unsigned>(n));
  };
  return lp_exact_div(q_difference(coefficient, k, p.m), newton_denominator(k, p.m));
}

LaurentPoly whitney2_vertical(Params p, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return {};
  const LaurentPoly base = q_bracket(p.m * (k + 1) + p.r);
  LaurentPoly sum;
  LaurentPoly power(1L);
  // j runs downward so the power [m(k+1)+r]^{n-j} grows incrementally.
  for (std::int64_t j = n; j >= k; --j) {
    sum += power * whitney2(p, j, k);
    power *= base;
  }
  return sum.shifted(p.m * k + p.r);
}

LaurentPoly whitney2_horizontal(Params p, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return {};
  LaurentPoly sum;
  // ratio = r_{k+j+1,q} / r_{k+1,q} = prod_{h=k+1}^{k+j} q^{-r-mh+m} [mh + r]_q
  LaurentPoly ratio(1L);
  for (std::int64_t j = 0; j <= n - k; ++j) {
    if (j > 0) {
      const std::int64_t h = k + j;
      ratio = (ratio * q_bracket(p.m * h + p.r)).shifted(-p.r - p.m * h + p.m);
    }
    LaurentPoly term = (ratio * whitney2(p, n + 1, k + j + 1)).shifted(-p.r - p.m * (k + j));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

TruncSeries whitney2_rational_gf(Params p, std::int64_t k, std::int64_t order) {
  if (k < 0) throw std::invalid_argument("whitney2_rational_gf: k must be >= 0");
  if (order < k) throw std::invalid_argument("whitney2_rational_gf: order must be >= k");
  const auto n_order = static_cast<std::size_t>(order);

  UPoly denominator(LaurentPoly(1L));
  for (std::int64_t j = 0; j <= k; ++j) {
    denominator = denominator *
                  UPoly(std::vector<LaurentPoly>{LaurentPoly(1L), -q_bracket(p.m * j + p.r)});
  }
  TruncSeries numerator(n_order);
  numerator.set_coeff(static_cast<std::size_t>(k), LaurentPoly::q_power(p.m * choose2(k) + k * p.r));
  return numerator * useries_inverse(TruncSeries(n_order, denominator));
}

LaurentPoly lah_explicit(Params p, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return {};
  const auto binom = q_binomial_row(k, p.m);
  LaurentPoly sum;
  for (std::int64_t j = 0; j <= k; ++j) {
    const std::int64_t d = k - j;
    LaurentPoly term = binom[static_cast<std::size_t>(j)].shifted(p.m * choose2(d)) *
                       rising_product(2 * p.r + j * p.m, p.m, n);
    if (d % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return lp_exact_div(sum, newton_denominator(k, p.m));
}

LaurentPoly lah_egf_coeff(Params p, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return {};
  // The n-th coefficient of F[x + 2r, m, t] in [t]_q^n / [n]_q! is [x + 2r | m]_{rising n,q}.
  const GridFunction coefficient = [&](std::int64_t x) { return rising_product(x + 2 * p.r, p.m, n); };
  return lp_exact_div(q_difference(coefficient, k, p.m), newton_denominator(k, p.m));
}

std::vector<LaurentPoly> newton_lah_coefficients(Params p, std::int64_t n) {
  if (n < 0) return {};
  // Solve f(x_j) = sum_{k<=j} a_k N_k(x_j) with x_j = j m and
  // N_k(x) = [x]_q [x - m]_q ... [x - (k-1)m]_q; N_k(x_j) = 0 for k > j.
  std::vector<LaurentPoly> a;
  a.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t j = 0; j <= n; ++j) {
    LaurentPoly residual = rising_product(j * p.m + 2 * p.r, p.m, n);
    LaurentPoly basis(1L);  // N_k(x_j), built up as k increases
    for (std::int64_t k = 0; k < j; ++k) {
      residual -= a[static_cast<std::size_t>(k)] * basis;
      basis *= q_bracket((j - k) * p.m);
    }
    a.push_back(lp_exact_div(residual, basis));
  }
  return a;
}

LaurentPoly lah_vertical(Variant variant, Params p, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return {};
  const std::int64_t m = p.m;
  const std::int64_t r = p.r;
  LaurentPoly sum;
  if (variant == Variant::Corrected) {
    // sum_{j=k}^{n} q^{2r+mk+mj} (prod_{i=j+1}^{n} [2r+(k+1)m+im]_q) L[j,k]
    LaurentPoly product(1L);
    for (std::int64_t j = n; j >= k; --j) {
      sum += (product * lah(p, j, k)).shifted(2 * r + m * k + m * j);
      product *= q_bracket(2 * r + (k + 1) * m + j * m);
    }
    return sum;
  }
  // As printed: a j-independent product over i = 0..k.
  LaurentPoly product(1L);
  for (std::int64_t i = 0; i <= k; ++i) product *= q_bracket(2 * r + (k + 1) * m + (n - i) * m);
  for (std::int64_t j = k; j <= n; ++j) {
    sum += (product * lah(p, j, k)).shifted(2 * r + m * k + m * (n - j));
  }
  return sum;
}

LaurentPoly lah_horizontal(Params p, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return {};
  const std::int64_t m = p.m;
  const std::int64_t r = p.r;
  LaurentPoly sum;
  // ratio = prod_{h=k+1}^{k+j} q^{-2r-mh-nm+m} [mh + 2r + nm]_q
  LaurentPoly ratio(1L);
  for (std::int64_t j = 0; j <= n - k; ++j) {
    if (j > 0) {
      const std::int64_t h = k + j;
      ratio = (ratio * q_bracket(m * h + 2 * r + n * m)).shifted(-2 * r - m * h - n * m + m);
    }
    LaurentPoly term = (ratio * lah(p, n + 1, k + j + 1)).shifted(-2 * r - m * (k + j) - n * m);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

LaurentPoly lah_via_composition(Variant variant, Params p, std::int64_t n, std::int64_t j) {
  if (n < 0 || j < 0 || j > n) return {};
  LaurentPoly sum;
  if (variant == Variant::Corrected) {
    for (std::int64_t k = j; k <= n; ++k) sum += whitney1_rising(p, n, k) * whitney2(p, k, j);
  } else {
    const Params negated(p.m, -p.r);
    for (std::int64_t k = j; k <= n; ++k) sum += whitney1_falling(negated, n, k) * whitney2(p, k, j);
  }
  return sum;
}

LaurentPoly whitney_from_lah(Variant variant, Params p, std::int64_t n, std::int64_t j) {
  if (n < 0 || j < 0 || j > n) return {};
  LaurentPoly sum;
  if (variant == Variant::Corrected) {
    const auto inverse = get_inverse(Family::W1Rising, p, n);
    for (std::int64_t k = j; k <= n; ++k) sum += inverse->at(n, k) * lah(p, k, j);
  } else {
    const Params negated(p.m, -p.r);
    for (std::int64_t k = j; k <= n; ++k) sum += whitney2(negated, n, k) * lah(p, k, j);
  }
  return sum;
}

LaurentPoly dowling_qi(Variant variant, Params p, std::int64_t n) {
  if (n < 0) return {};
  LaurentPoly sum;
  if (variant == Variant::Corrected) {
    const auto inverse = get_inverse(Family::W1Rising, p, n);
    for (std::int64_t k = 0; k <= n; ++k) sum += inverse->at(n, k) * lah_row_sum(p, k);
  } else {
    const Params negated(p.m, -p.r);
    for (std::int64_t k = 0; k <= n; ++k) sum += whitney2(negated, n, k) * lah_row_sum(p, k);
  }
  return sum;
}

}  // namespace qwhitney
