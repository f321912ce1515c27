#include "qwhitney/audit.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qwhitney/errors.hpp"
#include "qwhitney/qalg.hpp"
#include "qwhitney/upoly.hpp"

namespace qwhitney {

namespace {

constexpr CheckInfo kRegistry[] = {
    {"C01_W_HORIZ_GF", "second kind: sum_k W[n,k] [t-r|m]_k = [t]^n", false},
    {"C02_W_FORM_SCALINGS", "second kind: q^{kr} W*[n,k] = q^{-m binom(k,2)} W[n,k]", false},
    {"C03_W_RECURRENCE_SIGN", "second kind: triangular recurrence, sign of r", true},
    {"C04_W_VERTICAL", "second kind: vertical recurrence", false},
    {"C05_W_HORIZONTAL", "second kind: horizontal recurrence", false},
    {"C06_W_EXPLICIT", "second kind: explicit formula", false},
    {"C07_W_EGF", "second kind: exponential generating function, coefficientwise", false},
    {"C08_W_RATIONAL_GF", "second kind: rational generating function", false},
    {"C09_LAH_HORIZ_GF", "Whitney-Lah: sum_k L[n,k] [t|m]_k = [t+2r|m]^(n)", false},
    {"C10_LAH_VERTICAL", "Whitney-Lah: vertical recurrence", true},
    {"C11_LAH_HORIZONTAL", "Whitney-Lah: horizontal recurrence", false},
    {"C12_ORTHOGONALITY", "first and second kind: both triangular products are the identity", false},
    {"C13_INVERSE_RELATIONS", "first and second kind: finite inverse relations", false},
    {"C14_LAH_COMPOSITION", "Whitney-Lah = first kind at -r times second kind", true},
    {"C15_WHITNEY_FROM_LAH", "second kind = second kind at -r times Whitney-Lah", true},
    {"C16_DOWLING_QI", "first-form Dowling numbers through Whitney-Lah row sums", true},
    {"C17_LAH_EXPLICIT", "Whitney-Lah: explicit formula, Newton coefficients, EGF coefficients", false},
    {"C18_LAH_DIAGONAL", "Whitney-Lah: diagonal boundary L[n,n]", true},
    {"C19_LAH_COLUMN_ZERO", "Whitney-Lah: column zero L[n,0]", true},
    {"C20_W1_RECURRENCE", "first kind: triangular recurrence", false},
    {"C21_W1_COLUMN_ZERO", "first kind: column zero w[n,0]", true},
    {"C22_W1_VALUE_TABLE", "first kind: table of values for n <= 2", true},
    {"C23_CLASSICAL_LAH_RECURRENCE", "q -> 1: Cheon-Jung recurrence for L(n,k)", false},
    {"C24_CLASSICAL_LAH_EXPLICIT", "q -> 1: explicit formula for L(n,k); classical Lah at m=1, r=0", false},
    {"C25_CLASSICAL_WHITNEY2", "q -> 1: r-Whitney recurrence; Stirling numbers at m=1, r=0", false},
    {"C26_CLASSICAL_DOWLING", "q -> 1: r-Dowling numbers; Bell numbers at m=1, r=0", false},
};

using Found = std::optional<Counterexample>;
using CheckFn = std::function<Found(Variant, Params, std::int64_t)>;

Found mismatch(std::int64_t n, std::int64_t k, const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Counterexample{n, k, lhs, rhs};
}

// Compares two u-polynomials coefficientwise; the counterexample index k is
// the power of u.
Found upoly_mismatch(std::int64_t n, const UPoly& lhs, const UPoly& rhs) {
  const auto len = std::max(lhs.coeffs().size(), rhs.coeffs().size());
  for (std::size_t i = 0; i < len; ++i) {
    if (auto f = mismatch(n, static_cast<std::int64_t>(i), lhs.coeff(i), rhs.coeff(i))) return f;
  }
  return std::nullopt;
}

// Runs cell(n, k) over 0 <= k <= n <= last in lexicographic order.
Found scan(std::int64_t first, std::int64_t last, const std::function<Found(std::int64_t, std::int64_t)>& cell) {
  for (std::int64_t n = first; n <= last; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      if (auto f = cell(n, k)) return f;
    }
  }
  return std::nullopt;
}

LaurentPoly from_integer(const BigCoeff& v) { return LaurentPoly(v); }

BigCoeff integer_at_one(const LaurentPoly& p) { return lp_eval(p, q_to_one).get_num(); }

// Integer triangles for the q -> 1 oracles.
using IntRows = std::vector<std::vector<BigCoeff>>;

BigCoeff int_entry(const IntRows& rows, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

IntRows integer_triangle(std::int64_t nmax, const std::function<BigCoeff(std::int64_t, std::int64_t)>& weight,
                         const std::function<BigCoeff(std::int64_t, std::int64_t)>& diag_weight) {
  IntRows rows{{BigCoeff(1)}};
  for (std::int64_t n = 1; n <= nmax; ++n) {
    std::vector<BigCoeff> row(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
      row[static_cast<std::size_t>(k)] =
          diag_weight(n, k) * int_entry(rows, n - 1, k - 1) + weight(n, k) * int_entry(rows, n - 1, k);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

BigCoeff int_factorial(std::int64_t n) {
  BigCoeff out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigCoeff int_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigCoeff out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// ---------------------------------------------------------------------------
// Individual checks. Each returns the first counterexample at one grid point.

Found check_w_horiz_gf(Variant, Params p, std::int64_t nmax) {
  for (std::int64_t n = 0; n <= nmax; ++n) {
    UPoly lhs;
    for (std::int64_t k = 0; k <= n; ++k) lhs += whitney2(p, n, k) * falling_factorial_u(p.m, p.r, k);
    if (auto f = upoly_mismatch(n, lhs, UPoly::u_power(static_cast<std::size_t>(n)))) return f;
  }
  return std::nullopt;
}

Found check_w_form_scalings(Variant, Params p, std::int64_t nmax) {
  return scan(0, nmax, [&](std::int64_t n, std::int64_t k) {
    const LaurentPoly lhs = whitney2_scaled(2, p, n, k).shifted(k * p.r);
    const LaurentPoly rhs = whitney2(p, n, k).shifted(-p.m * choose2(k));
    if (auto f = mismatch(n, k, lhs, rhs)) return f;
    return mismatch(n, k, whitney2_scaled(3, p, n, k), rhs);
  });
}

Found check_w_recurrence_sign(Variant v, Params p, std::int64_t nmax) {
  // The triangle the horizontal generating function forces is the inverse of
  // the falling-factorial coefficient matrix.
  const auto forced = get_inverse(Family::W1Falling, p, nmax);
  return scan(0, nmax, [&](std::int64_t n, std::int64_t k) {
    const LaurentPoly lhs = v == Variant::Verbatim ? whitney2_verbatim(p, n, k) : whitney2(p, n, k);
    return mismatch(n, k, lhs, forced->at(n, k));
  });
}

Found check_w_vertical(Variant, Params p, std::int64_t nmax) {
  return scan(0, nmax - 1, [&](std::int64_t n, std::int64_t k) {
    return mismatch(n, k, whitney2_vertical(p, n, k), whitney2(p, n + 1, k + 1));
  });
}

Found check_w_horizontal(Variant, Params p, std::int64_t nmax) {
  return scan(0, nmax - 1, [&](std::int64_t n, std::int64_t k) {
    return mismatch(n, k, whitney2_horizontal(p, n, k), whitney2(p, n, k));
  });
}

Found check_w_explicit(Variant, Params p, std::int64_t nmax) {
  return scan(0, nmax, [&](std::int64_t n, std::int64_t k) {
    return mismatch(n, k, whitney2_explicit(p, n, k), whitney2(p, n, k));
  });
}

Found check_w_egf(Variant, Params p, std::int64_t nmax) {
  return scan(0, nmax, [&](std::int64_t n, std::int64_t k) {
    return mismatch(n, k, whitney2_egf_coeff(p, n, k), whitney2(p, n, k));
  });
}

Found check_w_rational_gf(Variant, Params p, std::int64_t nmax) {
  std::vector<TruncSeries> series;
  for (std::int64_t k = 0; k <= nmax; ++k) series.push_back(whitney2_rational_gf(p, k, nmax));
  for (std::int64_t n = 0; n <= nmax; ++n) {
    for (std::int64_t k = 0; k <= nmax; ++k) {
      // Below the diagonal the series must vanish: Psi_k starts at u^k.
      const auto& s = series[static_cast<std::size_t>(k)];
      if (auto f = mismatch(n, k, s.coeff(static_cast<std::size_t>(n)), whitney2(p, n, k))) return f;
    }
  }
  return std::nullopt;
}

Found check_lah_horiz_gf(Variant, Params p, std::int64_t nmax) {
  for (std::int64_t n = 0; n <= nmax; ++n) {
    UPoly lhs;
    for (std::int64_t k = 0; k <= n; ++k) lhs += lah(p, n, k) * falling_factorial_u(p.m, 0, k);
    if (auto f = upoly_mismatch(n, lhs, rising_factorial_u(p.m, 2 * p.r, n))) return f;
  }
  return std::nullopt;
}

Found check_lah_vertical(Variant v, Params p, std::int64_t nmax) {
  return scan(0, nmax - 1, [&](std::int64_t n, std::int64_t k) {
    return mismatch(n, k, lah_vertical(v, p, n, k), lah(p, n + 1, k + 1));
  });
}

Found check_lah_horizontal(Variant, Params p, std::int64_t nmax) {
  return scan(0, nmax - 1, [&](std::int64_t n, std::int64_t k) {
    return mismatch(n, k, lah_horizontal(p, n, k), lah(p, n, k));
  });
}

Found check_orthogonality(Variant, Params p, std::int64_t nmax) {
  const auto w = get_triangle(Family::W1Falling, p, nmax);
  const auto big_w = get_triangle(Family::W2, p, nmax);
  return scan(0, nmax, [&](std::int64_t n, std::int64_t j) -> Found {
    const LaurentPoly delta(n == j ? 1L : 0L);
    LaurentPoly first;
    LaurentPoly second;
    for (std::int64_t k = j; k <= n; ++k) {
      first += w->at(n, k) * big_w->at(k, j);
      second += big_w->at(n, k) * w->at(k, j);
    }
    if (auto f = mismatch(n, j, first, delta)) return f;
    return mismatch(n, j, second, delta);
  });
}

// Test sequence for the inverse relations; any sequence works, this one has
// mixed signs and negative exponents for r < 0.
LaurentPoly inverse_relation_probe(Params p, std::int64_t k) {
  return q_bracket(k + p.r + 1).pow(2) - LaurentPoly(static_cast<long>(k)) + LaurentPoly::q_power(-k);
}

Found check_inverse_relations(Variant, Params p, std::int64_t nmax) {
  const auto w = get_triangle(Family::W1Falling, p, nmax);
  const auto big_w = get_triangle(Family::W2, p, nmax);
  std::vector<LaurentPoly> g;
  for (std::int64_t k = 0; k <= nmax; ++k) g.push_back(inverse_relation_probe(p, k));

  auto apply = [&](const Triangle& t, const std::vector<LaurentPoly>& x) {
    std::vector<LaurentPoly> out;
    for (std::int64_t n = 0; n <= nmax; ++n) {
      LaurentPoly acc;
      for (std::int64_t k = 0; k <= n; ++k) acc += t.at(n, k) * x[static_cast<std::size_t>(k)];
      out.push_back(std::move(acc));
    }
    return out;
  };
  // k = 0: f = w g implies g = W f; k = 1: f = W g implies g = w f.
  const auto back_first = apply(*big_w, apply(*w, g));
  const auto back_second = apply(*w, apply(*big_w, g));
  for (std::int64_t n = 0; n <= nmax; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (auto f = mismatch(n, 0, back_first[i], g[i])) return f;
    if (auto f = mismatch(n, 1, back_second[i], g[i])) return f;
  }
  return std::nullopt;
}

Found check_lah_composition(Variant v, Params p, std::int64_t nmax) {
  return scan(0, nmax, [&](std::int64_t n, std::int64_t j) {
    return mismatch(n, j, lah_via_composition(v, p, n, j), lah(p, n, j));
  });
}

Found check_whitney_from_lah(Variant v, Params p, std::int64_t nmax) {
  return scan(0, nmax, [&](std::int64_t n, std::int64_t j) {
    return mismatch(n, j, whitney_from_lah(v, p, n, j), whitney2(p, n, j));
  });
}

Found check_dowling_qi(Variant v, Params p, std::int64_t nmax) {
  for (std::int64_t n = 0; n <= nmax; ++n) {
    if (auto f = mismatch(n, 0, dowling_qi(v, p, n), dowling(p, 1, n))) return f;
  }
  return std::nullopt;
}

Found check_lah_explicit(Variant, Params p, std::int64_t nmax) {
  for (std::int64_t n = 0; n <= nmax; ++n) {
    const auto newton = newton_lah_coefficients(p, n);
    for (std::int64_t k = 0; k <= n; ++k) {
      const LaurentPoly expected = lah(p, n, k);
      if (auto f = mismatch(n, k, lah_explicit(p, n, k), expected)) return f;
      if (auto f = mismatch(n, k, newton[static_cast<std::size_t>(k)], expected)) return f;
      if (auto f = mismatch(n, k, lah_egf_coeff(p, n, k), expected)) return f;
    }
  }
  return std::nullopt;
}

Found check_lah_diagonal(Variant v, Params p, std::int64_t nmax) {
  for (std::int64_t n = 0; n <= nmax; ++n) {
    const LaurentPoly lhs = v == Variant::Verbatim ? LaurentPoly(1L) : lah(p, n, n);
    if (auto f = mismatch(n, n, lhs, lah_explicit(p, n, n))) return f;
  }
  return std::nullopt;
}

Found check_lah_column_zero(Variant v, Params p, std::int64_t nmax) {
  for (std::int64_t n = 0; n <= nmax; ++n) {
    LaurentPoly lhs(1L);
    if (v == Variant::Verbatim) {
      lhs = q_bracket(2 * p.r + (n - 1) * p.m).pow(static_cast<unsigned>(n));
    } else {
      for (std::int64_t i = 0; i < n; ++i) lhs *= q_bracket(2 * p.r + i * p.m);
    }
    if (auto f = mismatch(n, 0, lhs, lah(p, n, 0))) return f;
  }
  return std::nullopt;
}

Found check_w1_recurrence(Variant, Params p, std::int64_t nmax) {
  for (std::int64_t n = 0; n <= nmax; ++n) {
    const UPoly gf = falling_factorial_u(p.m, p.r, n);
    for (std::int64_t k = 0; k <= n; ++k) {
      if (auto f = mismatch(n, k, whitney1_falling(p, n, k), gf.coeff(static_cast<std::size_t>(k)))) return f;
    }
  }
  return std::nullopt;
}

Found check_w1_column_zero(Variant v, Params p, std::int64_t nmax) {
  for (std::int64_t n = 1; n <= nmax; ++n) {
    const LaurentPoly sgn(n % 2 == 0 ? 1L : -1L);
    LaurentPoly lhs;
    if (v == Variant::Verbatim) {
      lhs = sgn * q_bracket(p.r + (n - 1) * p.m).shifted(-p.r - (n - 1) * p.m);
    } else {
      lhs = sgn;
      for (std::int64_t i = 0; i < n; ++i) lhs *= q_bracket(p.r + i * p.m);
      lhs = lhs.shifted(-n * p.r - p.m * choose2(n));
    }
    if (auto f = mismatch(n, 0, lhs, falling_factorial_u(p.m, p.r, n).coeff(0))) return f;
  }
  return std::nullopt;
}

Found check_w1_value_table(Variant v, Params p, std::int64_t nmax) {
  const std::int64_t m = p.m;
  const std::int64_t r = p.r;
  // Rows 0..2 of the first-kind table; only the (2,0) entry differs between readings.
  const LaurentPoly w20 = v == Variant::Verbatim
                              ? q_bracket(r + m).shifted(-(r + m))
                              : (q_bracket(r) * q_bracket(r + m)).shifted(-(2 * r + m));
  const std::vector<std::vector<LaurentPoly>> table = {
      {LaurentPoly(1L)},
      {-q_bracket(r).shifted(-r), LaurentPoly::q_power(-r)},
      {w20, -(q_bracket(r) + q_bracket(r + m)).shifted(-(2 * r + m)), LaurentPoly::q_power(-(2 * r + m))},
  };
  for (std::int64_t n = 0; n <= std::min<std::int64_t>(nmax, 2); ++n) {
    const UPoly gf = falling_factorial_u(m, r, n);
    for (std::int64_t k = 0; k <= n; ++k) {
      const auto& cell = table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      if (auto f = mismatch(n, k, cell, gf.coeff(static_cast<std::size_t>(k)))) return f;
    }
  }
  return std::nullopt;
}

Found check_classical_lah_recurrence(Variant, Params p, std::int64_t nmax) {
  // L(n,k) = L(n-1,k-1) + (2r + km + (n-1)m) L(n-1,k), L(0,0) = 1
  const auto oracle = integer_triangle(
      nmax, [&](std::int64_t n, std::int64_t k) { return BigCoeff(2 * p.r + k * p.m + (n - 1) * p.m); },
      [](std::int64_t, std::int64_t) { return BigCoeff(1); });
  return scan(0, nmax, [&](std::int64_t n, std::int64_t k) {
    return mismatch(n, k, from_integer(integer_at_one(lah(p, n, k))), from_integer(int_entry(oracle, n, k)));
  });
}

Found check_classical_lah_explicit(Variant, Params p, std::int64_t nmax) {
  return scan(0, nmax, [&](std::int64_t n, std::int64_t k) -> Found {
    const BigCoeff at_one = integer_at_one(lah(p, n, k));
    // (1 / (k! m^k)) sum_j (-1)^{k-j} C(k,j) (2r + jm | m)^(n)
    BigCoeff sum = 0;
    for (std::int64_t j = 0; j <= k; ++j) {
      BigCoeff rising = 1;
      for (std::int64_t i = 0; i < n; ++i) rising *= 2 * p.r + j * p.m + i * p.m;
      const BigCoeff term = int_binomial(k, j) * rising;
      if ((k - j) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    BigCoeff denom = int_factorial(k);
    for (std::int64_t i = 0; i < k; ++i) denom *= p.m;
    if (!mpz_divisible_p(sum.get_mpz_t(), denom.get_mpz_t())) {
      return Counterexample{n, k, from_integer(at_one), LaurentPoly()};
    }
    if (auto f = mismatch(n, k, from_integer(at_one), from_integer(BigCoeff(sum / denom)))) return f;
    if (p.m == 1 && p.r == 0) {
      // n!/k! C(n-1, k-1), with L(0,0) = 1 and L(n,0) = 0 for n >= 1.
      BigCoeff classical = n == 0 && k == 0 ? BigCoeff(1) : BigCoeff(0);
      if (k >= 1) classical = int_factorial(n) / int_factorial(k) * int_binomial(n - 1, k - 1);
      return mismatch(n, k, from_integer(at_one), from_integer(classical));
    }
    return std::nullopt;
  });
}

Found check_classical_whitney2(Variant, Params p, std::int64_t nmax) {
  // W(n,k) = W(n-1,k-1) + (km + r) W(n-1,k)
  const auto oracle = integer_triangle(
      nmax, [&](std::int64_t, std::int64_t k) { return BigCoeff(k * p.m + p.r); },
      [](std::int64_t, std::int64_t) { return BigCoeff(1); });
  return scan(0, nmax, [&](std::int64_t n, std::int64_t k) {
    return mismatch(n, k, from_integer(integer_at_one(whitney2(p, n, k))), from_integer(int_entry(oracle, n, k)));
  });
}

Found check_classical_dowling(Variant, Params p, std::int64_t nmax) {
  const auto oracle = integer_triangle(
      nmax, [&](std::int64_t, std::int64_t k) { return BigCoeff(k * p.m + p.r); },
      [](std::int64_t, std::int64_t) { return BigCoeff(1); });
  // Bell triangle: each row starts with the last entry of the previous row.
  std::vector<BigCoeff> bell{1};
  std::vector<BigCoeff> row{1};
  for (std::int64_t n = 1; n <= nmax; ++n) {
    std::vector<BigCoeff> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = std::move(next);
  }
  for (std::int64_t n = 0; n <= nmax; ++n) {
    const BigCoeff at_one = integer_at_one(dowling(p, 1, n));
    BigCoeff sum = 0;
    for (std::int64_t k = 0; k <= n; ++k) sum += int_entry(oracle, n, k);
    if (auto f = mismatch(n, 0, from_integer(at_one), from_integer(sum))) return f;
    if (p.m == 1 && p.r == 0) {
      if (auto f = mismatch(n, 0, from_integer(at_one), from_integer(bell[static_cast<std::size_t>(n)]))) {
        return f;
      }
    }
  }
  return std::nullopt;
}

const std::map<std::string_view, CheckFn>& check_functions() {
  static const std::map<std::string_view, CheckFn> fns = {
      {"C01_W_HORIZ_GF", check_w_horiz_gf},
      {"C02_W_FORM_SCALINGS", check_w_form_scalings},
      {"C03_W_RECURRENCE_SIGN", check_w_recurrence_sign},
      {"C04_W_VERTICAL", check_w_vertical},
      {"C05_W_HORIZONTAL", check_w_horizontal},
      {"C06_W_EXPLICIT", check_w_explicit},
      {"C07_W_EGF", check_w_egf},
      {"C08_W_RATIONAL_GF", check_w_rational_gf},
      {"C09_LAH_HORIZ_GF", check_lah_horiz_gf},
      {"C10_LAH_VERTICAL", check_lah_vertical},
      {"C11_LAH_HORIZONTAL", check_lah_horizontal},
      {"C12_ORTHOGONALITY", check_orthogonality},
      {"C13_INVERSE_RELATIONS", check_inverse_relations},
      {"C14_LAH_COMPOSITION", check_lah_composition},
      {"C15_WHITNEY_FROM_LAH", check_whitney_from_lah},
      {"C16_DOWLING_QI", check_dowling_qi},
      {"C17_LAH_EXPLICIT", check_lah_explicit},
      {"C18_LAH_DIAGONAL", check_lah_diagonal},
      {"C19_LAH_COLUMN_ZERO", check_lah_column_zero},
      {"C20_W1_RECURRENCE", check_w1_recurrence},
      {"C21_W1_COLUMN_ZERO", check_w1_column_zero},
      {"C22_W1_VALUE_TABLE", check_w1_value_table},
      {"C23_CLASSICAL_LAH_RECURRENCE", check_classical_lah_recurrence},
      {"C24_CLASSICAL_LAH_EXPLICIT", check_classical_lah_explicit},
      {"C25_CLASSICAL_WHITNEY2", check_classical_whitney2},
      {"C26_CLASSICAL_DOWLING", check_classical_dowling},
  };
  return fns;
}

struct Task {
  const CheckInfo* info;
  Variant variant;
  Params params;
};

std::vector<Task> plan(std::span<const std::string> ids, const ParamGrid& grid) {
  std::vector<Task> tasks;
  for (const auto& id : ids) {
    const CheckInfo* info = find_check(id);
    if (info == nullptr) throw UnknownCheckId("unknown check id '" + id + "'");
    const std::vector<Variant> variants =
        info->has_variants ? std::vector<Variant>{Variant::Verbatim, Variant::Corrected}
                           : std::vector<Variant>{Variant::Verbatim};
    for (Variant v : variants) {
      for (auto m : grid.m_values) {
        for (auto r : grid.r_values) tasks.push_back({info, v, Params(m, r)});
      }
    }
  }
  return tasks;
}

std::vector<CheckResult> execute(const std::vector<Task>& tasks, std::int64_t nmax, unsigned threads) {
  std::vector<std::optional<CheckResult>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      try {
        auto found = check_functions().at(t.info->id)(t.variant, t.params, nmax);
        slots[i] = CheckResult{std::string(t.info->id), t.variant, t.params, !found.has_value(), std::move(found)};
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  std::vector<CheckResult> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

AuditReport assemble(std::vector<CheckResult> results) {
  AuditReport report;
  report.results = std::move(results);
  std::vector<std::string> seen;
  for (const auto& r : report.results) {
    if (std::find(seen.begin(), seen.end(), r.id) != seen.end()) continue;
    seen.push_back(r.id);
    const CheckInfo* info = find_check(r.id);
    if (!info->has_variants) continue;
    bool verbatim_fails = false;
    bool corrected_passes = true;
    for (const auto& other : report.results) {
      if (other.id != r.id) continue;
      if (other.variant == Variant::Verbatim && !other.passed) verbatim_fails = true;
      if (other.variant == Variant::Corrected && !other.passed) corrected_passes = false;
    }
    if (verbatim_fails && corrected_passes) report.errata.push_back(r.id);
  }
  return report;
}

std::vector<std::string> all_ids() {
  std::vector<std::string> ids;
  for (const auto& c : kRegistry) ids.emplace_back(c.id);
  return ids;
}

}  // namespace

std::span<const CheckInfo> check_registry() { return kRegistry; }

const CheckInfo* find_check(std::string_view id) {
  for (const auto& c : kRegistry) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

ParamGrid ParamGrid::standard(std::int64_t nmax) { return {{1, 2, 3}, {-2, -1, 0, 1, 2, 3}, nmax}; }

void ParamGrid::validate() const {
  if (m_values.empty() || r_values.empty()) throw std::invalid_argument("parameter grid is empty");
  for (auto m : m_values) {
    if (m < 1) throw std::invalid_argument("grid m values must be >= 1");
  }
  if (nmax < 2) throw std::invalid_argument("grid nmax must be >= 2");
}

std::vector<CheckResult> run_check(std::string_view id, const ParamGrid& grid) {
  grid.validate();
  const std::vector<std::string> ids{std::string(id)};
  return execute(plan(ids, grid), grid.nmax, 1);
}

std::vector<CheckResult> classical_limit_check(const ParamGrid& grid) {
  grid.validate();
  const std::vector<std::string> ids{"C23_CLASSICAL_LAH_RECURRENCE", "C24_CLASSICAL_LAH_EXPLICIT",
                                     "C25_CLASSICAL_WHITNEY2", "C26_CLASSICAL_DOWLING"};
  return execute(plan(ids, grid), grid.nmax, 1);
}

AuditReport run_selected(std::span<const std::string> ids, const ParamGrid& grid, unsigned threads) {
  grid.validate();
  return assemble(execute(plan(ids, grid), grid.nmax, threads));
}

AuditReport run_all(const ParamGrid& grid, unsigned threads) {
  const auto ids = all_ids();
  return run_selected(ids, grid, threads);
}

std::size_t AuditReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; }));
}

std::size_t AuditReport::failed() const { return results.size() - passed(); }

bool AuditReport::clean() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) {
    const CheckInfo* info = find_check(r.id);
    const bool expected_finding = info->has_variants && r.variant == Variant::Verbatim;
    return r.passed || expected_finding;
  });
}

nlohmann::json AuditReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json entry = {{"id", r.id},
                            {"variant", std::string(variant_name(r.variant))},
                            {"m", r.params.m},
                            {"r", r.params.r},
                            {"status", r.passed ? "pass" : "fail"}};
    if (r.counterexample) {
      entry["counterexample"] = {{"n", r.counterexample->n},
                                 {"k", r.counterexample->k},
                                 {"lhs", to_string(r.counterexample->lhs)},
                                 {"rhs", to_string(r.counterexample->rhs)}};
    }
    checks.push_back(std::move(entry));
  }
  nlohmann::json errata_json = nlohmann::json::array();
  for (const auto& id : errata) {
    errata_json.push_back({{"id", id}, {"claim", std::string(find_check(id)->claim)}});
  }
  return {{"checks", std::move(checks)},
          {"errata", std::move(errata_json)},
          {"summary", {{"total", results.size()}, {"passed", passed()}, {"failed", failed()}, {"clean", clean()}}}};
}

std::string AuditReport::to_table() const {
  std::ostringstream os;
  // One line per (check, variant): grid points passed and the first failure.
  std::vector<std::pair<std::string, Variant>> order;
  for (const auto& r : results) {
    const std::pair<std::string, Variant> key{r.id, r.variant};
    if (std::find(order.begin(), order.end(), key) == order.end()) order.push_back(key);
  }
  for (const auto& [id, variant] : order) {
    std::size_t total = 0;
    std::size_t ok = 0;
    const CheckResult* first_fail = nullptr;
    for (const auto& r : results) {
      if (r.id != id || r.variant != variant) continue;
      ++total;
      if (r.passed) {
        ++ok;
      } else if (first_fail == nullptr) {
        first_fail = &r;
      }
    }
    os << id;
    for (std::size_t pad = id.size(); pad < 30; ++pad) os << ' ';
    os << (variant == Variant::Verbatim ? "VERBATIM " : "CORRECTED") << "  " << (ok == total ? "PASS" : "FAIL")
       << "  " << ok << "/" << total;
    if (first_fail != nullptr) {
      const auto& c = *first_fail->counterexample;
      os << "  first: m=" << first_fail->params.m << " r=" << first_fail->params.r << " n=" << c.n
         << " k=" << c.k << ": " << to_string(c.lhs) << " != " << to_string(c.rhs);
    }
    os << '\n';
  }
  os << "errata:";
  if (errata.empty()) os << " none";
  os << '\n';
  for (const auto& id : errata) os << "  " << id << "  " << find_check(id)->claim << '\n';
  os << "summary: " << passed() << " passed, " << failed() << " failed, " << (clean() ? "clean" : "NOT clean")
     << '\n';
  return os.str();
}

}  // namespace qwhitney
