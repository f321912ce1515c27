#include <doctest.h>

#include "oracle.hpp"
#include "qwhitney/formulas.hpp"
#include "qwhitney/qalg.hpp"

using namespace qwhitney;
using oracle::poly;

namespace {

template <class Fn>
void for_grid(Fn fn) {
  for (std::int64_t m = 1; m <= 3; ++m) {
    for (std::int64_t r = -2; r <= 3; ++r) fn(Params(m, r));
  }
}

}  // namespace

TEST_CASE("q_difference") {
  const GridFunction square = [](std::int64_t x) { return q_bracket(x).pow(2); };
  CHECK(q_difference(square, 2, 1) == poly(1, {1, 1}));
  CHECK(q_difference(square, 0, 1) == square(0));
  for (std::int64_t h = 1; h <= 3; ++h) CHECK(q_difference(square, 1, h) == square(h) - square(0));
  CHECK_THROWS_AS(q_difference(square, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(q_difference(square, 1, 0), std::invalid_argument);
}

TEST_CASE("q_difference is linear") {
  const GridFunction f = [](std::int64_t x) { return q_bracket(x + 2).pow(3); };
  const GridFunction g = [](std::int64_t x) { return q_bracket(x - 1) * LaurentPoly::q_power(x); };
  const LaurentPoly alpha = poly(-1, {2, 0, -3});
  const LaurentPoly beta = poly(2, {1, 1});
  const GridFunction combo = [&](std::int64_t x) { return alpha * f(x) + beta * g(x); };
  for (std::int64_t h = 1; h <= 3; ++h) {
    for (std::int64_t k = 0; k <= 6; ++k) {
      CHECK(q_difference(combo, k, h) == alpha * q_difference(f, k, h) + beta * q_difference(g, k, h));
    }
  }
}

TEST_CASE("whitney2_explicit examples") {
  CHECK(whitney2_explicit(Params(1, 0), 2, 2) == poly(1, {1}));
  CHECK(whitney2_explicit(Params(1, 1), 1, 1) == poly(1, {1}));
  for_grid([](Params p) {
    for (std::int64_t n = 0; n <= 4; ++n) CHECK(whitney2_explicit(p, n, 0) == q_bracket(p.r).pow(static_cast<unsigned>(n)));
  });
}

TEST_CASE("lah_explicit and Newton examples") {
  CHECK(lah_explicit(Params(1, 0), 2, 1) == poly(0, {1, 1}));
  CHECK(lah_explicit(Params(1, 0), 2, 2) == poly(2, {1}));
  for_grid([](Params p) {
    for (std::int64_t n = 0; n <= 4; ++n) {
      LaurentPoly column(1L);
      for (std::int64_t i = 0; i < n; ++i) column *= q_bracket(2 * p.r + i * p.m);
      CHECK(lah_explicit(p, n, 0) == column);
    }
    CHECK(newton_lah_coefficients(p, 0) == std::vector<LaurentPoly>{LaurentPoly(1L)});
  });
  CHECK(newton_lah_coefficients(Params(1, 0), 2) ==
        std::vector<LaurentPoly>{LaurentPoly(), poly(0, {1, 1}), poly(2, {1})});
  CHECK(newton_lah_coefficients(Params(1, 1), 1) == std::vector<LaurentPoly>{poly(0, {1, 1}), poly(2, {1})});
}

TEST_CASE("vertical and horizontal recurrence examples") {
  CHECK(whitney2_vertical(Params(1, 0), 1, 0) == LaurentPoly(1L));
  CHECK(whitney2_vertical(Params(1, 1), 1, 0) == poly(1, {2, 1}));
  CHECK(whitney2_horizontal(Params(1, 0), 2, 1) == LaurentPoly(1L));
  CHECK(whitney2_horizontal(Params(1, 1), 1, 0) == LaurentPoly(1L));
  CHECK(lah_vertical(Variant::Corrected, Params(1, 1), 1, 0) == poly(2, {1, 2, 2, 1}));
  CHECK(lah_vertical(Variant::Verbatim, Params(1, 1), 1, 0) != lah(Params(1, 1), 2, 1));
  CHECK(lah_horizontal(Params(1, 1), 1, 1) == poly(2, {1}));
  CHECK(lah_horizontal(Params(1, 0), 2, 1) == poly(0, {1, 1}));
  for_grid([](Params p) {
    for (std::int64_t k = 0; k <= 5; ++k) {
      CHECK(whitney2_vertical(p, k, k) == whitney2(p, k, k).shifted(p.m * k + p.r));
      CHECK(whitney2_horizontal(p, k, k) == whitney2(p, k, k));
      CHECK(lah_vertical(Variant::Corrected, p, k, k) == lah(p, k, k).shifted(2 * p.r + 2 * p.m * k));
      CHECK(lah_horizontal(p, k, k) == lah(p, k + 1, k + 1).shifted(-2 * p.r - 2 * p.m * k));
    }
  });
}

TEST_CASE("rational generating function examples") {
  const auto s0 = whitney2_rational_gf(Params(1, 0), 0, 3);
  CHECK(s0.coeff(0) == LaurentPoly(1L));
  for (std::size_t n = 1; n <= 3; ++n) CHECK(s0.coeff(n).is_zero());
  const auto s1 = whitney2_rational_gf(Params(1, 1), 0, 2);
  for (std::size_t n = 0; n <= 2; ++n) CHECK(s1.coeff(n) == LaurentPoly(1L));
  CHECK(whitney2_rational_gf(Params(1, 0), 2, 3).coeff(3) == poly(1, {2, 1}));
  CHECK(whitney2_rational_gf(Params(2, -1), 1, 1).coeff(1) == LaurentPoly::q_power(-1));
  CHECK_THROWS_AS(whitney2_rational_gf(Params(1, 0), 3, 2), std::invalid_argument);
}

TEST_CASE("EGF coefficient examples") {
  CHECK(whitney2_egf_coeff(Params(1, 0), 3, 2) == poly(1, {2, 1}));
  CHECK(whitney2_egf_coeff(Params(1, 1), 2, 2) == poly(3, {1}));
  CHECK(lah_egf_coeff(Params(1, 0), 2, 1) == poly(0, {1, 1}));
  CHECK(lah_egf_coeff(Params(1, 1), 2, 2) == poly(6, {1}));
  for_grid([](Params p) {
    CHECK(whitney2_egf_coeff(p, 0, 0) == LaurentPoly(1L));
    CHECK(lah_egf_coeff(p, 0, 0) == LaurentPoly(1L));
  });
}

TEST_CASE("composition examples") {
  CHECK(lah_via_composition(Variant::Corrected, Params(1, 1), 2, 2) == poly(6, {1}));
  CHECK(lah_via_composition(Variant::Corrected, Params(1, 1), 2, 0) == poly(0, {1, 2, 2, 1}));
  CHECK(lah_via_composition(Variant::Verbatim, Params(1, 0), 2, 2) == LaurentPoly(1L));
  CHECK(whitney_from_lah(Variant::Corrected, Params(1, 0), 2, 2) == poly(1, {1}));
  CHECK(whitney_from_lah(Variant::Verbatim, Params(1, 1), 2, 2) == poly(5, {1}));
  for_grid([](Params p) { CHECK(whitney_from_lah(Variant::Corrected, p, 0, 0) == LaurentPoly(1L)); });
  CHECK(dowling_qi(Variant::Corrected, Params(1, 0), 2) == poly(0, {1, 1}));
  CHECK(dowling_qi(Variant::Corrected, Params(1, 0), 0) == LaurentPoly(1L));
  CHECK(dowling_qi(Variant::Verbatim, Params(1, 0), 2) == poly(0, {1, 1, 1, 1}));
}

TEST_CASE("property: dual-path equality over the grid") {
  for_grid([](Params p) {
    for (std::int64_t n = 0; n <= 9; ++n) {
      const auto newton = newton_lah_coefficients(p, n);
      for (std::int64_t k = 0; k <= n; ++k) {
        const auto w = whitney2(p, n, k);
        REQUIRE(whitney2_explicit(p, n, k) == w);
        REQUIRE(whitney2_egf_coeff(p, n, k) == w);
        const auto l = lah(p, n, k);
        REQUIRE(lah_explicit(p, n, k) == l);
        REQUIRE(lah_egf_coeff(p, n, k) == l);
        REQUIRE(newton[static_cast<std::size_t>(k)] == l);
      }
    }
  });
}

TEST_CASE("property: recurrence paths over the grid") {
  for_grid([](Params p) {
    for (std::int64_t n = 0; n <= 9; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) {
        REQUIRE(whitney2_vertical(p, n, k) == whitney2(p, n + 1, k + 1));
        REQUIRE(whitney2_horizontal(p, n, k) == whitney2(p, n, k));
        REQUIRE(lah_vertical(Variant::Corrected, p, n, k) == lah(p, n + 1, k + 1));
        REQUIRE(lah_horizontal(p, n, k) == lah(p, n, k));
      }
    }
  });
}

TEST_CASE("property: rational GF coefficients up to N = 15") {
  for_grid([](Params p) {
    for (std::int64_t k = 0; k <= 15; ++k) {
      const auto s = whitney2_rational_gf(p, k, 15);
      for (std::int64_t n = 0; n <= 15; ++n) REQUIRE(s.coeff(static_cast<std::size_t>(n)) == whitney2(p, n, k));
    }
  });
}

TEST_CASE("property: corrected composition chain over the grid") {
  for_grid([](Params p) {
    for (std::int64_t n = 0; n <= 9; ++n) {
      for (std::int64_t j = 0; j <= n; ++j) {
        REQUIRE(lah_via_composition(Variant::Corrected, p, n, j) == lah(p, n, j));
        REQUIRE(whitney_from_lah(Variant::Corrected, p, n, j) == whitney2(p, n, j));
      }
      REQUIRE(dowling_qi(Variant::Corrected, p, n) == dowling(p, 1, n));
    }
  });
}

TEST_CASE("explicit formulas agree with rational-point oracles") {
  const oracle::Rational x(3);
  for_grid([&](Params p) {
    const auto w2 = oracle::whitney2_at(p.m, p.r, 7, x);
    const auto l = oracle::lah_at(p.m, p.r, 7, x);
    for (std::int64_t n = 0; n <= 7; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) {
        REQUIRE(lp_eval(whitney2_explicit(p, n, k), x) == oracle::cell(w2, n, k));
        REQUIRE(lp_eval(lah_explicit(p, n, k), x) == oracle::cell(l, n, k));
      }
    }
  });
}
