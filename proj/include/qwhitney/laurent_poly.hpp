#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace qwhitney {

using BigCoeff = mpz_class;
using RationalValue = mpq_class;
using Exponent = std::int64_t;

/**
 * Sparse Laurent polynomial in q with arbitrary-precision integer
 * coefficients.
 *
 * Terms are kept sorted by ascending exponent and no stored coefficient is
 * zero, so structural equality is polynomial equality. Values are immutable
 * from the outside except through the compound assignment operators.
 */
class LaurentPoly {
 public:
  struct Term {
    Exponent exponent;
    BigCoeff coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;

  // Constant polynomial.
  LaurentPoly(long value);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const BigCoeff& value);

  static LaurentPoly monomial(const BigCoeff& coeff, Exponent exponent);
  static LaurentPoly q_power(Exponent exponent);

  // Builds a canonical polynomial from arbitrary terms: sorts, merges equal
  // exponents and drops zero coefficients.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  BigCoeff coeff(Exponent exponent) const;

  // Both require a nonzero polynomial.
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  bool is_monomial() const { return terms_.size() == 1; }
  // +-q^e, the units of Z[q, 1/q].
  bool is_unit() const;

  // Multiplies by q^shift.
  LaurentPoly shifted(Exponent shift) const;
  // Substitutes q -> q^factor (factor >= 1).
  LaurentPoly with_base_power(Exponent factor) const;
  LaurentPoly pow(unsigned exponent) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  explicit LaurentPoly(std::vector<Term> canonical) : terms_(std::move(canonical)) {}

  std::vector<Term> terms_;
};

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

// Returns c with b * c == a. Throws NonDivisible when no such Laurent
// polynomial exists and std::domain_error when b is zero.
LaurentPoly lp_exact_div(const LaurentPoly& a, const LaurentPoly& b);

struct QToOne {};
inline constexpr QToOne q_to_one{};

// Exact value at a rational point. Throws EvalAtZero for at == 0 when p has a
// negative exponent.
RationalValue lp_eval(const LaurentPoly& p, const RationalValue& at);
// q -> 1: the coefficient sum.
RationalValue lp_eval(const LaurentPoly& p, QToOne);

// Canonical text form, e.g. "-q^-2 - q^-1 + 2 + 3*q + q^3".
std::string to_string(const LaurentPoly& p);
// LaTeX body (no surrounding $), e.g. "-q^{-2} + 2 + 3q".
std::string to_latex(const LaurentPoly& p);
// Accepts the canonical form and reasonable variations (spacing, explicit
// coefficients, repeated exponents). Throws ParseError.
LaurentPoly parse_laurent(std::string_view text);

// {"terms":[{"e":-2,"c":"-1"}, ...]}
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

std::string to_string(const RationalValue& v);

// Overflow-checked exponent arithmetic; throws ExponentOverflow.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

}  // namespace qwhitney
