#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwhitney/laurent_poly.hpp"

namespace qwhitney {

/**
 * Polynomial in the formal variable u, where u stands for [t]_q, with
 * Laurent-polynomial coefficients in q.
 *
 * Every horizontal generating function in this library is a finite identity
 * between UPoly values, so comparing them is plain equality.
 */
class UPoly {
 public:
  UPoly() = default;
  // Constant polynomial.
  explicit UPoly(LaurentPoly constant);
  // Coefficients c_0..c_d of u^0..u^d; trailing zeros are dropped.
  explicit UPoly(std::vector<LaurentPoly> coeffs);

  // u^power.
  static UPoly u_power(std::size_t power);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  // Zero beyond the stored degree.
  const LaurentPoly& coeff(std::size_t i) const;
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

  // Substitutes u <- value.
  LaurentPoly evaluate(const LaurentPoly& value) const;

  UPoly& operator+=(const UPoly& other);
  UPoly& operator-=(const UPoly& other);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const LaurentPoly& s, const UPoly& p);

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();

  std::vector<LaurentPoly> coeffs_;
};

/// Power series in u truncated after u^order; arithmetic is exact modulo
/// u^(order+1).
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order);
  TruncSeries(std::size_t order, const UPoly& p);

  std::size_t order() const { return order_; }
  // Zero beyond the order.
  const LaurentPoly& coeff(std::size_t i) const;
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  void set_coeff(std::size_t i, LaurentPoly value);

  // Operands must share the same order.
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::size_t order_;
  std::vector<LaurentPoly> coeffs_;
};

/// [t + c]_q = [c]_q + q^c u.
UPoly bracket_linear(std::int64_t c);

/// [t - s | m]_{n,q} = prod_{i=0}^{n-1} [t - s - i m]_q as a polynomial in u.
UPoly falling_factorial_u(std::int64_t m, std::int64_t s, std::int64_t n);

/// [t + s | m]_{rising n,q} = prod_{i=0}^{n-1} [t + s + i m]_q.
UPoly rising_factorial_u(std::int64_t m, std::int64_t s, std::int64_t n);

/// Multiplicative inverse modulo u^(order+1). Throws NonUnitConstantTerm
/// unless the constant coefficient is +-q^e.
TruncSeries useries_inverse(const TruncSeries& s);

const LaurentPoly& upoly_coeff(const UPoly& p, std::size_t i);
const LaurentPoly& upoly_coeff(const TruncSeries& s, std::size_t i);

// "(c0)*u^0 + (c1)*u^1 + ..." with canonical Laurent coefficients; "0" when
// zero.
std::string to_string(const UPoly& p);

}  // namespace qwhitney
