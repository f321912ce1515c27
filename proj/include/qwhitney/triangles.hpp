#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qwhitney/laurent_poly.hpp"

namespace qwhitney {

/// The parameter pair (m, r); m >= 1, r any integer.
struct Params {
  std::int64_t m;
  std::int64_t r;

  // Throws std::invalid_argument for m < 1.
  Params(std::int64_t m_, std::int64_t r_);

  friend bool operator==(const Params&, const Params&) = default;
  friend auto operator<=>(const Params&, const Params&) = default;
};

enum class Family {
  W2,           // second kind, +r recurrence
  W2Verbatim,   // second kind, recurrence with the sign of r flipped
  W2Form2,      // q^{-kr - m binom(k,2)} W
  W2Form3,      // q^{-m binom(k,2)} W
  W1Falling,    // coefficients of [t - r | m]_{n,q} in powers of [t]_q
  W1Rising,     // coefficients of [t + r | m]_{rising n,q} in powers of [t]_q
  Lah,
};

inline constexpr Family kAllFamilies[] = {Family::W2,        Family::W2Verbatim, Family::W2Form2,
                                          Family::W2Form3,   Family::W1Falling,  Family::W1Rising,
                                          Family::Lah};

// Stable names: w2, w2-verbatim, w2-star, w2-tilde, w1, w1-rising, lah.
std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

/// Closed form of T[n,n] for each family; every diagonal entry is +-q^e.
LaurentPoly family_diagonal(Family family, Params params, std::int64_t n);

/**
 * A filled, read-only number triangle T[n,k] for 0 <= k <= n <= nmax.
 *
 * Rows are produced once by the family's recurrence seeded only by
 * T[0,0] = 1. Entries outside 0 <= k <= n read as zero.
 */
class Triangle {
 public:
  Triangle(Family family, Params params, std::int64_t nmax);

  // Adopts externally produced rows (cache loading). Throws
  // std::invalid_argument unless the shape is triangular, T[0,0] = 1 and the
  // diagonal matches family_diagonal.
  static Triangle from_rows(Family family, Params params, std::vector<std::vector<LaurentPoly>> rows);

  Family family() const { return family_; }
  Params params() const { return params_; }
  std::int64_t nmax() const { return static_cast<std::int64_t>(rows_.size()) - 1; }

  // Throws std::out_of_range for n > nmax.
  const LaurentPoly& at(std::int64_t n, std::int64_t k) const;
  std::span<const LaurentPoly> row(std::int64_t n) const;

 private:
  Triangle(Family family, Params params, std::vector<std::vector<LaurentPoly>> rows)
      : family_(family), params_(params), rows_(std::move(rows)) {}

  Family family_;
  Params params_;
  std::vector<std::vector<LaurentPoly>> rows_;
};

/// Process-wide memo of sealed triangles; returns a triangle with at least
/// nmax + 1 rows. Thread-safe.
std::shared_ptr<const Triangle> get_triangle(Family family, Params params, std::int64_t nmax);

LaurentPoly whitney2(Params params, std::int64_t n, std::int64_t k);
LaurentPoly whitney2_verbatim(Params params, std::int64_t n, std::int64_t k);
// form is 2 (W*) or 3 (W~); throws std::invalid_argument otherwise.
LaurentPoly whitney2_scaled(int form, Params params, std::int64_t n, std::int64_t k);
LaurentPoly whitney1_falling(Params params, std::int64_t n, std::int64_t k);
LaurentPoly whitney1_rising(Params params, std::int64_t n, std::int64_t k);
LaurentPoly lah(Params params, std::int64_t n, std::int64_t k);

/// Row sum of the second-kind form 1 (W), 2 (W*) or 3 (W~).
LaurentPoly dowling(Params params, int form, std::int64_t n);
LaurentPoly lah_row_sum(Params params, std::int64_t n);

/// Two-sided inverse of a lower-triangular matrix with unit diagonal entries,
/// computed by forward substitution over Z[q, 1/q].
class InverseMatrix {
 public:
  InverseMatrix(Family source, Params params, std::vector<std::vector<LaurentPoly>> rows)
      : source_(source), params_(params), rows_(std::move(rows)) {}

  Family source() const { return source_; }
  Params params() const { return params_; }
  std::int64_t nmax() const { return static_cast<std::int64_t>(rows_.size()) - 1; }
  const LaurentPoly& at(std::int64_t n, std::int64_t k) const;

 private:
  Family source_;
  Params params_;
  std::vector<std::vector<LaurentPoly>> rows_;
};

/// Throws NonUnitDiagonal if some T[n,n] is not +-q^e.
InverseMatrix invert_unit_triangular(const Triangle& source, std::int64_t nmax);
InverseMatrix invert_unit_triangular(Family family, Params params, std::int64_t nmax);

/// Memoized invert_unit_triangular(family, params, >= nmax). Thread-safe.
std::shared_ptr<const InverseMatrix> get_inverse(Family family, Params params, std::int64_t nmax);

}  // namespace qwhitney
