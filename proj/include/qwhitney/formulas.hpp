#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "qwhitney/laurent_poly.hpp"
#include "qwhitney/triangles.hpp"
#include "qwhitney/upoly.hpp"

namespace qwhitney {

/// Selects an identity exactly as printed or in its derivation-consistent
/// form.
enum class Variant { Verbatim, Corrected };

std::string_view variant_name(Variant v);  // "VERBATIM" / "CORRECTED"

/// f_q(x) sampled on integer nodes.
using GridFunction = std::function<LaurentPoly(std::int64_t)>;

/// k-th q-difference in base q^h with step h, at x = 0:
///   sum_j (-1)^{k-j} q^{h binom(k-j,2)} C[k,j]_{q^h} f(j h).
LaurentPoly q_difference(const GridFunction& f, std::int64_t k, std::int64_t h);

/// [k]_{q^m}! [m]_q^k, the common denominator of the explicit formulas.
LaurentPoly newton_denominator(std::int64_t k, std::int64_t m);

// Second kind, closed forms and alternative recurrences. Each equals
// whitney2(params, n, k); whitney2_vertical yields W[n+1, k+1].
LaurentPoly whitney2_explicit(Params params, std::int64_t n, std::int64_t k);
LaurentPoly whitney2_egf_coeff(Params params, std::int64_t n, std::int64_t k);
LaurentPoly whitney2_vertical(Params params, std::int64_t n, std::int64_t k);
LaurentPoly whitney2_horizontal(Params params, std::int64_t n, std::int64_t k);

/// Truncation to u^order of
///   q^{m binom(k,2) + k r} u^k / prod_{j=0}^{k} (1 - [m j + r]_q u).
/// Throws std::invalid_argument when order < k.
TruncSeries whitney2_rational_gf(Params params, std::int64_t k, std::int64_t order);

// Whitney-Lah, closed forms and alternative recurrences.
LaurentPoly lah_explicit(Params params, std::int64_t n, std::int64_t k);
LaurentPoly lah_egf_coeff(Params params, std::int64_t n, std::int64_t k);
/// Newton coefficients a_0..a_n of x -> [x + 2r | m]_{rising n,q} on the
/// nodes 0, m, 2m, ..., solved by forward substitution.
std::vector<LaurentPoly> newton_lah_coefficients(Params params, std::int64_t n);
/// Candidate value of L[n+1, k+1].
LaurentPoly lah_vertical(Variant variant, Params params, std::int64_t n, std::int64_t k);
LaurentPoly lah_horizontal(Params params, std::int64_t n, std::int64_t k);

// Composition identities. CORRECTED routes go through the rising-kind
// first-kind numbers and their inverse; VERBATIM routes use the families at
// parameter -r exactly as printed.
LaurentPoly lah_via_composition(Variant variant, Params params, std::int64_t n, std::int64_t j);
LaurentPoly whitney_from_lah(Variant variant, Params params, std::int64_t n, std::int64_t j);
LaurentPoly dowling_qi(Variant variant, Params params, std::int64_t n);

}  // namespace qwhitney
