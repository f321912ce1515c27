#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qwhitney/formulas.hpp"
#include "qwhitney/laurent_poly.hpp"
#include "qwhitney/triangles.hpp"

namespace qwhitney {

/// One registered identity. Checks with has_variants compare an as-printed
/// form against a corrected one; all others have a single (verbatim) reading.
struct CheckInfo {
  std::string_view id;
  std::string_view claim;
  bool has_variants;
};

/// The closed registry, in report order.
std::span<const CheckInfo> check_registry();
const CheckInfo* find_check(std::string_view id);

struct ParamGrid {
  std::vector<std::int64_t> m_values;
  std::vector<std::int64_t> r_values;
  std::int64_t nmax;

  // m in {1,2,3}, r in {-2..3}.
  static ParamGrid standard(std::int64_t nmax = 12);

  // Throws std::invalid_argument when empty, when some m < 1 or nmax < 2.
  void validate() const;
};

struct Counterexample {
  std::int64_t n;
  std::int64_t k;
  LaurentPoly lhs;
  LaurentPoly rhs;
};

struct CheckResult {
  std::string id;
  Variant variant;
  Params params;
  bool passed;
  // Present iff !passed; the lexicographically smallest failing (n, k).
  std::optional<Counterexample> counterexample;
};

/// Runs one check at every grid point (and for both variants when the check
/// has them). Throws UnknownCheckId.
std::vector<CheckResult> run_check(std::string_view id, const ParamGrid& grid);

/// The q -> 1 checks against integer oracles (Cheon-Jung recurrence,
/// classical Lah numbers, r-Whitney and Bell numbers).
std::vector<CheckResult> classical_limit_check(const ParamGrid& grid);

struct AuditReport {
  std::vector<CheckResult> results;
  // Checks whose VERBATIM reading fails somewhere on the grid while the
  // CORRECTED reading passes everywhere.
  std::vector<std::string> errata;

  std::size_t passed() const;
  std::size_t failed() const;
  // True iff every CORRECTED result and every single-reading result passes.
  bool clean() const;

  nlohmann::json to_json() const;
  std::string to_table() const;
};

/// Runs the whole registry; threads = 0 picks the hardware concurrency.
/// Output is independent of the thread count.
AuditReport run_all(const ParamGrid& grid, unsigned threads = 0);

/// Runs the listed checks only (same report semantics as run_all).
AuditReport run_selected(std::span<const std::string> ids, const ParamGrid& grid, unsigned threads = 0);

}  // namespace qwhitney
