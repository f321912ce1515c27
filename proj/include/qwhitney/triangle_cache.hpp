#pragma once

#include <filesystem>
#include <memory>

#include <json.hpp>

#include "qwhitney/triangles.hpp"

namespace qwhitney {

// {"family", "m", "r", "rows": [[<Laurent JSON>, ...], ...]}
nlohmann::json triangle_to_json(const Triangle& t);

// Parses and validates a cached document. Throws ParseError for malformed
// JSON structure and std::invalid_argument for invariant violations.
Triangle triangle_from_json(const nlohmann::json& j);

/**
 * Opt-in directory of triangle documents, one file per (family, m, r).
 *
 * A cached file is trusted only after it re-validates; stale, short or
 * corrupt files are recomputed and rewritten.
 */
class TriangleCache {
 public:
  explicit TriangleCache(std::filesystem::path dir);

  std::filesystem::path file_for(Family family, Params params) const;

  std::shared_ptr<const Triangle> load_or_compute(Family family, Params params, std::int64_t nmax);

  // Statistics for the last load_or_compute call.
  bool last_was_hit() const { return last_hit_; }

 private:
  std::filesystem::path dir_;
  bool last_hit_ = false;
};

}  // namespace qwhitney
