#include "qwhitney/triangle_cache.hpp"

#include <fstream>
#include <string>

#include "qwhitney/errors.hpp"

namespace qwhitney {

nlohmann::json triangle_to_json(const Triangle& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::int64_t n = 0; n <= t.nmax(); ++n) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : t.row(n)) row.push_back(to_json(v));
    rows.push_back(std::move(row));
  }
  return {{"family", std::string(family_name(t.family()))},
          {"m", t.params().m},
          {"r", t.params().r},
          {"rows", std::move(rows)}};
}

Triangle triangle_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("m") || !j.contains("r") ||
      !j.contains("rows")) {
    throw ParseError("triangle document needs family, m, r and rows");
  }
  if (!j.at("family").is_string() || !j.at("m").is_number_integer() ||
      !j.at("r").is_number_integer() || !j.at("rows").is_array()) {
    throw ParseError("triangle document has fields of the wrong type");
  }
  const auto family = family_from_name(j.at("family").get<std::string>());
  if (!family) throw ParseError("unknown family '" + j.at("family").get<std::string>() + "'");
  const Params params(j.at("m").get<std::int64_t>(), j.at("r").get<std::int64_t>());

  std::vector<std::vector<LaurentPoly>> rows;
  for (const auto& row : j.at("rows")) {
    if (!row.is_array()) throw ParseError("triangle row is not an array");
    std::vector<LaurentPoly> values;
    for (const auto& cell : row) values.push_back(laurent_from_json(cell));
    rows.push_back(std::move(values));
  }
  return Triangle::from_rows(*family, params, std::move(rows));
}

TriangleCache::TriangleCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path TriangleCache::file_for(Family family, Params params) const {
  return dir_ / (std::string(family_name(family)) + "_m" + std::to_string(params.m) + "_r" +
                 std::to_string(params.r) + ".json");
}

std::shared_ptr<const Triangle> TriangleCache::load_or_compute(Family family, Params params,
                                                               std::int64_t nmax) {
  const auto path = file_for(family, params);
  last_hit_ = false;
  if (std::filesystem::exists(path)) {
    try {
      std::ifstream in(path);
      const auto doc = nlohmann::json::parse(in);
      auto loaded = triangle_from_json(doc);
      if (loaded.family() == family && loaded.params() == params && loaded.nmax() >= nmax) {
        last_hit_ = true;
        return std::make_shared<const Triangle>(std::move(loaded));
      }
    } catch (const std::exception&) {
      // Corrupt or invalid: fall through and recompute.
    }
  }
  auto fresh = get_triangle(family, params, nmax);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << triangle_to_json(*fresh).dump();
  }
  std::filesystem::rename(tmp, path);
  return fresh;
}

}  // namespace qwhitney
