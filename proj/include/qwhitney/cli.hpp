#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwhitney/audit.hpp"
#include "qwhitney/laurent_poly.hpp"
#include "qwhitney/triangles.hpp"
#include "qwhitney/upoly.hpp"

namespace qwhitney::cli {

enum class Format { Text, Csv, Json, Latex };

// No value means symbolic output; q = 1 is evaluated as the coefficient sum.
using Specialization = std::optional<RationalValue>;

struct CliConfig {
  std::string command;
  std::int64_t m = 1;
  std::int64_t r = 0;
  std::int64_t nmax = 6;
  Family family = Family::W2;
  int form = 1;
  Format format = Format::Text;
  Specialization q;
  std::string output;  // empty: standard output
  std::string cache_dir;
  // expand
  std::int64_t k = 0;
  std::int64_t order = 6;
  // audit
  std::string grid;
  std::vector<std::string> checks;
  std::string json_path;
  unsigned threads = 0;
};

/// Parses "m=1..3;r=-2..3;nmax=12". Each value is a range a..b, a comma
/// list or a single integer; omitted keys take the standard grid values.
/// Throws std::invalid_argument.
ParamGrid parse_grid(std::string_view text, std::int64_t default_nmax = 12);

/// Parses "1", an integer or "p/d". Throws std::invalid_argument.
RationalValue parse_rational(std::string_view text);

// Renderers used by the subcommands; each returns the full output text.
std::string render_table(const Triangle& t, std::int64_t nmax, Format format, const Specialization& q);
std::string render_sequence(const std::vector<LaurentPoly>& values, Format format, const Specialization& q);
std::string render_expansion(const TruncSeries& series, std::int64_t k, Format format, const Specialization& q);

/// Full command-line entry point. Returns the process exit code:
/// 0 success, 1 audit not clean, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwhitney::cli
