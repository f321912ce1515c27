#include "qwhitney/cli.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwhitney/errors.hpp"
#include "qwhitney/formulas.hpp"
#include "qwhitney/triangle_cache.hpp"

namespace qwhitney::cli {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::int64_t> parse_values(std::string_view text) {
  text = trim(text);
  std::vector<std::int64_t> out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const auto lo = parse_int(trim(text.substr(0, dots)));
    const auto hi = parse_int(trim(text.substr(dots + 2)));
    if (hi < lo) throw std::invalid_argument("empty range '" + std::string(text) + "'");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_int(trim(piece)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string latex_rational(const RationalValue& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  const bool negative = sgn(v) < 0;
  const BigCoeff num = abs(v.get_num());
  return std::string(negative ? "-" : "") + "\\frac{" + num.get_str() + "}{" + v.get_den().get_str() + "}";
}

RationalValue specialize(const LaurentPoly& p, const RationalValue& q) {
  if (q == 1) return lp_eval(p, q_to_one);
  return lp_eval(p, q);
}

std::string cell(const LaurentPoly& p, Format format, const Specialization& q) {
  if (!q) return format == Format::Latex ? to_latex(p) : to_string(p);
  const RationalValue v = specialize(p, *q);
  return format == Format::Latex ? latex_rational(v) : to_string(v);
}

nlohmann::json json_cell(const LaurentPoly& p, const Specialization& q) {
  if (!q) return to_json(p);
  return to_string(specialize(p, *q));
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Format parse_format(const std::string& name) {
  static const std::map<std::string, Format> formats = {
      {"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}, {"latex", Format::Latex}};
  const auto it = formats.find(name);
  if (it == formats.end()) throw std::invalid_argument("unknown format '" + name + "'");
  return it->second;
}

// Usage errors raised after flag parsing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void emit(const CliConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + cfg.output + "'");
  file << text;
}

std::shared_ptr<const Triangle> obtain_triangle(const CliConfig& cfg, Family family, Params params) {
  if (cfg.cache_dir.empty()) return get_triangle(family, params, cfg.nmax);
  TriangleCache cache(cfg.cache_dir);
  return cache.load_or_compute(family, params, cfg.nmax);
}

int cmd_table(const CliConfig& cfg, std::ostream& out) {
  const auto t = obtain_triangle(cfg, cfg.family, Params(cfg.m, cfg.r));
  emit(cfg, render_table(*t, cfg.nmax, cfg.format, cfg.q), out);
  return 0;
}

Family form_family(int form) {
  switch (form) {
    case 1: return Family::W2;
    case 2: return Family::W2Form2;
    case 3: return Family::W2Form3;
    default: throw UsageError("form must be 1, 2 or 3");
  }
}

int cmd_dowling(const CliConfig& cfg, std::ostream& out) {
  const Family family = form_family(cfg.form);
  const Params params(cfg.m, cfg.r);
  const auto t = obtain_triangle(cfg, family, params);
  std::vector<LaurentPoly> values;
  for (std::int64_t n = 0; n <= cfg.nmax; ++n) {
    LaurentPoly sum;
    for (const auto& v : t->row(n)) sum += v;
    values.push_back(std::move(sum));
  }
  emit(cfg, render_sequence(values, cfg.format, cfg.q), out);
  return 0;
}

int cmd_expand(const CliConfig& cfg, std::ostream& out) {
  if (cfg.k < 0) throw UsageError("k must be >= 0");
  if (cfg.order < cfg.k) throw UsageError("order must be >= k");
  const auto series = whitney2_rational_gf(Params(cfg.m, cfg.r), cfg.k, cfg.order);
  emit(cfg, render_expansion(series, cfg.k, cfg.format, cfg.q), out);
  return 0;
}

int cmd_audit(const CliConfig& cfg, bool nmax_given, std::ostream& out) {
  ParamGrid grid = parse_grid(cfg.grid, nmax_given ? cfg.nmax : 12);
  std::vector<std::string> ids = cfg.checks;
  if (ids.empty()) {
    for (const auto& c : check_registry()) ids.emplace_back(c.id);
  }
  for (const auto& id : ids) {
    if (find_check(id) == nullptr) throw UnknownCheckId("unknown check id '" + id + "'");
  }
  const AuditReport report = run_selected(ids, grid, cfg.threads);
  const std::string json_text = report.to_json().dump(2) + "\n";
  if (!cfg.json_path.empty()) {
    std::ofstream file(cfg.json_path, std::ios::binary);
    if (!file) throw UsageError("cannot open json file '" + cfg.json_path + "'");
    file << json_text;
  }
  emit(cfg, cfg.format == Format::Json ? json_text : report.to_table(), out);
  return report.clean() ? 0 : 1;
}

}  // namespace

ParamGrid parse_grid(std::string_view text, std::int64_t default_nmax) {
  ParamGrid grid = ParamGrid::standard(default_nmax);
  text = trim(text);
  std::size_t start = 0;
  while (start < text.size()) {
    const auto semi = text.find(';', start);
    const auto part = trim(text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
    start = semi == std::string_view::npos ? text.size() : semi + 1;
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("grid entry needs key=value: '" + std::string(part) + "'");
    const auto key = trim(part.substr(0, eq));
    const auto values = parse_values(part.substr(eq + 1));
    if (key == "m") {
      grid.m_values = values;
    } else if (key == "r") {
      grid.r_values = values;
    } else if (key == "nmax") {
      if (values.size() != 1) throw std::invalid_argument("grid nmax takes a single value");
      grid.nmax = values.front();
    } else {
      throw std::invalid_argument("unknown grid key '" + std::string(key) + "'");
    }
  }
  grid.validate();
  return grid;
}

RationalValue parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return RationalValue(BigCoeff(std::string(text.empty() ? "x" : text)));
  const std::string num(trim(text.substr(0, slash)));
  const std::string den(trim(text.substr(slash + 1)));
  RationalValue v;
  try {
    v = RationalValue(BigCoeff(num), BigCoeff(den));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  v.canonicalize();
  return v;
}

std::string render_table(const Triangle& t, std::int64_t nmax, Format format, const Specialization& q) {
  std::ostringstream os;
  switch (format) {
    case Format::Text:
      for (std::int64_t n = 0; n <= nmax; ++n) {
        for (std::int64_t k = 0; k <= n; ++k) os << (k > 0 ? ", " : "") << cell(t.at(n, k), format, q);
        os << '\n';
      }
      break;
    case Format::Csv:
      os << "n,k,value\n";
      for (std::int64_t n = 0; n <= nmax; ++n) {
        for (std::int64_t k = 0; k <= n; ++k) os << n << ',' << k << ',' << csv_quote(cell(t.at(n, k), format, q)) << '\n';
      }
      break;
    case Format::Json: {
      nlohmann::json rows = nlohmann::json::array();
      for (std::int64_t n = 0; n <= nmax; ++n) {
        nlohmann::json row = nlohmann::json::array();
        for (std::int64_t k = 0; k <= n; ++k) row.push_back(json_cell(t.at(n, k), q));
        rows.push_back(std::move(row));
      }
      const nlohmann::json doc = {{"family", std::string(family_name(t.family()))},
                                  {"m", t.params().m},
                                  {"r", t.params().r},
                                  {"rows", std::move(rows)}};
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::Latex:
      os << "\\begin{tabular}{r|" << std::string(static_cast<std::size_t>(nmax) + 1, 'c') << "}\n";
      os << "$n \\backslash k$";
      for (std::int64_t k = 0; k <= nmax; ++k) os << " & " << k;
      os << " \\\\\n\\hline\n";
      for (std::int64_t n = 0; n <= nmax; ++n) {
        os << n;
        for (std::int64_t k = 0; k <= n; ++k) os << " & $" << cell(t.at(n, k), format, q) << '$';
        for (std::int64_t k = n + 1; k <= nmax; ++k) os << " & ";
        os << " \\\\\n";
      }
      os << "\\end{tabular}\n";
      break;
  }
  return os.str();
}

std::string render_sequence(const std::vector<LaurentPoly>& values, Format format, const Specialization& q) {
  std::ostringstream os;
  switch (format) {
    case Format::Text:
      for (std::size_t n = 0; n < values.size(); ++n) os << (n > 0 ? ", " : "") << cell(values[n], format, q);
      os << '\n';
      break;
    case Format::Csv:
      os << "n,value\n";
      for (std::size_t n = 0; n < values.size(); ++n) os << n << ',' << csv_quote(cell(values[n], format, q)) << '\n';
      break;
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& v : values) arr.push_back(json_cell(v, q));
      os << nlohmann::json{{"values", std::move(arr)}}.dump(2) << '\n';
      break;
    }
    case Format::Latex:
      os << "\\begin{tabular}{r|c}\n$n$ & value \\\\\n\\hline\n";
      for (std::size_t n = 0; n < values.size(); ++n) os << n << " & $" << cell(values[n], format, q) << "$ \\\\\n";
      os << "\\end{tabular}\n";
      break;
  }
  return os.str();
}

std::string render_expansion(const TruncSeries& series, std::int64_t k, Format format, const Specialization& q) {
  std::ostringstream os;
  const auto order = static_cast<std::int64_t>(series.order());
  switch (format) {
    case Format::Text:
      for (std::int64_t n = k; n <= order; ++n) {
        os << '(' << n << ", " << cell(series.coeff(static_cast<std::size_t>(n)), format, q) << ")\n";
      }
      break;
    case Format::Csv:
      os << "n,value\n";
      for (std::int64_t n = k; n <= order; ++n) {
        os << n << ',' << csv_quote(cell(series.coeff(static_cast<std::size_t>(n)), format, q)) << '\n';
      }
      break;
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (std::int64_t n = k; n <= order; ++n) {
        arr.push_back({{"n", n}, {"value", json_cell(series.coeff(static_cast<std::size_t>(n)), q)}});
      }
      os << nlohmann::json{{"k", k}, {"coefficients", std::move(arr)}}.dump(2) << '\n';
      break;
    }
    case Format::Latex:
      for (std::int64_t n = k; n <= order; ++n) {
        const auto c = cell(series.coeff(static_cast<std::size_t>(n)), format, q);
        os << (n > k ? " + " : "") << "\\left(" << c << "\\right)[t]_q^{" << n << "}";
      }
      os << '\n';
      break;
  }
  return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  std::string family_text = "w2";
  std::string format_text = "text";
  std::string q_text;

  CLI::App app{"Exact q-analogue Whitney, Whitney-Lah and Dowling numbers"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "parameter m >= 1")->check(CLI::PositiveNumber);
    sub->add_option("--r", cfg.r, "parameter r");
    sub->add_option("--nmax", cfg.nmax, "largest row index")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", format_text, "text, csv, json or latex")
        ->check(CLI::IsMember({"text", "csv", "json", "latex"}));
    sub->add_option("--q", q_text, "evaluate at q = 1 or a rational p/d");
    sub->add_option("--output", cfg.output, "write to this file instead of standard output");
    sub->add_option("--cache", cfg.cache_dir, "triangle cache directory");
  };

  auto* table = app.add_subcommand("table", "print a triangle");
  add_common(table);
  table->add_option("--family", family_text, "w2, w2-verbatim, w2-star, w2-tilde, w1, w1-rising or lah");

  auto* dowling_cmd = app.add_subcommand("dowling", "print Dowling numbers for n = 0..nmax");
  add_common(dowling_cmd);
  dowling_cmd->add_option("--form", cfg.form, "1 (W), 2 (W*) or 3 (W~)");

  auto* expand = app.add_subcommand("expand", "coefficients of the second-kind column generating function");
  add_common(expand);
  expand->add_option("--k", cfg.k, "column index");
  expand->add_option("--order", cfg.order, "truncation order");

  auto* audit = app.add_subcommand("audit", "verify every registered identity");
  add_common(audit);
  audit->add_option("--grid", cfg.grid, "e.g. \"m=1..3;r=-2..3;nmax=12\"");
  audit->add_option("--check", cfg.checks, "restrict to a check id (repeatable)");
  audit->add_option("--json", cfg.json_path, "also write the JSON report here");
  audit->add_option("--threads", cfg.threads, "worker threads, 0 = hardware concurrency");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    cfg.format = parse_format(format_text);
    if (!q_text.empty()) cfg.q = parse_rational(q_text);
    if (table->parsed()) {
      const auto family = family_from_name(family_text);
      if (!family) throw UsageError("unknown family '" + family_text + "'");
      cfg.family = *family;
      cfg.command = "table";
      return cmd_table(cfg, out);
    }
    if (dowling_cmd->parsed()) {
      cfg.command = "dowling";
      return cmd_dowling(cfg, out);
    }
    if (expand->parsed()) {
      cfg.command = "expand";
      return cmd_expand(cfg, out);
    }
    cfg.command = "audit";
    return cmd_audit(cfg, audit->count("--nmax") > 0, out);
  } catch (const std::invalid_argument& e) {  // includes UnknownCheckId, ParseError
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const EvalAtZero& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace qwhitney::cli
