#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracle.hpp"
#include "qwhitney/cli.hpp"
#include "qwhitney/triangle_cache.hpp"

using namespace qwhitney;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qwhitney");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("table") {
  auto r = run({"table", "--family", "lah", "--m", "1", "--r", "0", "--nmax", "2"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"1", "0, 1", "0, 1 + q, q^2"});

  r = run({"table", "--family", "w1", "--m", "1", "--r", "1", "--nmax", "1", "--q", "1"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(1) == "-1, 1");

  r = run({"table", "--family", "w2", "--m", "2", "--r", "0", "--nmax", "0"});
  CHECK(r.out == "1\n");
}

TEST_CASE("dowling") {
  CHECK(run({"dowling", "--form", "1", "--m", "1", "--r", "0", "--nmax", "3"}).out == "1, 1, 1 + q, 1 + 2*q + q^2 + q^3\n");
  CHECK(run({"dowling", "--form", "1", "--m", "1", "--r", "0", "--nmax", "3", "--q", "1"}).out == "1, 1, 2, 5\n");
  CHECK(run({"dowling", "--form", "3", "--m", "1", "--r", "0", "--nmax", "1"}).out == "1, 1\n");
  CHECK(run({"dowling", "--form", "4"}).code == 2);
}

TEST_CASE("expand") {
  CHECK(run({"expand", "--k", "0", "--m", "1", "--r", "1", "--order", "2"}).out == "(0, 1)\n(1, 1)\n(2, 1)\n");
  CHECK(run({"expand", "--k", "2", "--m", "1", "--r", "0", "--order", "3"}).out == "(2, q)\n(3, 2*q + q^2)\n");
  CHECK(run({"expand", "--k", "1", "--m", "2", "--r", "3", "--order", "1"}).out == "(1, q^3)\n");
  const auto bad = run({"expand", "--k", "3", "--order", "2"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"table", "--family", "w9"}).code == 2);
  CHECK(run({"table", "--m", "0"}).code == 2);
  CHECK(run({"table", "--nmax", "-1"}).code == 2);
  CHECK(run({"table", "--format", "xml"}).code == 2);
  CHECK(run({"table", "--q", "1/0"}).code == 2);
  CHECK(run({"table", "--q", "abc"}).code == 2);
  CHECK(run({"table", "--family", "w1", "--r", "2", "--q", "0"}).code == 2);
  CHECK(run({"audit", "--check", "bogus"}).code == 2);
  CHECK(run({"audit", "--grid", "m=0"}).code == 2);
  CHECK(run({"audit", "--grid", "x=1"}).code == 2);
  CHECK(run({"audit", "--grid", "nmax=1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("audit subcommand") {
  const auto r = run({"audit", "--grid", "r=0", "--check", "C03_W_RECURRENCE_SIGN"});
  CHECK(r.code == 0);
  CHECK(r.out.find("C03_W_RECURRENCE_SIGN         VERBATIM   PASS  3/3") != std::string::npos);

  const auto json = run({"audit", "--grid", "m=1;r=1;nmax=3", "--check", "C03_W_RECURRENCE_SIGN", "--format", "json"});
  CHECK(json.code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["checks"][0]["status"] == "fail");
  CHECK(doc["errata"][0]["id"] == "C03_W_RECURRENCE_SIGN");

  const auto path = std::filesystem::temp_directory_path() / "qwhitney_cli_audit.json";
  const auto with_file =
      run({"audit", "--grid", "m=1,2;r=-1..1;nmax=3", "--check", "C12_ORTHOGONALITY", "--json", path.string()});
  CHECK(with_file.code == 0);
  std::ifstream in(path);
  const auto written = nlohmann::json::parse(in);
  CHECK(written["checks"].size() == 6);
  std::filesystem::remove(path);
}

TEST_CASE("parse_grid") {
  const auto g = cli::parse_grid("m=1..3; r=-2..3; nmax=12");
  CHECK(g.m_values == std::vector<std::int64_t>{1, 2, 3});
  CHECK(g.r_values == std::vector<std::int64_t>{-2, -1, 0, 1, 2, 3});
  CHECK(g.nmax == 12);
  const auto h = cli::parse_grid("r=0", 5);
  CHECK(h.m_values == std::vector<std::int64_t>{1, 2, 3});
  CHECK(h.r_values == std::vector<std::int64_t>{0});
  CHECK(h.nmax == 5);
  CHECK(cli::parse_grid("m=2,5").m_values == std::vector<std::int64_t>{2, 5});
  CHECK_THROWS_AS(cli::parse_grid("m=3..1"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_grid("m"), std::invalid_argument);
}

TEST_CASE("parse_rational") {
  CHECK(cli::parse_rational("1") == 1);
  CHECK(cli::parse_rational("-3/6") == RationalValue(-1, 2));
  CHECK(cli::parse_rational(" 7 ") == 7);
  CHECK_THROWS(cli::parse_rational("2/0"));
  CHECK_THROWS(cli::parse_rational("q"));
}

TEST_CASE("JSON table re-parses to the in-memory triangle") {
  for (const std::string family : {"w2", "w2-verbatim", "w2-star", "w2-tilde", "w1", "w1-rising", "lah"}) {
    const auto r = run({"table", "--family", family, "--m", "2", "--r", "-1", "--nmax", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    const Triangle t = triangle_from_json(nlohmann::json::parse(r.out));
    const auto f = *family_from_name(family);
    CHECK(t.nmax() == 5);
    for (std::int64_t n = 0; n <= 5; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) CHECK(t.at(n, k) == get_triangle(f, Params(2, -1), 5)->at(n, k));
    }
  }
}

TEST_CASE("specialization commutes with rendering") {
  for (const std::string q : {"2", "-1/3", "5/2", "1"}) {
    for (const std::string family : {"w2", "w1", "lah", "w1-rising"}) {
      const auto symbolic = run({"table", "--family", family, "--m", "2", "--r", "-2", "--nmax", "6", "--format", "csv"});
      const auto special =
          run({"table", "--family", family, "--m", "2", "--r", "-2", "--nmax", "6", "--format", "csv", "--q", q});
      const auto a = lines(symbolic.out);
      const auto b = lines(special.out);
      REQUIRE(a.size() == b.size());
      const RationalValue x = cli::parse_rational(q);
      for (std::size_t i = 1; i < a.size(); ++i) {
        const auto open = a[i].find('"');
        const auto poly = parse_laurent(a[i].substr(open + 1, a[i].size() - open - 2));
        const auto open_b = b[i].find('"');
        const std::string value = b[i].substr(open_b + 1, b[i].size() - open_b - 2);
        CHECK(value == to_string(lp_eval(poly, x)));
        CHECK(a[i].substr(0, open) == b[i].substr(0, open_b));
      }
    }
  }
}

TEST_CASE("output formats") {
  const auto csv = run({"table", "--family", "lah", "--nmax", "1", "--format", "csv"});
  CHECK(csv.out == "n,k,value\n0,0,\"1\"\n1,0,\"0\"\n1,1,\"1\"\n");
  const auto seq = run({"dowling", "--nmax", "2", "--format", "csv"});
  CHECK(seq.out == "n,value\n0,\"1\"\n1,\"1\"\n2,\"1 + q\"\n");
  const auto latex = run({"table", "--family", "lah", "--r", "1", "--nmax", "1", "--format", "latex"});
  CHECK(latex.out.find("$1 + q$ & $q^{2}$") != std::string::npos);
  const auto latex_q = run({"table", "--family", "w1", "--r", "1", "--nmax", "1", "--format", "latex", "--q", "2"});
  CHECK(latex_q.out.find("$-\\frac{1}{2}$ & $\\frac{1}{2}$") != std::string::npos);
  const auto dj = nlohmann::json::parse(run({"dowling", "--nmax", "3", "--q", "1", "--format", "json"}).out);
  CHECK(dj["values"] == nlohmann::json::array({"1", "1", "2", "5"}));
  const auto ej = nlohmann::json::parse(run({"expand", "--k", "1", "--order", "2", "--format", "json"}).out);
  CHECK(ej["coefficients"].size() == 2);
}

TEST_CASE("output file, cache and determinism") {
  const auto dir = std::filesystem::temp_directory_path() / "qwhitney_cli_cache";
  const auto file = std::filesystem::temp_directory_path() / "qwhitney_cli_table.txt";
  std::filesystem::remove_all(dir);
  const std::vector<std::string> base = {"table", "--family", "w2-tilde", "--m", "3", "--r", "2", "--nmax", "7"};
  const auto plain = run(base);
  auto cached_args = base;
  cached_args.insert(cached_args.end(), {"--cache", dir.string()});
  CHECK(run(cached_args).out == plain.out);
  CHECK(run(cached_args).out == plain.out);
  CHECK(std::filesystem::exists(dir / "w2-tilde_m3_r2.json"));
  auto file_args = base;
  file_args.insert(file_args.end(), {"--output", file.string()});
  CHECK(run(file_args).out.empty());
  std::ifstream in(file);
  std::stringstream contents;
  contents << in.rdbuf();
  CHECK(contents.str() == plain.out);
  CHECK(run(base).out == plain.out);
  std::filesystem::remove_all(dir);
  std::filesystem::remove(file);
}
