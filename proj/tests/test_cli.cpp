#include "zeta/cli/commands.hpp"
#include "zeta/cli/config.hpp"
#include "zeta/cli/output.hpp"
#include "zeta/cli/verify.hpp"

#include <boost/property_tree/json_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <doctest.h>

#include <clocale>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <sstream>

using namespace zeta;
using namespace zeta::cli;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run invoke(const std::vector<std::string>& args, const std::optional<std::string>& env = std::nullopt) {
  std::ostringstream out, err;
  Run r;
  r.code = run(args, out, err, env);
  r.out = out.str();
  r.err = err.str();
  return r;
}

using Table = std::vector<std::map<std::string, std::string>>;

Table parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> header;
  Table rows;
  auto split = [](const std::string& l) {
    std::vector<std::string> cells;
    std::stringstream ss(l);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };
  if (std::getline(in, line)) header = split(line);
  while (std::getline(in, line)) {
    const auto cells = split(line);
    REQUIRE(cells.size() == header.size());
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < cells.size(); ++i) row[header[i]] = cells[i];
    rows.push_back(row);
  }
  return rows;
}

Table parse_json(const std::string& text) {
  boost::property_tree::ptree tree;
  std::istringstream in(text);
  boost::property_tree::read_json(in, tree);
  Table rows;
  for (const auto& item : tree) {
    std::map<std::string, std::string> row;
    for (const auto& field : item.second) row[field.first] = field.second.get_value<std::string>();
    rows.push_back(row);
  }
  return rows;
}

double num(const std::string& text) {
  const auto v = parse_number(text);
  REQUIRE(v.has_value());
  return *v;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_number(-2.5e-20) == "-2.5e-20");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("formatting ignores the global locale") {
  const char* previous = std::setlocale(LC_NUMERIC, nullptr);
  const std::string saved = previous ? previous : "C";
  for (const char* name : {"de_DE.UTF-8", "fr_FR.UTF-8", "de_DE"}) {
    if (std::setlocale(LC_NUMERIC, name) != nullptr) {
      CHECK(format_number(1.5) == "1.5");
      CHECK(parse_number("1.5") == 1.5);
      break;
    }
  }
  std::setlocale(LC_NUMERIC, saved.c_str());
}

TEST_CASE("printed numbers round-trip") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> mant(-10.0, 10.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int i = 0; i < 5000; ++i) {
    const double x = mant(rng) * std::pow(10.0, expo(rng));
    if (!std::isfinite(x)) continue;
    const std::string printed = format_number(x);
    const auto back = parse_number(printed);
    REQUIRE(back.has_value());
    CHECK(format_number(*back) == printed);
    CHECK(std::abs(*back - x) <= 5e-15 * std::abs(x));
    // Values that already carry at most 15 significant digits come back exactly.
    CHECK(parse_number(format_number(*back)) == *back);
  }
  CHECK_FALSE(parse_number("abc").has_value());
  CHECK_FALSE(parse_number("1.5x").has_value());
  CHECK_FALSE(parse_number("").has_value());
}

TEST_CASE("csv and json writers") {
  OutputRecord a{RecordKind::zero, {}};
  a.add("k", 1.0).add("b", 14.1347251236).add("note", std::string("x"));
  OutputRecord b{RecordKind::zero, {}};
  b.add("k", 2.0).add("b", std::nan("")).add("note", std::string("y"));
  std::ostringstream csv, json, empty;
  write_csv(csv, {a, b}, {});
  write_json(json, {a, b});
  write_json(empty, {});
  CHECK(csv.str() == "k,b,note\n1,14.1347251236,x\n2,nan,y\n");
  CHECK(csv.str().find('\r') == std::string::npos);
  CHECK(empty.str() == "[]\n");
  CHECK(json.str().find("null") != std::string::npos);
  std::ostringstream header_only;
  write_csv(header_only, {}, {"k", "b"});
  CHECK(header_only.str() == "k,b\n");
}

TEST_CASE("config settings") {
  Settings s;
  apply_config_text(s,
                    "# comment\n quadrature.order = 6\nquadrature.cutoff=40\nscan.step = 0.1\n"
                    "em.auto = false\nem.N = 30\noutput.format = json\n",
                    "inline");
  CHECK(s.quadrature.order == 6);
  CHECK(s.quadrature.cutoff == 40.0);
  CHECK(s.scan.step == 0.1);
  CHECK_FALSE(s.em_auto);
  CHECK(s.em.N == 30);
  CHECK(s.format == Format::json);
  CHECK_THROWS_AS(apply_setting(s, "quadrature.colour", "red"), UsageError);
  CHECK_THROWS_AS(apply_setting(s, "quadrature.order", "six"), UsageError);
  CHECK_THROWS_AS(apply_config_text(s, "no equals sign\n", "inline"), UsageError);
  CHECK_THROWS_AS(apply_config_file(s, "/nonexistent/zeta.cfg"), UsageError);
}

TEST_CASE("eval subcommand") {
  const auto em = invoke({"eval", "--s", "2,0"});
  REQUIRE(em.code == kExitOk);
  const auto rows = parse_csv(em.out);
  REQUIRE(rows.size() == 1);
  CHECK(std::abs(num(rows[0].at("value_re")) - 1.64493406684823) < 1e-14);
  CHECK(rows[0].at("converged") == "1");

  const auto series = invoke({"eval", "--s", "2,0", "--method", "series", "--terms", "1000000"});
  REQUIRE(series.code == kExitOk);
  CHECK(std::abs(num(parse_csv(series.out)[0].at("value_re")) - 1.64493406684823) < 1e-6);

  const auto integral = invoke({"eval", "--s", "0.5,14.134725141734693", "--method", "integral"});
  REQUIRE(integral.code == kExitOk);
  const auto r = parse_csv(integral.out)[0];
  CHECK(std::hypot(num(r.at("value_re")), num(r.at("value_im"))) < 1e-6);

  const auto negative = invoke({"eval", "--s", "-1,0", "--method", "series"});
  CHECK(negative.code == kExitUsage);
  CHECK(negative.err.find("Dirichlet series diverges") != std::string::npos);

  CHECK(invoke({"eval", "--s", "1,0"}).code == kExitUsage);
  CHECK(invoke({"eval", "--s", "2,0", "--method", "magic"}).code == kExitUsage);
  CHECK(invoke({"eval", "--s", "two"}).code == kExitUsage);
  CHECK(invoke({"eval"}).code == kExitUsage);
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
}

TEST_CASE("zeros subcommand reproduces the five-zero table") {
  constexpr std::array<double, 5> heights = {14.13472, 21.02203, 25.01085, 30.42487, 32.93506};
  const auto csv = invoke({"zeros", "--paper"});
  REQUIRE(csv.code == kExitOk);
  const auto rows = parse_csv(csv.out);
  REQUIRE(rows.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(num(rows[k].at("k")) == static_cast<double>(k + 1));
    CHECK(std::abs(num(rows[k].at("b")) - heights[k]) <= 5e-5);
    CHECK(num(rows[k].at("residual_beth")) < 1e-6);
  }

  const auto json = invoke({"--format", "json", "zeros", "--paper"});
  REQUIRE(json.code == kExitOk);
  const auto jrows = parse_json(json.out);
  REQUIRE(jrows.size() == rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (const auto& [key, value] : rows[k]) CHECK(num(jrows[k].at(key)) == num(value));

  CHECK(invoke({"zeros", "--paper"}).out == csv.out);
  CHECK(invoke({"--threads", "3", "zeros", "--paper"}).out == csv.out);

  const auto table = invoke({"table"});
  CHECK(table.code == kExitOk);
  CHECK(table.out.find("FAIL") == std::string::npos);
}

TEST_CASE("zeros subcommand edge cases") {
  const auto none = invoke({"zeros", "--range", "0:10"});
  CHECK(none.code == kExitOk);
  CHECK(none.out == "k,b,residual_beth,residual_aleph,bracket_lo,bracket_hi\n");
  CHECK(invoke({"--format", "json", "zeros", "--range", "0:10"}).out == "[]\n");
  CHECK(invoke({"zeros", "--range", "10"}).code == kExitUsage);
  CHECK(invoke({"zeros", "--range", "20:10"}).code == kExitUsage);
  CHECK(invoke({"zeros", "--range", "10:300"}).code == kExitUsage);
  CHECK(invoke({"zeros", "--range", "10:20", "--step", "0.9"}).code == kExitUsage);
  const auto high = invoke({"zeros", "--range", "10:60"});
  CHECK(high.code == kExitUsage);
  CHECK(high.err.find("rounding floor") != std::string::npos);
}

TEST_CASE("verify subcommand") {
  for (const auto& suite : {"theta", "functional", "dual", "trivial", "decomposition"}) {
    const auto r = invoke({"verify", "--suite", suite});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  CHECK(invoke({"verify", "--suite", "nonsense"}).code == kExitUsage);
}

TEST_CASE("verify fails under a bad cutoff") {
  const auto flag = invoke({"--cutoff", "2", "verify"});
  CHECK(flag.code == kExitVerifyFailed);
  CHECK(flag.out.find("FAIL") != std::string::npos);
  CHECK(flag.err.find("cutoff too small") != std::string::npos);

  const auto cfg = temp_file("zeta_test_bad_cutoff.cfg", "quadrature.cutoff = 2\n");
  CHECK(invoke({"--config", cfg.string(), "verify", "--suite", "functional"}).code == kExitVerifyFailed);
  CHECK(invoke({"verify", "--suite", "functional"}, cfg.string()).code == kExitVerifyFailed);
  // An explicit flag wins over the file.
  CHECK(invoke({"--config", cfg.string(), "--cutoff", "60", "verify", "--suite", "functional"}).code == kExitOk);
  std::filesystem::remove(cfg);
}

TEST_CASE("config file and environment fallback") {
  const auto json_cfg = temp_file("zeta_test_json.cfg", "output.format = json\n");
  const auto via_env = invoke({"eval", "--s", "3,0"}, json_cfg.string());
  CHECK(via_env.code == kExitOk);
  CHECK(via_env.out.front() == '[');
  const auto via_flag = invoke({"--config", json_cfg.string(), "eval", "--s", "3,0"});
  CHECK(via_flag.out == via_env.out);
  CHECK(invoke({"--format", "csv", "eval", "--s", "3,0"}, json_cfg.string()).out.front() == 'm');
  std::filesystem::remove(json_cfg);

  const auto bad = temp_file("zeta_test_bad.cfg", "quadrature.order = 1\n");
  CHECK(invoke({"eval", "--s", "3,0"}, bad.string()).code == kExitUsage);
  std::filesystem::remove(bad);
  CHECK(invoke({"--config", "/nonexistent/zeta.cfg", "eval", "--s", "3,0"}).code == kExitUsage);
}

TEST_CASE("suite registry") {
  CHECK(suite_names().back() == "all");
  CHECK_THROWS_AS(run_suite("bogus", QuadratureConfig{}), UsageError);
  for (const auto& r : run_suite("trivial", QuadratureConfig{})) CHECK(r.passed);
}
