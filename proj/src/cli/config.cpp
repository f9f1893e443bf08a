#include "zeta/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace zeta::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(std::string_view key, std::string_view value) {
  const auto parsed = parse_number(value);
  if (!parsed) throw UsageError("config key '" + std::string(key) + "': not a number: " + std::string(value));
  return *parsed;
}

int to_int(std::string_view key, std::string_view value) {
  const double d = to_double(key, value);
  if (!(std::abs(d) < 2e9) || d != static_cast<double>(static_cast<int>(d)))
    throw UsageError("config key '" + std::string(key) + "': not an integer: " + std::string(value));
  return static_cast<int>(d);
}

bool to_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw UsageError("config key '" + std::string(key) + "': not a boolean: " + std::string(value));
}

}  // namespace

void apply_setting(Settings& s, std::string_view key, std::string_view value) {
  if (key == "quadrature.order") s.quadrature.order = to_int(key, value);
  else if (key == "quadrature.max_iters") s.quadrature.max_iters = to_int(key, value);
  else if (key == "quadrature.cutoff") s.quadrature.cutoff = to_double(key, value);
  else if (key == "quadrature.tol") s.quadrature.tol = to_double(key, value);
  else if (key == "em.auto") s.em_auto = to_bool(key, value);
  else if (key == "em.N") s.em.N = to_int(key, value);
  else if (key == "em.M") s.em.M = to_int(key, value);
  else if (key == "scan.b_min") s.scan.b_min = to_double(key, value);
  else if (key == "scan.b_max") s.scan.b_max = to_double(key, value);
  else if (key == "scan.step") s.scan.step = to_double(key, value);
  else if (key == "scan.refine_tol") s.scan.refine_tol = to_double(key, value);
  else if (key == "scan.threads") s.scan.threads = to_int(key, value);
  else if (key == "output.format") {
    const auto f = parse_format(value);
    if (!f) throw UsageError("config key 'output.format': expected csv or json");
    s.format = *f;
  } else {
    throw UsageError("unknown config key '" + std::string(key) + "'");
  }
}

void apply_config_text(Settings& settings, std::string_view text, std::string_view origin) {
  int line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw UsageError(std::string(origin) + ":" + std::to_string(line_no) + ": expected key=value");
    apply_setting(settings, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void apply_config_file(Settings& settings, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_config_text(settings, buf.str(), path);
}

}  // namespace zeta::cli
