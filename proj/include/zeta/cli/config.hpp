// Run settings for the command-line tool and their key=value file format:
//
//   # comment
//   quadrature.order = 5
//   quadrature.max_iters = 20
//   quadrature.cutoff = 60
//   quadrature.tol = 1e-14
//   em.auto = true
//   em.N = 20
//   em.M = 12
//   scan.b_min = 10
//   scan.b_max = 35
//   scan.step = 0.25
//   scan.refine_tol = 1e-7
//   scan.threads = 1
//   output.format = csv

#pragma once

#include "zeta/cli/output.hpp"
#include "zeta/numerics.hpp"
#include "zeta/zeros.hpp"
#include "zeta/zeta_em.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace zeta::cli {

/// Bad flags, malformed config files or out-of-domain input: exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  QuadratureConfig quadrature;
  ScanConfig scan;
  bool em_auto = true;
  EmParams em;
  Format format = Format::csv;
};

/// Applies one key/value pair. Throws UsageError for unknown keys or values
/// that do not parse.
void apply_setting(Settings& settings, std::string_view key, std::string_view value);

/// Applies every assignment in `text`; `origin` names the source in errors.
void apply_config_text(Settings& settings, std::string_view text, std::string_view origin);

/// Reads and applies a config file. Throws UsageError if it cannot be read.
void apply_config_file(Settings& settings, const std::string& path);

}  // namespace zeta::cli
