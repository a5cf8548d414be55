/**
 * @file cli.hpp
 * @brief Run configuration and the batch drivers behind the `crackwave` executable.
 *
 * Config files are flat `section.key = value` lines; `#` starts a comment. Parameter keys
 * marked (grid) accept a single value, a comma list, `linspace(a, b, n)` or
 * `logspace(a, b, n)` (base-10 exponents), either optionally negated with a leading `-`. Rows are the Cartesian product of the grids,
 * in the order eta, h0, p, L_over_ell, m, with the `sweep.variable` axis moved innermost.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "crackwave/dispersion.hpp"
#include "crackwave/errors.hpp"
#include "crackwave/fields.hpp"

namespace crackwave {

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Grid spec to values; multi-point grids must be strictly monotone.
std::vector<double> parse_grid(const std::string& spec);

struct RunConfig {
  double G = 1.0, rho = 1.0, ell = 1.0, T0 = 1.0;
  std::vector<double> eta{0.0};           // (grid)
  std::vector<double> h0{0.0};            // (grid)
  std::vector<double> m{0.3};             // (grid)
  std::vector<double> L_over_ell{10.0};   // (grid)
  std::vector<int> p{0};                  // (grid), non-negative integers
  bool m_relative = false;                // state.m is a fraction of min(1, m_c)
  std::string sweep_variable;             // empty: no reordering

  DispersionGrid dispersion_axis = DispersionGrid::Frequency;
  std::vector<double> dispersion_grid;  // omega ell / c_s or k ell

  FieldKind field = FieldKind::TotalShear;
  std::vector<double> field_X_over_ell;  // signed positions

  std::string limit_kind = "speed";  // speed: E at (1 - factor) min(1, m_c) over h0; length: E against its small-ell limit
  double limit_factor = 1e-3;

  std::vector<int> criteria;  // validate; empty means all
  std::string out_dir = ".";
};

/// Throws ConfigError on syntax errors, unknown keys and invalid values.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

const std::vector<std::string>& subcommands();

enum ExitCode { kExitOk = 0, kExitCheckFailed = 1, kExitConfig = 2, kExitNumerical = 3, kExitRegime = 4 };

/// Runs one subcommand and writes `<out_dir>/<subcommand>.csv`; nothing is written when a row fails.
/// Diagnostics go to `err`, the validate table and file summary to `log`.
int run(const std::string& subcommand, const RunConfig& config, const std::string& out_dir, int jobs,
        std::ostream& log, std::ostream& err);

/// Shortest round-trip decimal.
std::string format_number(double v);

}  // namespace crackwave
