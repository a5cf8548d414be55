#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "crackwave/cli.hpp"

using namespace crackwave;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("crackwave_cli_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Grid, Forms) {
  EXPECT_EQ(parse_grid("0.5"), std::vector<double>{0.5});
  EXPECT_EQ(parse_grid(" 1, 2 ,3 "), (std::vector<double>{1, 2, 3}));
  const auto lin = parse_grid("linspace(0, 1, 11)");
  ASSERT_EQ(lin.size(), 11u);
  EXPECT_EQ(lin.front(), 0.0);
  EXPECT_EQ(lin.back(), 1.0);
  const auto lg = parse_grid("logspace(-2, 2, 5)");
  EXPECT_NEAR(lg[0], 0.01, 1e-17);
  EXPECT_DOUBLE_EQ(lg[4], 100.0);
  const auto neg = parse_grid("-logspace(-1, 1, 3)");
  EXPECT_DOUBLE_EQ(neg[0], -0.1);
  EXPECT_DOUBLE_EQ(neg[2], -10.0);
}

TEST(Grid, Rejects) {
  EXPECT_THROW(parse_grid("1, 1"), ConfigError);
  EXPECT_THROW(parse_grid("1, 3, 2"), ConfigError);
  EXPECT_THROW(parse_grid("linspace(0, 1)"), ConfigError);
  EXPECT_THROW(parse_grid("linspace(0, 1, 2.5)"), ConfigError);
  EXPECT_THROW(parse_grid("abc"), ConfigError);
  EXPECT_THROW(parse_grid("1,,2"), ConfigError);
  EXPECT_THROW(parse_grid("nan"), ConfigError);
}

TEST(Config, ParsesSectionsAndComments) {
  const RunConfig c = parse_config(
      "# comment\n"
      "material.eta = -0.9, 0.9   # two values\n"
      "material.h0 = 0.707\n"
      "load.p = 0, 1, 2\n"
      "state.m = 0.5\n"
      "state.m_relative = true\n"
      "sweep.variable = p\n");
  EXPECT_EQ(c.eta.size(), 2u);
  EXPECT_EQ(c.p, (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(c.m_relative);
  EXPECT_EQ(c.sweep_variable, "p");
}

TEST(Config, Errors) {
  EXPECT_THROW(parse_config("material.etaa = 0.1\n"), ConfigError);
  EXPECT_THROW(parse_config("material.eta = 0.1\nmaterial.eta = 0.2\n"), ConfigError);
  EXPECT_THROW(parse_config("material.eta 0.1\n"), ConfigError);
  EXPECT_THROW(parse_config("material.eta = 1.2\n"), ConfigError);
  EXPECT_THROW(parse_config("load.p = 1.5\n"), ConfigError);
  EXPECT_THROW(parse_config("sweep.grid = 1, 2\n"), ConfigError);
  EXPECT_THROW(parse_config("sweep.variable = G\n"), ConfigError);
  EXPECT_THROW(parse_config("state.m_relative = true\nstate.m = 1\n"), ConfigError);
  EXPECT_THROW(parse_config("fields.field = strain\n"), ConfigError);
}

TEST(Run, ErrSweepDeterministicAndOrdered) {
  const RunConfig c = parse_config(
      "material.eta = -0.9, 0.9\n"
      "material.h0 = 0.6\n"
      "load.p = 0, 1\n"
      "sweep.variable = m\n"
      "sweep.grid = 0, 0.2, 0.4\n");
  const auto a = scratch("err_a"), b = scratch("err_b");
  std::ostringstream log, err;
  ASSERT_EQ(run("err-sweep", c, a.string(), 1, log, err), kExitOk) << err.str();
  ASSERT_EQ(run("err-sweep", c, b.string(), 3, log, err), kExitOk) << err.str();
  const std::string text = slurp(a / "err-sweep.csv");
  EXPECT_EQ(text, slurp(b / "err-sweep.csv"));
  const auto rows = lines(text);
  ASSERT_EQ(rows.size(), 1u + 2 * 2 * 3);
  EXPECT_EQ(rows[0].rfind("eta,h0,m,p,L_over_ell,G,rho,ell,T0,E,E_G_ell_over_T0sq", 0), 0u);
  // m runs fastest, then p, then eta.
  EXPECT_EQ(rows[1].rfind("-0.9,0.6,0,0,", 0), 0u);
  EXPECT_EQ(rows[2].rfind("-0.9,0.6,0.2,0,", 0), 0u);
  EXPECT_EQ(rows[4].rfind("-0.9,0.6,0,1,", 0), 0u);
  EXPECT_EQ(rows[7].rfind("0.9,0.6,0,0,", 0), 0u);
}

TEST(Run, ShortestRoundTrip) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1e-300), "1e-300");
  const double x = 0.44134835330911043;
  EXPECT_EQ(std::stod(format_number(x)), x);
}

TEST(Run, RegimeViolationExitCode) {
  const RunConfig c = parse_config("material.eta = -0.9\nmaterial.h0 = 0.707\nstate.m = 0.3, 0.5\n");
  const auto dir = scratch("regime");
  std::ostringstream log, err;
  EXPECT_EQ(run("err-sweep", c, dir.string(), 1, log, err), kExitRegime);
  EXPECT_NE(err.str().find("row 1"), std::string::npos) << err.str();
  EXPECT_FALSE(std::filesystem::exists(dir / "err-sweep.csv"));
}

TEST(Run, ConfigErrorsInsideSubcommands) {
  std::ostringstream log, err;
  const auto dir = scratch("cfg");
  EXPECT_EQ(run("fields", parse_config("fields.field = w\nfields.X_over_ell = 1, 2\n"), dir.string(), 1, log, err),
            kExitConfig);
  EXPECT_EQ(run("dispersion", parse_config("material.h0 = 0.3\n"), dir.string(), 1, log, err), kExitConfig);
  EXPECT_EQ(run("nope", RunConfig{}, dir.string(), 1, log, err), kExitConfig);
}

TEST(Run, DispersionShearOracleAtZeroEta) {
  const RunConfig c = parse_config("material.eta = 0\nmaterial.h0 = 0.707\ndispersion.grid = logspace(-1, 2, 7)\n");
  const auto dir = scratch("disp");
  std::ostringstream log, err;
  ASSERT_EQ(run("dispersion", c, dir.string(), 2, log, err), kExitOk) << err.str();
  const auto rows = lines(slurp(dir / "dispersion.csv"));
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0], "eta,h0,omega_ell_over_cs,k_ell,m_R,m_c,alternates,jump");
}

TEST(Run, ValidateWritesReport) {
  const RunConfig c = parse_config("validate.criteria = 1, 2, 12\n");
  const auto dir = scratch("validate");
  std::ostringstream log, err;
  EXPECT_EQ(run("validate", c, dir.string(), 1, log, err), kExitOk) << err.str();
  const auto report = lines(slurp(dir / "validate_report.csv"));
  ASSERT_GE(report.size(), 4u);
  EXPECT_EQ(report[0], "check_id,target,computed,tolerance,pass");
  EXPECT_NE(log.str().find("PASS"), std::string::npos);
  EXPECT_EQ(run("validate", parse_config("validate.criteria = 99\n"), dir.string(), 1, log, err), kExitConfig);
}
