#include <gtest/gtest.h>

#include <cmath>

#include "crackwave/classical_oracle.hpp"
#include "crackwave/energy.hpp"
#include "crackwave/errors.hpp"

using namespace crackwave;

namespace {
Material mat(double eta, double h0) {
  Material m;
  m.eta = eta;
  m.h0 = h0;
  return m;
}
}  // namespace

TEST(Kp, Values) {
  const double expected[4] = {1.0, 0.5, 0.375, 0.3125};
  for (int p = 0; p < 4; ++p) EXPECT_NEAR(kp_constant(p), expected[p], 1e-15);
  for (int p = 0; p <= 5; ++p) {
    const double refl = (p % 2 ? -1.0 : 1.0) * std::sqrt(kPi) / (std::tgamma(p + 1.0) * std::tgamma(0.5 - p));
    EXPECT_NEAR(kp_constant(p), refl, 1e-12);
  }
}

TEST(ClassicalErr, Values) {
  EXPECT_NEAR(err_classical(LoadProfile{1.0, 1.0, 0}, 0.0, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(err_classical(LoadProfile{2.0, 4.0, 0}, 0.0, 0.5), 2.0, 1e-15);
  const LoadProfile load{1.0, 1.0, 1};
  const double a = err_classical(load, 0.99, 1.0), b = err_classical(load, 0.999, 1.0);
  EXPECT_NEAR(b / a, std::sqrt((1 - 0.99 * 0.99) / (1 - 0.999 * 0.999)), 1e-12);
  EXPECT_THROW(err_classical(load, 1.0, 1.0), RegimeError);
}

TEST(SmallLengthLimit, EqualsClassical) {
  for (int p = 0; p <= 5; ++p)
    for (double m : {0.0, 0.5}) {
      const LoadProfile load{1.3, 2.0, p};
      EXPECT_NEAR(err_smalllength_limit(load, m, 1.0) / err_classical(load, m, 1.0), 1.0, 1e-12);
      auto tau = [&](double X) { return traction(X, load); };
      EXPECT_NEAR(err_smalllength_limit(tau, m, 1.0) / err_classical(load, m, 1.0), 1.0, 1e-10);
    }
  EXPECT_NEAR(err_smalllength_limit(LoadProfile{1.0, 1.0, 0}, 0.0, 1.0), 1.0, 1e-14);
}

TEST(CoupleErr, RatioConsistency) {
  const Material m = mat(0.5, 0.6);
  const LoadProfile load{1.0, 3.0, 2};
  const ErrResult r = compute_err(m, 0.4, load);
  EXPECT_GT(r.E, 0.0);
  EXPECT_LE(r.imag_residue, 1e-8);
  EXPECT_NEAR(r.ratio, r.E / r.E_cl, 1e-10 * r.ratio);
  EXPECT_NEAR(r.ratio, err_ratio(r.F, m, 0.4, load), 1e-14);
  EXPECT_EQ(r.p, 2);
  EXPECT_DOUBLE_EQ(r.L_over_ell, 3.0);
}

TEST(CoupleErr, RealnessGate) {
  // A purely real F gives 2 i F^2 with no real part.
  EXPECT_THROW(err_couple(cplx(1.0, 0.0), mat(0.0, 0.5), 0.3, 1.0), NumericalError);
}

TEST(CoupleErr, MonotoneInSpeedAtSmallInertia) {
  const Material m = mat(0.0, 0.01);
  const LoadProfile load{1.0, 10.0, 0};
  double prev = 0.0;
  for (double v = 0.3; v < 0.99; v += 0.1) {
    const double E = compute_err(m, v, load).E;
    EXPECT_GT(E, prev);
    prev = E;
  }
}

TEST(CoupleErr, ClassicalLimit) {
  const Material m = mat(0.9, 0.6);
  double prev = kInf;
  for (double L : {10.0, 100.0, 1000.0}) {
    const double r = compute_err(m, 0.3, LoadProfile{1.0, L, 1}).ratio;
    EXPECT_LT(std::abs(r - 1.0), prev);
    prev = std::abs(r - 1.0);
  }
  EXPECT_LT(prev, 0.05);
}

TEST(CoupleErr, ShieldingDependsOnLoadShape) {
  const Material m = mat(0.0, 0.707);
  EXPECT_LT(compute_err(m, 0.3, LoadProfile{1.0, 10.0, 0}).ratio, 1.0);
  EXPECT_GT(compute_err(m, 0.3, LoadProfile{1.0, 10.0, 1}).ratio, 1.0);
}

TEST(CoupleErr, FiniteAtCriticalSpeed) {
  const Material m = mat(-0.9, 0.707);
  const double mc = critical_speed(-0.9, 0.707);
  const LoadProfile load{1.0, 10.0, 1};
  const double a = compute_err(m, mc * (1 - 1e-3), load).E;
  const double b = compute_err(m, mc * (1 - 1e-4), load).E;
  EXPECT_TRUE(std::isfinite(a));
  EXPECT_NEAR(b / a, 1.0, 0.05);
}

TEST(CoupleErr, GrowsTowardsShearSpeedAtThreshold) {
  const Material m = mat(0.0, 1.0 / std::sqrt(2.0));
  const LoadProfile load{1.0, 10.0, 0};
  const double e9 = compute_err(m, 0.9, load).E;
  const double e999 = compute_err(m, 0.999, load).E;
  const double e9999 = compute_err(m, 0.9999, load).E;
  EXPECT_GT(e999 / e9, 9.0);
  EXPECT_GT(e9999 / e999, 3.0);
}

TEST(ErrMaxSweep, RowsAroundThreshold) {
  const LoadProfile load{1.0, 10.0, 1};
  Material base = mat(-0.9, 0.0);
  const double hs = h0_star(-0.9);
  // Below the threshold the ratio falls only like sqrt(1 - m); 1 - m = 1e-8 puts it near 0.01.
  const auto rows = err_max_sweep(base, {0.5 * hs}, load, 1e-8);
  ASSERT_EQ(rows.size(), 1u);
  ASSERT_TRUE(rows[0].ok) << rows[0].error;
  EXPECT_DOUBLE_EQ(rows[0].m_lim, 1.0);
  EXPECT_LE(rows[0].ratio, 0.05);
}

TEST(ErrMaxSweep, DefaultProxyAboveThreshold) {
  const LoadProfile load{1.0, 10.0, 1};
  Material base = mat(-0.9, 0.0);
  const double hs = h0_star(-0.9);
  const auto rows = err_max_sweep(base, {0.5 * hs, hs + 0.05}, load);
  ASSERT_EQ(rows.size(), 2u);
  ASSERT_TRUE(rows[0].ok) << rows[0].error;
  ASSERT_TRUE(rows[1].ok) << rows[1].error;
  EXPECT_DOUBLE_EQ(rows[0].m_lim, 1.0);
  EXPECT_NEAR(rows[1].ratio, 1.0, 0.1);
  EXPECT_NEAR(rows[1].m_eval, 0.999 * rows[1].m_lim, 1e-15);
}

TEST(ErrMaxSweep, FailedRowsAreMarked) {
  const auto rows = err_max_sweep(mat(0.0, 0.0), {0.5}, LoadProfile{1.0, 10.0, 0}, -1.0);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_FALSE(rows[0].ok);
  EXPECT_FALSE(rows[0].error.empty());
}

TEST(ClassicalOracle, Consistency) {
  const LoadProfile load{2.0, 3.0, 2};
  const ClassicalSolution sol = classical_solve(load, 0.4, 1.5);
  EXPECT_NEAR(classical_err(sol), err_classical(load, 0.4, 1.5), 1e-15);
  const double X = 1e-8;
  const ClassicalNearTip nt = classical_neartip(X, sol);
  EXPECT_NEAR(std::sqrt(2 * kPi * X) * nt.sigma23, classical_sif(sol), 1e-12);
  // E = K^2 / (2 G nu) for the antiplane crack.
  EXPECT_NEAR(classical_sif(sol) * classical_sif(sol) / (2.0 * 1.5 * sol.nu), classical_err(sol), 1e-12);
  EXPECT_THROW(classical_solve(load, 1.0, 1.0), RegimeError);
}

TEST(ClassicalOracle, InversionOfStressTransform) {
  // sigma23(X) = (1/2 pi) int T(s) e^{-isX} ds; near the tip it approaches a / sqrt(X).
  const LoadProfile load{1.0, 1.0, 1};
  const ClassicalSolution sol = classical_solve(load, 0.3, 1.0);
  const double X = 1e-3;
  auto f = [&](double s) { return classical_stress_transform(s, sol) + classical_stress_transform(-s, sol) * std::polar(1.0, 2 * s * X); };
  QuadratureSpec spec;
  spec.abs_tol = 1e-12;
  const cplx I = oscillatory_halfline(f, X, spec).value / (2.0 * kPi);
  const double expected = classical_neartip(X, sol).sigma23;
  EXPECT_NEAR(I.real() / expected, 1.0, 0.05);
}
