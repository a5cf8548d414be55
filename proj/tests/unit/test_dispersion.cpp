#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "crackwave/dispersion.hpp"
#include "crackwave/errors.hpp"
#include "crackwave/material.hpp"

using namespace crackwave;

namespace {
std::vector<double> logspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = std::pow(10.0, a + (b - a) * i / (n - 1));
  return v;
}
}  // namespace

TEST(ShearSpeed, ClosedForm) {
  EXPECT_DOUBLE_EQ(shear_phase_speed(0.0, 0.3), 1.0);
  for (double k : {0.1, 1.0, 30.0}) EXPECT_NEAR(shear_phase_speed(k, 1.0 / std::sqrt(2.0)), 1.0, 1e-14);
  EXPECT_NEAR(shear_phase_speed(1.0, 0.0), std::sqrt(1.5), 1e-14);
}

TEST(Determinant, VanishesOnShearBranchWhenEtaZero) {
  for (double k : {0.3, 2.0, 20.0}) {
    const double mb = shear_phase_speed(k, 0.6);
    EXPECT_NEAR(dispersion_det_k(mb, k, 0.0, 0.6), 0.0, 1e-12);
  }
}

TEST(Determinant, SupersonicRootWithoutInertia) {
  // h0 = 0: a sign change on (1, m_b) brackets a root above the shear speed.
  const double mb = bulk_speed_at_frequency(1.0, 0.0);
  EXPECT_GT(mb, 1.0);
  bool found = false;
  double prev = dispersion_det(1.0 + 1e-6, 1.0, 0.5, 0.0);
  for (int i = 1; i <= 400 && !found; ++i) {
    const double m = 1.0 + 1e-6 + (mb - 1.0 - 2e-6) * i / 400;
    const double d = dispersion_det(m, 1.0, 0.5, 0.0);
    found = std::signbit(d) != std::signbit(prev);
    prev = d;
  }
  EXPECT_TRUE(found);
}

TEST(Determinant, LeadingCoefficient) {
  // det / xi^5 -> surface coefficient as omega grows at fixed mR.
  const double eta = 0.4, h0 = 0.6, m = 0.5;
  const double omega = 1e6;
  const double big = dispersion_det(m, omega, eta, h0) / std::pow(omega / m, 5);
  EXPECT_NEAR(big, lambda_surface(eta, h0, m), 1e-3 * std::abs(lambda_surface(eta, h0, m)));
}

TEST(Trace, ShearOracleAtEtaZero) {
  for (double h0 : {0.0, 0.3, 0.707, 0.9}) {
    const auto curve = trace_curve(logspace(-2, 2, 200), DispersionGrid::WaveNumber, 0.0, h0);
    ASSERT_EQ(curve.size(), 200u);
    for (const auto& p : curve) {
      EXPECT_NEAR(p.mR, shear_phase_speed(p.k_norm, h0), 1e-8);
      EXPECT_NEAR(p.mR * p.k_norm, p.omega_norm, 1e-12 * p.omega_norm);
    }
  }
}

TEST(Trace, HighFrequencyLimit) {
  for (auto [eta, h0] : {std::pair{0.9, 0.8}, std::pair{-0.9, 0.707}}) {
    const auto curve = trace_curve(logspace(-2, 3, 80), DispersionGrid::Frequency, eta, h0);
    EXPECT_NEAR(curve.back().mR, critical_speed(eta, h0), 1e-3);
    // Beyond its maximum the curve decreases towards m_c.
    std::size_t top = 0;
    for (std::size_t i = 0; i < curve.size(); ++i)
      if (curve[i].mR > curve[top].mR) top = i;
    for (std::size_t i = top + 1; i < curve.size(); ++i) EXPECT_LE(curve[i].mR, curve[i - 1].mR + 1e-12);
  }
}

TEST(Trace, SupersonicWithoutInertia) {
  const auto curve = trace_curve(logspace(-1, 2, 40), DispersionGrid::Frequency, 0.9, 0.0);
  for (const auto& p : curve) EXPECT_GT(p.mR, 1.0);
}

TEST(Trace, SubsonicAtLargeInertia) {
  const auto curve = trace_curve(logspace(0, 3, 40), DispersionGrid::Frequency, 0.9, 0.8);
  EXPECT_LT(curve.back().mR, 1.0);
  EXPECT_LT(curve.back().mR, curve.front().mR);
}

TEST(Trace, RejectsBadGrid) {
  EXPECT_THROW(trace_curve({1.0, 0.5}, DispersionGrid::Frequency, 0.0, 0.5), DomainError);
  EXPECT_THROW(trace_curve({0.0, 1.0}, DispersionGrid::Frequency, 0.0, 0.5), DomainError);
}
