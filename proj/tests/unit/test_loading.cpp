#include <gtest/gtest.h>

#include <cmath>
#include <memory>

#include "crackwave/classical_oracle.hpp"
#include "crackwave/energy.hpp"
#include "crackwave/errors.hpp"
#include "crackwave/loading.hpp"

using namespace crackwave;

namespace {
constexpr cplx kI{0.0, 1.0};

Material mat(double eta, double h0) {
  Material m;
  m.eta = eta;
  m.h0 = h0;
  return m;
}
}  // namespace

TEST(Traction, ResultantAndPeak) {
  for (int p = 0; p <= 3; ++p)
    for (double L : {0.5, 1.0, 10.0}) {
      const LoadProfile load{1.0, L, p};
      auto f = [&](double u) { return cplx(traction(-u, load), 0.0); };
      EXPECT_NEAR(adaptive_integral(f, 0.0, kInf).value.real(), 1.0, 1e-10);
      if (p > 0) {
        const double X = -p * L;
        EXPECT_GT(traction(X, load), traction(X * 1.01, load));
        EXPECT_GT(traction(X, load), traction(X * 0.99, load));
      }
      EXPECT_GE(traction(-0.3 * L, load), 0.0);
    }
  EXPECT_NEAR(traction(-1e-15, LoadProfile{2.0, 4.0, 0}), 0.5, 1e-12);
  EXPECT_THROW(traction(0.0, LoadProfile{}), DomainError);
}

TEST(Traction, HalfPowerMoment) {
  for (int p = 0; p <= 5; ++p) {
    const LoadProfile load{1.5, 2.0, p};
    auto f = [&](double u) { return cplx(traction(-u, load) / std::sqrt(u), 0.0); };
    const double q = adaptive_integral(f, 0.0, 1.0, {}, Singular::Left).value.real() +
                     adaptive_integral(f, 1.0, kInf).value.real();
    EXPECT_NEAR(q / traction_halfpower_moment(load), 1.0, 1e-10) << p;
  }
}

TEST(TractionTransform, Values) {
  const LoadProfile load{1.0, 2.0, 2};
  EXPECT_NEAR(std::abs(traction_transform(0.0, load) - 1.0), 0.0, 1e-15);
  EXPECT_THROW(traction_transform(kI / 2.0, load), PoleError);
  // Fourier integral of tau with e^{isX} at s = 1/L.
  const double s = 1.0 / load.L;
  auto f = [&](double u) { return cplx(traction(-u, load), 0.0); };
  QuadratureSpec spec;
  spec.abs_tol = 1e-13;
  const cplx direct = oscillatory_halfline(f, s, spec).value;
  EXPECT_NEAR(std::abs(direct - traction_transform(s, load)), 0.0, 1e-8);
  const cplx far = traction_transform(cplx(0.0, -1e4), load);
  EXPECT_NEAR(std::abs(far) * std::pow(1e4 * load.L, 3), 1.0, 1e-3);
}

TEST(SplitCoefficients, UnitKernelGivesClassical) {
  for (int p = 0; p <= 6; ++p)
    for (double L : {0.5, 3.0}) {
      const auto a = h_coefficients(p, L);
      const auto b = h_coefficients_contour(p, L);
      for (int j = 0; j <= p; ++j) EXPECT_NEAR(std::abs(a[j] - b[j]) / std::abs(a[j]), 0.0, 1e-10);
    }
}

class SplitFixture : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    split_ = std::make_unique<SplitData>(solve_split(mat(0.0, 0.707), 0.3, LoadProfile{1.0, 10.0, 1}));
  }
  static void TearDownTestSuite() { split_.reset(); }
  static std::unique_ptr<SplitData> split_;
};
std::unique_ptr<SplitData> SplitFixture::split_;

TEST_F(SplitFixture, LiouvilleConstantTwoWays) {
  const SplitData& s = *split_;
  EXPECT_LE(std::abs(s.F() - s.F_alt()), 1e-6 * std::abs(s.F()));
  EXPECT_LE(s.radius_discrepancy(), 1e-10 * std::abs(s.coefficients()[0]));
}

TEST_F(SplitFixture, ReconstructsUnsplitFunction) {
  const SplitData& s = *split_;
  for (int i = 0; i < 1000; ++i) {
    const double x = (i % 2 ? -1.0 : 1.0) * std::pow(10.0, -3.0 + 6.0 * i / 999);
    const cplx u = s.unsplit(x);
    EXPECT_NEAR(std::abs(s.g_minus(x) + s.g_plus(x) - u), 0.0, 1e-9 * std::max(1.0, std::abs(u)));
  }
}

TEST_F(SplitFixture, Asymptotics) {
  const SplitData& s = *split_;
  const double L = s.load().L;
  const cplx Fp = s.coefficients().back();
  const cplx far(0.0, -1e8);
  EXPECT_NEAR(std::abs(far * s.g_minus(far) + kI * Fp / L), 0.0, 1e-6 * std::abs(Fp / L));
  const cplx near(1e-10, 1e-10);
  const cplx k0 = s.kernel().k_plus(0.0);
  EXPECT_NEAR(std::abs(s.g_plus(near) * sqrt_plus(near * s.ell()) / k0 - 1.0), 0.0, 1e-4);
  // Taylor and subtraction forms of G^+ agree where both apply (w = 1 + i s L = 0.15).
  const cplx sw = kI * 0.85 / L;
  EXPECT_NEAR(std::abs(s.g_plus(sw) - (s.unsplit(sw) - s.g_minus(sw))), 0.0, 1e-8 * std::abs(s.g_plus(sw)));
  EXPECT_THROW(s.g_minus(kI / L), PoleError);
}

TEST(SplitData, ZerothCoefficient) {
  const Material m = mat(0.9, 0.6);
  const LoadProfile load{1.0, 2.0, 0};
  const SplitData s = solve_split(m, 0.3, load);
  const cplx xi = kI * m.ell / load.L;
  EXPECT_NEAR(std::abs(s.coefficients()[0] - s.kernel().k_plus(xi) / sqrt_plus(xi)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.F() - s.g_minus(cplx(0.0, -s.zeta() / m.ell))), 0.0, 1e-15);
}

TEST(SplitData, GuardsContourRadius) {
  auto K = std::make_shared<const FactorizedKernel>(KernelParams{0.3, 0.0, 0.707});
  SplitOptions opt;
  opt.radius = 1.2;
  EXPECT_THROW(SplitData(K, 1.0, 1.0, LoadProfile{1.0, 1.0, 0}, opt), DomainError);
  EXPECT_THROW(solve_split(mat(-0.9, 0.707), 0.5, LoadProfile{}), RegimeError);
}

TEST(SplitData, SmallLengthTrend) {
  // F ell^{-1/2} approaches the small-length limit as L/ell grows.
  const Material m = mat(0.9, 0.6);
  double prev = kInf;
  for (double L : {10.0, 100.0, 1000.0}) {
    const LoadProfile load{1.0, L, 1};
    const SplitData s = solve_split(m, 0.3, load);
    const cplx lim = liouville_smalllength_limit(m, 0.3, load);
    const double drift = std::abs(s.F() / lim - 1.0);
    EXPECT_LT(drift, prev);
    prev = drift;
  }
  EXPECT_LT(prev, 0.01);
}
