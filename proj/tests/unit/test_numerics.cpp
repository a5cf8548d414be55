#include <gtest/gtest.h>

#include <cmath>

#include "crackwave/errors.hpp"
#include "crackwave/numerics.hpp"

using namespace crackwave;

TEST(Quadrature, PolynomialAndExponential) {
  auto f = [](double x) { return cplx(x * x, 0.0); };
  EXPECT_NEAR(adaptive_integral(f, 0.0, 3.0).value.real(), 9.0, 1e-12);
  auto e = [](double x) { return cplx(std::exp(-x), std::exp(-2.0 * x)); };
  const cplx v = adaptive_integral(e, 0.0, kInf).value;
  EXPECT_NEAR(v.real(), 1.0, 1e-10);
  EXPECT_NEAR(v.imag(), 0.5, 1e-10);
}

TEST(Quadrature, DeclaredEndpointSingularity) {
  auto f = [](double x) { return cplx(1.0 / std::sqrt(x), 0.0); };
  EXPECT_NEAR(adaptive_integral(f, 0.0, 1.0, {}, Singular::Left).value.real(), 2.0, 1e-10);
  auto g = [](double x) { return cplx(1.0 / std::sqrt(1.0 - x), 0.0); };
  EXPECT_NEAR(adaptive_integral(g, 0.0, 1.0, {}, Singular::Right).value.real(), 2.0, 1e-10);
}

TEST(Quadrature, BreakpointsSumPieces) {
  auto f = [](double x) { return cplx(std::abs(x - 1.0), 0.0); };
  EXPECT_NEAR(adaptive_integral(f, std::vector<double>{0.0, 1.0, 2.0}).value.real(), 1.0, 1e-13);
}

TEST(Quadrature, BudgetExhaustionThrows) {
  QuadratureSpec spec;
  spec.max_subdivisions = 2;
  spec.rel_tol = 1e-15;
  spec.abs_tol = 1e-300;
  auto f = [](double x) { return cplx(std::sin(1.0 / (x + 1e-3)), 0.0); };
  EXPECT_THROW(adaptive_integral(f, 0.0, 1.0, spec), NumericalError);
}

TEST(Oscillatory, CosineOverOnePlusSquare) {
  // int_0^inf cos t / (1 + t^2) dt = pi / (2e); the sine part is odd in the frequency.
  auto f = [](double t) { return cplx(1.0 / (1.0 + t * t), 0.0); };
  const cplx v = oscillatory_halfline(f, 1.0).value;
  EXPECT_NEAR(v.real(), kPi / (2.0 * std::exp(1.0)), 1e-9);
  const cplx w = oscillatory_halfline(f, -1.0).value;
  EXPECT_NEAR(w.real(), v.real(), 1e-12);
  EXPECT_NEAR(w.imag(), -v.imag(), 1e-12);
}

TEST(Contour, ExponentialTaylorCoefficients) {
  auto g = [](cplx z) { return std::exp(z); };
  const auto c = contour_coefficients(g, 0.0, 0.5, 10);
  double fact = 1.0;
  for (int j = 0; j < 10; ++j) {
    if (j > 0) fact *= j;
    EXPECT_NEAR(std::abs(c[j] - 1.0 / fact), 0.0, 1e-12);
  }
}

TEST(Contour, RadiusHalvingDetectsSingularity) {
  auto pole = [](cplx z) { return 1.0 / (z - 0.3); };
  EXPECT_THROW(contour_coefficients_checked(pole, 0.0, 0.5, 4, 1e-10), NumericalError);
  const auto ok = contour_coefficients_checked(pole, 0.0, 0.25, 4, 1e-10);
  EXPECT_LT(ok.discrepancy, 1e-10);
  EXPECT_NEAR(std::abs(ok.values[0] + 1.0 / 0.3), 0.0, 1e-12);
}

TEST(Roots, BracketedRoot) {
  EXPECT_NEAR(bracketed_root([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-14), std::sqrt(2.0), 1e-13);
  EXPECT_THROW(bracketed_root([](double x) { return x * x + 1.0; }, 0.0, 2.0, 1e-12), NumericalError);
}

TEST(SpecialFunctions, IncompleteGamma) {
  EXPECT_NEAR(std::abs(upper_incomplete_gamma(0.5, 1.0) - std::sqrt(kPi) * std::erfc(1.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(upper_incomplete_gamma(1.0, cplx(0.0, 2.0)) - std::exp(cplx(0.0, -2.0))), 0.0, 1e-13);
  // Continued-fraction branch; much larger Im z only measures the phase rounding of exp.
  const cplx z(20.0, 1e3);
  EXPECT_NEAR(std::abs(upper_incomplete_gamma(1.0, z) / std::exp(-z) - 1.0), 0.0, 1e-12);
  EXPECT_TRUE(std::isfinite(std::abs(upper_incomplete_gamma(0.5, cplx(3.5e6, 1e7)))));
}

TEST(SpecialFunctions, GaussLegendre) {
  std::vector<double> x, w;
  gauss_legendre(16, x, w);
  double s0 = 0.0, s30 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s0 += w[i];
    s30 += w[i] * std::pow(x[i], 30);
  }
  EXPECT_NEAR(s0, 2.0, 1e-14);
  EXPECT_NEAR(s30, 2.0 / 31.0, 1e-14);
}

TEST(PanelFourier, MatchesDirectQuadrature) {
  // A = xi^{-1/2} / (1 + xi)^2: xi^{-1/2} at 0, xi^{-5/2} series at infinity.
  auto A = [](double xi) { return cplx(1.0 / (std::sqrt(xi) * (1.0 + xi) * (1.0 + xi)), 0.0); };
  PanelFourier::Options opt;
  opt.mu_zero = -0.5;
  opt.lambda_inf = -2.5;
  const PanelFourier pf(A, opt);
  for (double x : {0.3, 1.0, 7.0}) {
    QuadratureSpec spec;
    spec.abs_tol = 1e-13;
    auto head = [&](double t) { return A(t) * std::polar(1.0, -x * t); };
    cplx ref = adaptive_integral(head, 0.0, 1.0, spec, Singular::Left).value;
    ref += std::polar(1.0, -x) * oscillatory_halfline([&](double t) { return A(t + 1.0); }, x, spec).value;
    EXPECT_NEAR(std::abs(pf.transform(x) - ref), 0.0, 1e-8) << "x=" << x;
  }
  // Beta-function value at zero frequency.
  EXPECT_NEAR(std::abs(pf.transform(0.0) - kPi / 2.0), 0.0, 1e-8);
}

TEST(PanelFourier, PowerTailAbelRule) {
  // int_1^inf t^{-3/2} e^{-ixt} dt against direct oscillatory quadrature.
  const double x = 2.0;
  QuadratureSpec spec;
  spec.abs_tol = 1e-13;
  const cplx ref = std::polar(1.0, -x) *
                   oscillatory_halfline([](double t) { return cplx(std::pow(t + 1.0, -1.5), 0.0); }, x, spec).value;
  EXPECT_NEAR(std::abs(power_tail_fourier(-1.5, 1.0, x) - ref), 0.0, 1e-9);
}
