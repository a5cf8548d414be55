/**
 * @file classical_oracle.hpp
 * @brief Classical-elasticity steady Mode III crack under the same load family.
 */
#pragma once

#include <vector>

#include "crackwave/loading.hpp"

namespace crackwave {

struct ClassicalSolution {
  std::vector<cplx> H;  // H_0 .. H_p
  double m = 0.0;
  double nu = 1.0;      // sqrt(1 - m^2)
  LoadProfile load;
  double G = 1.0;
};

/// H_j = (-1)^j / j! sqrt(pi) / Gamma(1/2 - j) (i/L)^{-1/2}, j = 0..p.
std::vector<cplx> h_coefficients(int p, double L);
/// Same coefficients from the circle contour with k^+ = 1.
std::vector<cplx> h_coefficients_contour(int p, double L);

ClassicalSolution classical_solve(const LoadProfile& load, double m, double G);

struct ClassicalNearTip {
  double sigma23 = 0.0;  // at X = |x| ahead of the tip
  double w = 0.0;        // at X = -|x| behind the tip
};

/// Leading near-tip terms at distance |x| from the tip (x != 0).
ClassicalNearTip classical_neartip(double x, const ClassicalSolution& sol);
/// K_III = lim sqrt(2 pi X) sigma23 = K_p sqrt(2/L) T0.
double classical_sif(const ClassicalSolution& sol);
/// Same value as err_classical.
double classical_err(const ClassicalSolution& sol);

/// Transform of the classical stress ahead of the tip: -T0 s_+^{1/2} I^-(s) with
/// I^- = sum_j H_j / (1 + i s L)^{p+1-j}; real-axis values for the inversion check.
cplx classical_stress_transform(double s, const ClassicalSolution& sol);

}  // namespace crackwave
