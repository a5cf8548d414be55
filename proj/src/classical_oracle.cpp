#include "crackwave/classical_oracle.hpp"

#include <cmath>

#include "crackwave/energy.hpp"
#include "crackwave/errors.hpp"

namespace crackwave {

namespace {

constexpr cplx kI{0.0, 1.0};

}  // namespace

std::vector<cplx> h_coefficients(int p, double L) {
  if (p < 0 || !(L > 0.0)) throw DomainError("h_coefficients: need p >= 0 and L > 0");
  const cplx base = 1.0 / std::sqrt(kI / L);
  std::vector<cplx> H;
  for (int j = 0; j <= p; ++j) {
    // Reflection: sqrt(pi) / Gamma(1/2 - j) = (-1)^j Gamma(j + 1/2) / sqrt(pi), so the signs cancel.
    H.push_back(kp_constant(j) * base);
  }
  return H;
}

std::vector<cplx> h_coefficients_contour(int p, double L) {
  LoadProfile load{1.0, L, p};
  return split_coefficients([](cplx) { return cplx(1.0, 0.0); }, 1.0, load, p + 1);
}

ClassicalSolution classical_solve(const LoadProfile& load, double m, double G) {
  load.validate();
  if (!(m >= 0.0 && m < 1.0)) throw RegimeError("classical_solve: m must lie in [0, 1)");
  ClassicalSolution s;
  s.H = h_coefficients(load.p, load.L);
  s.m = m;
  s.nu = std::sqrt(1.0 - m * m);
  s.load = load;
  s.G = G;
  return s;
}

ClassicalNearTip classical_neartip(double x, const ClassicalSolution& sol) {
  if (x == 0.0) throw DomainError("classical_neartip: X = 0 is the crack tip");
  const double X = std::abs(x);
  const double a = kp_constant(sol.load.p) * sol.load.T0 / std::sqrt(kPi * sol.load.L);
  return {a / std::sqrt(X), 2.0 * a / (sol.nu * sol.G) * std::sqrt(X)};
}

double classical_sif(const ClassicalSolution& sol) {
  return kp_constant(sol.load.p) * std::sqrt(2.0 / sol.load.L) * sol.load.T0;
}

double classical_err(const ClassicalSolution& sol) {
  return err_classical(sol.load, sol.m, sol.G);
}

cplx classical_stress_transform(double s, const ClassicalSolution& sol) {
  const cplx w = 1.0 + kI * s * sol.load.L;
  cplx I = 0.0;
  const int p = sol.load.p;
  for (int j = 0; j <= p; ++j) I += sol.H[j] / std::pow(w, p + 1 - j);
  return -sol.load.T0 * sqrt_plus(s) * I;
}

}  // namespace crackwave
