/**
 * @file kernel.hpp
 * @brief Wiener-Hopf symbol pieces and the multiplicative factorization k = k^- / k^+.
 */
#pragma once

#include <functional>

#include "crackwave/numerics.hpp"

namespace crackwave {

struct KernelParams {
  double m = 0.0;
  double eta = 0.0;
  double h0 = 0.0;
};

struct KernelValues {
  cplx chi, alpha, beta, psi, k;
};

/// xi_+^{1/2}: analytic for Im xi > 0, cut on the negative imaginary axis, sqrt(xi) for xi > 0.
cplx sqrt_plus(cplx xi);
/// xi_-^{1/2}: analytic for Im xi < 0, cut on the positive imaginary axis, sqrt(xi) for xi > 0.
cplx sqrt_minus(cplx xi);

/// All symbol pieces at complex xi = s ell. Principal branches off the real axis,
/// cancellation-free beta on it. Throws PoleError at xi = +-i zeta.
KernelValues kernel_eval(cplx xi, const KernelParams& params);

/// Real-axis kernel k(t); even, positive, k(0) = 1 and k -> 1 at infinity.
double kernel_real(double t, const KernelParams& params);

/// Limit of the unnormalised kernel at infinity (divided out by kernel_eval).
double kernel_infinity(const KernelParams& params);

/// Throws RegimeError unless params are sub-Rayleigh and k > 0 on a real-axis sample.
void check_kernel_positive(const KernelParams& params);

/// k^+(z) = exp(-Phi(z)), Phi(z) = (1/2 pi i) int_0^inf log k(t) 2z / (t^2 - z^2) dt for Im z >= 0;
/// k^-(z) = 1 / k^+(-z). Works for any even real log-kernel that decays at infinity.
class FactorizedKernel {
 public:
  using LogKernel = std::function<double(double)>;

  explicit FactorizedKernel(const KernelParams& params, double tol = 1e-10);
  explicit FactorizedKernel(LogKernel log_kernel, double tol = 1e-10);

  /// Im z >= 0 (real axis approached from above).
  cplx k_plus(cplx z) const;
  /// Im z <= 0 (real axis approached from below).
  cplx k_minus(cplx z) const;
  double log_kernel(double t) const { return logk_(t); }
  double kernel(double t) const;
  const KernelParams& params() const { return params_; }

 private:
  cplx phi(cplx z) const;

  KernelParams params_{};
  LogKernel logk_;
  double tol_;
};

}  // namespace crackwave
