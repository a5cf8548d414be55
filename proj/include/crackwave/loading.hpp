/**
 * @file loading.hpp
 * @brief Crack-face traction family, its transform, the additive split G^- + G^+ and
 *        the Liouville constant F.
 *
 * Wave numbers are carried as xi = s ell throughout; `s` arguments are dimensional.
 */
#pragma once

#include <memory>
#include <vector>

#include "crackwave/kernel.hpp"
#include "crackwave/material.hpp"

namespace crackwave {

struct LoadProfile {
  double T0 = 1.0;  // resultant per unit thickness
  double L = 1.0;   // length scale of the load
  int p = 0;        // exponent
  void validate() const;
};

/// tau(X) = (-1)^p / p! (T0/L) (X/L)^p e^{X/L} for X < 0.
double traction(double X, const LoadProfile& load);
/// T0 / (1 + i s L)^{1+p}.
cplx traction_transform(cplx s, const LoadProfile& load);
/// int_{-inf}^0 tau(X) |X|^{-1/2} dX = T0 Gamma(p+1/2) / (p! sqrt(L)).
double traction_halfpower_moment(const LoadProfile& load);

struct SplitOptions {
  double radius = 0.4;          // contour radius in w = 1 + i s L
  int nodes = 256;              // trapezoid nodes on the circle
  int extra_terms = 24;         // Taylor terms kept for G^+ near s = i/L
  double radius_check_tol = 1e-10;
  bool cross_check = true;      // compute F a second time as I1/I2
  double cross_check_tol = 1e-6;
};

class SplitData {
 public:
  /// ell is the couple-stress length; the kernel must be factorized for (m, eta, h0).
  SplitData(std::shared_ptr<const FactorizedKernel> kernel, double ell, double zeta, const LoadProfile& load,
            const SplitOptions& opt = {});

  /// F_0 .. F_p.
  std::vector<cplx> coefficients() const { return {taylor_.begin(), taylor_.begin() + load_.p + 1}; }
  cplx F() const { return F_; }
  /// I1 / I2 from real-line quadrature; NaN when the cross-check is disabled.
  cplx F_alt() const { return F_alt_; }
  double zeta() const { return zeta_; }
  double ell() const { return ell_; }
  const LoadProfile& load() const { return load_; }
  const FactorizedKernel& kernel() const { return *kernel_; }
  double radius_discrepancy() const { return radius_discrepancy_; }

  cplx g_minus(cplx s) const;
  /// Im s >= 0, s != 0.
  cplx g_plus(cplx s) const;
  /// k^+(s ell) / [(s ell)_+^{1/2} (1 + i s L)^{1+p}].
  cplx unsplit(cplx s) const;

 private:
  std::pair<cplx, cplx> appendix_integrals() const;

  std::shared_ptr<const FactorizedKernel> kernel_;
  double ell_;
  double zeta_;
  LoadProfile load_;
  SplitOptions opt_;
  std::vector<cplx> taylor_;
  cplx F_;
  cplx F_alt_;
  double radius_discrepancy_ = 0.0;
};

/// Kernel factorization plus split for one crack state; L in `load` is dimensional.
/// Throws RegimeError outside the sub-Rayleigh regime.
SplitData solve_split(const Material& material, double m, const LoadProfile& load, const SplitOptions& opt = {});

/// First `count` Taylor coefficients of k^+(s ell) / (s ell)_+^{1/2} in powers of w = 1 + i s L,
/// for any k^+ evaluator taking xi = s ell (the classical oracle passes k^+ = 1).
std::vector<cplx> split_coefficients(const AnalyticFn& k_plus_of_xi, double ell, const LoadProfile& load,
                                     int count, double radius = 0.4, int nodes = 256);

}  // namespace crackwave
