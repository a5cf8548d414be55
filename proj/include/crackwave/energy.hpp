/**
 * @file energy.hpp
 * @brief Energy release rate: couple-stress closed form, classical value, ratio and the
 *        small-length limit.
 */
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "crackwave/loading.hpp"
#include "crackwave/material.hpp"

namespace crackwave {

struct ErrResult {
  double E = 0.0;
  double E_cl = 0.0;
  double ratio = 0.0;
  double imag_residue = 0.0;  // |Im E| / |Re E| before taking the real part
  cplx F{0.0, 0.0};
  // parameter echo
  double m = 0.0, eta = 0.0, h0 = 0.0, L_over_ell = 0.0;
  int p = 0;
};

/// K_p = Gamma(p + 1/2) / (p! sqrt(pi)), i.e. (-1)^p sqrt(pi) / (p! Gamma(1/2 - p)).
double kp_constant(int p);

/// Re[2 i F^2 T0^2 / (G ell upsilon)]; throws NumericalError when |Im| > 1e-8 |Re|.
double err_couple(cplx F, const Material& material, double m, double T0);
/// T0^2 K_p^2 / (G L sqrt(1 - m^2)).
double err_classical(const LoadProfile& load, double m, double G);
/// Re[2 i F^2 L sqrt(1 - m^2) / (ell K_p^2 upsilon)].
double err_ratio(cplx F, const Material& material, double m, const LoadProfile& load);

/// [1 / (pi G sqrt(1 - m^2))] (int tau |X|^{-1/2} dX)^2 for a general load tau(X), X < 0.
double err_smalllength_limit(const std::function<double(double)>& tau, double m, double G);
/// Same, with the closed-form moment of the load family.
double err_smalllength_limit(const LoadProfile& load, double m, double G);
/// Leading small-ell behaviour of the Liouville constant for the load family.
cplx liouville_smalllength_limit(const Material& material, double m, const LoadProfile& load);

/// Full pipeline for one state.
ErrResult compute_err(const Material& material, double m, const LoadProfile& load, const SplitOptions& opt = {});

struct ErrMaxRow {
  double h0 = 0.0;
  double m_lim = 0.0;   // min(1, m_c)
  double m_eval = 0.0;  // (1 - factor) m_lim
  double E = 0.0;
  double ratio = 0.0;
  bool ok = false;
  std::string error;
};

/// For each h0: E and E/E^cl at m = (1 - factor) min(1, m_c). Failed rows are marked, not thrown.
std::vector<ErrMaxRow> err_max_sweep(const Material& base, const std::vector<double>& h0_grid,
                                     const LoadProfile& load, double factor = 1e-3, const SplitOptions& opt = {});

}  // namespace crackwave
