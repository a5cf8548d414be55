/**
 * @file dispersion.hpp
 * @brief Antiplane couple-stress surface waves: determinant, root tracing, shear oracle.
 */
#pragma once

#include <vector>

namespace crackwave {

struct DispersionPoint {
  double omega_norm = 0.0;  // omega ell / c_s
  double k_norm = 0.0;      // k ell
  double mR = 0.0;          // v_R / c_s
  int alternates = 0;       // other admissible roots seen at this grid point
  bool jump = false;        // |mR - previous mR| > 5% of the previous value
};

enum class DispersionGrid { Frequency, WaveNumber };

/// det D(mR, omega) for the surface-wave system; alpha, beta from the kernel formulas
/// with xi = omega / mR. Throws DomainError off the decaying branch (beta^2 < 0).
double dispersion_det(double mR, double omega_norm, double eta, double h0);

/// Same determinant at fixed wave number xi = k ell.
double dispersion_det_k(double mR, double k_norm, double eta, double h0);

/// Bulk bound on mR where beta vanishes, for fixed omega or fixed k.
double bulk_speed_at_frequency(double omega_norm, double h0);
double shear_phase_speed(double k_norm, double h0);

/// Traces mR along a strictly increasing positive grid by continuation.
/// Throws NumericalError (carrying the last good point) when the branch is lost.
std::vector<DispersionPoint> trace_curve(const std::vector<double>& grid, DispersionGrid kind, double eta, double h0);

}  // namespace crackwave
