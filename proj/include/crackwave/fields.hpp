/**
 * @file fields.hpp
 * @brief Crack-line fields from the inverse transforms: opening, traction ahead of the tip,
 *        shear and couple stresses, their near-tip coefficients and the balance integral.
 */
#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "crackwave/loading.hpp"
#include "crackwave/material.hpp"

namespace crackwave {

enum class FieldKind { Opening, Traction, SigmaShear, TauShear, CoupleStress, TotalShear };

const char* field_name(FieldKind kind);

struct FieldProfile {
  std::vector<double> X;
  std::vector<double> values;
  FieldKind kind = FieldKind::Opening;
};

struct StressValues {
  double sigma23 = 0.0, tau23 = 0.0, mu22 = 0.0, t23 = 0.0;
};

struct NearTipCoefficients {
  double C_w = 0.0;   // w ~ C_w (-X)^{3/2}
  double C_t = 0.0;   // t23 ~ C_t X^{-3/2}
  double C_mu = 0.0;  // mu22 ~ C_mu X^{-1/2}
  double C_p = 0.0;   // p3 ~ C_p X^{-3/2}
  double imag_residue = 0.0;  // largest |Im| / |Re| among the complex closed forms
};

/// Closed forms from F; the imaginary parts left by the branch algebra are reported, not thrown.
NearTipCoefficients neartip_coefficients(cplx F, const Material& material, double m, double T0);

struct FieldOptions {
  double xi_min = 1e-14;
  double xi_max = 1e7;
  double ratio = 1.5;
  int nodes = 16;
  int threads = 1;  // workers for the kernel samples
};

class FieldSolver {
 public:
  FieldSolver(const SplitData& split, const Material& material, double m, const FieldOptions& opt = {});

  double opening(double X) const;         // X < 0
  double traction_ahead(double X) const;  // X > 0
  StressValues stresses(double X) const;  // X > 0
  double value(FieldKind kind, double X) const;
  FieldProfile profile(FieldKind kind, const std::vector<double>& X) const;

  /// Largest |Im| / max|Re| of the full-line inversion over the grid, both half-lines
  /// integrated separately (no symmetry folding).
  double imaginary_residue(FieldKind kind, const std::vector<double>& X) const;

  /// Finite-part integral of p3 over (0, inf); equals T0 by the balance condition.
  double balance() const;

  /// Near-tip coefficients read off the large-xi expansion of the sampled transforms.
  NearTipCoefficients neartip_from_transform() const;

  const Material& material() const { return material_; }
  double m() const { return m_; }
  double T0() const { return T0_; }
  double L() const { return L_; }

 private:
  struct Bank;
  std::shared_ptr<const Bank> build_bank(double sign) const;
  /// prefactor * int_0^inf A(sign xi) exp(-i sign x xi) dxi for one bank.
  cplx half_line(const Bank& bank, FieldKind kind, double x) const;

  SplitData split_;
  Material material_;
  double m_;
  double T0_;
  double L_;
  FieldOptions opt_;
  std::shared_ptr<const Bank> pos_;
};

struct PowerFit {
  double slope = 0.0;      // least-squares d log|f| / d log|X|
  double prefactor = 0.0;  // f(X) / |X|^expected at the point nearest the tip
};

/// Log-spaced samples between |X1| and |X2| (same sign).
PowerFit fit_power_law(const std::function<double(double)>& f, double X1, double X2, double expected_exponent,
                       int n = 9);

struct MaxShear {
  double t23max = 0.0;
  double X_at = 0.0;
};

/// Maximum of t23 over [X_min, X_max]: log grid then golden-section refinement.
MaxShear max_total_shear(const FieldSolver& solver, double X_min, double X_max, int grid = 400);

/// Default window [1e-3 ell, 100 max(L, ell)].
MaxShear max_total_shear(const FieldSolver& solver);

}  // namespace crackwave
