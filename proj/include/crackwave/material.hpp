/**
 * @file material.hpp
 * @brief Couple-stress material parameters and the scalar functions of (eta, h0, m).
 */
#pragma once

namespace crackwave {

struct Material {
  double G = 1.0;    // shear modulus
  double rho = 1.0;  // mass density
  double ell = 1.0;  // couple-stress length
  double eta = 0.0;  // in (-1, 1)
  double h0 = 0.0;   // normalised rotational inertia sqrt(J/4rho)/ell

  double shear_speed() const;      // c_s
  double rotational_inertia() const;  // J = 4 rho (h0 ell)^2
  double bending_length() const;   // ell / sqrt(2)
  double torsion_length() const;   // ell sqrt(1 + eta)
  /// Throws DomainError when an invariant is violated.
  void validate() const;
};

struct PropagationState {
  double m = 0.0;  // V / c_s
};

enum class RayleighRegime { SubRayleigh, SuperRayleigh };
enum class SonicRegime { Subsonic, Supersonic };

struct Regime {
  RayleighRegime rayleigh;
  SonicRegime sonic;
};

/// sqrt(1 - 2 h0^2 m^2); tiny negative arguments from rounding are clamped to 0.
double rotational_root(double h0, double m);

double upsilon(double eta, double h0, double m);
/// Large-frequency coefficient of the surface-wave determinant; equals 2 h0^2 m^2 upsilon.
double lambda_surface(double eta, double h0, double m);
/// Smallest m in (0, min(1, 1/(sqrt2 h0))) where the surface coefficient vanishes, capped at 1.
double critical_speed(double eta, double h0);
/// h0 in (0, 1/sqrt2] at which critical_speed reaches 1.
double h0_star(double eta);
double zeta(double eta, double h0, double m);
Regime classify_regime(double eta, double h0, double m);
/// min(1, m_c): the admissible upper bound on m.
double limiting_speed(double eta, double h0);
/// Throws RegimeError unless (eta, h0, m) is sub-Rayleigh.
void require_subrayleigh(double eta, double h0, double m);

}  // namespace crackwave
