#include "crackwave/material.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "crackwave/errors.hpp"
#include "crackwave/numerics.hpp"

namespace crackwave {

double Material::shear_speed() const { return std::sqrt(G / rho); }
double Material::rotational_inertia() const { return 4.0 * rho * (h0 * ell) * (h0 * ell); }
double Material::bending_length() const { return ell / std::sqrt(2.0); }
double Material::torsion_length() const { return ell * std::sqrt(1.0 + eta); }

void Material::validate() const {
  std::ostringstream msg;
  if (!(G > 0.0)) msg << "G must be positive; ";
  if (!(rho > 0.0)) msg << "rho must be positive; ";
  if (!(ell > 0.0)) msg << "ell must be positive; ";
  if (!(eta > -1.0 && eta < 1.0)) msg << "eta must lie in (-1, 1); ";
  if (!(h0 >= 0.0)) msg << "h0 must be non-negative; ";
  const std::string why = msg.str();
  if (!why.empty()) throw DomainError("material: " + why.substr(0, why.size() - 2));
}

double rotational_root(double h0, double m) {
  if (h0 == 0.0) return 1.0;
  const double arg = 1.0 - 2.0 * h0 * h0 * m * m;
  if (arg < 0.0) {
    if (arg > -1e-13) return 0.0;
    std::ostringstream msg;
    msg << "1 - 2 h0^2 m^2 < 0 at h0=" << h0 << ", m=" << m;
    throw DomainError(msg.str());
  }
  return std::sqrt(arg);
}

double upsilon(double eta, double h0, double m) {
  const double r = rotational_root(h0, m);
  const double hm2 = h0 * h0 * m * m;
  return (1.0 - eta * eta - 2.0 * hm2 + 2.0 * r * (1.0 + eta - hm2)) / (1.0 + r);
}

double lambda_surface(double eta, double h0, double m) {
  const double r = rotational_root(h0, m);
  const double a = 1.0 + eta;
  const double b = r * r + eta;
  return a * a * r - b * b;
}

double critical_speed(double eta, double h0) {
  if (!(eta > -1.0 && eta < 1.0) || !(h0 >= 0.0)) throw DomainError("critical_speed: parameters out of range");
  if (h0 == 0.0) return 1.0;
  const double upper = std::min(1.0, 1.0 / (std::sqrt(2.0) * h0));
  auto f = [&](double m) { return lambda_surface(eta, h0, m); };
  constexpr int kScan = 512;
  double prev_m = upper / kScan;
  double prev_f = f(prev_m);
  for (int i = 2; i <= kScan; ++i) {
    const double m = upper * i / kScan;
    const double fm = f(m);
    if (fm == 0.0) return std::min(1.0, m);
    if (std::signbit(fm) != std::signbit(prev_f)) return std::min(1.0, bracketed_root(f, prev_m, m, 1e-12));
    prev_m = m;
    prev_f = fm;
  }
  // At m = 1/(sqrt2 h0) the rotational root vanishes and the coefficient is exactly -eta^2, so with
  // eta = 0 the bound itself is the zero; rounding in r can hide it from the scan.
  return upper;
}

double h0_star(double eta) {
  if (!(eta > -1.0 && eta < 1.0)) throw DomainError("h0_star: eta out of range");
  const double upper = 1.0 / std::sqrt(2.0);
  auto f = [&](double h) { return lambda_surface(eta, h, 1.0); };
  constexpr int kScan = 512;
  double prev_h = upper / kScan;
  double prev_f = f(prev_h);
  for (int i = 2; i <= kScan; ++i) {
    const double h = upper * i / kScan;
    const double fh = f(h);
    if (std::signbit(fh) != std::signbit(prev_f) && fh != 0.0) return bracketed_root(f, prev_h, h, 1e-12);
    prev_h = h;
    prev_f = fh;
  }
  // No interior sign change. At h0 = 1/sqrt2, r = 0 exactly (the sampled value carries the rounding
  // of 1 - 2h^2 through a square root) and the coefficient reduces to -eta^2: a root only for eta = 0.
  if (eta * eta < 1e-14) return upper;
  std::ostringstream msg;
  msg << "h0_star: no sign change of the surface coefficient on (0, 1/sqrt2] for eta=" << eta;
  throw NumericalError(msg.str());
}

double zeta(double eta, double h0, double m) {
  if (m >= 1.0) throw RegimeError("zeta: m >= 1");
  const double u = upsilon(eta, h0, m);
  if (!(u > 0.0)) throw RegimeError("zeta: upsilon <= 0 (super-Rayleigh)");
  return std::sqrt(2.0 * std::sqrt(1.0 - m * m) / u);
}

double limiting_speed(double eta, double h0) { return std::min(1.0, critical_speed(eta, h0)); }

Regime classify_regime(double eta, double h0, double m) {
  Regime out{RayleighRegime::SuperRayleigh, m < 1.0 ? SonicRegime::Subsonic : SonicRegime::Supersonic};
  if (m < 0.0) throw DomainError("classify_regime: m must be non-negative");
  if (m < limiting_speed(eta, h0) && upsilon(eta, h0, m) > 0.0) out.rayleigh = RayleighRegime::SubRayleigh;
  return out;
}

void require_subrayleigh(double eta, double h0, double m) {
  if (m < 0.0) throw DomainError("negative crack speed");
  if (classify_regime(eta, h0, m).rayleigh != RayleighRegime::SubRayleigh) {
    std::ostringstream msg;
    msg << "regime violation: m=" << m << " is not below min(1, m_c)=" << limiting_speed(eta, h0)
        << " for eta=" << eta << ", h0=" << h0;
    throw RegimeError(msg.str());
  }
}

}  // namespace crackwave
