#include "crackwave/energy.hpp"

#include <cmath>
#include <sstream>

#include "crackwave/errors.hpp"
#include "crackwave/numerics.hpp"

namespace crackwave {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_subsonic(double m) {
  if (!(m >= 0.0 && m < 1.0)) {
    std::ostringstream msg;
    msg << "crack speed m=" << m << " must lie in [0, 1)";
    throw RegimeError(msg.str());
  }
}

double real_part_checked(cplx v, const char* what) {
  if (std::abs(v.imag()) > 1e-8 * std::abs(v.real())) {
    std::ostringstream msg;
    msg.precision(12);
    msg << what << ": value " << v << " is not real to 1e-8";
    throw NumericalError(msg.str());
  }
  return v.real();
}

}  // namespace

double kp_constant(int p) {
  if (p < 0) throw DomainError("kp_constant: p must be non-negative");
  return std::exp(std::lgamma(p + 0.5) - std::lgamma(p + 1.0)) / std::sqrt(kPi);
}

double err_couple(cplx F, const Material& material, double m, double T0) {
  require_subrayleigh(material.eta, material.h0, m);
  const double ups = upsilon(material.eta, material.h0, m);
  const cplx E = 2.0 * kI * F * F * T0 * T0 / (material.G * material.ell * ups);
  return real_part_checked(E, "err_couple");
}

double err_classical(const LoadProfile& load, double m, double G) {
  require_subsonic(m);
  const double Kp = kp_constant(load.p);
  return load.T0 * load.T0 * Kp * Kp / (G * load.L * std::sqrt(1.0 - m * m));
}

double err_ratio(cplx F, const Material& material, double m, const LoadProfile& load) {
  require_subrayleigh(material.eta, material.h0, m);
  const double Kp = kp_constant(load.p);
  const double ups = upsilon(material.eta, material.h0, m);
  const cplx r = 2.0 * kI * F * F * load.L * std::sqrt(1.0 - m * m) / (material.ell * Kp * Kp * ups);
  return real_part_checked(r, "err_ratio");
}

double err_smalllength_limit(const std::function<double(double)>& tau, double m, double G) {
  require_subsonic(m);
  QuadratureSpec spec;
  spec.abs_tol = 1e-15;
  spec.rel_tol = 1e-12;
  auto f = [&](double u) -> cplx { return tau(-u) / std::sqrt(u); };
  const QuadResult I = adaptive_integral(f, 0.0, kInf, spec, Singular::Left);
  if (!std::isfinite(I.value.real())) throw DomainError("err_smalllength_limit: load moment is not finite");
  const double v = I.value.real();
  return v * v / (kPi * G * std::sqrt(1.0 - m * m));
}

double err_smalllength_limit(const LoadProfile& load, double m, double G) {
  require_subsonic(m);
  const double v = traction_halfpower_moment(load);
  return v * v / (kPi * G * std::sqrt(1.0 - m * m));
}

cplx liouville_smalllength_limit(const Material& material, double m, const LoadProfile& load) {
  const double z = zeta(material.eta, material.h0, m);
  // (-i)_+^{1/2}, taken on the left edge of the cut.
  const cplx c = std::polar(1.0, 0.75 * kPi);
  return -std::sqrt(material.ell) * traction_halfpower_moment(load) / (std::sqrt(kPi) * kI * c * z * load.T0);
}

ErrResult compute_err(const Material& material, double m, const LoadProfile& load, const SplitOptions& opt) {
  const SplitData split = solve_split(material, m, load, opt);
  ErrResult r;
  r.F = split.F();
  const double ups = upsilon(material.eta, material.h0, m);
  const cplx E = 2.0 * kI * r.F * r.F * load.T0 * load.T0 / (material.G * material.ell * ups);
  r.imag_residue = std::abs(E.imag()) / std::abs(E.real());
  r.E = err_couple(r.F, material, m, load.T0);
  r.E_cl = err_classical(load, m, material.G);
  r.ratio = err_ratio(r.F, material, m, load);
  r.m = m;
  r.eta = material.eta;
  r.h0 = material.h0;
  r.p = load.p;
  r.L_over_ell = load.L / material.ell;
  return r;
}

std::vector<ErrMaxRow> err_max_sweep(const Material& base, const std::vector<double>& h0_grid,
                                     const LoadProfile& load, double factor, const SplitOptions& opt) {
  std::vector<ErrMaxRow> rows;
  for (double h0 : h0_grid) {
    ErrMaxRow row;
    row.h0 = h0;
    try {
      Material mat = base;
      mat.h0 = h0;
      row.m_lim = limiting_speed(mat.eta, h0);
      row.m_eval = (1.0 - factor) * row.m_lim;
      const ErrResult e = compute_err(mat, row.m_eval, load, opt);
      row.E = e.E;
      row.ratio = e.ratio;
      row.ok = true;
    } catch (const Error& ex) {
      row.error = ex.what();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace crackwave
