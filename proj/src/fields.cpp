#include "crackwave/fields.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "crackwave/errors.hpp"
#include "crackwave/kernel.hpp"
#include "crackwave/parallel.hpp"

namespace crackwave {

namespace {

constexpr cplx kI{0.0, 1.0};

// Exponents of each transformed integrand at xi -> 0 and xi -> infinity.
struct Exponents {
  double mu_zero, lambda_inf;
};
constexpr Exponents kW{-0.5, -2.5};
constexpr Exponents kQ{0.5, 0.5};
constexpr Exponents kSigma{0.5, -1.5};
constexpr Exponents kTau{1.5, 0.5};
constexpr Exponents kMu{1.5, -0.5};

}  // namespace

const char* field_name(FieldKind kind) {
  switch (kind) {
    case FieldKind::Opening: return "w";
    case FieldKind::Traction: return "p3";
    case FieldKind::SigmaShear: return "sigma23";
    case FieldKind::TauShear: return "tau23";
    case FieldKind::CoupleStress: return "mu22";
    case FieldKind::TotalShear: return "t23";
  }
  return "?";
}

NearTipCoefficients neartip_coefficients(cplx F, const Material& mat, double m, double T0) {
  require_subrayleigh(mat.eta, mat.h0, m);
  const double ups = upsilon(mat.eta, mat.h0, m);
  const double r = rotational_root(mat.h0, m);
  const double sp = std::sqrt(kPi);
  const cplx il = kI * mat.ell;
  const cplx il_half = std::sqrt(il);
  const cplx Cw = -8.0 * F * T0 * std::pow(il, -1.5) / (3.0 * sp * mat.G * ups);
  const cplx Ct = -F * T0 * (1.0 + mat.eta - 2.0 * mat.h0 * mat.h0 * m * m) * il_half / (2.0 * sp * ups);
  const cplx Cmu = 2.0 * F * T0 * (r - mat.eta) * (1.0 + mat.eta) * il_half / (sp * ups * (1.0 + r));
  const cplx Cp = -F * T0 * il_half / (2.0 * sp);
  NearTipCoefficients out{Cw.real(), Ct.real(), Cmu.real(), Cp.real(), 0.0};
  for (cplx c : {Cw, Ct, Cmu, Cp})
    if (std::abs(c) > 0.0) out.imag_residue = std::max(out.imag_residue, std::abs(c.imag()) / std::abs(c));
  return out;
}

struct FieldSolver::Bank {
  double sign;
  PanelFourier W, Q, S, T, M;
};

FieldSolver::FieldSolver(const SplitData& split, const Material& material, double m, const FieldOptions& opt)
    : split_(split), material_(material), m_(m), T0_(split.load().T0), L_(split.load().L), opt_(opt) {
  require_subrayleigh(material.eta, material.h0, m);
  pos_ = build_bank(1.0);
}

std::shared_ptr<const FieldSolver::Bank> FieldSolver::build_bank(double sign) const {
  PanelFourier::Options base;
  base.xi_min = opt_.xi_min;
  base.xi_max = opt_.xi_max;
  base.ratio = opt_.ratio;
  base.nodes = opt_.nodes;
  const std::vector<double> xs = PanelFourier::sample_points(base);
  const std::size_t n = xs.size();
  std::vector<cplx> W(n), Q(n), S(n), T(n), M(n);
  const KernelParams P{m_, material_.eta, material_.h0};
  const double eta = material_.eta;
  const double r2 = 1.0 - 2.0 * material_.h0 * material_.h0 * m_ * m_;
  const double ell = material_.ell;
  const cplx F = split_.F();
  const FactorizedKernel& K = split_.kernel();
  parallel_for(n, opt_.threads, [&](std::size_t i) {
    const double x = xs[i];
    const double xi = sign * x;
    const KernelValues kv = kernel_eval(xi, P);
    const double a = kv.alpha.real(), b = kv.beta.real(), psi = kv.psi.real();
    const double x2 = x * x;
    const double ab = a + b;
    const double sig = (a * b - eta * x2) / ab;
    const double tau = (a * a * b * b + (a * a + b * b + a * b) * eta * x2 - r2 * x2 * (eta * x2 - a * b)) / ab;
    const double N = a * b * (a * a + b * b + 2.0 * eta * x2) + a * a * b * b - eta * eta * x2 * x2;
    const cplx w = (split_.g_minus(xi / ell) - F) / (sqrt_minus(xi) * psi * K.k_minus(xi));
    W[i] = w;
    Q[i] = -N / ab * w;
    S[i] = sig * w;
    T[i] = tau * w;
    M[i] = kI * xi * sig * w;
  });
  auto opts = [&](Exponents e) {
    PanelFourier::Options o = base;
    o.mu_zero = e.mu_zero;
    o.lambda_inf = e.lambda_inf;
    return o;
  };
  return std::make_shared<const Bank>(Bank{sign, PanelFourier(W, opts(kW)), PanelFourier(Q, opts(kQ)),
                                           PanelFourier(S, opts(kSigma)), PanelFourier(T, opts(kTau)),
                                           PanelFourier(M, opts(kMu))});
}

cplx FieldSolver::half_line(const Bank& bank, FieldKind kind, double x) const {
  const double ell = material_.ell;
  const double G = material_.G;
  const double y = bank.sign * x;
  switch (kind) {
    case FieldKind::Opening: return T0_ / (kPi * G) * bank.W.transform(y);
    case FieldKind::Traction: return T0_ / (2.0 * kPi * ell) * bank.Q.transform(y);
    case FieldKind::SigmaShear: return -T0_ / (kPi * ell) * bank.S.transform(y);
    case FieldKind::TauShear: return -T0_ / (2.0 * kPi * ell) * bank.T.transform(y);
    case FieldKind::CoupleStress: return -T0_ * (1.0 + material_.eta) / kPi * bank.M.transform(y);
    case FieldKind::TotalShear:
      return half_line(bank, FieldKind::SigmaShear, x) + half_line(bank, FieldKind::TauShear, x);
  }
  return 0.0;
}

double FieldSolver::value(FieldKind kind, double X) const {
  if (kind == FieldKind::Opening) {
    if (!(X < 0.0)) throw DomainError("opening: defined for X < 0");
  } else if (!(X > 0.0)) {
    throw DomainError(std::string(field_name(kind)) + ": defined for X > 0");
  }
  return 2.0 * half_line(*pos_, kind, X / material_.ell).real();
}

double FieldSolver::opening(double X) const { return value(FieldKind::Opening, X); }
double FieldSolver::traction_ahead(double X) const { return value(FieldKind::Traction, X); }

StressValues FieldSolver::stresses(double X) const {
  StressValues s;
  s.sigma23 = value(FieldKind::SigmaShear, X);
  s.tau23 = value(FieldKind::TauShear, X);
  s.mu22 = value(FieldKind::CoupleStress, X);
  s.t23 = s.sigma23 + s.tau23;
  return s;
}

FieldProfile FieldSolver::profile(FieldKind kind, const std::vector<double>& X) const {
  FieldProfile out;
  out.kind = kind;
  out.X = X;
  out.values.reserve(X.size());
  for (double x : X) out.values.push_back(value(kind, x));
  return out;
}

double FieldSolver::imaginary_residue(FieldKind kind, const std::vector<double>& X) const {
  const auto neg = build_bank(-1.0);
  double max_re = 0.0, max_im = 0.0;
  for (double Xv : X) {
    const double x = Xv / material_.ell;
    const cplx full = half_line(*pos_, kind, x) + half_line(*neg, kind, x);
    max_re = std::max(max_re, std::abs(full.real()));
    max_im = std::max(max_im, std::abs(full.imag()));
  }
  return max_re > 0.0 ? max_im / max_re : max_im;
}

NearTipCoefficients FieldSolver::neartip_from_transform() const {
  const double ell = material_.ell;
  const cplx e34 = std::polar(1.0, -0.75 * kPi);
  const cplx e14 = std::polar(1.0, -0.25 * kPi);
  const double g32 = std::tgamma(1.5), g12 = std::sqrt(kPi), gm32 = std::tgamma(-1.5);
  NearTipCoefficients c;
  c.C_w = T0_ / (kPi * material_.G) * 2.0 * (pos_->W.tail_coefficients()[0] * gm32 * e34).real() * std::pow(ell, -1.5);
  c.C_t = -T0_ / (2.0 * kPi * ell) * 2.0 * (pos_->T.tail_coefficients()[0] * g32 * e34).real() * std::pow(ell, 1.5);
  c.C_mu = -T0_ * (1.0 + material_.eta) / kPi * 2.0 * (pos_->M.tail_coefficients()[0] * g12 * e14).real() *
           std::sqrt(ell);
  c.C_p = T0_ / (2.0 * kPi * ell) * 2.0 * (pos_->Q.tail_coefficients()[0] * g32 * e34).real() * std::pow(ell, 1.5);
  return c;
}

// p3 ~ C_p X^{-3/2} + D X^{-1/2} at the tip, so the integral over (0, inf) is a finite part:
// subtract (C_p X^{-3/2} + D' X^{-1/2}) e^{-X/a} with D' = D + C_p/a, whose finite part is
// -2 sqrt(pi) C_p / sqrt(a) + sqrt(pi) D' sqrt(a).
double FieldSolver::balance() const {
  const double ell = material_.ell;
  const double a = ell;
  const auto& tail = pos_->Q.tail_coefficients();
  const double pref = T0_ / (2.0 * kPi * ell);
  const cplx e34 = std::polar(1.0, -0.75 * kPi);
  const cplx e14 = std::polar(1.0, -0.25 * kPi);
  const double Cp = pref * 2.0 * (tail[0] * std::tgamma(1.5) * e34).real() * std::pow(ell, 1.5);
  const double D = pref * 2.0 * (tail[1] * std::sqrt(kPi) * e14).real() * std::sqrt(ell);
  const double Dp = D + Cp / a;
  auto g = [&](double X) {
    return traction_ahead(X) - (Cp * std::pow(X, -1.5) + Dp / std::sqrt(X)) * std::exp(-X / a);
  };
  const double X0 = 1e-8 * ell;
  const double Xb = 1e5 * std::max(L_, ell);
  std::vector<double> nodes, weights;
  gauss_legendre(16, nodes, weights);
  double sum = 0.0;
  for (double lo = X0; lo < Xb;) {
    const double hi = std::min(2.0 * lo, Xb);
    const double h = 0.5 * (hi - lo), c = 0.5 * (hi + lo);
    for (std::size_t k = 0; k < nodes.size(); ++k) sum += weights[k] * h * g(c + h * nodes[k]);
    lo = hi;
  }
  // Far field p3 ~ d1 X^{-3/2} + d2 X^{-5/2}, matched at Xb and 2 Xb.
  const double p1 = traction_ahead(Xb), p2 = traction_ahead(2.0 * Xb);
  const double d2 = (p1 * std::pow(Xb, 1.5) - p2 * std::pow(2.0 * Xb, 1.5)) / (1.0 / Xb - 1.0 / (2.0 * Xb));
  const double d1 = p1 * std::pow(Xb, 1.5) - d2 / Xb;
  sum += 2.0 * d1 / std::sqrt(Xb) + 2.0 / 3.0 * d2 * std::pow(Xb, -1.5);
  sum += -2.0 * std::sqrt(kPi) * Cp / std::sqrt(a) + std::sqrt(kPi) * Dp * std::sqrt(a);
  return sum;
}

PowerFit fit_power_law(const std::function<double(double)>& f, double X1, double X2, double expected, int n) {
  if (X1 == 0.0 || X2 == 0.0 || std::signbit(X1) != std::signbit(X2) || n < 2)
    throw DomainError("fit_power_law: need two non-zero points of equal sign and n >= 2");
  const double sgn = X1 < 0.0 ? -1.0 : 1.0;
  const double a = std::log(std::abs(X1)), b = std::log(std::abs(X2));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double nearest = kInf, pref = 0.0;
  for (int i = 0; i < n; ++i) {
    const double lx = a + (b - a) * i / (n - 1);
    const double X = sgn * std::exp(lx);
    const double v = f(X);
    const double ly = std::log(std::abs(v));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    if (std::abs(X) < nearest) {
      nearest = std::abs(X);
      pref = v / std::pow(std::abs(X), expected);
    }
  }
  PowerFit out;
  out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  out.prefactor = pref;
  return out;
}

MaxShear max_total_shear(const FieldSolver& solver, double X_min, double X_max, int grid) {
  if (!(X_min > 0.0) || !(X_max > X_min) || grid < 3) {
    std::ostringstream msg;
    msg << "max_total_shear: degenerate window [" << X_min << ", " << X_max << "]";
    throw DomainError(msg.str());
  }
  const double la = std::log(X_min), lb = std::log(X_max);
  auto t23 = [&](double lx) { return solver.value(FieldKind::TotalShear, std::exp(lx)); };
  int best = 0;
  double best_v = -kInf;
  std::vector<double> lx(grid);
  for (int i = 0; i < grid; ++i) {
    lx[i] = la + (lb - la) * i / (grid - 1);
    const double v = t23(lx[i]);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  if (best == 0 || best == grid - 1) return {best_v, std::exp(lx[best])};
  // Golden-section search on the bracketing cells.
  double lo = lx[best - 1], hi = lx[best + 1];
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  double fc = t23(c), fd = t23(d);
  for (int it = 0; it < 60 && hi - lo > 1e-10; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = t23(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = t23(d);
    }
  }
  const double lm = 0.5 * (lo + hi);
  const double vm = t23(lm);
  if (vm >= best_v) return {vm, std::exp(lm)};
  return {best_v, std::exp(lx[best])};
}

MaxShear max_total_shear(const FieldSolver& solver) {
  const double ell = solver.material().ell;
  return max_total_shear(solver, 1e-3 * ell, 100.0 * std::max(solver.L(), ell));
}

}  // namespace crackwave
