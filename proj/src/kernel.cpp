#include "crackwave/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>
#include <sstream>

#include "crackwave/errors.hpp"
#include "crackwave/material.hpp"

namespace crackwave {

namespace {

constexpr cplx kI{0.0, 1.0};

}  // namespace

cplx sqrt_plus(cplx xi) {
  // Arguments in (-pi/2, 3pi/2]: the negative imaginary axis is the cut, approached from the left.
  if (xi == cplx(0.0, 0.0)) return 0.0;
  double a = std::arg(xi);
  if (a <= -0.5 * kPi) a += 2.0 * kPi;
  return std::polar(std::sqrt(std::abs(xi)), 0.5 * a);
}

cplx sqrt_minus(cplx xi) {
  // Arguments in [-3pi/2, pi/2): the positive imaginary axis is the cut.
  if (xi == cplx(0.0, 0.0)) return 0.0;
  double a = std::arg(xi);
  if (a >= 0.5 * kPi) a -= 2.0 * kPi;
  return std::polar(std::sqrt(std::abs(xi)), 0.5 * a);
}

double kernel_infinity(const KernelParams& P) {
  const double r = rotational_root(P.h0, P.m);
  const double num = r * (1.0 + r * r + 2.0 * P.eta) + r * r - P.eta * P.eta;
  return num / ((1.0 + r) * upsilon(P.eta, P.h0, P.m));
}

KernelValues kernel_eval(cplx xi, const KernelParams& P) {
  const double m = P.m, h0 = P.h0, eta = P.eta;
  const double hm2 = h0 * h0 * m * m;
  const double ups = upsilon(eta, h0, m);
  const cplx xi2 = xi * xi;
  KernelValues v;
  v.chi = std::sqrt(1.0 + 2.0 * (1.0 - h0 * h0) * m * m * xi2 + hm2 * hm2 * xi2 * xi2);
  const cplx alpha2 = 1.0 + (1.0 - hm2) * xi2 + v.chi;
  v.alpha = std::sqrt(alpha2);
  const cplx S = 2.0 * (1.0 - m * m) + (1.0 - 2.0 * hm2) * xi2;
  v.beta = std::sqrt(xi2 * S / alpha2);
  v.psi = ups * xi2 + 2.0 * std::sqrt(1.0 - m * m);
  if (std::abs(v.psi) <= 1e-14 * (1.0 + std::abs(ups * xi2))) {
    std::ostringstream msg;
    msg << "kernel_eval: xi = " << xi << " sits on the pole +-i zeta of 1/Psi";
    throw PoleError(msg.str());
  }
  if (xi == cplx(0.0, 0.0)) {
    v.k = 1.0;
    return v;
  }
  const cplx ab = v.alpha + v.beta;
  if (std::abs(ab) == 0.0) throw DomainError("kernel_eval: alpha + beta vanishes");
  const cplx b2 = v.beta * v.beta;
  const cplx N = v.alpha * v.beta * (alpha2 + b2 + 2.0 * eta * xi2) + alpha2 * b2 - eta * eta * xi2 * xi2;
  v.k = N / (std::sqrt(xi2) * v.psi * ab * kernel_infinity(P));
  return v;
}

double kernel_real(double t, const KernelParams& P) {
  if (t == 0.0) return 1.0;
  const double m = P.m, h0 = P.h0, eta = P.eta;
  const double hm2 = h0 * h0 * m * m;
  const double t2 = t * t;
  const double chi = std::sqrt(1.0 + 2.0 * (1.0 - h0 * h0) * m * m * t2 + hm2 * hm2 * t2 * t2);
  const double alpha2 = 1.0 + (1.0 - hm2) * t2 + chi;
  const double alpha = std::sqrt(alpha2);
  const double at = std::abs(t);
  const double beta = at * std::sqrt(2.0 * (1.0 - m * m) + (1.0 - 2.0 * hm2) * t2) / alpha;
  const double b2 = beta * beta;
  const double psi = upsilon(eta, h0, m) * t2 + 2.0 * std::sqrt(1.0 - m * m);
  const double N = alpha * beta * (alpha2 + b2 + 2.0 * eta * t2) + alpha2 * b2 - eta * eta * t2 * t2;
  return N / (at * psi * (alpha + beta) * kernel_infinity(P));
}

void check_kernel_positive(const KernelParams& P) {
  require_subrayleigh(P.eta, P.h0, P.m);
  for (int i = 0; i <= 480; ++i) {
    const double t = std::pow(10.0, -8.0 + 16.0 * i / 480.0);
    const double k = kernel_real(t, P);
    if (!(k > 0.0) || !std::isfinite(k)) {
      std::ostringstream msg;
      msg << "kernel not positive on the real axis: k(" << t << ") = " << k << " at m=" << P.m << ", eta=" << P.eta
          << ", h0=" << P.h0;
      throw RegimeError(msg.str());
    }
  }
}

FactorizedKernel::FactorizedKernel(const KernelParams& params, double tol) : params_(params), tol_(tol) {
  check_kernel_positive(params_);
  const KernelParams P = params_;
  // N loses about log10(1/Upsilon) digits at large t; the tolerance can't go below that noise.
  const double ups = upsilon(P.eta, P.h0, P.m);
  if (ups > 0.0) tol_ = std::max(tol_, 1e3 * std::numeric_limits<double>::epsilon() / ups);
  logk_ = [P](double t) { return std::log(kernel_real(t, P)); };
}

FactorizedKernel::FactorizedKernel(LogKernel log_kernel, double tol) : logk_(std::move(log_kernel)), tol_(tol) {}

double FactorizedKernel::kernel(double t) const { return std::exp(logk_(t)); }

// Phi(z) = (1/2 pi i) int_0^inf L(t) 2z / (t^2 - z^2) dt. Linear in t on [0, s] with decade
// breakpoints, then t = s/u on [s, inf), which is exact in floating point (a tan map is not near pi/2).
cplx FactorizedKernel::phi(cplx z) const {
  QuadratureSpec spec;
  spec.abs_tol = tol_;
  spec.rel_tol = tol_;
  spec.max_subdivisions = 20000;
  const double x = std::abs(z.real());
  const double s = std::max(x, 1.0);
  const bool subtract = z.imag() < 0.1;
  // Subtracted form: exact for Im z >= 0 and well conditioned on the real axis.
  const double Lx = subtract ? logk_(x) : 0.0;
  auto F = [&](double t) -> cplx {
    const cplx den = t * t - z * z;
    if (den == cplx(0.0, 0.0)) return 0.0;
    return (logk_(t) - Lx) * 2.0 * z / den;
  };
  std::vector<double> pts{0.0};
  for (double d = 1e-3; d < s; d *= 10.0) pts.push_back(d);
  if (x > 0.0 && x < s) pts.push_back(x);
  pts.push_back(s);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  cplx I = adaptive_integral(F, pts, spec).value;
  auto G = [&](double u) -> cplx {
    if (u <= 0.0) return -Lx * 2.0 * z / s;
    const double t = s / u;
    return F(t) * (s / (u * u));
  };
  I += adaptive_integral(G, 0.0, 1.0, spec).value;
  return (subtract ? 0.5 * Lx : 0.0) + I / (2.0 * kPi * kI);
}

cplx FactorizedKernel::k_plus(cplx z) const {
  if (z.imag() < 0.0) {
    std::ostringstream msg;
    msg << "k_plus evaluated in the lower half-plane at " << z;
    throw DomainError(msg.str());
  }
  return std::exp(-phi(z));
}

cplx FactorizedKernel::k_minus(cplx z) const {
  if (z.imag() > 0.0) {
    std::ostringstream msg;
    msg << "k_minus evaluated in the upper half-plane at " << z;
    throw DomainError(msg.str());
  }
  return 1.0 / k_plus(-z);
}

}  // namespace crackwave
