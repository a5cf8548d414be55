#include "crackwave/loading.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "crackwave/errors.hpp"

namespace crackwave {

namespace {

constexpr cplx kI{0.0, 1.0};

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

void LoadProfile::validate() const {
  std::ostringstream msg;
  if (!(T0 > 0.0)) msg << "T0 must be positive; ";
  if (!(L > 0.0)) msg << "L must be positive; ";
  if (p < 0) msg << "p must be a non-negative integer; ";
  const std::string why = msg.str();
  if (!why.empty()) throw DomainError("load: " + why.substr(0, why.size() - 2));
}

double traction(double X, const LoadProfile& load) {
  if (!(X < 0.0)) throw DomainError("traction: defined for X < 0 only");
  const double u = X / load.L;
  const double sign = (load.p % 2 == 0) ? 1.0 : -1.0;
  return sign / factorial(load.p) * (load.T0 / load.L) * std::pow(u, load.p) * std::exp(u);
}

cplx traction_transform(cplx s, const LoadProfile& load) {
  const cplx w = 1.0 + kI * s * load.L;
  if (std::abs(w) == 0.0) throw PoleError("traction_transform: pole at s = i/L");
  return load.T0 / std::pow(w, load.p + 1);
}

double traction_halfpower_moment(const LoadProfile& load) {
  return load.T0 * std::tgamma(load.p + 0.5) / (factorial(load.p) * std::sqrt(load.L));
}

std::vector<cplx> split_coefficients(const AnalyticFn& k_plus_of_xi, double ell, const LoadProfile& load, int count,
                                     double radius, int nodes) {
  if (!(radius > 0.0 && radius < 1.0)) throw DomainError("split_coefficients: radius must lie in (0, 1)");
  auto g = [&](cplx w) {
    const cplx xi = kI * ell * (1.0 - w) / load.L;
    return k_plus_of_xi(xi) / sqrt_plus(xi);
  };
  return contour_coefficients(g, 0.0, radius, count, nodes);
}

SplitData::SplitData(std::shared_ptr<const FactorizedKernel> kernel, double ell, double zeta, const LoadProfile& load,
                     const SplitOptions& opt)
    : kernel_(std::move(kernel)), ell_(ell), zeta_(zeta), load_(load), opt_(opt) {
  load_.validate();
  if (!(ell_ > 0.0)) throw DomainError("SplitData: ell must be positive");
  if (!(zeta_ > 0.0) || !std::isfinite(zeta_)) throw RegimeError("SplitData: zeta must be positive and finite");
  // The disc in w must stay clear of the branch point s = 0 (w = 1) and the pole s = -i zeta/ell.
  const double clearance = std::min(1.0, 1.0 + zeta_ * load_.L / ell_);
  if (!(opt_.radius < clearance)) {
    std::ostringstream msg;
    msg << "SplitData: contour radius " << opt_.radius << " reaches a singularity (clearance " << clearance << ")";
    throw DomainError(msg.str());
  }
  const int p = load_.p;
  const FactorizedKernel& K = *kernel_;
  AnalyticFn kp = [&K](cplx xi) { return K.k_plus(xi); };
  taylor_ = split_coefficients(kp, ell_, load_, p + 1 + opt_.extra_terms, opt_.radius, opt_.nodes);
  const auto half = split_coefficients(kp, ell_, load_, p + 1, 0.5 * opt_.radius, opt_.nodes);
  double scale = 0.0;
  for (int j = 0; j <= p; ++j) {
    radius_discrepancy_ = std::max(radius_discrepancy_, std::abs(taylor_[j] - half[j]));
    scale = std::max(scale, std::abs(taylor_[j]));
  }
  if (radius_discrepancy_ > opt_.radius_check_tol * scale) {
    std::ostringstream msg;
    msg << "SplitData: split coefficients changed by " << radius_discrepancy_ << " under radius halving";
    throw NumericalError(msg.str());
  }
  F_ = g_minus(cplx(0.0, -zeta_ / ell_));
  F_alt_ = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
  if (opt_.cross_check) {
    const auto [I1, I2] = appendix_integrals();
    F_alt_ = I1 / I2;
    if (!(std::abs(F_ - F_alt_) <= opt_.cross_check_tol * std::abs(F_))) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "Liouville constant cross-check failed: G^-(-i zeta/ell) = " << F_ << ", I1/I2 = " << F_alt_;
      throw NumericalError(msg.str());
    }
  }
}

SplitData solve_split(const Material& material, double m, const LoadProfile& load, const SplitOptions& opt) {
  material.validate();
  load.validate();
  require_subrayleigh(material.eta, material.h0, m);
  auto kernel = std::make_shared<const FactorizedKernel>(KernelParams{m, material.eta, material.h0});
  return SplitData(kernel, material.ell, zeta(material.eta, material.h0, m), load, opt);
}

cplx SplitData::g_minus(cplx s) const {
  const cplx w = 1.0 + kI * s * load_.L;
  if (std::abs(w) == 0.0) throw PoleError("g_minus: pole at s = i/L");
  cplx sum = 0.0;
  const int p = load_.p;
  for (int j = 0; j <= p; ++j) sum += taylor_[j] / std::pow(w, p + 1 - j);
  return sum;
}

cplx SplitData::unsplit(cplx s) const {
  const cplx xi = s * ell_;
  if (std::abs(xi) == 0.0) throw PoleError("unsplit: branch point at s = 0");
  const cplx w = 1.0 + kI * s * load_.L;
  if (std::abs(w) == 0.0) throw PoleError("unsplit: pole at s = i/L");
  return kernel_->k_plus(xi) / (sqrt_plus(xi) * std::pow(w, load_.p + 1));
}

cplx SplitData::g_plus(cplx s) const {
  const cplx w = 1.0 + kI * s * load_.L;
  if (std::abs(w) < 0.5 * opt_.radius) {
    cplx sum = 0.0, wk = 1.0;
    for (std::size_t j = load_.p + 1; j < taylor_.size(); ++j) {
      sum += taylor_[j] * wk;
      wk *= w;
    }
    return sum;
  }
  return unsplit(s) - g_minus(s);
}

// I1 = int G^-(xi/ell) / (xi_-^{1/2} Psi k^-) dxi, I2 = int 1 / (xi_-^{1/2} Psi k^-) dxi over the real line.
// Psi is replaced by xi^2 + zeta^2, which differs by the constant factor upsilon.
std::pair<cplx, cplx> SplitData::appendix_integrals() const {
  // Pure power tails set in well beyond the pole modulus zeta, so the cut-off scales with it.
  const double R = 1e3 * std::max(1.0, zeta_);
  QuadratureSpec spec;
  spec.abs_tol = 1e-14;
  spec.rel_tol = 1e-11;
  spec.max_subdivisions = 20000;
  const double z2 = zeta_ * zeta_;
  auto base = [&](double xi) -> cplx {
    // xi != 0; the sign selects the half-line.
    return 1.0 / (sqrt_minus(xi) * (xi * xi + z2) * kernel_->k_minus(xi));
  };
  std::vector<double> breaks{1e-3, 1.0, 10.0, 100.0, 1e3, 0.1 * zeta_, zeta_, 10.0 * zeta_, R};
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  breaks.erase(std::upper_bound(breaks.begin(), breaks.end(), R), breaks.end());
  cplx I1 = 0.0, I2 = 0.0;
  for (double sigma : {1.0, -1.0}) {
    auto f1 = [&](double x) { return g_minus(sigma * x / ell_) * base(sigma * x); };
    auto f2 = [&](double x) { return base(sigma * x); };
    cplx a1 = adaptive_integral(f1, 0.0, breaks.front(), spec, Singular::Left).value;
    cplx a2 = adaptive_integral(f2, 0.0, breaks.front(), spec, Singular::Left).value;
    a1 += adaptive_integral(f1, breaks, spec).value;
    a2 += adaptive_integral(f2, breaks, spec).value;
    // Power tails beyond R: integrands ~ x^{-7/2} and x^{-5/2}.
    a1 += f1(R) * R / 2.5;
    a2 += f2(R) * R / 1.5;
    I1 += a1;
    I2 += a2;
  }
  return {I1, I2};
}

}  // namespace crackwave
