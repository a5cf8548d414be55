#include "crackwave/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "crackwave/errors.hpp"
#include "crackwave/numerics.hpp"

namespace crackwave {

namespace {

// Determinant scaled by xi^5, evaluated at m = mb - u so that beta^2 is free of cancellation.
// mode Frequency: xi = omega / m; mode WaveNumber: xi = grid value.
double scaled_det(double u, double mb, double grid_value, DispersionGrid mode, double eta, double h0) {
  const double m = mb - u;
  const double xi = (mode == DispersionGrid::Frequency) ? grid_value / m : grid_value;
  const double xi2 = xi * xi;
  const double hm2 = h0 * h0 * m * m;
  const double chi = std::sqrt(1.0 + 2.0 * (1.0 - h0 * h0) * m * m * xi2 + hm2 * hm2 * xi2 * xi2);
  const double alpha2 = 1.0 + (1.0 - hm2) * xi2 + chi;
  const double alpha = std::sqrt(alpha2);
  double S = 0.0;  // alpha^2 beta^2 / xi^2
  if (mode == DispersionGrid::WaveNumber) {
    S = (2.0 + 2.0 * h0 * h0 * xi2) * u * (2.0 * mb - u);
  } else {
    const double w = grid_value;
    const double c = 2.0 - 2.0 * h0 * h0 * w * w;
    const double m2sq = (c - std::sqrt(c * c + 8.0 * w * w)) / 4.0;
    S = 2.0 * u * (2.0 * mb - u) * (m * m - m2sq) / (m * m);
  }
  if (S < 0.0) throw DomainError("dispersion: beta^2 < 0 (non-decaying branch)");
  const double beta = std::abs(xi) * std::sqrt(S) / alpha;
  const double beta2 = beta * beta;
  const double ap = alpha2 + eta * xi2;
  const double bp = beta2 + eta * xi2;
  const double det = beta * ap * ap - alpha * bp * bp;
  return det / (xi2 * xi2 * std::abs(xi));
}

double bound_for(double grid_value, DispersionGrid mode, double h0) {
  return mode == DispersionGrid::Frequency ? bulk_speed_at_frequency(grid_value, h0)
                                           : shear_phase_speed(grid_value, h0);
}

// All admissible roots mR in [0.01, mb] at one grid value, ascending.
std::vector<double> roots_at(double grid_value, DispersionGrid mode, double eta, double h0) {
  const double mb = bound_for(grid_value, mode, h0);
  std::vector<double> roots;
  auto f = [&](double u) { return scaled_det(u, mb, grid_value, mode, eta, h0); };
  const double f_boundary = f(0.0);
  if (std::abs(f_boundary) <= 1e-13) roots.push_back(mb);
  const double u_max = mb - 0.01;
  if (u_max <= 0.0) return roots;
  const double u_min = std::max(mb * 1e-15, 1e-300);
  constexpr int kScan = 600;
  double prev_u = u_min;
  double prev_f = f(prev_u);
  for (int i = 1; i <= kScan; ++i) {
    const double u = u_min * std::pow(u_max / u_min, double(i) / kScan);
    const double fu = f(u);
    if (fu == 0.0) {
      roots.push_back(mb - u);
    } else if (prev_f != 0.0 && std::signbit(fu) != std::signbit(prev_f)) {
      const double ur = bracketed_root(f, prev_u, u, 1e-15 * std::max(u, 1e-300));
      roots.push_back(mb - ur);
    }
    prev_u = u;
    prev_f = fu;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

double bulk_speed_at_frequency(double omega_norm, double h0) {
  if (!(omega_norm >= 0.0)) throw DomainError("bulk_speed_at_frequency: omega must be non-negative");
  const double c = 2.0 - 2.0 * h0 * h0 * omega_norm * omega_norm;
  return std::sqrt((c + std::sqrt(c * c + 8.0 * omega_norm * omega_norm)) / 4.0);
}

double shear_phase_speed(double k_norm, double h0) {
  if (!(k_norm >= 0.0)) throw DomainError("shear_phase_speed: k must be non-negative");
  const double k2 = k_norm * k_norm;
  return std::sqrt((1.0 + 0.5 * k2) / (1.0 + h0 * h0 * k2));
}

double dispersion_det(double mR, double omega_norm, double eta, double h0) {
  if (!(mR > 0.0) || !(omega_norm > 0.0)) throw DomainError("dispersion_det: mR and omega must be positive");
  const double mb = bulk_speed_at_frequency(omega_norm, h0);
  const double xi = omega_norm / mR;
  const double d = scaled_det(mb - mR, mb, omega_norm, DispersionGrid::Frequency, eta, h0);
  return d * std::pow(xi, 5);
}

double dispersion_det_k(double mR, double k_norm, double eta, double h0) {
  if (!(mR > 0.0) || !(k_norm > 0.0)) throw DomainError("dispersion_det_k: mR and k must be positive");
  const double mb = shear_phase_speed(k_norm, h0);
  return scaled_det(mb - mR, mb, k_norm, DispersionGrid::WaveNumber, eta, h0) * std::pow(k_norm, 5);
}

std::vector<DispersionPoint> trace_curve(const std::vector<double>& grid, DispersionGrid kind, double eta, double h0) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw DomainError("trace_curve: grid values must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw DomainError("trace_curve: grid must be strictly increasing");
  }
  std::vector<DispersionPoint> out;
  out.reserve(grid.size());
  double prev = -1.0;
  for (double g : grid) {
    const auto roots = roots_at(g, kind, eta, h0);
    if (roots.empty()) {
      std::ostringstream msg;
      msg << "trace_curve: surface-wave root lost at grid value " << g;
      if (!out.empty()) msg << " (last good point: grid " << (kind == DispersionGrid::Frequency ? out.back().omega_norm : out.back().k_norm)
                            << ", mR " << out.back().mR << ")";
      throw NumericalError(msg.str());
    }
    double pick = roots.back();
    if (prev > 0.0) {
      for (double r : roots)
        if (std::abs(r - prev) < std::abs(pick - prev)) pick = r;
    }
    DispersionPoint p;
    p.mR = pick;
    if (kind == DispersionGrid::Frequency) {
      p.omega_norm = g;
      p.k_norm = g / pick;
    } else {
      p.k_norm = g;
      p.omega_norm = g * pick;
    }
    p.alternates = static_cast<int>(roots.size()) - 1;
    p.jump = prev > 0.0 && std::abs(pick - prev) > 0.05 * prev;
    out.push_back(p);
    prev = pick;
  }
  return out;
}

}  // namespace crackwave
