/**
 * @file numerics.hpp
 * @brief Quadrature, contour Taylor coefficients, root bracketing and the
 *        panel Fourier engine used for the crack-line inversions.
 */
#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <vector>

namespace crackwave {

using cplx = std::complex<double>;
using RealFn = std::function<double(double)>;
using ComplexFn = std::function<cplx(double)>;
using AnalyticFn = std::function<cplx(cplx)>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 4000;
  double truncation_radius = 0.0;  // oscillatory_halfline: start of the between-zeros partition
  int tail_order = 2;              // oscillatory_halfline: minimum number of Wynn sweeps
};

struct QuadResult {
  cplx value{0.0, 0.0};
  double error = 0.0;
  int evaluations = 0;
};

// Declared integrable endpoint singularities; removed by a u^2 substitution.
enum class Singular { None, Left, Right, Both };

/// Global adaptive Gauss-Kronrod (21 point) on [a,b]; b may be +infinity.
/// Throws NumericalError when the subdivision budget runs out.
QuadResult adaptive_integral(const ComplexFn& f, double a, double b, const QuadratureSpec& spec = {},
                             Singular singular = Singular::None);

/// Same, summed over consecutive breakpoints (the last may be +infinity).
QuadResult adaptive_integral(const ComplexFn& f, const std::vector<double>& points,
                             const QuadratureSpec& spec = {});

/// Integral of f(t) exp(-i freq t) over [0, inf): partition at multiples of pi/|freq|
/// and accelerate the partial sums with the Wynn epsilon algorithm.
QuadResult oscillatory_halfline(const ComplexFn& f, double freq, const QuadratureSpec& spec = {});

/// First `count` Taylor coefficients of g about `center` from an n-point trapezoid rule on
/// the circle of the given radius.
std::vector<cplx> contour_coefficients(const AnalyticFn& g, cplx center, double radius, int count,
                                       int nodes = 256);

struct CheckedCoefficients {
  std::vector<cplx> values;
  double discrepancy = 0.0;  // max |c_j(r) - c_j(r/2)|
};

/// contour_coefficients plus a radius-halving comparison; throws NumericalError if the
/// two sets differ by more than tol (non-analytic integrand inside the disc).
CheckedCoefficients contour_coefficients_checked(const AnalyticFn& g, cplx center, double radius,
                                                 int count, double tol, int nodes = 256);

/// Root of f in [lo,hi] with f(lo) f(hi) <= 0. Bisection guarded secant steps.
double bracketed_root(const RealFn& f, double lo, double hi, double tol);

/// Upper incomplete gamma function Gamma(s, z) for real s (not a non-positive integer)
/// and Re z >= 0, principal branch of z^s.
cplx upper_incomplete_gamma(double s, cplx z);

/// Abel-regularised integral of t^mu exp(-i x t) over [a, inf), a > 0.
cplx power_tail_fourier(double mu, double a, double x);

/// Gauss-Legendre nodes and weights on [-1,1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// One-sided Fourier integral I(x) = int_0^inf A(xi) exp(-i x xi) dxi for an integrand
/// sampled once. A behaves like a0 xi^mu_zero near 0 and like sum_k c_k xi^(lambda_inf-k)
/// at infinity. Each geometric panel carries a Chebyshev interpolant that is integrated
/// exactly against the exponential; the two end pieces are done analytically.
class PanelFourier {
 public:
  struct Options {
    double xi_min = 1e-14;
    double xi_max = 1e7;
    double ratio = 1.5;
    int nodes = 16;
    double mu_zero = -0.5;
    double lambda_inf = -2.5;
    int tail_terms = 3;
  };

  /// Sample points (shared panel endpoints appear once), increasing.
  static std::vector<double> sample_points(const Options& opt);

  PanelFourier(const std::vector<cplx>& samples, const Options& opt);
  PanelFourier(const ComplexFn& A, const Options& opt);

  cplx transform(double x) const;
  /// Interpolated integrand.
  cplx value(double xi) const;
  /// Coefficients c_k of the large-xi expansion.
  const std::vector<cplx>& tail_coefficients() const { return tail_; }
  double lambda_inf() const { return opt_.lambda_inf; }
  const Options& options() const { return opt_; }

 private:
  struct Panel {
    double a, b;
    std::vector<cplx> cheb;   // Chebyshev coefficients on [a,b]
    std::vector<cplx> da;     // derivatives at a (physical scaling), order 0..n-1
    std::vector<cplx> db;     // derivatives at b
  };
  void build(const std::vector<cplx>& samples);
  cplx panel_integral(const Panel& p, double x) const;

  Options opt_;
  std::vector<Panel> panels_;
  cplx a0_{0.0, 0.0};
  std::vector<cplx> tail_;
};

}  // namespace crackwave
