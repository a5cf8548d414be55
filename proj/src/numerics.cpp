#include "crackwave/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <queue>
#include <sstream>

#include "crackwave/errors.hpp"

namespace crackwave {

namespace {

// Kronrod 21 / Gauss 10 abscissae and weights (QUADPACK qk21).
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208643474262, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Segment {
  double a, b;
  cplx value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk21(const ComplexFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double hl = 0.5 * (b - a);
  std::array<cplx, 21> fv;
  fv[0] = f(c);
  for (int j = 0; j < 10; ++j) {
    const double dx = hl * kXgk[j];
    fv[1 + 2 * j] = f(c - dx);
    fv[2 + 2 * j] = f(c + dx);
  }
  cplx resk = fv[0] * kWgk[10];
  cplx resg(0.0, 0.0);
  double resabs = std::abs(fv[0]) * kWgk[10];
  for (int j = 0; j < 10; ++j) {
    const cplx pair = fv[1 + 2 * j] + fv[2 + 2 * j];
    resk += kWgk[j] * pair;
    resabs += kWgk[j] * (std::abs(fv[1 + 2 * j]) + std::abs(fv[2 + 2 * j]));
    if (j % 2 == 1) resg += kWg[j / 2] * pair;
  }
  const cplx mean = resk * 0.5;
  double resasc = kWgk[10] * std::abs(fv[0] - mean);
  for (int j = 0; j < 10; ++j)
    resasc += kWgk[j] * (std::abs(fv[1 + 2 * j] - mean) + std::abs(fv[2 + 2 * j] - mean));
  const double ahl = std::abs(hl);
  resasc *= ahl;
  resabs *= ahl;
  double err = std::abs((resk - resg) * hl);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
    err = std::max(50.0 * kEps * resabs, err);
  if (!std::isfinite(std::abs(resk))) throw NumericalError("adaptive_integral: non-finite integrand value");
  return {a, b, resk * hl, err};
}

QuadResult gk_adaptive(const ComplexFn& g, double a, double b, const QuadratureSpec& spec) {
  QuadResult out;
  if (a == b) return out;
  std::priority_queue<Segment> heap;
  std::vector<Segment> frozen;  // too narrow to split further
  Segment first = gk21(g, a, b);
  out.evaluations = 21;
  cplx total = first.value;
  double total_err = first.error;
  heap.push(first);
  int count = 1;
  while (!heap.empty()) {
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (total_err <= tol) break;
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const double scale = std::max({std::abs(worst.a), std::abs(worst.b), 1e-300});
    if (std::abs(worst.b - worst.a) < 64.0 * kEps * scale || mid == worst.a || mid == worst.b) {
      frozen.push_back(worst);
      continue;
    }
    if (count >= spec.max_subdivisions) {
      std::ostringstream msg;
      msg << "adaptive_integral: subdivision budget " << spec.max_subdivisions << " exhausted on ["
          << a << ", " << b << "], estimate " << total << " error " << total_err << " > " << tol;
      throw NumericalError(msg.str());
    }
    Segment l = gk21(g, worst.a, mid);
    Segment r = gk21(g, mid, worst.b);
    out.evaluations += 42;
    ++count;
    total += l.value + r.value - worst.value;
    total_err += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
  }
  // Recompute the sums from the surviving pieces to shed accumulated rounding.
  total = 0.0;
  total_err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    total_err += heap.top().error;
    heap.pop();
  }
  for (const auto& s : frozen) {
    total += s.value;
    total_err += s.error;
  }
  out.value = total;
  out.error = total_err;
  return out;
}

}  // namespace

QuadResult adaptive_integral(const ComplexFn& f, double a, double b, const QuadratureSpec& spec,
                             Singular singular) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0))
    throw DomainError("adaptive_integral: tolerances must be positive");
  if (std::isinf(a)) throw DomainError("adaptive_integral: lower limit must be finite");
  if (b < a) {
    QuadResult r = adaptive_integral(f, b, a, spec, singular == Singular::Left    ? Singular::Right
                                                      : singular == Singular::Right ? Singular::Left
                                                                                    : singular);
    r.value = -r.value;
    return r;
  }
  if (std::isinf(b)) {
    if (singular == Singular::Left || singular == Singular::Both) {
      QuadResult head = adaptive_integral(f, a, a + 1.0, spec, Singular::Left);
      QuadResult tail = adaptive_integral(f, a + 1.0, b, spec, Singular::None);
      return {head.value + tail.value, head.error + tail.error, head.evaluations + tail.evaluations};
    }
    // [a, T] directly, [T, inf) through t = T / v^2, which is smooth for t^{-3/2}, t^{-5/2}, ... decay
    const double T = a + std::max(1.0, std::abs(a));
    QuadResult head = adaptive_integral(f, a, T, spec, Singular::None);
    auto g = [&](double v) -> cplx {
      if (v <= 0.0) return cplx(0.0, 0.0);
      const double t = T / (v * v);
      if (std::isinf(t)) return cplx(0.0, 0.0);
      return f(t) * (2.0 * T / (v * v * v));
    };
    QuadResult tail = gk_adaptive(g, 0.0, 1.0, spec);
    return {head.value + tail.value, head.error + tail.error, head.evaluations + tail.evaluations};
  }
  const double w = b - a;
  switch (singular) {
    case Singular::None:
      return gk_adaptive(f, a, b, spec);
    case Singular::Left: {
      auto g = [&](double v) -> cplx { return f(a + w * v * v) * (2.0 * w * v); };
      return gk_adaptive(g, 0.0, 1.0, spec);
    }
    case Singular::Right: {
      auto g = [&](double v) -> cplx { return f(b - w * v * v) * (2.0 * w * v); };
      return gk_adaptive(g, 0.0, 1.0, spec);
    }
    case Singular::Both: {
      const double m = 0.5 * (a + b);
      QuadResult l = adaptive_integral(f, a, m, spec, Singular::Left);
      QuadResult r = adaptive_integral(f, m, b, spec, Singular::Right);
      return {l.value + r.value, l.error + r.error, l.evaluations + r.evaluations};
    }
  }
  return {};
}

QuadResult adaptive_integral(const ComplexFn& f, const std::vector<double>& points, const QuadratureSpec& spec) {
  QuadResult out;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    QuadResult r = adaptive_integral(f, points[i], points[i + 1], spec);
    out.value += r.value;
    out.error += r.error;
    out.evaluations += r.evaluations;
  }
  return out;
}

namespace {

// Wynn epsilon table kept as its last ascending diagonal.
class WynnEpsilon {
 public:
  cplx push(cplx s) {
    std::vector<cplx> next;
    next.reserve(diag_.size() + 1);
    next.push_back(s);
    for (std::size_t k = 0; k < diag_.size(); ++k) {
      const cplx diff = next[k] - diag_[k];
      if (std::abs(diff) == 0.0) break;
      const cplx before = k >= 1 ? diag_[k - 1] : cplx(0.0, 0.0);
      next.push_back(before + 1.0 / diff);
    }
    diag_ = std::move(next);
    std::size_t best = (diag_.size() - 1) & ~static_cast<std::size_t>(1);
    return diag_[best];
  }

 private:
  std::vector<cplx> diag_;
};

}  // namespace

QuadResult oscillatory_halfline(const ComplexFn& f, double freq, const QuadratureSpec& spec) {
  if (freq == 0.0) return adaptive_integral(f, 0.0, kInf, spec);
  const double period = kPi / std::abs(freq);
  auto g = [&](double t) { return f(t) * std::polar(1.0, -freq * t); };
  QuadratureSpec inner = spec;
  inner.abs_tol = spec.abs_tol * 0.1;
  inner.rel_tol = spec.rel_tol * 0.1;
  QuadResult out;
  int start = 0;
  if (spec.truncation_radius > 0.0) {
    start = static_cast<int>(std::ceil(spec.truncation_radius / period));
    std::vector<double> pts;
    for (int k = 0; k <= start; ++k) pts.push_back(k * period);
    QuadResult head = adaptive_integral(g, pts, inner);
    out.value = head.value;
    out.error = head.error;
    out.evaluations = head.evaluations;
  }
  WynnEpsilon wynn;
  cplx partial = out.value;
  cplx prev_est = partial;
  int agree = 0;
  const int min_terms = 8 + 2 * std::max(spec.tail_order, 1);
  for (int k = start, n = 0; n < 600; ++k, ++n) {
    QuadResult piece = adaptive_integral(g, k * period, (k + 1) * period, inner);
    out.evaluations += piece.evaluations;
    out.error += piece.error;
    partial += piece.value;
    const cplx est = wynn.push(partial);
    const double diff = std::abs(est - prev_est);
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(est));
    agree = (diff <= tol) ? agree + 1 : 0;
    prev_est = est;
    if (n >= min_terms && agree >= 2) {
      out.value = est;
      out.error += diff;
      return out;
    }
  }
  throw NumericalError("oscillatory_halfline: epsilon acceleration did not converge");
}

std::vector<cplx> contour_coefficients(const AnalyticFn& g, cplx center, double radius, int count, int nodes) {
  if (radius <= 0.0 || count < 1 || nodes < count) throw DomainError("contour_coefficients: bad arguments");
  std::vector<cplx> samples(nodes);
  for (int n = 0; n < nodes; ++n) samples[n] = g(center + std::polar(radius, 2.0 * kPi * n / nodes));
  std::vector<cplx> c(count, cplx(0.0, 0.0));
  for (int j = 0; j < count; ++j) {
    cplx acc(0.0, 0.0);
    for (int n = 0; n < nodes; ++n) acc += samples[n] * std::polar(1.0, -2.0 * kPi * double(j) * n / nodes);
    c[j] = acc / (double(nodes) * std::pow(radius, j));
  }
  return c;
}

CheckedCoefficients contour_coefficients_checked(const AnalyticFn& g, cplx center, double radius, int count,
                                                 double tol, int nodes) {
  CheckedCoefficients out;
  out.values = contour_coefficients(g, center, radius, count, nodes);
  const auto half = contour_coefficients(g, center, 0.5 * radius, count, nodes);
  for (int j = 0; j < count; ++j) out.discrepancy = std::max(out.discrepancy, std::abs(out.values[j] - half[j]));
  if (out.discrepancy > tol) {
    std::ostringstream msg;
    msg << "contour_coefficients: radius halving changed coefficients by " << out.discrepancy
        << " (> " << tol << "); integrand not analytic on the disc of radius " << radius;
    throw NumericalError(msg.str());
  }
  return out;
}

double bracketed_root(const RealFn& f, double lo, double hi, double tol) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi) || std::isnan(flo) || std::isnan(fhi)) {
    std::ostringstream msg;
    msg << "bracketed_root: no sign change on [" << lo << ", " << hi << "] (f = " << flo << ", " << fhi << ")";
    throw NumericalError(msg.str());
  }
  bool force_bisect = false;
  for (int it = 0; it < 400; ++it) {
    const double width = hi - lo;
    double x = 0.5 * (lo + hi);
    if (!force_bisect) {
      const double s = hi - fhi * (hi - lo) / (fhi - flo);
      if (s > lo && s < hi) x = s;
    }
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    force_bisect = (hi - lo) > 0.5 * width;
    if (hi - lo <= tol) break;
  }
  return std::abs(flo) < std::abs(fhi) ? lo : hi;
}

namespace {

// e^z z^(-s) Gamma(s,z) by the Legendre continued fraction (modified Lentz).
cplx gamma_cf_scaled(double s, cplx z) {
  const double tiny = 1e-300;
  cplx b = z + 1.0 - s;
  cplx c = 1.0 / tiny;
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 1; i < 20000; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const cplx del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) return h;
  }
  throw NumericalError("upper_incomplete_gamma: continued fraction did not converge");
}

bool is_nonpositive_integer(double s) { return s <= 0.0 && s == std::floor(s); }

}  // namespace

cplx upper_incomplete_gamma(double s, cplx z) {
  if (is_nonpositive_integer(s)) throw DomainError("upper_incomplete_gamma: s is a non-positive integer");
  if (z.real() < 0.0) throw DomainError("upper_incomplete_gamma: requires Re z >= 0");
  if (std::abs(z) >= 4.0) return std::exp(-z + s * std::log(z)) * gamma_cf_scaled(s, z);
  if (z == cplx(0.0, 0.0)) {
    if (s <= 0.0) throw DomainError("upper_incomplete_gamma: Gamma(s,0) diverges for s <= 0");
    return std::tgamma(s);
  }
  // Gamma(s) - z^s sum (-z)^n / (n! (s+n))
  cplx term(1.0, 0.0);
  cplx sum = 1.0 / s;
  for (int n = 1; n < 200; ++n) {
    term *= -z / double(n);
    const cplx add = term / (s + n);
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return std::tgamma(s) - std::exp(s * std::log(z)) * sum;
}

cplx power_tail_fourier(double mu, double a, double x) {
  if (!(a > 0.0)) throw DomainError("power_tail_fourier: a must be positive");
  if (x == 0.0) {
    if (mu >= -1.0) throw DomainError("power_tail_fourier: divergent tail at zero frequency");
    return -std::pow(a, mu + 1.0) / (mu + 1.0);
  }
  const double s = mu + 1.0;
  const cplx z(0.0, x * a);
  if (std::abs(z) >= 4.0) {
    // a^(mu+1) e^{-ixa} [e^z z^-s Gamma(s,z)]; phase taken from the same product x*a as the panels.
    return std::pow(a, s) * std::polar(1.0, -x * a) * gamma_cf_scaled(s, z);
  }
  return std::exp(-s * std::log(cplx(0.0, x))) * upper_incomplete_gamma(s, z);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

namespace {

struct GLRule {
  std::vector<double> x, w;
};

const GLRule& gl_rule_at_least(int n) {
  static const std::vector<int> sizes = {8, 12, 16, 24, 32, 48, 64, 96, 128, 192, 256, 384, 512};
  static const std::vector<GLRule> rules = [] {
    std::vector<GLRule> r(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) gauss_legendre(sizes[i], r[i].x, r[i].w);
    return r;
  }();
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] >= n) return rules[i];
  return rules.back();
}

cplx clenshaw(const std::vector<cplx>& c, double t) {
  cplx b1(0.0, 0.0), b2(0.0, 0.0);
  for (std::size_t k = c.size(); k-- > 1;) {
    const cplx b0 = 2.0 * t * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + c[0];
}

constexpr double kIbpThreshold = 400.0;

}  // namespace

std::vector<double> PanelFourier::sample_points(const Options& opt) {
  if (!(opt.xi_min > 0.0) || !(opt.xi_max > opt.xi_min) || !(opt.ratio > 1.0) || opt.nodes < 4)
    throw DomainError("PanelFourier: bad options");
  const int panels = static_cast<int>(std::ceil(std::log(opt.xi_max / opt.xi_min) / std::log(opt.ratio)));
  const int n = opt.nodes;
  std::vector<double> pts;
  pts.reserve(panels * (n - 1) + 1);
  for (int i = 0; i < panels; ++i) {
    const double a = opt.xi_min * std::pow(opt.xi_max / opt.xi_min, double(i) / panels);
    const double b = (i + 1 == panels) ? opt.xi_max : opt.xi_min * std::pow(opt.xi_max / opt.xi_min, double(i + 1) / panels);
    for (int j = (i == 0 ? 0 : 1); j < n; ++j) {
      const double t = -std::cos(kPi * j / (n - 1));
      pts.push_back(j == 0 ? a : (j == n - 1 ? b : 0.5 * (a + b) + 0.5 * (b - a) * t));
    }
  }
  return pts;
}

PanelFourier::PanelFourier(const std::vector<cplx>& samples, const Options& opt) : opt_(opt) { build(samples); }

PanelFourier::PanelFourier(const ComplexFn& A, const Options& opt) : opt_(opt) {
  const auto pts = sample_points(opt);
  std::vector<cplx> samples(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) samples[i] = A(pts[i]);
  build(samples);
}

void PanelFourier::build(const std::vector<cplx>& samples) {
  const auto pts = sample_points(opt_);
  if (samples.size() != pts.size()) throw DomainError("PanelFourier: sample count mismatch");
  const int n = opt_.nodes;
  const int N = n - 1;
  const int panels = static_cast<int>((pts.size() - 1) / N);
  panels_.resize(panels);
  for (int i = 0; i < panels; ++i) {
    Panel& p = panels_[i];
    p.a = pts[i * N];
    p.b = pts[(i + 1) * N];
    // values at x_k = cos(pi k / N) are samples[i*N + N - k]
    p.cheb.assign(n, cplx(0.0, 0.0));
    for (int m = 0; m < n; ++m) {
      cplx acc(0.0, 0.0);
      for (int k = 0; k <= N; ++k) {
        const double wk = (k == 0 || k == N) ? 0.5 : 1.0;
        acc += wk * samples[i * N + N - k] * std::cos(kPi * m * k / N);
      }
      p.cheb[m] = acc * (2.0 / N);
    }
    p.cheb[0] *= 0.5;
    p.cheb[N] *= 0.5;
    const double scale = 2.0 / (p.b - p.a);
    p.da.assign(n, cplx(0.0, 0.0));
    p.db.assign(n, cplx(0.0, 0.0));
    for (int q = 0; q < n; ++q) {
      cplx at1(0.0, 0.0), atm1(0.0, 0.0);
      for (int m = 0; m < n; ++m) {
        double d = 1.0;
        for (int r = 0; r < q; ++r) d *= double(m * m - r * r) / (2.0 * r + 1.0);
        at1 += p.cheb[m] * d;
        atm1 += p.cheb[m] * (((m + q) % 2 == 0) ? d : -d);
      }
      const double sc = std::pow(scale, q);
      p.db[q] = at1 * sc;
      p.da[q] = atm1 * sc;
    }
  }
  a0_ = samples.front() / std::pow(opt_.xi_min, opt_.mu_zero);

  const int K = opt_.tail_terms;
  tail_.assign(K, cplx(0.0, 0.0));
  if (K > 0) {
    // sum_j d_j u_k^(lambda - j) = A(xi_max u_k), u_k = 2^-k
    std::vector<std::vector<cplx>> M(K, std::vector<cplx>(K + 1));
    for (int k = 0; k < K; ++k) {
      const double u = std::pow(0.5, k);
      for (int j = 0; j < K; ++j) M[k][j] = std::pow(u, opt_.lambda_inf - j);
      M[k][K] = value(opt_.xi_max * u);
    }
    for (int c = 0; c < K; ++c) {
      int piv = c;
      for (int r = c + 1; r < K; ++r)
        if (std::abs(M[r][c]) > std::abs(M[piv][c])) piv = r;
      std::swap(M[c], M[piv]);
      for (int r = 0; r < K; ++r) {
        if (r == c) continue;
        const cplx fct = M[r][c] / M[c][c];
        for (int j = c; j <= K; ++j) M[r][j] -= fct * M[c][j];
      }
    }
    for (int j = 0; j < K; ++j) tail_[j] = M[j][K] / M[j][j] * std::pow(opt_.xi_max, double(j) - opt_.lambda_inf);
  }
}

cplx PanelFourier::value(double xi) const {
  if (xi <= opt_.xi_min) return a0_ * std::pow(xi, opt_.mu_zero);
  if (xi > opt_.xi_max) {
    cplx s(0.0, 0.0);
    for (std::size_t j = 0; j < tail_.size(); ++j) s += tail_[j] * std::pow(xi, opt_.lambda_inf - double(j));
    return s;
  }
  auto it = std::upper_bound(panels_.begin(), panels_.end(), xi, [](double v, const Panel& p) { return v < p.b; });
  if (it == panels_.end()) it = panels_.end() - 1;
  const double t = (2.0 * xi - it->a - it->b) / (it->b - it->a);
  return clenshaw(it->cheb, t);
}

cplx PanelFourier::panel_integral(const Panel& p, double x) const {
  const double h = p.b - p.a;
  const double xh = std::abs(x) * h;
  if (xh < kIbpThreshold) {
    const int want = std::max(opt_.nodes + 4, 12 + static_cast<int>(std::ceil(0.7 * xh)));
    const GLRule& r = gl_rule_at_least(want);
    const double mid = 0.5 * (p.a + p.b), half = 0.5 * h;
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < r.x.size(); ++i) {
      const double xi = mid + half * r.x[i];
      acc += r.w[i] * clenshaw(p.cheb, r.x[i]) * std::polar(1.0, -x * xi);
    }
    return acc * half;
  }
  // Terminating integration by parts with c = -ix.
  const cplx c(0.0, -x);
  const cplx ea = std::polar(1.0, -x * p.a);
  const cplx eb = std::polar(1.0, -x * p.b);
  cplx acc(0.0, 0.0);
  cplx cp = c;
  double sign = 1.0;
  for (std::size_t q = 0; q < p.da.size(); ++q) {
    acc += sign * (p.db[q] * eb - p.da[q] * ea) / cp;
    cp *= c;
    sign = -sign;
  }
  return acc;
}

cplx PanelFourier::transform(double x) const {
  // [0, xi_min]: a0 int xi^mu e^{-ix xi}
  const double e = opt_.xi_min;
  const double s0 = opt_.mu_zero + 1.0;
  if (s0 <= 0.0) throw DomainError("PanelFourier: integrand not integrable at zero");
  if (std::abs(x) * e > 1.0) throw DomainError("PanelFourier: frequency too large for the zero segment");
  cplx zero_part(0.0, 0.0);
  cplx term = std::pow(e, s0);
  for (int n = 0; n < 40; ++n) {
    const cplx add = term / (s0 + n);
    zero_part += add;
    if (std::abs(add) < 1e-18 * std::abs(zero_part)) break;
    term *= cplx(0.0, -x) * e / double(n + 1);
  }
  cplx acc = a0_ * zero_part;
  for (const auto& p : panels_) acc += panel_integral(p, x);
  for (std::size_t j = 0; j < tail_.size(); ++j)
    acc += tail_[j] * power_tail_fourier(opt_.lambda_inf - double(j), opt_.xi_max, x);
  return acc;
}

}  // namespace crackwave
