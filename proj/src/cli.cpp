#include "crackwave/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "crackwave/energy.hpp"
#include "crackwave/material.hpp"
#include "crackwave/parallel.hpp"
#include "crackwave/validation.hpp"

namespace crackwave {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& raw) {
  const std::string s = trim(raw);
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end || !std::isfinite(v))
    throw ConfigError("not a finite number: '" + s + "'");
  return v;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  if (!s.empty() && s.back() == ',') out.push_back({});
  return out;
}

bool parse_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError("not a boolean: '" + s + "'");
}

std::vector<int> to_ints(const std::vector<double>& v, const std::string& key) {
  std::vector<int> out;
  for (double x : v) {
    if (x < 0.0 || x != std::floor(x) || x > 1000.0) throw ConfigError(key + ": expected non-negative integers");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

const std::vector<std::string>& grid_axes() {
  static const std::vector<std::string> axes{"eta", "h0", "p", "L_over_ell", "m"};
  return axes;
}

struct Tuple {
  double eta = 0.0, h0 = 0.0, L_over_ell = 0.0, m_in = 0.0, m = 0.0;
  int p = 0;
};

// Cartesian product over the selected axes; the sweep axis runs fastest.
std::vector<Tuple> enumerate(const RunConfig& c, const std::vector<std::string>& used) {
  std::vector<std::string> order;
  for (const auto& a : grid_axes())
    if (std::find(used.begin(), used.end(), a) != used.end() && a != c.sweep_variable) order.push_back(a);
  if (std::find(used.begin(), used.end(), c.sweep_variable) != used.end()) order.push_back(c.sweep_variable);

  auto size_of = [&](const std::string& a) -> std::size_t {
    if (a == "eta") return c.eta.size();
    if (a == "h0") return c.h0.size();
    if (a == "p") return c.p.size();
    if (a == "L_over_ell") return c.L_over_ell.size();
    return c.m.size();
  };
  std::size_t total = 1;
  for (const auto& a : order) total *= size_of(a);

  std::vector<Tuple> out;
  out.reserve(total);
  std::vector<std::size_t> idx(order.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    Tuple t;
    t.eta = c.eta.front();
    t.h0 = c.h0.front();
    t.p = c.p.front();
    t.L_over_ell = c.L_over_ell.front();
    t.m_in = c.m.front();
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto& a = order[k];
      if (a == "eta") t.eta = c.eta[idx[k]];
      else if (a == "h0") t.h0 = c.h0[idx[k]];
      else if (a == "p") t.p = c.p[idx[k]];
      else if (a == "L_over_ell") t.L_over_ell = c.L_over_ell[idx[k]];
      else t.m_in = c.m[idx[k]];
    }
    out.push_back(t);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (++idx[k] < size_of(order[k])) break;
      idx[k] = 0;
    }
  }
  return out;
}

Material material_of(const RunConfig& c, const Tuple& t) {
  Material mat;
  mat.G = c.G;
  mat.rho = c.rho;
  mat.ell = c.ell;
  mat.eta = t.eta;
  mat.h0 = t.h0;
  return mat;
}

LoadProfile load_of(const RunConfig& c, const Tuple& t) { return LoadProfile{c.T0, t.L_over_ell * c.ell, t.p}; }

std::string describe(const Tuple& t, bool with_load, bool with_m) {
  std::ostringstream s;
  s << "eta=" << format_number(t.eta) << " h0=" << format_number(t.h0);
  if (with_load) s << " p=" << t.p << " L_over_ell=" << format_number(t.L_over_ell);
  if (with_m) s << " m=" << format_number(t.m);
  return s.str();
}

using Row = std::vector<std::string>;

struct Table {
  Row header;
  std::vector<Row> rows;
};

std::string csv_line(const Row& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ',';
    if (r[i].find_first_of(",\"\n") == std::string::npos) {
      s += r[i];
      continue;
    }
    s += '"';
    for (char ch : r[i]) s += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    s += '"';
  }
  return s + '\n';
}

void write_table(const Table& t, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
  out << csv_line(t.header);
  for (const auto& r : t.rows) out << csv_line(r);
  if (!out) throw ConfigError("write failed: " + path.string());
}

struct Failure {
  int code = kExitNumerical;
  std::string what;
};

int exit_code_for(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const RegimeError&) {
    return kExitRegime;
  } catch (const ConfigError&) {
    return kExitConfig;
  } catch (...) {
    return kExitNumerical;
  }
}

// Runs job(i) for every tuple in a pool and concatenates the rows in input order.
// Returns the first failure in input order, if any.
std::optional<Failure> collect(std::size_t n, int jobs, const std::function<std::vector<Row>(std::size_t)>& job,
                               const std::function<std::string(std::size_t)>& label, std::vector<Row>& rows) {
  std::vector<std::vector<Row>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::string> messages(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    try {
      slots[i] = job(i);
    } catch (const std::exception& e) {
      errors[i] = std::current_exception();
      messages[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) return Failure{exit_code_for(errors[i]), "row " + std::to_string(i) + " (" + label(i) + "): " + messages[i]};
    for (auto& r : slots[i]) rows.push_back(std::move(r));
  }
  return std::nullopt;
}

Row echo_full(const RunConfig& c, const Tuple& t) {
  return {format_number(t.eta),          format_number(t.h0), format_number(t.m), std::to_string(t.p),
          format_number(t.L_over_ell),   format_number(c.G),  format_number(c.rho), format_number(c.ell),
          format_number(c.T0)};
}

const Row kEchoHeader{"eta", "h0", "m", "p", "L_over_ell", "G", "rho", "ell", "T0"};

Row cat(Row a, const Row& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Resolves m (relative or absolute) and checks the sub-Rayleigh regime for every tuple up front.
std::optional<Failure> resolve_speeds(const RunConfig& c, std::vector<Tuple>& tuples) {
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    auto& t = tuples[i];
    t.m = c.m_relative ? t.m_in * limiting_speed(t.eta, t.h0) : t.m_in;
    try {
      require_subrayleigh(t.eta, t.h0, t.m);
    } catch (const Error& e) {
      return Failure{kExitRegime, "row " + std::to_string(i) + " (" + describe(t, true, true) + "): " + e.what()};
    }
  }
  return std::nullopt;
}

std::string norm_suffix(FieldKind k) {
  switch (k) {
    case FieldKind::Opening: return "_G_over_T0";
    case FieldKind::CoupleStress: return "_over_T0";
    default: return "_ell_over_T0";
  }
}

double norm_factor(FieldKind k, const RunConfig& c) {
  switch (k) {
    case FieldKind::Opening: return c.G / c.T0;
    case FieldKind::CoupleStress: return 1.0 / c.T0;
    default: return c.ell / c.T0;
  }
}

std::optional<Failure> run_dispersion(const RunConfig& c, int jobs, Table& t) {
  if (c.dispersion_grid.empty()) throw ConfigError("dispersion.grid is required");
  if (c.dispersion_grid.front() <= 0.0 || c.dispersion_grid.back() < c.dispersion_grid.front())
    throw ConfigError("dispersion.grid must be positive and increasing");
  auto tuples = enumerate(c, {"eta", "h0"});
  t.header = {"eta", "h0", "omega_ell_over_cs", "k_ell", "m_R", "m_c", "alternates", "jump"};
  return collect(
      tuples.size(), jobs,
      [&](std::size_t i) {
        const Tuple& q = tuples[i];
        const double mc = critical_speed(q.eta, q.h0);
        std::vector<Row> rows;
        for (const auto& pt : trace_curve(c.dispersion_grid, c.dispersion_axis, q.eta, q.h0))
          rows.push_back({format_number(q.eta), format_number(q.h0), format_number(pt.omega_norm),
                          format_number(pt.k_norm), format_number(pt.mR), format_number(mc),
                          std::to_string(pt.alternates), pt.jump ? "1" : "0"});
        return rows;
      },
      [&](std::size_t i) { return describe(tuples[i], false, false); }, t.rows);
}

std::optional<Failure> run_regime_map(const RunConfig& c, int jobs, Table& t) {
  auto tuples = enumerate(c, {"eta", "h0", "m"});
  t.header = {"eta", "h0", "m", "h0_star", "m_c", "m_limit", "rayleigh", "sonic"};
  return collect(
      tuples.size(), jobs,
      [&](std::size_t i) {
        const Tuple& q = tuples[i];
        const double m_lim = limiting_speed(q.eta, q.h0);
        const double m = c.m_relative ? q.m_in * m_lim : q.m_in;
        const Regime r = classify_regime(q.eta, q.h0, m);
        return std::vector<Row>{{format_number(q.eta), format_number(q.h0), format_number(m),
                                 format_number(h0_star(q.eta)), format_number(critical_speed(q.eta, q.h0)),
                                 format_number(m_lim), r.rayleigh == RayleighRegime::SubRayleigh ? "sub" : "super",
                                 r.sonic == SonicRegime::Subsonic ? "subsonic" : "supersonic"}};
      },
      [&](std::size_t i) { return describe(tuples[i], false, false); }, t.rows);
}

std::optional<Failure> run_fields(const RunConfig& c, int jobs, Table& t) {
  if (c.field_X_over_ell.empty()) throw ConfigError("fields.X_over_ell is required");
  const bool behind = c.field == FieldKind::Opening;
  for (double x : c.field_X_over_ell)
    if (behind ? !(x < 0.0) : !(x > 0.0))
      throw ConfigError(std::string("fields.X_over_ell: ") + field_name(c.field) +
                        (behind ? " needs X < 0" : " needs X > 0"));
  auto tuples = enumerate(c, {"eta", "h0", "p", "L_over_ell", "m"});
  if (auto f = resolve_speeds(c, tuples)) return f;
  const std::string name = field_name(c.field);
  t.header = cat(kEchoHeader, {"X_over_ell", name, name + norm_suffix(c.field)});
  const double nf = norm_factor(c.field, c);
  return collect(
      tuples.size(), jobs,
      [&](std::size_t i) {
        const Tuple& q = tuples[i];
        const Material mat = material_of(c, q);
        const FieldSolver solver(solve_split(mat, q.m, load_of(c, q)), mat, q.m);
        std::vector<Row> rows;
        for (double x : c.field_X_over_ell) {
          const double v = solver.value(c.field, x * c.ell);
          rows.push_back(cat(echo_full(c, q), {format_number(x), format_number(v), format_number(v * nf)}));
        }
        return rows;
      },
      [&](std::size_t i) { return describe(tuples[i], true, true); }, t.rows);
}

std::optional<Failure> run_tmax(const RunConfig& c, int jobs, Table& t) {
  auto tuples = enumerate(c, {"eta", "h0", "p", "L_over_ell", "m"});
  if (auto f = resolve_speeds(c, tuples)) return f;
  // at_tip_cutoff = 1 when the maximum sits on the 1e-3 ell window edge (t23 rising into the tip).
  t.header = cat(kEchoHeader, {"t23max", "t23max_ell_over_T0", "X_at_over_ell", "at_tip_cutoff"});
  return collect(
      tuples.size(), jobs,
      [&](std::size_t i) {
        const Tuple& q = tuples[i];
        const Material mat = material_of(c, q);
        const FieldSolver solver(solve_split(mat, q.m, load_of(c, q)), mat, q.m);
        const MaxShear ms = max_total_shear(solver);
        return std::vector<Row>{cat(echo_full(c, q), {format_number(ms.t23max), format_number(ms.t23max * c.ell / c.T0),
                                                      format_number(ms.X_at / c.ell),
                                                      ms.X_at <= 1.000001e-3 * c.ell ? "1" : "0"})};
      },
      [&](std::size_t i) { return describe(tuples[i], true, true); }, t.rows);
}

std::optional<Failure> run_err(const RunConfig& c, int jobs, Table& t) {
  auto tuples = enumerate(c, {"eta", "h0", "p", "L_over_ell", "m"});
  if (auto f = resolve_speeds(c, tuples)) return f;
  t.header = cat(kEchoHeader, {"E", "E_G_ell_over_T0sq", "E_cl_G_ell_over_T0sq", "E_over_E_cl", "imag_residue"});
  const double scale = c.G * c.ell / (c.T0 * c.T0);
  return collect(
      tuples.size(), jobs,
      [&](std::size_t i) {
        const Tuple& q = tuples[i];
        const ErrResult r = compute_err(material_of(c, q), q.m, load_of(c, q));
        return std::vector<Row>{cat(echo_full(c, q), {format_number(r.E), format_number(r.E * scale),
                                                      format_number(r.E_cl * scale), format_number(r.ratio),
                                                      format_number(r.imag_residue)})};
      },
      [&](std::size_t i) { return describe(tuples[i], true, true); }, t.rows);
}

std::optional<Failure> run_limit(const RunConfig& c, int jobs, Table& t) {
  const double scale = c.G * c.ell / (c.T0 * c.T0);
  if (c.limit_kind == "speed") {
    if (!(c.limit_factor > 0.0 && c.limit_factor < 1.0)) throw ConfigError("limit.factor must lie in (0, 1)");
    auto tuples = enumerate(c, {"eta", "p", "L_over_ell", "h0"});
    t.header = {"eta", "h0", "p", "L_over_ell", "G", "rho", "ell", "T0", "factor", "m_limit", "m",
                "E_G_ell_over_T0sq", "E_over_E_cl"};
    return collect(
        tuples.size(), jobs,
        [&](std::size_t i) {
          const Tuple& q = tuples[i];
          const auto r = err_max_sweep(material_of(c, q), {q.h0}, load_of(c, q), c.limit_factor).front();
          if (!r.ok) throw NumericalError(r.error);
          return std::vector<Row>{{format_number(q.eta), format_number(q.h0), std::to_string(q.p),
                                   format_number(q.L_over_ell), format_number(c.G), format_number(c.rho),
                                   format_number(c.ell), format_number(c.T0), format_number(c.limit_factor),
                                   format_number(r.m_lim), format_number(r.m_eval), format_number(r.E * scale),
                                   format_number(r.ratio)}};
        },
        [&](std::size_t i) { return describe(tuples[i], true, false); }, t.rows);
  }
  auto tuples = enumerate(c, {"eta", "h0", "p", "m", "L_over_ell"});
  if (auto f = resolve_speeds(c, tuples)) return f;
  t.header = cat(kEchoHeader, {"E_G_ell_over_T0sq", "E_limit_G_ell_over_T0sq", "E_over_E_limit"});
  return collect(
      tuples.size(), jobs,
      [&](std::size_t i) {
        const Tuple& q = tuples[i];
        const LoadProfile load = load_of(c, q);
        const ErrResult r = compute_err(material_of(c, q), q.m, load);
        const double lim = err_smalllength_limit(load, q.m, c.G);
        return std::vector<Row>{cat(echo_full(c, q), {format_number(r.E * scale), format_number(lim * scale),
                                                      format_number(r.E / lim)})};
      },
      [&](std::size_t i) { return describe(tuples[i], true, true); }, t.rows);
}

int run_validate(const RunConfig& c, const std::filesystem::path& dir, int jobs, std::ostream& log) {
  std::vector<int> numbers = c.criteria.empty() ? criterion_numbers() : c.criteria;
  const auto known = criterion_numbers();
  for (int n : numbers)
    if (std::find(known.begin(), known.end(), n) == known.end())
      throw ConfigError("validate.criteria: unknown criterion " + std::to_string(n));
  Table summary{{"criterion", "title", "pass"}, {}};
  Table report{{"check_id", "target", "computed", "tolerance", "pass"}, {}};
  bool all = true;
  for (int n : numbers) {
    const CriterionResult r = run_criterion(n, jobs);
    all = all && r.pass();
    summary.rows.push_back({std::to_string(n), r.title, r.pass() ? "1" : "0"});
    char line[160];
    std::snprintf(line, sizeof line, "%s  %2d  %-42s %8.2f s\n", r.pass() ? "PASS" : "FAIL", n, r.title.c_str(),
                  r.seconds);
    log << line;
    for (const auto& row : r.rows) {
      report.rows.push_back({row.id, format_number(row.target), format_number(row.computed),
                             format_number(row.tolerance), row.pass ? "1" : "0"});
      std::snprintf(line, sizeof line, "      %-4s %-46s target=%-12.6g computed=%-14.8g tol=%.3g\n",
                    row.pass ? "ok" : "FAIL", row.id.c_str(), row.target, row.computed, row.tolerance);
      log << line;
    }
  }
  write_table(summary, dir / "validate.csv");
  write_table(report, dir / "validate_report.csv");
  log << "wrote " << (dir / "validate.csv").string() << " and " << (dir / "validate_report.csv").string() << "\n";
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::vector<double> parse_grid(const std::string& raw) {
  const std::string s = trim(raw);
  // "-linspace(...)" and "-logspace(...)" negate a range, e.g. for positions behind the tip.
  if (s.rfind("-linspace(", 0) == 0 || s.rfind("-logspace(", 0) == 0) {
    auto v = parse_grid(s.substr(1));
    for (double& x : v) x = -x;
    return v;
  }
  std::vector<double> v;
  auto ranged = [&](const char* name) -> std::optional<std::vector<std::string>> {
    const std::string n(name);
    if (s.rfind(n + "(", 0) != 0 || s.back() != ')') return std::nullopt;
    auto args = split_commas(s.substr(n.size() + 1, s.size() - n.size() - 2));
    if (args.size() != 3) throw ConfigError(n + " takes (start, stop, count): '" + s + "'");
    return args;
  };
  if (s.empty()) throw ConfigError("empty grid");
  if (auto a = ranged("linspace")) {
    const double lo = parse_number((*a)[0]), hi = parse_number((*a)[1]);
    const auto n = to_ints({parse_number((*a)[2])}, "linspace count").front();
    if (n < 1) throw ConfigError("linspace count must be positive");
    for (int i = 0; i < n; ++i) v.push_back(i + 1 == n && n > 1 ? hi : lo + (hi - lo) * i / std::max(1, n - 1));
  } else if (auto a = ranged("logspace")) {
    const double lo = parse_number((*a)[0]), hi = parse_number((*a)[1]);
    const auto n = to_ints({parse_number((*a)[2])}, "logspace count").front();
    if (n < 1) throw ConfigError("logspace count must be positive");
    for (int i = 0; i < n; ++i) v.push_back(std::pow(10.0, lo + (hi - lo) * i / std::max(1, n - 1)));
  } else {
    for (const auto& item : split_commas(s)) v.push_back(parse_number(item));
  }
  if (v.size() > 1) {
    const bool up = v[1] > v[0];
    for (std::size_t i = 1; i < v.size(); ++i)
      if (up ? !(v[i] > v[i - 1]) : !(v[i] < v[i - 1])) throw ConfigError("grid not strictly monotone: '" + s + "'");
  }
  return v;
}

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
    if (!kv.emplace(key, value).second) throw ConfigError("line " + std::to_string(lineno) + ": duplicate key " + key);
  }

  std::string sweep_grid;
  for (const auto& [key, value] : kv) {
    try {
      if (key == "material.G") c.G = parse_number(value);
      else if (key == "material.rho") c.rho = parse_number(value);
      else if (key == "material.ell") c.ell = parse_number(value);
      else if (key == "material.eta") c.eta = parse_grid(value);
      else if (key == "material.h0") c.h0 = parse_grid(value);
      else if (key == "load.T0") c.T0 = parse_number(value);
      else if (key == "load.L_over_ell") c.L_over_ell = parse_grid(value);
      else if (key == "load.p") c.p = to_ints(parse_grid(value), key);
      else if (key == "state.m") c.m = parse_grid(value);
      else if (key == "state.m_relative") c.m_relative = parse_bool(value);
      else if (key == "sweep.variable") c.sweep_variable = value;
      else if (key == "sweep.grid") sweep_grid = value;
      else if (key == "dispersion.axis") {
        if (value == "frequency") c.dispersion_axis = DispersionGrid::Frequency;
        else if (value == "wavenumber") c.dispersion_axis = DispersionGrid::WaveNumber;
        else throw ConfigError("expected frequency or wavenumber");
      } else if (key == "dispersion.grid") c.dispersion_grid = parse_grid(value);
      else if (key == "fields.field") {
        bool found = false;
        for (FieldKind k : {FieldKind::Opening, FieldKind::Traction, FieldKind::SigmaShear, FieldKind::TauShear,
                            FieldKind::CoupleStress, FieldKind::TotalShear})
          if (value == field_name(k)) c.field = k, found = true;
        if (!found) throw ConfigError("expected one of w, p3, sigma23, tau23, mu22, t23");
      } else if (key == "fields.X_over_ell") c.field_X_over_ell = parse_grid(value);
      else if (key == "limit.kind") {
        if (value != "speed" && value != "length") throw ConfigError("expected speed or length");
        c.limit_kind = value;
      } else if (key == "limit.factor") c.limit_factor = parse_number(value);
      else if (key == "validate.criteria") c.criteria = to_ints(parse_grid(value), key);
      else if (key == "output.dir") c.out_dir = value;
      else throw ConfigError("unknown key");
    } catch (const ConfigError& e) {
      throw ConfigError(key + ": " + e.what());
    }
  }

  if (!c.sweep_variable.empty()) {
    const auto& axes = grid_axes();
    if (std::find(axes.begin(), axes.end(), c.sweep_variable) == axes.end())
      throw ConfigError("sweep.variable: expected one of eta, h0, p, L_over_ell, m");
    if (!sweep_grid.empty()) {
      const std::string& v = c.sweep_variable;
      std::vector<double> g;
      try {
        g = parse_grid(sweep_grid);
      } catch (const ConfigError& e) {
        throw ConfigError(std::string("sweep.grid: ") + e.what());
      }
      if (v == "eta") c.eta = g;
      else if (v == "h0") c.h0 = g;
      else if (v == "L_over_ell") c.L_over_ell = g;
      else if (v == "m") c.m = g;
      else c.p = to_ints(g, "sweep.grid");
    }
  } else if (!sweep_grid.empty()) {
    throw ConfigError("sweep.grid given without sweep.variable");
  }

  for (double v : {c.G, c.rho, c.ell, c.T0})
    if (!(v > 0.0)) throw ConfigError("material.G, material.rho, material.ell and load.T0 must be positive");
  for (double e : c.eta)
    for (double h : c.h0) {
      Material mat;
      mat.G = c.G;
      mat.rho = c.rho;
      mat.ell = c.ell;
      mat.eta = e;
      mat.h0 = h;
      try {
        mat.validate();
      } catch (const Error& ex) {
        throw ConfigError(ex.what());
      }
    }
  for (double L : c.L_over_ell)
    for (int p : c.p) {
      try {
        LoadProfile{c.T0, L * c.ell, p}.validate();
      } catch (const Error& ex) {
        throw ConfigError(ex.what());
      }
    }
  for (double m : c.m)
    if (m < 0.0 || (c.m_relative && !(m < 1.0)))
      throw ConfigError(c.m_relative ? "state.m: relative speeds must lie in [0, 1)" : "state.m: must be non-negative");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return parse_config(s.str());
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"dispersion", "regime-map",  "fields",  "tmax-sweep",
                                              "err-sweep",  "limit-study", "validate"};
  return names;
}

int run(const std::string& sub, const RunConfig& config, const std::string& out_dir, int jobs, std::ostream& log,
        std::ostream& err) {
  try {
    const std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory " + out_dir + ": " + ec.message());
    jobs = std::max(1, jobs);
    if (sub == "validate") return run_validate(config, dir, jobs, log);

    Table table;
    std::optional<Failure> failure;
    if (sub == "dispersion") failure = run_dispersion(config, jobs, table);
    else if (sub == "regime-map") failure = run_regime_map(config, jobs, table);
    else if (sub == "fields") failure = run_fields(config, jobs, table);
    else if (sub == "tmax-sweep") failure = run_tmax(config, jobs, table);
    else if (sub == "err-sweep") failure = run_err(config, jobs, table);
    else if (sub == "limit-study") failure = run_limit(config, jobs, table);
    else throw ConfigError("unknown subcommand " + sub);

    if (failure) {
      err << "crackwave " << sub << ": " << failure->what << "\n";
      return failure->code;
    }
    const auto path = dir / (sub + ".csv");
    write_table(table, path);
    log << "wrote " << path.string() << " (" << table.rows.size() << " rows)\n";
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "crackwave " << sub << ": config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const RegimeError& e) {
    err << "crackwave " << sub << ": " << e.what() << "\n";
    return kExitRegime;
  } catch (const std::exception& e) {
    err << "crackwave " << sub << ": " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace crackwave
