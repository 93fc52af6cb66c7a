#include "ssw/cases.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ssw {

PrimitiveState exact_solution_2d(double x, double y, double t, const AnalyticParams& p) {
  const double bt = p.rate * t;
  const double s = 1.0 + bt * bt;
  const double h = p.h0 / s;
  const double v1 = p.rate / s * (bt * x + y);
  const double v2 = p.rate / s * (-x + bt * y);
  const double inv = 1.0 / (s * s);
  const double P11 = inv * (p.lambda + p.gamma * bt * bt);
  const double P12 = inv * (p.lambda - p.gamma) * bt;
  const double P22 = inv * (p.gamma + p.lambda * bt * bt);
  return PrimitiveState::from_stress(h, v1, v2, P11, P12, P22);
}

namespace {

const CaseParameters kRollCase1{{"g", 9.81},      {"incline", 0.05011}, {"Cf", 0.0036}, {"h0", 7.98e-3},
                                {"a", 0.05},      {"phi", 22.76},       {"Cr", 0.00035}, {"Lx", 1.3}};
const CaseParameters kRollCase2{{"g", 9.81},      {"incline", 0.119528}, {"Cf", 0.0038}, {"h0", 5.33e-3},
                                {"a", 0.05},      {"phi", 153.501},      {"Cr", 0.002},  {"Lx", 1.8}};

const CaseParameters kNoSources{{"g", 9.81}, {"Cf", 0.0}, {"Cr", 0.0}, {"phi", 0.0}};

CaseParameters with(CaseParameters base, const CaseParameters& extra) {
  for (const auto& [k, v] : extra) base[k] = v;
  return base;
}

std::vector<CaseInfo> build_registry() {
  std::vector<CaseInfo> r;
  r.push_back({"shear1d", "1-D Riemann problem with a jump in v2 only: two shear waves", false, 500, 1, 10.0,
               with(kNoSources, {{"h", 0.01}, {"P", 1e-4}, {"v2", 0.2}})});
  r.push_back({"dambreak1d", "1-D dam break: rarefaction, contact and shock", false, 500, 1, 0.5,
               with(kNoSources, {{"hL", 0.02}, {"hR", 0.01}, {"P", 1e-4}})});
  r.push_back({"moddambreak1d", "1-D dam break with an extra jump in v2: all five waves", false, 500, 1, 0.5,
               with(kNoSources, {{"hL", 0.01}, {"hR", 0.02}, {"v1", 0.1}, {"v2", 0.2}, {"P", 4e-2}, {"P12", 1e-8}})});
  r.push_back({"rollwave1d_case1", "1-D roll waves on an incline, first parameter set", false, 500, 1, 26.99,
               kRollCase1});
  r.push_back({"rollwave1d_case2", "1-D roll waves on an incline, second parameter set", false, 500, 1, 26.35185,
               kRollCase2});
  r.push_back({"analytic2d", "2-D exact solution, linear in space; Dirichlet exact boundaries", true, 40, 40, 50.0,
               with(kNoSources, {{"h0", 1.0}, {"lambda", 0.1}, {"gamma", 0.01}, {"rate", 1e-3}, {"L", 10.0}})});
  r.push_back({"rollwave2d", "2-D roll waves with a transverse depth perturbation", true, 130, 50, 36.0,
               with(kRollCase1, {{"Ly", 0.5}})});
  return r;
}

double get(const CaseParameters& p, const std::string& key) {
  const auto it = p.find(key);
  if (it == p.end()) throw std::logic_error("case parameter '" + key + "' missing");
  return it->second;
}

// Two-state Riemann data split at x = 0.5 of the unit interval.
CaseSetup riemann_case(const std::string& name, int nx, const PrimitiveState& left, const PrimitiveState& right) {
  CaseSetup c;
  c.name = name;
  c.grid = Grid2D(nx, 1, 1.0 / nx, 1.0, 0.0, 0.0, false);
  c.grid.fill([&](double x, double) { return x < 0.5 ? left : right; });
  c.bc = BoundarySpec::all(BoundaryKind::transmissive);
  return c;
}

CaseSetup roll_case(const std::string& name, int nx, int ny, bool two_d, const CaseParameters& v) {
  CaseSetup c;
  c.name = name;
  const double g = get(v, "g");
  const double slope = std::tan(get(v, "incline"));
  const double h0 = get(v, "h0");
  const double a = get(v, "a");
  const double Lx = get(v, "Lx");
  const double Ly = two_d ? get(v, "Ly") : 1.0;
  const double phi = get(v, "phi");
  const double u0 = std::sqrt(g * h0 * slope / get(v, "Cf"));
  const double twopi = 2.0 * std::numbers::pi;

  c.grid = Grid2D(nx, two_d ? ny : 1, Lx / nx, two_d ? Ly / ny : 1.0, 0.0, 0.0, two_d);
  c.grid.fill([&](double x, double y) {
    double h = h0 * (1.0 + a * std::sin(twopi * x / Lx));
    if (two_d) h += h0 * a * std::sin(twopi * y / Ly);
    const double P = 0.5 * phi * h * h;
    return PrimitiveState::from_stress(h, u0, 0.0, P, 0.0, P);
  });
  c.grid.set_topography([slope](double x, double) { return std::array<double, 3>{-x * slope, -slope, 0.0}; });
  c.bc = BoundarySpec::all(BoundaryKind::periodic);
  return c;
}

}  // namespace

const std::vector<CaseInfo>& case_registry() {
  static const std::vector<CaseInfo> registry = build_registry();
  return registry;
}

const CaseInfo& find_case(const std::string& name) {
  for (const auto& info : case_registry())
    if (info.name == name) return info;
  throw std::invalid_argument("unknown case '" + name + "'");
}

CaseSetup init_case(const std::string& name, int nx, int ny, const CaseParameters& overrides) {
  const CaseInfo& info = find_case(name);
  CaseParameters v = info.defaults;
  for (const auto& [key, value] : overrides) {
    if (!v.count(key)) throw std::invalid_argument("case '" + name + "' has no parameter '" + key + "'");
    v[key] = value;
  }
  if (nx <= 0) nx = info.default_nx;
  if (ny <= 0) ny = info.default_ny;
  if (!info.two_dimensional) ny = 1;

  CaseSetup c;
  if (name == "shear1d") {
    const double h = get(v, "h"), P = get(v, "P"), w = get(v, "v2");
    c = riemann_case(name, nx, PrimitiveState::from_stress(h, 0.0, w, P, 0.0, P),
                     PrimitiveState::from_stress(h, 0.0, -w, P, 0.0, P));
  } else if (name == "dambreak1d") {
    const double P = get(v, "P");
    c = riemann_case(name, nx, PrimitiveState::from_stress(get(v, "hL"), 0.0, 0.0, P, 0.0, P),
                     PrimitiveState::from_stress(get(v, "hR"), 0.0, 0.0, P, 0.0, P));
  } else if (name == "moddambreak1d") {
    const double P = get(v, "P"), P12 = get(v, "P12"), u = get(v, "v1"), w = get(v, "v2");
    c = riemann_case(name, nx, PrimitiveState::from_stress(get(v, "hL"), u, w, P, P12, P),
                     PrimitiveState::from_stress(get(v, "hR"), u, -w, P, P12, P));
  } else if (name == "rollwave1d_case1" || name == "rollwave1d_case2") {
    c = roll_case(name, nx, 1, false, v);
  } else if (name == "rollwave2d") {
    c = roll_case(name, nx, ny, true, v);
  } else if (name == "analytic2d") {
    AnalyticParams ap{get(v, "h0"), get(v, "lambda"), get(v, "gamma"), get(v, "rate")};
    const double L = get(v, "L");
    c.name = name;
    c.grid = Grid2D(nx, ny, L / nx, L / ny, 0.0, 0.0, true);
    c.exact = [ap](double x, double y, double t) { return exact_solution_2d(x, y, t, ap); };
    c.grid.fill([&](double x, double y) { return exact_solution_2d(x, y, 0.0, ap); });
    c.bc = BoundarySpec::all(BoundaryKind::dirichlet_exact);
  } else {
    throw std::logic_error("case '" + name + "' registered without an initializer");
  }
  c.params.g = get(v, "g");
  c.params.Cf = get(v, "Cf");
  c.params.Cr = get(v, "Cr");
  c.params.phi = get(v, "phi");
  c.params.validate();
  c.has_sources = c.params.Cf > 0.0 || c.params.Cr > 0.0 || v.count("incline");
  c.t_end = info.default_t_end;
  c.values = v;
  apply_bc(c.grid, c.bc, c.exact);
  return c;
}

}  // namespace ssw
