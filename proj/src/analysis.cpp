#include "ssw/analysis.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <stdexcept>

namespace ssw {

Field2D primitive_field(const Grid2D& grid, int component) {
  if (component < 0 || component > 5) throw std::out_of_range("primitive_field: component must be in 0..5");
  Field2D f(grid.nx(), grid.ny());
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) f(i, j) = to_primitive_unchecked(grid(i, j))[component];
  return f;
}

Norm parse_norm(const std::string& name) {
  if (name == "L1") return Norm::L1;
  if (name == "L2") return Norm::L2;
  if (name == "Linf") return Norm::Linf;
  throw std::invalid_argument("unknown norm '" + name + "'");
}

const char* to_string(Norm norm) {
  switch (norm) {
    case Norm::L1: return "L1";
    case Norm::L2: return "L2";
    case Norm::Linf: return "Linf";
  }
  return "?";
}

double error_norm(const std::vector<double>& numeric, const std::vector<double>& exact, double cell_area, Norm norm) {
  if (numeric.size() != exact.size()) throw std::invalid_argument("error_norm: shape mismatch");
  double acc = 0.0;
  for (std::size_t k = 0; k < numeric.size(); ++k) {
    const double e = std::abs(numeric[k] - exact[k]);
    switch (norm) {
      case Norm::L1: acc += e; break;
      case Norm::L2: acc += e * e; break;
      case Norm::Linf: acc = std::max(acc, e); break;
    }
  }
  if (norm == Norm::L1) return acc * cell_area;
  if (norm == Norm::L2) return std::sqrt(acc * cell_area);
  return acc;
}

std::array<double, 6> error_norms(const Grid2D& grid, const ExactField& exact, Norm norm) {
  if (!exact) throw std::invalid_argument("error_norms: no exact field");
  const std::size_t n = static_cast<std::size_t>(grid.nx()) * grid.ny();
  std::array<std::vector<double>, 6> num, ref;
  for (int c = 0; c < 6; ++c) {
    num[c].reserve(n);
    ref[c].reserve(n);
  }
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) {
      const PrimitiveState q = to_primitive_unchecked(grid(i, j));
      const PrimitiveState e = exact(grid.xc(i), grid.yc(j), grid.time);
      for (int c = 0; c < 6; ++c) {
        num[c].push_back(q[c]);
        ref[c].push_back(e[c]);
      }
    }
  }
  const double area = grid.dx() * (grid.two_dimensional() ? grid.dy() : 1.0);
  std::array<double, 6> out{};
  for (int c = 0; c < 6; ++c) out[c] = error_norm(num[c], ref[c], area, norm);
  return out;
}

double convergence_rate(double e_coarse, double e_fine) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0)) throw std::invalid_argument("convergence_rate: errors must be positive");
  return std::log2(e_coarse / e_fine);
}

YAverage y_average_decompose(const Field2D& field) {
  YAverage r;
  r.mean.assign(field.nx, 0.0);
  r.fluctuation = field;
  for (int i = 0; i < field.nx; ++i) {
    double s = 0.0;
    for (int j = 0; j < field.ny; ++j) s += field(i, j);
    const double m = s / field.ny;
    r.mean[i] = m;
    for (int j = 0; j < field.ny; ++j) r.fluctuation(i, j) = field(i, j) - m;
  }
  return r;
}

namespace {

// FFTW planning is not thread safe.
std::mutex fftw_planner_mutex;

std::vector<std::complex<double>> dft2(const Field2D& f) {
  const std::size_t n = f.data.size();
  std::vector<std::complex<double>> in(n), out(n);
  for (std::size_t k = 0; k < n; ++k) in[k] = f.data[k];
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex);
    plan = fftw_plan_dft_2d(f.ny, f.nx, reinterpret_cast<fftw_complex*>(in.data()),
                            reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex);
    fftw_destroy_plan(plan);
  }
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& c : out) c *= scale;
  return out;
}

int signed_mode(int p, int n) { return p <= n / 2 ? p : p - n; }

}  // namespace

SpectrumResult energy_spectrum(const Field2D& u, const Field2D& v) {
  if (u.nx != v.nx || u.ny != v.ny) throw std::invalid_argument("energy_spectrum: shape mismatch");
  if (u.nx < 1 || u.ny < 1 || u.data.size() != static_cast<std::size_t>(u.nx) * u.ny ||
      v.data.size() != u.data.size())
    throw std::invalid_argument("energy_spectrum: malformed field");
  const int nx = u.nx, ny = u.ny;
  const auto uh = dft2(u);
  const auto vh = dft2(v);

  const int kmax = static_cast<int>(std::lround(std::hypot(nx / 2, ny / 2)));
  SpectrumResult r;
  r.k.resize(kmax + 1);
  r.E.assign(kmax + 1, 0.0);
  for (int k = 0; k <= kmax; ++k) r.k[k] = k;
  for (int q = 0; q < ny; ++q) {
    const int ky = signed_mode(q, ny);
    for (int p = 0; p < nx; ++p) {
      const int kx = signed_mode(p, nx);
      const std::size_t idx = static_cast<std::size_t>(q) * nx + p;
      const double e = 0.5 * (std::norm(uh[idx]) + std::norm(vh[idx]));
      const int shell = static_cast<int>(std::lround(std::hypot(kx, ky)));
      r.E[shell] += e;
    }
  }
  double s = 0.0;
  for (std::size_t k = 0; k < u.data.size(); ++k) s += u.data[k] * u.data[k] + v.data[k] * v.data[k];
  r.total = 0.5 * s / static_cast<double>(u.data.size());
  return r;
}

}  // namespace ssw
