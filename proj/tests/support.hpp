#ifndef SSW_TESTS_SUPPORT_HPP
#define SSW_TESTS_SUPPORT_HPP

#include "ssw/analysis.hpp"
#include "ssw/riemann.hpp"
#include "ssw/state.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>

namespace ssw::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

/// Valid primitive state: h in [0.1, 2], |v_i| <= 1, P = rotated diag with
/// eigenvalues in [0.01, 1].
inline PrimitiveState random_primitive(Rng& rng) {
  const double h = uniform(rng, 0.1, 2.0);
  const double v1 = uniform(rng, -1.0, 1.0), v2 = uniform(rng, -1.0, 1.0);
  const double a = uniform(rng, 0.01, 1.0), b = uniform(rng, 0.01, 1.0);
  const double phi = uniform(rng, 0.0, std::numbers::pi);
  const double c = std::cos(phi), s = std::sin(phi);
  const double P11 = a * c * c + b * s * s;
  const double P22 = a * s * s + b * c * c;
  const double P12 = (a - b) * c * s;
  return PrimitiveState::from_stress(h, v1, v2, P11, P12, P22);
}

inline ConservedState random_state(Rng& rng) { return prim_to_cons(random_primitive(rng)); }

/// Two states joined by a contact moving at their common normal velocity:
/// u, v, R12 and R11 + g h^2 / 2 equal on both sides.
inline std::pair<ConservedState, ConservedState> contact_pair(Rng& rng, double g) {
  for (;;) {
    const PrimitiveState qL = random_primitive(rng);
    const double hR = uniform(rng, 0.1, 2.0);
    const double pL = qL.R11() + 0.5 * g * qL.h() * qL.h();
    const double R11R = pL - 0.5 * g * hR * hR;
    if (!(R11R > 0.0)) continue;
    const double R22R = uniform(rng, 0.01, 1.0) * hR;
    if (!(R11R * R22R - qL.R12() * qL.R12() > 0.0)) continue;
    const PrimitiveState qR(hR, qL.v1(), qL.v2(), R11R, qL.R12(), R22R);
    return {prim_to_cons(qL), prim_to_cons(qR)};
  }
}

/// Two states joined by a shear wave of speed u - sqrt(P11) (side = -1) or
/// u + sqrt(P11) (side = +1): h, u, P11, det P and v sqrt(P11) - side P12 equal.
inline std::pair<ConservedState, ConservedState> shear_pair(Rng& rng, int side) {
  for (;;) {
    const PrimitiveState qL = random_primitive(rng);
    const double h = qL.h();
    const double P11 = qL.R11() / h, P12 = qL.R12() / h, P22 = qL.R22() / h;
    const double c = std::sqrt(P11);
    const double dv = uniform(rng, -0.5, 0.5);
    const double P12R = P12 + side * c * dv;
    const double det = P11 * P22 - P12 * P12;
    const double P22R = (det + P12R * P12R) / P11;
    const PrimitiveState qR = PrimitiveState::from_stress(h, qL.v1(), qL.v2() + dv, P11, P12R, P22R);
    try {
      check_admissible(qR);
    } catch (const NonPhysicalState&) {
      continue;
    }
    return {prim_to_cons(qL), prim_to_cons(qR)};
  }
}

/// Residual of a jump relative to the size of the terms that form it.
inline double relative_jump_residual(const ConservedState& a, const ConservedState& b, double s, double g) {
  const double scale = 1.0 + physical_flux(a, Axis::x, g).norm() + physical_flux(b, Axis::x, g).norm() +
                       std::abs(s) * (a.norm() + b.norm());
  return jump_residual(a, b, s, g).lpNorm<Eigen::Infinity>() / scale;
}

/// Direct O(N^2) evaluation of the shell spectrum; the reference for the FFT path.
inline SpectrumResult direct_spectrum(const Field2D& u, const Field2D& v) {
  const int nx = u.nx, ny = u.ny;
  const int kmax = static_cast<int>(std::lround(std::hypot(nx / 2, ny / 2)));
  SpectrumResult r;
  r.E.assign(kmax + 1, 0.0);
  for (int k = 0; k <= kmax; ++k) r.k.push_back(k);
  const double tau = 2.0 * std::numbers::pi;
  for (int q = 0; q < ny; ++q) {
    for (int p = 0; p < nx; ++p) {
      std::complex<double> su = 0.0, sv = 0.0;
      for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
          const std::complex<double> w = std::polar(1.0, -tau * (static_cast<double>(p) * i / nx +
                                                                 static_cast<double>(q) * j / ny));
          su += u(i, j) * w;
          sv += v(i, j) * w;
        }
      }
      su /= static_cast<double>(nx) * ny;
      sv /= static_cast<double>(nx) * ny;
      const int kx = p <= nx / 2 ? p : p - nx;
      const int ky = q <= ny / 2 ? q : q - ny;
      r.E[std::lround(std::hypot(kx, ky))] += 0.5 * (std::norm(su) + std::norm(sv));
    }
  }
  double s = 0.0;
  for (std::size_t k = 0; k < u.data.size(); ++k) s += u.data[k] * u.data[k] + v.data[k] * v.data[k];
  r.total = 0.5 * s / static_cast<double>(u.data.size());
  return r;
}

/// Scratch directory for file-writing tests.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const char* env = std::getenv("SSW_TEST_TMP");
  std::filesystem::path base = env ? env : std::filesystem::temp_directory_path() / "ssw_tests";
  std::filesystem::path dir = base / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace ssw::testing

#endif  // SSW_TESTS_SUPPORT_HPP
