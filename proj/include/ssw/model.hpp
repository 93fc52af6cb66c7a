#ifndef SSW_MODEL_HPP
#define SSW_MODEL_HPP

#include "ssw/state.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace ssw {

namespace detail {

template <typename Scalar>
void require_positive_depth(const Conserved<Scalar>& u) {
  if (!(u.h() > 0)) {
    throw NonPhysicalState("non-physical state: h > 0 violated, U=" + format_state(u), "h > 0");
  }
}

template <typename Scalar>
Vector6<Scalar> flux_x(const Conserved<Scalar>& u, Scalar g) {
  const Primitive<Scalar> q = to_primitive_unchecked(u);
  const Scalar h = q.h(), v1 = q.v1(), v2 = q.v2();
  const Scalar R11 = q.R11(), R12 = q.R12();
  Vector6<Scalar> f;
  f << u.m1(),
      R11 + u.m1() * v1 + Scalar(0.5) * g * h * h,
      R12 + u.m1() * v2,
      (u.E11() + R11) * v1,
      u.E12() * v1 + Scalar(0.5) * (R11 * v2 + R12 * v1),
      u.E22() * v1 + R12 * v2;
  return f;
}

}  // namespace detail

/// Physical flux F1 (axis x) or F2 (axis y). Only h > 0 is required, so the
/// flux may be evaluated on reconstructed face values.
template <typename Scalar>
Vector6<Scalar> physical_flux(const Conserved<Scalar>& u, Axis dir, Scalar g) {
  detail::require_positive_depth(u);
  if (dir == Axis::x) return detail::flux_x(u, g);
  return rotate(detail::flux_x(rotate_state(u), g));
}

/// B1(m) or B2(m); linear in the momentum density.
template <typename Scalar>
Vector6<Scalar> noncons_vector(Scalar m1, Scalar m2, Axis dir, Scalar g) {
  Vector6<Scalar> b = Vector6<Scalar>::Zero();
  const Scalar half(0.5);
  if (dir == Axis::x) {
    b[3] = g * m1;
    b[4] = half * g * m2;
  } else {
    b[4] = half * g * m1;
    b[5] = g * m2;
  }
  return b;
}

/// Normal velocity and normal stress component along an axis.
template <typename Scalar>
std::pair<Scalar, Scalar> normal_velocity_stress(const Primitive<Scalar>& q, Axis dir) {
  if (dir == Axis::x) return {q.v1(), q.P11()};
  return {q.v2(), q.P22()};
}

/// Slowest and fastest characteristic speeds u -/+ sqrt(g h + 3 P_nn).
template <typename Scalar>
std::pair<Scalar, Scalar> extreme_speeds(const Conserved<Scalar>& u, Axis dir, Scalar g) {
  detail::require_positive_depth(u);
  const Primitive<Scalar> q = to_primitive_unchecked(u);
  const auto [un, pnn] = normal_velocity_stress(q, dir);
  const Scalar radicand = g * q.h() + 3 * pnn;
  if (!(radicand >= 0)) {
    throw NonPhysicalState("non-hyperbolic state: g h + 3 P < 0, U=" + detail::format_state(u),
                           "g h + 3 P >= 0");
  }
  const Scalar a = std::sqrt(radicand);
  return {un - a, un + a};
}

/// Largest |lambda| along an axis.
template <typename Scalar>
Scalar max_abs_speed(const Conserved<Scalar>& u, Axis dir, Scalar g) {
  const auto [lo, hi] = extreme_speeds(u, dir, g);
  return std::max(std::abs(lo), std::abs(hi));
}

/// The six characteristic speeds, sorted ascending.
template <typename Scalar>
std::array<Scalar, 6> eigenvalues(const Conserved<Scalar>& u, Axis dir, Scalar g) {
  const auto [lo, hi] = extreme_speeds(u, dir, g);
  const Primitive<Scalar> q = to_primitive_unchecked(u);
  const auto [un, pnn] = normal_velocity_stress(q, dir);
  if (!(pnn >= 0)) {
    throw NonPhysicalState("non-hyperbolic state: P_nn < 0, U=" + detail::format_state(u),
                           "P_nn >= 0");
  }
  const Scalar c = std::sqrt(pnn);
  std::array<Scalar, 6> lambda{lo, un - c, un, un, un + c, hi};
  std::sort(lambda.begin(), lambda.end());
  return lambda;
}

/// Dissipation coefficient max(0, Cr (T - phi h^2) / T^2); zero when T == 0.
template <typename Scalar>
Scalar alpha_coeff(Scalar h, Scalar trace, const ModelParams& params) {
  if (trace <= 0) return Scalar(0);
  const Scalar a = Scalar(params.Cr) * (trace - Scalar(params.phi) * h * h) / (trace * trace);
  return std::max(Scalar(0), a);
}

/// Friction, topography and dissipation sources.
template <typename Scalar>
Vector6<Scalar> source_terms(const Conserved<Scalar>& u, Scalar dbdx, Scalar dbdy,
                             const ModelParams& params) {
  const Primitive<Scalar> q = cons_to_prim(u);
  const Scalar h = q.h(), v1 = q.v1(), v2 = q.v2();
  const Scalar P11 = q.P11(), P12 = q.P12(), P22 = q.P22();
  const Scalar g(params.g), Cf(params.Cf);
  const Scalar speed = std::sqrt(v1 * v1 + v2 * v2);
  const Scalar damp = alpha_coeff(h, P11 + P22, params) * speed * speed * speed;
  const Scalar fric = Cf * speed;
  const Scalar half(0.5);
  Vector6<Scalar> s;
  s << 0,
      -g * h * dbdx - fric * v1,
      -g * h * dbdy - fric * v2,
      -g * h * v1 * dbdx - damp * P11 - fric * v1 * v1,
      -half * g * h * v2 * dbdx - half * g * h * v1 * dbdy - damp * P12 - fric * v1 * v2,
      -g * h * v2 * dbdy - damp * P22 - fric * v2 * v2;
  return s;
}

/// Convex entropy -h log(det R / h^4).
template <typename Scalar>
Scalar entropy(const Conserved<Scalar>& u) {
  const Primitive<Scalar> q = cons_to_prim(u);
  const Scalar h = q.h();
  const Scalar det = q.R11() * q.R22() - q.R12() * q.R12();
  return -h * std::log(det / (h * h * h * h));
}

/// h e with e = |v|^2/2 + tr(P)/2 + g h^2/2, evaluated exactly as written.
/// Note the last term is not dimensionally consistent with the others; this
/// is a diagnostic only and never enters the scheme.
template <typename Scalar>
Scalar total_energy_density(const Conserved<Scalar>& u, Scalar g) {
  detail::require_positive_depth(u);
  const Primitive<Scalar> q = to_primitive_unchecked(u);
  const Scalar h = q.h();
  const Scalar e = Scalar(0.5) * (q.v1() * q.v1() + q.v2() * q.v2()) +
                   Scalar(0.5) * (q.P11() + q.P22()) + Scalar(0.5) * g * h * h;
  return h * e;
}

}  // namespace ssw

#endif  // SSW_MODEL_HPP
