#ifndef SSW_SOURCE_SOLVER_HPP
#define SSW_SOURCE_SOLVER_HPP

#include "ssw/model.hpp"
#include "ssw/state.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace ssw {

/// Solves m + c m |m| = a for the momentum vector m, with c >= 0.
///
/// The magnitude satisfies c m^2 + m - |a| = 0; its positive root is taken in
/// the cancellation-free form 2|a| / (1 + sqrt(1 + 4 c |a|)). The direction
/// of m is that of a.
template <typename Scalar>
std::pair<Scalar, Scalar> solve_momentum(Scalar a1, Scalar a2, Scalar c) {
  if (c == 0) return {a1, a2};
  const Scalar amag = std::hypot(a1, a2);
  if (amag == 0) return {Scalar(0), Scalar(0)};
  const Scalar m = 2 * amag / (1 + std::sqrt(1 + 4 * c * amag));
  const Scalar factor = 1 + c * m;
  return {a1 / factor, a2 / factor};
}

/// f(T) = h T / 2 + alpha(h, T) |v|^3 theta_dt T - S_sum.
template <typename Scalar>
Scalar trace_residual(Scalar T, Scalar s_sum, Scalar h, Scalar speed3, Scalar theta_dt,
                      const ModelParams& params) {
  return Scalar(0.5) * h * T + alpha_coeff(h, T, params) * speed3 * theta_dt * T - s_sum;
}

/// Unique positive root of f(T) = 0. Requires S_sum > 0.
template <typename Scalar>
Scalar solve_trace(Scalar s_sum, Scalar h, Scalar speed3, Scalar theta_dt, const ModelParams& params) {
  if (!(s_sum > 0)) {
    throw NonPhysicalState("implicit source solve: S11 + S22 = " + std::to_string(s_sum) +
                               " <= 0 has no positive stress trace",
                           "S11 + S22 > 0");
  }
  const Scalar threshold = Scalar(params.phi) * h * h;
  const Scalar t_hat = 2 * s_sum / h;
  if (t_hat <= threshold) return t_hat;
  const Scalar K = Scalar(params.Cr) * speed3 * theta_dt;
  if (K == 0) return t_hat;
  // (h/2) T^2 + (K - S_sum) T - K phi h^2 = 0, positive root
  const Scalar a = Scalar(0.5) * h;
  const Scalar b = K - s_sum;
  const Scalar c = -K * threshold;
  const Scalar disc = std::sqrt(b * b - 4 * a * c);
  if (b <= 0) return (-b + disc) / (2 * a);
  return (2 * c) / (-b - disc);
}

/// Input of the local implicit source update U - theta_dt S(U) = U_tilde.
template <typename Scalar>
struct ImplicitUpdateInput {
  Conserved<Scalar> u_tilde;
  Scalar dbdx = 0;
  Scalar dbdy = 0;
  Scalar theta_dt = 0;
  ModelParams params;
};

/// Exact solution of U - theta_dt S(U) = U_tilde. Depth is untouched; the
/// momentum solve comes first, then the stress trace, then the individual
/// stress components, all evaluated with the new velocity.
template <typename Scalar>
Conserved<Scalar> implicit_source_update(const ImplicitUpdateInput<Scalar>& in) {
  const Conserved<Scalar>& ut = in.u_tilde;
  const Scalar h = ut.h();
  if (!(h > 0)) {
    throw NonPhysicalState("implicit source solve: h > 0 violated, U~=" + detail::format_state(ut),
                           "h > 0");
  }
  const Scalar tdt = in.theta_dt;
  if (tdt == 0) return ut;

  const ModelParams& p = in.params;
  const Scalar g(p.g), Cf(p.Cf);
  const Scalar half(0.5);

  const Scalar a1 = ut.m1() - tdt * g * h * in.dbdx;
  const Scalar a2 = ut.m2() - tdt * g * h * in.dbdy;
  const auto [m1, m2] = solve_momentum(a1, a2, tdt * Cf / (h * h));
  const Scalar v1 = m1 / h;
  const Scalar v2 = m2 / h;
  const Scalar speed = std::hypot(v1, v2);
  const Scalar speed3 = speed * speed * speed;
  const Scalar fric = Cf * speed;

  const Scalar S11 = ut.E11() - half * h * v1 * v1 - tdt * (g * h * v1 * in.dbdx + fric * v1 * v1);
  const Scalar S22 = ut.E22() - half * h * v2 * v2 - tdt * (g * h * v2 * in.dbdy + fric * v2 * v2);
  const Scalar S12 = ut.E12() - half * h * v1 * v2 -
                     tdt * (half * g * h * v2 * in.dbdx + half * g * h * v1 * in.dbdy + fric * v1 * v2);

  const Scalar T = solve_trace(S11 + S22, h, speed3, tdt, p);
  const Scalar denom = half * h + alpha_coeff(h, T, p) * speed3 * tdt;
  const Scalar P11 = S11 / denom;
  const Scalar P12 = S12 / denom;
  const Scalar P22 = S22 / denom;

  const Primitive<Scalar> q = Primitive<Scalar>::from_stress(h, v1, v2, P11, P12, P22);
  return prim_to_cons(q);
}

}  // namespace ssw

#endif  // SSW_SOURCE_SOLVER_HPP
