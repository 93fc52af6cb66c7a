#ifndef SSW_RIEMANN_HPP
#define SSW_RIEMANN_HPP

#include "ssw/model.hpp"
#include "ssw/state.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace ssw {

enum class SolverKind { hll, hllc3, hllc5 };

inline const char* to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::hll: return "hll";
    case SolverKind::hllc3: return "hllc3";
    case SolverKind::hllc5: return "hllc5";
  }
  return "?";
}

/// Left- and right-going parts of the path-integrated fluctuation at a face.
template <typename Scalar>
struct FluctuationPair {
  Vector6<Scalar> minus = Vector6<Scalar>::Zero();
  Vector6<Scalar> plus = Vector6<Scalar>::Zero();
};

/// Piecewise-constant wave fan: `waves` speeds separating `waves + 1` states,
/// states[0] = U_L and states[waves] = U_R.
template <typename Scalar>
struct WaveFan {
  int waves = 0;
  std::array<Scalar, 5> speeds{};
  std::array<Conserved<Scalar>, 6> states{};

  const Conserved<Scalar>& left() const { return states[0]; }
  const Conserved<Scalar>& right() const { return states[waves]; }
};

template <typename Scalar>
struct RiemannSolution {
  FluctuationPair<Scalar> fluctuations;
  WaveFan<Scalar> fan;
  SolverKind requested = SolverKind::hll;
  SolverKind used = SolverKind::hll;  ///< differs from requested after a fallback

  bool fell_back() const { return used != requested; }
};

/// Raised when the outer wave speeds coincide.
class DegenerateFace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear-path Rankine-Hugoniot residual along x:
/// F_R - F_L + B((m_L + m_R)/2)(h_R - h_L) - S (U_R - U_L).
template <typename Scalar>
Vector6<Scalar> jump_residual(const Conserved<Scalar>& uL, const Conserved<Scalar>& uR, Scalar speed,
                              Scalar g) {
  const Scalar half(0.5);
  return physical_flux(uR, Axis::x, g) - physical_flux(uL, Axis::x, g) +
         noncons_vector(half * (uL.m1() + uR.m1()), half * (uL.m2() + uR.m2()), Axis::x, g) *
             (uR.h() - uL.h()) -
         speed * (uR - uL);
}

/// S_L = min(lambda_1(U_L), lambda_1(avg)), S_R = max(lambda_6(U_R), lambda_6(avg)).
template <typename Scalar>
std::pair<Scalar, Scalar> wave_speed_estimates(const Conserved<Scalar>& uL, const Conserved<Scalar>& uR,
                                               Scalar g) {
  const Conserved<Scalar> avg = Scalar(0.5) * (uL + uR);
  const Scalar sL = std::min(extreme_speeds(uL, Axis::x, g).first, extreme_speeds(avg, Axis::x, g).first);
  const Scalar sR = std::max(extreme_speeds(uR, Axis::x, g).second, extreme_speeds(avg, Axis::x, g).second);
  return {sL, sR};
}

/// D^- = sum min(S_k, 0) dU_k, D^+ = sum max(S_k, 0) dU_k over the fan.
template <typename Scalar>
FluctuationPair<Scalar> split_fluctuations(const WaveFan<Scalar>& fan) {
  FluctuationPair<Scalar> d;
  for (int k = 0; k < fan.waves; ++k) {
    const Vector6<Scalar> jump = fan.states[k + 1] - fan.states[k];
    const Scalar s = fan.speeds[k];
    if (s < 0) {
      d.minus += s * jump;
    } else if (s > 0) {
      d.plus += s * jump;
    }
  }
  return d;
}

namespace detail {

template <typename Scalar>
RiemannSolution<Scalar> finish(WaveFan<Scalar> fan, SolverKind requested, SolverKind used) {
  RiemannSolution<Scalar> out;
  out.fluctuations = split_fluctuations(fan);
  out.fan = std::move(fan);
  out.requested = requested;
  out.used = used;
  return out;
}

/// Quantities shared by the two HLLC solvers on the outer waves.
template <typename Scalar>
struct OuterStar {
  Scalar h;      ///< h_{*a}
  Scalar R11;    ///< R11^{*a}
  Scalar E11;    ///< E11^{*a}
  Scalar m1;     ///< h_{*a} u_*
};

template <typename Scalar>
struct ContactData {
  Scalar sL, sR;
  Scalar ustar, vstar;
  Primitive<Scalar> qL, qR;
  OuterStar<Scalar> L, R;
};

/// Contact speed and the h, R11, E11 intermediate values common to HLLC3/HLLC5.
/// Returns false when the contact speed cannot be formed.
template <typename Scalar>
bool contact_structure(const Conserved<Scalar>& uL, const Conserved<Scalar>& uR, Scalar g,
                       ContactData<Scalar>& c) {
  const auto [sL, sR] = wave_speed_estimates(uL, uR, g);
  c.sL = sL;
  c.sR = sR;
  c.qL = to_primitive_unchecked(uL);
  c.qR = to_primitive_unchecked(uR);
  const Primitive<Scalar>& qL = c.qL;
  const Primitive<Scalar>& qR = c.qR;
  const Scalar half(0.5);

  const Scalar wL = qL.h() * (sL - qL.v1());  // < 0
  const Scalar wR = qR.h() * (sR - qR.v1());  // > 0
  const Scalar den = wR - wL;
  const Scalar scale = std::abs(wR) + std::abs(wL) + qL.h() * std::abs(qL.v1()) + qR.h() * std::abs(qR.v1());
  if (!(std::abs(den) > Scalar(1e-14) * scale)) return false;

  c.ustar = qL.v1() + (wR * (qR.v1() - qL.v1()) - (qR.R11() - qL.R11()) -
                       half * g * (qR.h() - qL.h()) * (qR.h() + qL.h())) /
                          den;
  c.vstar = qL.v2() + (wR * (qR.v2() - qL.v2()) - (qR.R12() - qL.R12())) / den;
  if (!(sL < c.ustar && c.ustar < sR)) return false;

  auto outer = [&](const Conserved<Scalar>& u, const Primitive<Scalar>& q, Scalar s) {
    OuterStar<Scalar> o;
    const Scalar ratio = (s - q.v1()) / (s - c.ustar);
    o.h = q.h() * ratio;
    const Scalar du = c.ustar - q.v1();
    o.R11 = q.R11() + q.h() * (s - q.v1()) * du + half * g * (q.h() - o.h) * (q.h() + o.h);
    o.m1 = u.m1() + o.h * du + (o.h - q.h()) * q.v1();
    o.E11 = u.E11() + (du * u.E11() + o.R11 * c.ustar - q.R11() * q.v1() +
                       half * g * (q.h() * q.v1() + o.h * c.ustar) * (o.h - q.h())) /
                          (s - c.ustar);
    return o;
  };
  c.L = outer(uL, qL, sL);
  c.R = outer(uR, qR, sR);
  return true;
}

/// How E12 of an outer intermediate state is formed.
enum class E12Rule {
  jump,   ///< from the E12 jump condition across the outer wave (3 waves)
  state,  ///< E12 = R12/2 + h u v / 2 from the solved (v, R12) pair (5 waves)
};

/// Tangential part of an outer intermediate state for a given (v, R12) pair.
template <typename Scalar>
Conserved<Scalar> outer_state(const Conserved<Scalar>& u, const Primitive<Scalar>& q,
                              const OuterStar<Scalar>& o, Scalar s, Scalar ustar, Scalar vs,
                              Scalar R12s, Scalar g, E12Rule rule) {
  const Scalar half(0.5), quarter(0.25);
  const Scalar du = ustar - q.v1();
  const Scalar inv = Scalar(1) / (s - ustar);
  const Scalar m2 = u.m2() + o.h * (vs - q.v2()) + (o.h - q.h()) * q.v2();
  const Scalar E12 =
      rule == E12Rule::jump
          ? u.E12() + (du * u.E12() + half * (o.R11 * vs + R12s * ustar) -
                       half * (q.R11() * q.v2() + q.R12() * q.v1()) +
                       quarter * g * (q.h() * q.v2() + o.h * vs) * (o.h - q.h())) *
                          inv
          : u.E12() + half * (R12s - q.R12()) + half * (o.h * ustar * vs - q.h() * q.v1() * q.v2());
  const Scalar E22 = u.E22() + (du * u.E22() + R12s * vs - q.R12() * q.v2()) * inv;
  return Conserved<Scalar>(o.h, o.m1, m2, o.E11, E12, E22);
}

}  // namespace detail

/// Two-wave solver: one intermediate state between S_L and S_R.
template <typename Scalar>
RiemannSolution<Scalar> hll_solve(const Conserved<Scalar>& uL, const Conserved<Scalar>& uR, Scalar g) {
  const auto [sL, sR] = wave_speed_estimates(uL, uR, g);
  if (!(sR > sL)) throw DegenerateFace("hll: zero-width wave fan (S_L >= S_R)");
  const Scalar width = sR - sL;
  const Scalar half(0.5);
  const Vector6<Scalar> dF = physical_flux(uR, Axis::x, g) - physical_flux(uL, Axis::x, g);
  const Vector6<Scalar> dU = uR - uL;

  Conserved<Scalar> star;
  // mass and momentum first; these carry no non-conservative term
  star.template head<3>() = uL.template head<3>() + (sR * dU.template head<3>() - dF.template head<3>()) / width;
  const Scalar hs = star.h();
  const Vector6<Scalar> bL =
      noncons_vector(half * (uL.m1() + star.m1()), half * (uL.m2() + star.m2()), Axis::x, g) * (hs - uL.h());
  const Vector6<Scalar> bR =
      noncons_vector(half * (star.m1() + uR.m1()), half * (star.m2() + uR.m2()), Axis::x, g) * (uR.h() - hs);
  star.template tail<3>() = uL.template tail<3>() +
                            (sR * dU.template tail<3>() - dF.template tail<3>() - bL.template tail<3>() -
                             bR.template tail<3>()) /
                                width;

  WaveFan<Scalar> fan;
  fan.waves = 2;
  fan.speeds = {sL, sR, 0, 0, 0};
  fan.states[0] = uL;
  fan.states[1] = star;
  fan.states[2] = uR;
  return detail::finish(std::move(fan), SolverKind::hll, SolverKind::hll);
}

/// Three waves S_L < u_* < S_R; u, v and R12 continuous across the contact.
/// Falls back to HLL when the contact speed cannot be formed.
template <typename Scalar>
RiemannSolution<Scalar> hllc3_solve(const Conserved<Scalar>& uL, const Conserved<Scalar>& uR, Scalar g) {
  detail::ContactData<Scalar> c;
  if (!detail::contact_structure(uL, uR, g, c)) {
    auto out = hll_solve(uL, uR, g);
    out.requested = SolverKind::hllc3;
    return out;
  }
  const Primitive<Scalar>& qL = c.qL;
  const Primitive<Scalar>& qR = c.qR;
  const Scalar R12s = qL.R12() + qL.h() * (c.sL - qL.v1()) * (c.vstar - qL.v2());

  WaveFan<Scalar> fan;
  fan.waves = 3;
  fan.speeds = {c.sL, c.ustar, c.sR, 0, 0};
  fan.states[0] = uL;
  fan.states[1] = detail::outer_state(uL, qL, c.L, c.sL, c.ustar, c.vstar, R12s, g, detail::E12Rule::jump);
  fan.states[2] = detail::outer_state(uR, qR, c.R, c.sR, c.ustar, c.vstar, R12s, g, detail::E12Rule::jump);
  fan.states[3] = uR;
  return detail::finish(std::move(fan), SolverKind::hllc3, SolverKind::hllc3);
}

/// Minimum intermediate normal stress P11^{*a} below which the shear waves
/// are considered merged with the contact and HLLC5 reverts to HLLC3.
inline constexpr double kShearMergeThreshold = 1e-12;

/// Five waves S_L, S_{*L} = u_* - sqrt(P11^{*L}), u_*, S_{*R} = u_* + sqrt(P11^{*R}), S_R.
template <typename Scalar>
RiemannSolution<Scalar> hllc5_solve(const Conserved<Scalar>& uL, const Conserved<Scalar>& uR, Scalar g) {
  detail::ContactData<Scalar> c;
  if (!detail::contact_structure(uL, uR, g, c)) {
    auto out = hll_solve(uL, uR, g);
    out.requested = SolverKind::hllc5;
    return out;
  }
  auto to_hllc3 = [&]() {
    auto out = hllc3_solve(uL, uR, g);
    out.requested = SolverKind::hllc5;
    return out;
  };

  const Scalar half(0.5);
  const Scalar ustar = c.ustar;
  const Scalar pstar = c.L.R11 + half * g * c.L.h * c.L.h;

  struct Side {
    Scalar vs, R12s, P11s, root;
    Conserved<Scalar> star;
  };
  // Solve the coupled y-momentum / E12 jump conditions across the outer wave.
  auto outer_side = [&](const Conserved<Scalar>& u, const Primitive<Scalar>& q,
                        const detail::OuterStar<Scalar>& o, Scalar s, Side& side) {
    const Scalar h = q.h(), hs = o.h;
    const Scalar m = h * (q.v1() - s);
    const Scalar den = m * m - hs * pstar + half * g * h * hs * hs;
    const Scalar scale = m * m + std::abs(hs * pstar) + std::abs(half * g * h * hs * hs);
    if (!(std::abs(den) > Scalar(1e-14) * scale)) return false;
    const Scalar P12 = q.R12() / h;
    side.vs = q.v2() + (m * (h - hs) - h * hs * (q.v1() - ustar)) / den * P12;
    const Scalar rel = ((hs - h) * (pstar - half * g * h * hs) + m * h * (q.v1() - ustar)) / den;
    const Scalar hratio = (s - q.v1()) / (s - ustar);
    side.R12s = q.R12() * hratio * (Scalar(1) + rel);
    side.P11s = o.R11 / hs;
    if (!(side.P11s >= Scalar(kShearMergeThreshold))) return false;
    side.root = std::sqrt(side.P11s);
    side.star = detail::outer_state(u, q, o, s, ustar, side.vs, side.R12s, g, detail::E12Rule::state);
    return true;
  };

  Side L, R;
  if (!outer_side(uL, c.qL, c.L, c.sL, L) || !outer_side(uR, c.qR, c.R, c.sR, R)) return to_hllc3();

  const Scalar sSL = ustar - L.root;
  const Scalar sSR = ustar + R.root;
  if (!(c.sL <= sSL && sSR <= c.sR)) return to_hllc3();

  const Scalar hL = c.L.h, hR = c.R.h;
  const Scalar wL = hL * L.root, wR = hR * R.root;
  const Scalar vss = L.vs + (wR * (R.vs - L.vs) - (R.R12s - L.R12s)) / (wL + wR);

  auto inner = [&](const Side& side, Scalar hs, Scalar w, Scalar sign) {
    // sign = -1 for the S_{*L} wave, +1 for S_{*R}
    const Scalar dv = vss - side.vs;
    const Scalar R12ss = side.R12s + sign * w * dv;
    Conserved<Scalar> st = side.star;
    st[2] = side.star.m2() + hs * dv;
    st[4] = side.star.E12() + half * (R12ss - side.R12s) + half * hs * ustar * dv;
    st[5] = side.star.E22() + sign * (R12ss * vss - side.R12s * side.vs) / side.root;
    return st;
  };

  WaveFan<Scalar> fan;
  fan.waves = 5;
  fan.speeds = {c.sL, sSL, ustar, sSR, c.sR};
  fan.states[0] = uL;
  fan.states[1] = L.star;
  fan.states[2] = inner(L, hL, wL, Scalar(-1));
  fan.states[3] = inner(R, hR, wR, Scalar(1));
  fan.states[4] = R.star;
  fan.states[5] = uR;
  return detail::finish(std::move(fan), SolverKind::hllc5, SolverKind::hllc5);
}

template <typename Scalar>
FluctuationPair<Scalar> hll(const Conserved<Scalar>& uL, const Conserved<Scalar>& uR, Scalar g) {
  return hll_solve(uL, uR, g).fluctuations;
}

template <typename Scalar>
FluctuationPair<Scalar> hllc3(const Conserved<Scalar>& uL, const Conserved<Scalar>& uR, Scalar g) {
  return hllc3_solve(uL, uR, g).fluctuations;
}

template <typename Scalar>
FluctuationPair<Scalar> hllc5(const Conserved<Scalar>& uL, const Conserved<Scalar>& uR, Scalar g) {
  return hllc5_solve(uL, uR, g).fluctuations;
}

template <typename Scalar>
RiemannSolution<Scalar> riemann_solve(SolverKind kind, const Conserved<Scalar>& uL,
                                      const Conserved<Scalar>& uR, Scalar g) {
  switch (kind) {
    case SolverKind::hll: return hll_solve(uL, uR, g);
    case SolverKind::hllc3: return hllc3_solve(uL, uR, g);
    case SolverKind::hllc5: return hllc5_solve(uL, uR, g);
  }
  throw std::invalid_argument("unknown solver kind");
}

/// Face fluctuations along either axis; y-faces rotate, solve along x and rotate back.
template <typename Scalar>
FluctuationPair<Scalar> face_fluctuations(SolverKind kind, const Conserved<Scalar>& uL,
                                          const Conserved<Scalar>& uR, Axis dir, Scalar g) {
  if (dir == Axis::x) return riemann_solve(kind, uL, uR, g).fluctuations;
  const auto d = riemann_solve(kind, rotate_state(uL), rotate_state(uR), g).fluctuations;
  FluctuationPair<Scalar> out;
  out.minus = rotate(d.minus);
  out.plus = rotate(d.plus);
  return out;
}

}  // namespace ssw

#endif  // SSW_RIEMANN_HPP
