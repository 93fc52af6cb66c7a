#include "support.hpp"

#include "ssw/cases.hpp"
#include "ssw/source_solver.hpp"

#include <doctest.h>

#include <cmath>

using namespace ssw;

namespace {

ModelParams roll_params() {
  ModelParams p;
  p.Cf = 0.0036;
  p.Cr = 0.00035;
  p.phi = 22.76;
  return p;
}

ConservedState residual(const ConservedState& u, const ImplicitUpdateInput<double>& in) {
  return ConservedState(u - in.theta_dt * source_terms(u, in.dbdx, in.dbdy, in.params) - in.u_tilde);
}

}  // namespace

TEST_CASE("solve_momentum") {
  auto [a, b] = solve_momentum(3.0, 4.0, 0.0);
  CHECK(a == 3.0);
  CHECK(b == 4.0);
  auto [m1, m2] = solve_momentum(2.0, 0.0, 1.0);
  CHECK(m1 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(m2 == 0.0);
  auto [z1, z2] = solve_momentum(0.0, 0.0, 2.0);
  CHECK(z1 == 0.0);
  CHECK(z2 == 0.0);

  testing::Rng rng(30);
  for (int k = 0; k < 1000; ++k) {
    const double a1 = testing::uniform(rng, -5, 5), a2 = testing::uniform(rng, -5, 5);
    const double c = std::pow(10.0, testing::uniform(rng, -16, 4));
    const auto [x, y] = solve_momentum(a1, a2, c);
    const double m = std::hypot(x, y);
    CHECK(x + c * x * m == doctest::Approx(a1).scale(1.0).epsilon(1e-13));
    CHECK(y + c * y * m == doctest::Approx(a2).scale(1.0).epsilon(1e-13));
    // same direction
    CHECK(x * a2 - y * a1 == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
    CHECK(x * a1 + y * a2 >= 0.0);
  }
}

TEST_CASE("solve_trace") {
  ModelParams p;
  p.phi = 10.0;
  p.Cr = 1.0;
  CHECK(solve_trace(1.0, 1.0, 1.0, 1.0, p) == doctest::Approx(2.0));

  // K = C_r |v|^3 theta dt = 1, phi h^2 = 1 with h = 2
  ModelParams q;
  q.phi = 0.25;
  q.Cr = 1.0;
  const double T = solve_trace(3.0, 2.0, 1.0, 1.0, q);
  CHECK(T == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-14));
  CHECK(T * T - 2.0 * T - 1.0 == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));

  ModelParams none;
  none.phi = 1e-3;
  CHECK(solve_trace(5.0, 0.5, 3.0, 0.1, none) == doctest::Approx(20.0));

  CHECK_THROWS_AS(solve_trace(0.0, 1.0, 1.0, 1.0, p), NonPhysicalState);
  CHECK_THROWS_AS(solve_trace(-1.0, 1.0, 1.0, 1.0, p), NonPhysicalState);
}

TEST_CASE("trace residual is increasing through the root") {
  testing::Rng rng(31);
  ModelParams p = roll_params();
  for (int k = 0; k < 1000; ++k) {
    const double h = testing::uniform(rng, 1e-3, 0.05);
    const double s = testing::uniform(rng, 1e-8, 1e-2);
    const double sp3 = std::pow(testing::uniform(rng, 0.0, 2.0), 3);
    const double tdt = testing::uniform(rng, 1e-4, 1e-1);
    const double T = solve_trace(s, h, sp3, tdt, p);
    CHECK(T > 0.0);
    const double d = 1e-6 * T;
    CHECK(trace_residual(T - d, s, h, sp3, tdt, p) < 0.0);
    CHECK(trace_residual(T + d, s, h, sp3, tdt, p) > 0.0);
    CHECK(std::abs(trace_residual(T, s, h, sp3, tdt, p)) <= 1e-12 * s);
  }
}

TEST_CASE("implicit update returns U~ without sources or with theta = 0") {
  testing::Rng rng(32);
  for (int k = 0; k < 200; ++k) {
    ImplicitUpdateInput<double> in;
    in.u_tilde = testing::random_state(rng);
    in.theta_dt = 0.3;
    const ConservedState out = implicit_source_update(in);
    CHECK((out - in.u_tilde).lpNorm<Eigen::Infinity>() <= 1e-14 * in.u_tilde.lpNorm<Eigen::Infinity>());

    in.params = roll_params();
    in.dbdx = -0.05;
    in.theta_dt = 0.0;
    CHECK((implicit_source_update(in) - in.u_tilde).isZero(0.0));
  }
}

TEST_CASE("implicit update residual") {
  testing::Rng rng(33);
  double worst = 0.0;
  int solved = 0;
  for (int k = 0; k < 2000; ++k) {
    ImplicitUpdateInput<double> in;
    const double h = testing::uniform(rng, 2e-3, 2e-2);
    const double u = testing::uniform(rng, -1.0, 2.0), v = testing::uniform(rng, -0.5, 0.5);
    const double P11 = std::pow(10.0, testing::uniform(rng, -5, -2));
    const double P22 = std::pow(10.0, testing::uniform(rng, -5, -2));
    const double P12 = testing::uniform(rng, -0.9, 0.9) * std::sqrt(P11 * P22);
    in.u_tilde = prim_to_cons(PrimitiveState::from_stress(h, u, v, P11, P12, P22));
    in.params = roll_params();
    in.dbdx = testing::uniform(rng, -0.2, 0.2);
    in.dbdy = testing::uniform(rng, -0.2, 0.2);
    in.theta_dt = testing::uniform(rng, 1e-4, 2e-2);
    ConservedState out;
    try {
      out = implicit_source_update(in);
    } catch (const NonPhysicalState&) {
      continue;
    }
    ++solved;
    CHECK(out.h() == in.u_tilde.h());
    worst = std::max(worst, residual(out, in).lpNorm<Eigen::Infinity>() / in.u_tilde.lpNorm<Eigen::Infinity>());
  }
  CHECK(solved > 1000);
  CHECK(worst <= 1e-11);
}

TEST_CASE("roll-wave base flow is a fixed point") {
  const CaseSetup s = init_case("rollwave1d_case1", 20, 1, {{"a", 0.0}});
  const ConservedState base = s.grid(3, 0);
  for (double tdt : {1e-4, 1e-3, 1e-2}) {
    ImplicitUpdateInput<double> in;
    in.u_tilde = base;
    in.params = s.params;
    in.dbdx = s.grid.topography().dbdx[s.grid.index(3, 0)];
    in.theta_dt = tdt;
    const ConservedState out = implicit_source_update(in);
    CHECK((out - base).lpNorm<Eigen::Infinity>() <= 1e-12 * base.lpNorm<Eigen::Infinity>());
  }
}

TEST_CASE("inadmissible input") {
  ImplicitUpdateInput<double> in;
  in.u_tilde = ConservedState(0.0, 0, 0, 0, 0, 0);
  in.theta_dt = 0.1;
  CHECK_THROWS_AS(implicit_source_update(in), NonPhysicalState);
  // negative stress trace after the momentum solve
  in.u_tilde = ConservedState(1.0, 1.0, 0.0, 0.1, 0.0, 0.0);
  in.params = roll_params();
  CHECK_THROWS_AS(implicit_source_update(in), NonPhysicalState);
}
