#include "support.hpp"

#include "ssw/cases.hpp"
#include "ssw/model.hpp"

#include <doctest.h>

#include <cmath>

using namespace ssw;

namespace {
constexpr double g = 9.81;
}

TEST_CASE("physical_flux examples") {
  const ConservedState u(1, 0, 0, 0.05, 0, 0.005);
  const Vector6<double> f = physical_flux(u, Axis::x, g);
  CHECK(f[0] == 0.0);
  CHECK(f[1] == doctest::Approx(5.005).epsilon(1e-15));
  for (int c : {2, 3, 4, 5}) CHECK(f[c] == 0.0);

  // at rest only the momentum rows carry stress and pressure
  const ConservedState w = prim_to_cons(PrimitiveState(0.5, 0, 0, 0.2, 0.05, 0.3));
  const Vector6<double> fx = physical_flux(w, Axis::x, g);
  CHECK(fx[1] == doctest::Approx(0.2 + 0.5 * g * 0.25));
  CHECK(fx[2] == doctest::Approx(0.05));
  CHECK(fx[0] == 0.0);
  CHECK(fx[3] == 0.0);
  CHECK(fx[4] == 0.0);
  CHECK(fx[5] == 0.0);
}

TEST_CASE("physical_flux is rotation covariant") {
  testing::Rng rng(10);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const ConservedState u = testing::random_state(rng);
    const Vector6<double> a = physical_flux(u, Axis::y, g);
    const Vector6<double> b = rotate(physical_flux(rotate_state(u), Axis::x, g));
    worst = std::max(worst, (a - b).lpNorm<Eigen::Infinity>());
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("y flux written out componentwise") {
  const PrimitiveState q(0.8, 0.3, -0.4, 0.5, 0.1, 0.6);
  const ConservedState u = prim_to_cons(q);
  const Vector6<double> f = physical_flux(u, Axis::y, g);
  const double h = 0.8, a = 0.3, b = -0.4;
  CHECK(f[0] == doctest::Approx(h * b));
  CHECK(f[1] == doctest::Approx(0.1 + h * a * b));
  CHECK(f[2] == doctest::Approx(0.6 + h * b * b + 0.5 * g * h * h));
  CHECK(f[3] == doctest::Approx(u.E11() * b + 0.1 * a));
  CHECK(f[4] == doctest::Approx(u.E12() * b + 0.5 * (0.1 * b + 0.6 * a)));
  CHECK(f[5] == doctest::Approx(u.E22() * b + 0.6 * b));
}

TEST_CASE("noncons_vector") {
  const Vector6<double> b = noncons_vector(2.0, 3.0, Axis::x, g);
  CHECK(b[3] == doctest::Approx(19.62));
  CHECK(b[4] == doctest::Approx(14.715));
  CHECK(b[0] == 0.0);
  CHECK(b[5] == 0.0);
  CHECK(noncons_vector(0.0, 0.0, Axis::x, g).isZero(0.0));
  const Vector6<double> by = noncons_vector(2.0, 3.0, Axis::y, g);
  CHECK(by[4] == doctest::Approx(0.5 * g * 2.0));
  CHECK(by[5] == doctest::Approx(g * 3.0));
  // linearity, exact for these dyadic values
  const Vector6<double> lhs = noncons_vector(0.5 * 2.0 + 2.0 * 1.0, 0.5 * 3.0 + 2.0 * -4.0, Axis::x, 8.0);
  const Vector6<double> rhs = 0.5 * noncons_vector(2.0, 3.0, Axis::x, 8.0) + 2.0 * noncons_vector(1.0, -4.0, Axis::x, 8.0);
  CHECK(lhs == rhs);
}

TEST_CASE("eigenvalues") {
  const ConservedState u = prim_to_cons(PrimitiveState::from_stress(0.01, 0, 0, 1e-4, 0, 1e-4));
  const auto l = eigenvalues(u, Axis::x, g);
  const double expect[6] = {-0.313688, -0.01, 0, 0, 0.01, 0.313688};
  for (int k = 0; k < 6; ++k) CHECK(l[k] == doctest::Approx(expect[k]).epsilon(1e-5));

  // degenerate merge when P11 = 0 (unchecked state)
  const ConservedState d(1.0, 0.7, 0.0, 0.5 * 0.7 * 0.7, 0.0, 0.5);
  const auto m = eigenvalues(d, Axis::x, g);
  for (int k = 1; k <= 4; ++k) CHECK(m[k] == doctest::Approx(0.7));

  testing::Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const PrimitiveState q = testing::random_primitive(rng);
    const double w = testing::uniform(rng, -2, 2);
    PrimitiveState s = q;
    s[1] += w;
    const auto a = eigenvalues(prim_to_cons(q), Axis::x, g);
    const auto b = eigenvalues(prim_to_cons(s), Axis::x, g);
    for (int i = 0; i < 6; ++i) CHECK(b[i] == doctest::Approx(a[i] + w).epsilon(1e-12));
    CHECK(std::is_sorted(a.begin(), a.end()));
    const auto ly = eigenvalues(prim_to_cons(q), Axis::y, g);
    const auto lr = eigenvalues(rotate_state(prim_to_cons(q)), Axis::x, g);
    for (int i = 0; i < 6; ++i) CHECK(ly[i] == lr[i]);
  }
}

TEST_CASE("eigenvalues reject non-hyperbolic states") {
  // g h + 3 P11 < 0
  const ConservedState u(1.0, 0.0, 0.0, -2.0, 0.0, 0.5);
  CHECK_THROWS_AS(eigenvalues(u, Axis::x, g), NonPhysicalState);
}

TEST_CASE("alpha_coeff") {
  ModelParams p;
  p.Cr = 0.00035;
  p.phi = 22.76;
  const double h = 0.00798;
  CHECK(alpha_coeff(h, p.phi * h * h, p) == 0.0);
  CHECK(alpha_coeff(h, 0.5 * p.phi * h * h, p) == 0.0);
  CHECK(alpha_coeff(h, 0.0, p) == 0.0);
  const double closed = p.Cr / (4.0 * p.phi * h * h);
  CHECK(alpha_coeff(h, 2.0 * p.phi * h * h, p) == doctest::Approx(closed).epsilon(1e-14));
  CHECK(closed == doctest::Approx(0.060376).epsilon(1e-4));
}

TEST_CASE("source_terms") {
  ModelParams p;
  p.Cf = 0.0036;
  p.Cr = 0.00035;
  p.phi = 22.76;
  const ConservedState rest = prim_to_cons(PrimitiveState(0.3, 0, 0, 0.1, 0.01, 0.2));
  CHECK(source_terms(rest, 0.0, 0.0, p).isZero(0.0));

  ModelParams none;
  testing::Rng rng(12);
  for (int k = 0; k < 100; ++k) CHECK(source_terms(testing::random_state(rng), 0.0, 0.0, none).isZero(0.0));

  // uniform roll-wave base flow: gravity balances friction, alpha = 0
  const double h0 = 7.98e-3, tan_t = std::tan(0.05011);
  const double u0 = std::sqrt(g * h0 * tan_t / p.Cf);
  const double P = 0.5 * p.phi * h0 * h0;
  const ConservedState base = prim_to_cons(PrimitiveState::from_stress(h0, u0, 0, P, 0, P));
  const Vector6<double> s = source_terms(base, -tan_t, 0.0, p);
  CHECK(s.lpNorm<Eigen::Infinity>() <= 1e-15);
}

TEST_CASE("entropy") {
  CHECK(entropy(prim_to_cons(PrimitiveState(1, 0, 0, 1, 0, 1))) == 0.0);
  CHECK(entropy(prim_to_cons(PrimitiveState(1, 0, 0, std::exp(1.0), 0, 1))) == doctest::Approx(-1.0));
  CHECK(entropy(prim_to_cons(PrimitiveState(2, 0, 0, 2, 0, 2))) == doctest::Approx(2.0 * std::log(4.0)));
  testing::Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    PrimitiveState q = testing::random_primitive(rng);
    const double e0 = entropy(prim_to_cons(q));
    q[1] += 0.3;
    q[2] -= 0.7;
    CHECK(entropy(prim_to_cons(q)) == doctest::Approx(e0).epsilon(1e-12));
  }
}

TEST_CASE("total_energy_density") {
  CHECK(total_energy_density(ConservedState(1, 0, 0, 0, 0, 0), g) == doctest::Approx(4.905));
  CHECK(total_energy_density(ConservedState(1, 1, 0, 0.5, 0, 0), 0.0) == doctest::Approx(0.5));
  const ConservedState a = prim_to_cons(PrimitiveState(1.5, 0.4, 0.2, 0.3, 0.0, 0.3));
  const ConservedState b = prim_to_cons(PrimitiveState(1.5, 0.8, 0.4, 0.3, 0.0, 0.3));
  const double rest = total_energy_density(prim_to_cons(PrimitiveState(1.5, 0, 0, 0.3, 0.0, 0.3)), g);
  CHECK(total_energy_density(b, g) - rest == doctest::Approx(4.0 * (total_energy_density(a, g) - rest)));
}

TEST_CASE("ModelParams validation") {
  ModelParams p;
  CHECK_NOTHROW(p.validate());
  p.g = 0.0;
  CHECK_THROWS(p.validate());
  p = ModelParams{};
  p.Cf = -1;
  CHECK_THROWS(p.validate());
}
