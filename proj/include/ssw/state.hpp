#ifndef SSW_STATE_HPP
#define SSW_STATE_HPP

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ssw {

template <typename Scalar>
using Vector6 = Eigen::Matrix<Scalar, 6, 1>;

template <typename Scalar>
using Matrix6 = Eigen::Matrix<Scalar, 6, 6>;

enum class Axis { x, y };

/// Physical constants of the model. Numerical controls (CFL, limiter,
/// implicitness) live in StepControls.
struct ModelParams {
  double g = 9.81;
  double Cf = 0.0;   ///< Chezy friction coefficient
  double Cr = 0.0;   ///< roller dissipation constant
  double phi = 0.0;  ///< stress threshold constant [1/s^2]

  void validate() const {
    if (!(g > 0.0)) throw std::invalid_argument("ModelParams: g must be positive");
    if (Cf < 0.0) throw std::invalid_argument("ModelParams: Cf must be non-negative");
    if (Cr < 0.0) throw std::invalid_argument("ModelParams: Cr must be non-negative");
    if (phi < 0.0) throw std::invalid_argument("ModelParams: phi must be non-negative");
  }
};

/// Thrown when a state leaves the admissible set (h > 0, R positive definite).
class NonPhysicalState : public std::runtime_error {
 public:
  NonPhysicalState(const std::string& what, std::string component)
      : std::runtime_error(what), component_(std::move(component)) {}

  const std::string& component() const noexcept { return component_; }

 private:
  std::string component_;
};

template <typename Scalar>
class Primitive;

/// U = (h, h v1, h v2, E11, E12, E22).
template <typename Scalar>
class Conserved : public Vector6<Scalar> {
 public:
  using Base = Vector6<Scalar>;

  Conserved() : Base(Base::Zero()) {}
  Conserved(Scalar h, Scalar m1, Scalar m2, Scalar E11, Scalar E12, Scalar E22) {
    *this << h, m1, m2, E11, E12, E22;
  }
  template <typename Derived>
  Conserved(const Eigen::MatrixBase<Derived>& other) : Base(other) {}
  Conserved(const Primitive<Scalar>&) = delete;

  template <typename Derived>
  Conserved& operator=(const Eigen::MatrixBase<Derived>& other) {
    Base::operator=(other);
    return *this;
  }

  Scalar h() const { return (*this)[0]; }
  Scalar m1() const { return (*this)[1]; }
  Scalar m2() const { return (*this)[2]; }
  Scalar E11() const { return (*this)[3]; }
  Scalar E12() const { return (*this)[4]; }
  Scalar E22() const { return (*this)[5]; }
};

/// Q = (h, v1, v2, R11, R12, R22) with R = h P.
template <typename Scalar>
class Primitive : public Vector6<Scalar> {
 public:
  using Base = Vector6<Scalar>;

  Primitive() : Base(Base::Zero()) {}
  Primitive(Scalar h, Scalar v1, Scalar v2, Scalar R11, Scalar R12, Scalar R22) {
    *this << h, v1, v2, R11, R12, R22;
  }
  template <typename Derived>
  Primitive(const Eigen::MatrixBase<Derived>& other) : Base(other) {}
  Primitive(const Conserved<Scalar>&) = delete;

  template <typename Derived>
  Primitive& operator=(const Eigen::MatrixBase<Derived>& other) {
    Base::operator=(other);
    return *this;
  }

  /// Builds Q from the stress P instead of R = h P.
  static Primitive from_stress(Scalar h, Scalar v1, Scalar v2, Scalar P11, Scalar P12, Scalar P22) {
    return Primitive(h, v1, v2, h * P11, h * P12, h * P22);
  }

  Scalar h() const { return (*this)[0]; }
  Scalar v1() const { return (*this)[1]; }
  Scalar v2() const { return (*this)[2]; }
  Scalar R11() const { return (*this)[3]; }
  Scalar R12() const { return (*this)[4]; }
  Scalar R22() const { return (*this)[5]; }
  Scalar P11() const { return R11() / h(); }
  Scalar P12() const { return R12() / h(); }
  Scalar P22() const { return R22() / h(); }
};

using ConservedState = Conserved<double>;
using PrimitiveState = Primitive<double>;

namespace detail {

template <typename Derived>
std::string format_state(const Eigen::MatrixBase<Derived>& v) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace detail

/// Throws NonPhysicalState unless h > 0, R11 > 0, R22 > 0 and det R > 0.
template <typename Scalar>
void check_admissible(const Primitive<Scalar>& q) {
  auto fail = [&](const char* component) {
    throw NonPhysicalState(std::string("non-physical state: ") + component + " violated, Q=" +
                               detail::format_state(q),
                           component);
  };
  if (!(q.h() > 0)) fail("h > 0");
  if (!(q.R11() > 0)) fail("R11 > 0");
  if (!(q.R22() > 0)) fail("R22 > 0");
  if (!(q.R11() * q.R22() - q.R12() * q.R12() > 0)) fail("det R > 0");
}

/// Unchecked transformation; only requires h != 0.
template <typename Scalar>
Primitive<Scalar> to_primitive_unchecked(const Conserved<Scalar>& u) {
  const Scalar h = u.h();
  const Scalar v1 = u.m1() / h;
  const Scalar v2 = u.m2() / h;
  return Primitive<Scalar>(h, v1, v2, 2 * u.E11() - u.m1() * v1, 2 * u.E12() - u.m1() * v2,
                           2 * u.E22() - u.m2() * v2);
}

template <typename Scalar>
Primitive<Scalar> cons_to_prim(const Conserved<Scalar>& u) {
  if (!(u.h() > 0)) {
    throw NonPhysicalState("non-physical state: h > 0 violated, U=" + detail::format_state(u),
                           "h > 0");
  }
  Primitive<Scalar> q = to_primitive_unchecked(u);
  check_admissible(q);
  return q;
}

template <typename Scalar>
Conserved<Scalar> prim_to_cons(const Primitive<Scalar>& q) {
  check_admissible(q);
  const Scalar h = q.h();
  const Scalar v1 = q.v1();
  const Scalar v2 = q.v2();
  return Conserved<Scalar>(h, h * v1, h * v2, Scalar(0.5) * (q.R11() + h * v1 * v1),
                           Scalar(0.5) * (q.R12() + h * v1 * v2),
                           Scalar(0.5) * (q.R22() + h * v2 * v2));
}

/// Jacobian dU/dQ evaluated at q.
template <typename Scalar>
Matrix6<Scalar> dcons_dprim(const Primitive<Scalar>& q) {
  const Scalar h = q.h();
  const Scalar u = q.v1();
  const Scalar v = q.v2();
  const Scalar half(0.5);
  Matrix6<Scalar> J = Matrix6<Scalar>::Zero();
  J(0, 0) = 1;
  J(1, 0) = u;
  J(1, 1) = h;
  J(2, 0) = v;
  J(2, 2) = h;
  J(3, 0) = half * u * u;
  J(3, 1) = h * u;
  J(3, 3) = half;
  J(4, 0) = half * u * v;
  J(4, 1) = half * h * v;
  J(4, 2) = half * h * u;
  J(4, 4) = half;
  J(5, 0) = half * v * v;
  J(5, 2) = h * v;
  J(5, 5) = half;
  return J;
}

/// Axis swap: exchanges (m1, m2) and (E11, E22). Involution.
template <typename Derived>
Vector6<typename Derived::Scalar> rotate(const Eigen::MatrixBase<Derived>& w) {
  Vector6<typename Derived::Scalar> r;
  r << w[0], w[2], w[1], w[5], w[4], w[3];
  return r;
}

template <typename Scalar>
Conserved<Scalar> rotate_state(const Conserved<Scalar>& u) {
  return Conserved<Scalar>(rotate(u));
}

}  // namespace ssw

#endif  // SSW_STATE_HPP
