#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>

namespace evst {

using Real = double;
using Complex = std::complex<Real>;

using Mat7 = Eigen::Matrix<Complex, 7, 7>;
using Vec7 = Eigen::Matrix<Complex, 7, 1>;
using Mat2c = Eigen::Matrix<Complex, 2, 2>;
using Vec2c = Eigen::Matrix<Complex, 2, 1>;
using MatM = Eigen::Matrix<Complex, 7, 8>;   // boundary coefficient on the normal trace
using MatPi = Eigen::Matrix<Complex, 6, 7>;  // front eliminator
using MatBeta = Eigen::Matrix<Complex, 2, 4>;

enum class Side { Right, Left };

inline const char* to_string(Side s) { return s == Side::Right ? "r" : "l"; }
inline Side other(Side s) { return s == Side::Right ? Side::Left : Side::Right; }

/// A point (gamma, delta, eta) of the frequency space, tau = gamma + i*delta.
struct Frequency {
  Real gamma{0};
  Real delta{0};
  Real eta{0};

  Complex tau() const { return {gamma, delta}; }

  /// sqrt(|tau|^2 + eta^2), the hemisphere radius.
  Real sigma_norm() const { return std::sqrt(gamma * gamma + delta * delta + eta * eta); }
  /// Lambda = sqrt(gamma^2 + delta^2 + eta^2); coincides with sigma_norm for tau = gamma+i*delta.
  Real lambda() const { return sigma_norm(); }

  bool valid() const { return sigma_norm() > 0; }
  bool on_hemisphere(Real tol = 1e-12) const { return std::abs(sigma_norm() - 1.0) <= tol; }

  Frequency normalized() const {
    const Real r = sigma_norm();
    return {gamma / r, delta / r, eta / r};
  }
  Frequency scaled(Real lam) const { return {lam * gamma, lam * delta, lam * eta}; }

  /// Point with delta/eta = s, given gamma, scaled so that delta^2 + eta^2 = 1.
  static Frequency from_speed(Real s, Real gamma = 0) {
    const Real e = 1.0 / std::sqrt(1.0 + s * s);
    return {gamma, s * e, e};
  }
};

inline Mat7 i2_matrix() {
  Mat7 m = Mat7::Zero();
  m(1, 1) = Complex(1, 0);
  m(2, 2) = Complex(1, 0);
  return m;
}

constexpr Real kDefaultKappa0 = 0.5;

}  // namespace evst
