#include "evst/oracle.hpp"

#include <cmath>

#include "evst/errors.hpp"
#include "evst/symbols.hpp"

namespace evst {

namespace {

constexpr int kAlg[5] = {0, 3, 4, 5, 6};  // algebraic rows/columns of the symbol
constexpr int kDiff[2] = {1, 2};

}  // namespace

Mat2c oracle_reduced_generator(const SideState& s, const PressureLaw& law, Side side,
                               const Frequency& f) {
  const Mat7 A = principal_symbol(s, law, side, f).m;

  Eigen::Matrix<Complex, 5, 5> Aaa;
  Eigen::Matrix<Complex, 5, 2> Aad;
  Eigen::Matrix<Complex, 2, 5> Ada;
  Mat2c Add;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) Aaa(i, j) = A(kAlg[i], kAlg[j]);
    for (int j = 0; j < 2; ++j) Aad(i, j) = A(kAlg[i], kDiff[j]);
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 5; ++j) Ada(i, j) = A(kDiff[i], kAlg[j]);
    for (int j = 0; j < 2; ++j) Add(i, j) = A(kDiff[i], kDiff[j]);
  }

  // Algebraic rows give W_a = -Aaa^{-1} Aad W_d; the differential rows then
  // close as d/dx2 W_d = -(Add - Ada Aaa^{-1} Aad) W_d.
  const Eigen::Matrix<Complex, 5, 2> elim = Aaa.fullPivLu().solve(Aad);
  return -(Add - Ada * elim);
}

std::optional<OracleMode> oracle_stable_subspace(const SideState& s, const PressureLaw& law,
                                                 Side side, const Frequency& f) {
  if (f.gamma < 0.05)
    throw DomainError("oracle_stable_subspace: requires Re tau >= 0.05");
  const Mat2c G = oracle_reduced_generator(s, law, side, f);

  // Characteristic quadratic lambda^2 - tr(G) lambda + det(G) = 0.
  const Complex tr = G.trace();
  const Complex det = G.determinant();
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  const Complex l1 = 0.5 * (tr + disc);
  const Complex l2 = 0.5 * (tr - disc);

  const Real scale = f.lambda();
  if (std::abs(l1 - l2) < 2e-6 * scale) return std::nullopt;
  const Complex lam = (l1.real() < l2.real()) ? l1 : l2;
  if (std::abs(lam.real()) < 1e-8 * scale) return std::nullopt;
  if (lam.real() >= 0) return std::nullopt;  // no decaying mode to report

  const Vec2c v1{G(0, 1), lam - G(0, 0)};
  const Vec2c v2{lam - G(1, 1), G(1, 0)};
  OracleMode om;
  om.direction = (v1.norm() >= v2.norm()) ? v1 : v2;
  om.direction.normalize();
  om.lambda = lam;
  return om;
}

std::optional<Complex> oracle_boundary_det(const ConstantBackground& cb, const Frequency& f) {
  const BackgroundPoint bp = make_constant_background(cb);
  const auto mr = oracle_stable_subspace(bp.right, bp.pressure, Side::Right, f);
  const auto ml = oracle_stable_subspace(bp.left, bp.pressure, Side::Left, f);
  if (!mr || !ml) return std::nullopt;
  const BoundarySymbols bs = boundary_symbols(bp, f);
  Mat2c m;
  m.col(0) = bs.beta.block<2, 2>(0, 0) * mr->direction;
  m.col(1) = bs.beta.block<2, 2>(0, 2) * ml->direction;
  return m.determinant();
}

}  // namespace evst
