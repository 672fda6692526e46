#include "evst/symbols.hpp"

#include <cmath>

#include "evst/errors.hpp"

namespace evst {

namespace {

Eigen::Matrix<Real, 7, 7> a1_real(const SideState& s, const PressureLaw& law) {
  if (!(s.rho > 0)) throw DomainError("assemble_A1: rho must be positive");
  Eigen::Matrix<Real, 7, 7> a = Eigen::Matrix<Real, 7, 7>::Zero();
  const Real pr = law.dp(s.rho);
  a(0, 0) = s.v;
  a(0, 1) = s.rho;
  a(1, 0) = pr / s.rho;
  a(1, 1) = s.v;
  a(1, 3) = -s.F11;
  a(1, 5) = -s.F12;
  a(2, 2) = s.v;
  a(2, 4) = -s.F11;
  a(2, 6) = -s.F12;
  a(3, 1) = -s.F11;
  a(3, 3) = s.v;
  a(4, 2) = -s.F11;
  a(4, 4) = s.v;
  a(5, 1) = -s.F12;
  a(5, 5) = s.v;
  a(6, 2) = -s.F12;
  a(6, 6) = s.v;
  return a;
}

Eigen::Matrix<Real, 7, 7> a2_real(const SideState& s, const PressureLaw& law) {
  if (!(s.rho > 0)) throw DomainError("assemble_A2: rho must be positive");
  Eigen::Matrix<Real, 7, 7> a = Eigen::Matrix<Real, 7, 7>::Zero();
  const Real pr = law.dp(s.rho);
  a(0, 0) = s.u;
  a(0, 2) = s.rho;
  a(1, 1) = s.u;
  a(1, 3) = -s.F21;
  a(1, 5) = -s.F22;
  a(2, 0) = pr / s.rho;
  a(2, 2) = s.u;
  a(2, 4) = -s.F21;
  a(2, 6) = -s.F22;
  a(3, 1) = -s.F21;
  a(3, 3) = s.u;
  a(4, 2) = -s.F21;
  a(4, 4) = s.u;
  a(5, 1) = -s.F22;
  a(5, 5) = s.u;
  a(6, 2) = -s.F22;
  a(6, 6) = s.u;
  return a;
}

void require_nondegenerate(const SideState& s, Real kappa0, const char* who) {
  if (std::abs(s.d2Phi) < kappa0)
    throw NondegeneracyError(std::string(who) + ": |d2Phi| < kappa0");
}

}  // namespace

Mat7 symmetrizer_S(const SideState& s, const PressureLaw& law) {
  if (!(s.rho > 0)) throw DomainError("symmetrizer_S: rho must be positive");
  // The deformation rows need the same rho weight as the velocity rows;
  // the unit weights symmetrize only for rho = 1.
  Mat7 m = Mat7::Zero();
  m(0, 0) = law.dp(s.rho) / s.rho;
  for (int i = 1; i < 7; ++i) m(i, i) = s.rho;
  return m;
}

MatrixSymbol7 assemble_A1(const SideState& s, const PressureLaw& law, Side side) {
  return {a1_real(s, law).cast<Complex>(), side, 0};
}

MatrixSymbol7 assemble_A2(const SideState& s, const PressureLaw& law, Side side) {
  return {a2_real(s, law).cast<Complex>(), side, 0};
}

MatrixSymbol7 assemble_A2tilde(const SideState& s, const PressureLaw& law, Side side,
                               Real kappa0) {
  require_nondegenerate(s, kappa0, "assemble_A2tilde");
  Eigen::Matrix<Real, 7, 7> m =
      (a2_real(s, law) - s.dtPhi * Eigen::Matrix<Real, 7, 7>::Identity() -
       s.d1Phi * a1_real(s, law)) /
      s.d2Phi;
  return {m.cast<Complex>(), side, 0};
}

TransformSet assemble_T_A0(const SideState& s, const PressureLaw& law, Side side, Real kappa0) {
  require_nondegenerate(s, kappa0, "assemble_T_A0");
  if (!(s.rho > 0)) throw DomainError("assemble_T_A0: rho must be positive");
  const Real c = sound_speed(law, s.rho);
  const Real p1 = s.d1Phi;
  const Real h = s.d1_hat();
  const Real b = c / s.rho;

  Eigen::Matrix<Real, 7, 7> T = Eigen::Matrix<Real, 7, 7>::Zero();
  T(0, 1) = h;
  T(0, 2) = h;
  T(1, 0) = 1;
  T(1, 1) = -b * p1;
  T(1, 2) = b * p1;
  T(2, 0) = p1;
  T(2, 1) = b;
  T(2, 2) = -b;
  T(3, 3) = 1;
  T(3, 4) = -p1;
  T(4, 3) = p1;
  T(4, 4) = 1;
  T(5, 5) = 1;
  T(5, 6) = -p1;
  T(6, 5) = p1;
  T(6, 6) = 1;

  // Block inverse: the acoustic 3x3 and the two elastic rotation blocks invert in closed form.
  Eigen::Matrix<Real, 7, 7> Ti = Eigen::Matrix<Real, 7, 7>::Zero();
  const Real h2 = h * h;
  Ti(0, 1) = 1.0 / h2;
  Ti(0, 2) = p1 / h2;
  Ti(1, 0) = 0.5 / h;
  Ti(1, 1) = -p1 / (2 * b * h2);
  Ti(1, 2) = 1.0 / (2 * b * h2);
  Ti(2, 0) = 0.5 / h;
  Ti(2, 1) = p1 / (2 * b * h2);
  Ti(2, 2) = -1.0 / (2 * b * h2);
  Ti(3, 3) = 1.0 / h2;
  Ti(3, 4) = p1 / h2;
  Ti(4, 3) = -p1 / h2;
  Ti(4, 4) = 1.0 / h2;
  Ti(5, 5) = 1.0 / h2;
  Ti(5, 6) = p1 / h2;
  Ti(6, 5) = -p1 / h2;
  Ti(6, 6) = 1.0 / h2;

  Eigen::Matrix<Real, 7, 7> A0 = Eigen::Matrix<Real, 7, 7>::Identity();
  A0(1, 1) = s.d2Phi / (c * h);
  A0(2, 2) = -s.d2Phi / (c * h);

  TransformSet ts;
  ts.T = T.cast<Complex>();
  ts.Tinv = Ti.cast<Complex>();
  ts.A0 = A0.cast<Complex>();
  ts.side = side;
  return ts;
}

MatrixSymbol7 principal_symbol(const SideState& s, const PressureLaw& law, Side side,
                               const Frequency& f, Real kappa0) {
  if (!f.valid()) throw DomainError("principal_symbol: zero frequency");
  const TransformSet ts = assemble_T_A0(s, law, side, kappa0);
  const Mat7 A1t = ts.A0 * ts.Tinv * a1_real(s, law).cast<Complex>() * ts.T;
  MatrixSymbol7 out;
  out.m = f.tau() * ts.A0 + Complex(0, f.eta) * A1t;
  out.side = side;
  out.degree = 1;
  return out;
}

BoundarySymbols boundary_symbols(const BackgroundPoint& bp, const Frequency& f) {
  if (!bp.on_boundary()) throw DomainError("boundary_symbols: point must be on x2 = 0");
  const SideState& r = bp.right;
  const SideState& l = bp.left;
  const Real h = r.d1_hat();  // shared front trace
  const Real h2 = h * h;
  const Real cr = sound_speed(bp.pressure, r.rho);
  const Real cl = sound_speed(bp.pressure, l.rho);

  BoundarySymbols bs;
  bs.b0 = Vec7::Zero();
  bs.b0(1) = 1;
  bs.b1 = Vec7::Zero();
  bs.b1(0) = r.v - l.v;
  bs.b1(1) = r.v;
  bs.b1(3) = r.F11 - l.F11;
  bs.b1(4) = r.F11;
  bs.b1(5) = r.F12 - l.F12;
  bs.b1(6) = r.F12;
  bs.b = f.tau() * bs.b0 + Complex(0, f.eta) * bs.b1;

  const Real qr = cr / r.rho * h2;
  const Real ql = cl / l.rho * h2;
  bs.Mmat = MatM::Zero();
  bs.Mmat(0, 0) = -qr;
  bs.Mmat(0, 1) = qr;
  bs.Mmat(0, 4) = ql;
  bs.Mmat(0, 5) = -ql;
  bs.Mmat(1, 0) = -qr;
  bs.Mmat(1, 1) = qr;
  bs.Mmat(2, 0) = h;
  bs.Mmat(2, 1) = h;
  bs.Mmat(2, 4) = -h;
  bs.Mmat(2, 5) = -h;
  bs.Mmat(3, 2) = -h2;
  bs.Mmat(3, 6) = h2;
  bs.Mmat(4, 2) = -h2;
  bs.Mmat(5, 3) = -h2;
  bs.Mmat(5, 7) = h2;
  bs.Mmat(6, 3) = -h2;

  const Complex kr = f.tau() + Complex(0, r.v * f.eta);
  const Complex kl = f.tau() + Complex(0, l.v * f.eta);
  const Real dv = r.v - l.v;
  bs.Pi = MatPi::Zero();
  bs.Pi(0, 2) = 1;
  bs.Pi(1, 0) = kr;
  bs.Pi(1, 1) = Complex(0, -f.eta * dv);
  bs.Pi(2, 0) = -(r.F11 - l.F11);
  bs.Pi(2, 3) = dv;
  bs.Pi(3, 0) = -r.F11;
  bs.Pi(3, 4) = dv;
  bs.Pi(4, 0) = -(r.F12 - l.F12);
  bs.Pi(4, 5) = dv;
  bs.Pi(5, 0) = -r.F12;
  bs.Pi(5, 6) = dv;

  bs.beta = MatBeta::Zero();
  bs.beta(0, 0) = h;
  bs.beta(0, 1) = h;
  bs.beta(0, 2) = -h;
  bs.beta(0, 3) = -h;
  bs.beta(1, 0) = -qr * kl;
  bs.beta(1, 1) = qr * kl;
  bs.beta(1, 2) = ql * kr;
  bs.beta(1, 3) = -ql * kr;
  return bs;
}

}  // namespace evst
