#include "evst/triangular.hpp"

#include <cmath>
#include <sstream>

#include "evst/errors.hpp"
#include "evst/symbols.hpp"

namespace evst {

namespace {

constexpr int kAlg[5] = {0, 3, 4, 5, 6};

struct CancelledSums {
  Complex plus_q;   // (E1 + E2) / (k^2 + F^2 eta^2)
  Complex minus_k;  // (E1 - E2) / k
};

// Closed forms of the pole-cancelled combinations for each eigenvector family.
CancelledSums cancelled_sums(const SideState& s, const PressureLaw& law, const Frequency& f,
                             const ModeData& md) {
  const Real c = sound_speed(law, s.rho);
  const Real h = s.d1_hat();
  const Real a2 = s.d2Phi;
  const Real eta2 = f.eta * f.eta;
  const Complex k = f.tau() + Complex(0, s.v * f.eta);
  const Complex q = k * k + s.Fsq() * eta2;
  const Complex A = a2 / (c * h);
  const Complex B2 = a2 * s.Fsq() * eta2 / (h * c);        // 2B
  const Complex C2 = a2 * c * eta2 / (h * h * h);          // 2C
  CancelledSums cs;
  if (md.family == 1) {
    cs.plus_q = A * k * k + B2 - k * md.omega;
    cs.minus_k = A * k * q + C2 * k - q * md.omega;
  } else {
    cs.plus_q = -(A * k * k + B2 + k * md.omega);
    cs.minus_k = A * k * q + C2 * k + q * md.omega;
  }
  return cs;
}

}  // namespace

Q0Data build_Q0(const SideState& s, const PressureLaw& law, Side side, const Frequency& f,
                Real kappa0) {
  Q0Data qd;
  qd.side = side;
  qd.mode = mode_data(s, law, side, f);
  const CancelledSums cs = cancelled_sums(s, law, f, qd.mode);

  const Real c = sound_speed(law, s.rho);
  const Real h = s.d1_hat();
  const Real eta = f.eta;
  const Complex k = f.tau() + Complex(0, s.v * eta);
  const Complex ie(0, 1);

  // Annihilators of the algebraic rows of A applied to the eigenvector column.
  qd.hat[0] = -ie * eta * c * c / (h * s.rho) * k * cs.plus_q;            // W1
  qd.hat[1] = eta * eta * s.F11 * c * c / (h * s.rho) * cs.plus_q;       // W4
  qd.hat[2] = ie * c * s.F11 * eta / s.rho * cs.minus_k;                 // W5
  qd.hat[3] = eta * eta * s.F12 * c * c / (h * s.rho) * cs.plus_q;       // W6
  qd.hat[4] = ie * c * s.F12 * eta / s.rho * cs.minus_k;                 // W7

  qd.Q0 = Mat7::Identity();
  qd.Q0(0, 1) = qd.hat[0];
  qd.Q0(1, 1) = qd.mode.E(0);
  qd.Q0(2, 1) = qd.mode.E(1);
  qd.Q0(3, 1) = qd.hat[1];
  qd.Q0(4, 1) = qd.hat[2];
  qd.Q0(5, 1) = qd.hat[3];
  qd.Q0(6, 1) = qd.hat[4];
  qd.Q0(1, 2) = Complex(1, 0);  // free column (U2, U3) = (1, 0)
  qd.Q0(2, 2) = Complex(0, 0);

  qd.xi = -qd.mode.E(1);  // det of Q0 for this free column

  // Defining property: rows 1,4,5,6,7 of A * (column 2) vanish.
  const Mat7 A = principal_symbol(s, law, side, f, kappa0).m;
  const Vec7 col2 = qd.Q0.col(1);
  const Vec7 r = A * col2;
  const Real scale = A.cwiseAbs().maxCoeff() * std::max(col2.norm(), Real(1e-300));
  for (int i : kAlg) {
    if (std::abs(r(i)) > 1e-8 * scale) {
      std::ostringstream os;
      os << "build_Q0: defining system residual " << std::abs(r(i)) / scale << " in row "
         << i + 1 << " (side " << to_string(side) << ")";
      throw ConstructionError(os.str());
    }
  }
  return qd;
}

R0Data build_R0(const SideState& s, const PressureLaw& law, Side side, const Frequency& f,
                const Q0Data& qd, Real kappa0) {
  R0Data rd;
  rd.xi = qd.xi;
  if (std::abs(rd.xi) <= 1e-12 * std::max(Real(1), qd.mode.E.norm()))
    throw NearGlancing("build_R0: |xi| too small (free column degenerates against E)");

  const Real c = sound_speed(law, s.rho);
  const Real h = s.d1_hat();
  const Real a2 = s.d2Phi;
  const Real eta = f.eta;
  const Complex k = f.tau() + Complex(0, s.v * eta);
  const Complex ie(0, 1);
  const CancelledSums cs = cancelled_sums(s, law, f, qd.mode);

  const Complex D = a2 * s.rho / (2.0 * c * h * h);
  const Complex G = a2 * s.rho / (2.0 * c * c * h);

  rd.bar[0] = ie * eta * D * k * cs.plus_q / rd.xi;                  // W1
  rd.bar[1] = -eta * eta * s.F11 * D * cs.plus_q / rd.xi;            // W4
  rd.bar[2] = ie * eta * G * s.F11 * cs.minus_k / rd.xi;             // W5
  rd.bar[3] = -eta * eta * s.F12 * D * cs.plus_q / rd.xi;            // W6
  rd.bar[4] = ie * eta * G * s.F12 * cs.minus_k / rd.xi;             // W7

  rd.R0 = Mat7::Identity();
  rd.R0(1, 1) = Complex(0, 0);
  rd.R0(1, 2) = -1.0 / rd.xi;
  rd.R0(2, 0) = rd.bar[0];
  rd.R0(2, 1) = -qd.mode.E(1) / rd.xi;
  rd.R0(2, 2) = qd.mode.E(0) / rd.xi;
  rd.R0(2, 3) = rd.bar[1];
  rd.R0(2, 4) = rd.bar[2];
  rd.R0(2, 5) = rd.bar[3];
  rd.R0(2, 6) = rd.bar[4];

  // Defining property: row 3 of R0 * A vanishes on the algebraic columns.
  const Mat7 A = principal_symbol(s, law, side, f, kappa0).m;
  const Eigen::Matrix<Complex, 1, 7> row3 = rd.R0.row(2) * A;
  const Real scale =
      A.cwiseAbs().maxCoeff() * std::max(rd.R0.row(2).norm(), Real(1e-300));
  for (int j : kAlg) {
    if (std::abs(row3(j)) > 1e-8 * scale) {
      std::ostringstream os;
      os << "build_R0: annihilation residual " << std::abs(row3(j)) / scale << " in column "
         << j + 1 << " (side " << to_string(side) << ")";
      throw ConstructionError(os.str());
    }
  }
  return rd;
}

TriangularizationData build_Atilde(const SideState& s, const PressureLaw& law, Side side,
                                   const Frequency& f, Real kappa0) {
  const Q0Data qd = build_Q0(s, law, side, f, kappa0);
  const R0Data rd = build_R0(s, law, side, f, qd, kappa0);
  TriangularizationData td;
  td.side = side;
  td.Q0 = qd.Q0;
  td.R0 = rd.R0;
  td.xi = qd.xi;
  td.mode = qd.mode;
  td.A = principal_symbol(s, law, side, f, kappa0).m;
  td.Atilde = td.R0 * td.A * td.Q0;
  td.state = s;
  td.freq = f;
  return td;
}

StructureReport check_structure(const TriangularizationData& td, Real rel_tol) {
  StructureReport rep;
  const Mat7& At = td.Atilde;
  // Residuals are measured against the size of the product's intermediates,
  // since the zeros are cancellations inside R0 * A * Q0.
  const Real scale = std::max(td.R0.cwiseAbs().maxCoeff() * td.A.cwiseAbs().maxCoeff() *
                                  td.Q0.cwiseAbs().maxCoeff(),
                              Real(1e-300));

  static constexpr std::pair<int, int> kZeros[] = {
      {0, 1}, {0, 4}, {0, 6},                          //
      {1, 2}, {1, 3}, {1, 5},                          //
      {2, 0}, {2, 1}, {2, 3}, {2, 4}, {2, 5}, {2, 6},  //
      {3, 1}, {3, 2}, {3, 4}, {3, 5}, {3, 6},          //
      {4, 0}, {4, 1}, {4, 3}, {4, 5}, {4, 6},          //
      {5, 1}, {5, 2}, {5, 3}, {5, 4}, {5, 6},          //
      {6, 0}, {6, 1}, {6, 3}, {6, 4}, {6, 5}};

  for (auto [i, j] : kZeros) {
    const Real r = std::abs(At(i, j)) / scale;
    rep.max_zero_residual = std::max(rep.max_zero_residual, r);
    if (r > rel_tol) {
      std::ostringstream os;
      os << "zero entry (" << i + 1 << "," << j + 1 << ") residual " << r;
      rep.mismatches.push_back(os.str());
    }
  }

  auto entry_check = [&](int i, int j, Complex expect, const char* what) {
    const Real r = std::abs(At(i, j) - expect) / scale;
    rep.max_entry_residual = std::max(rep.max_entry_residual, r);
    if (r > rel_tol) {
      std::ostringstream os;
      os << what << " entry (" << i + 1 << "," << j + 1 << ") residual " << r;
      rep.mismatches.push_back(os.str());
    }
  };

  const SideState& s = td.state;
  const Frequency& f = td.freq;
  const Complex k = f.tau() + Complex(0, s.v * f.eta);
  for (int i : {0, 3, 4, 5, 6}) entry_check(i, i, k, "transport diagonal");
  const Complex cF11(0, -f.eta * s.F11);
  const Complex cF12(0, -f.eta * s.F12);
  entry_check(0, 3, cF11, "F11 coupling");
  entry_check(3, 0, cF11, "F11 coupling");
  entry_check(0, 5, cF12, "F12 coupling");
  entry_check(5, 0, cF12, "F12 coupling");

  // Rows 2/3 carry -(omega + i varpi) and (omega - i varpi); record which of
  // the two +- assignments matches, since the paper's in/outgoing labels
  // depend on its ambiguous omega sign.
  const Complex v22 = -(td.mode.omega + Complex(0, td.mode.varpi));
  const Complex v33 = td.mode.omega - Complex(0, td.mode.varpi);
  if (std::abs(At(1, 1) - v22) <= std::abs(At(1, 1) - v33)) {
    rep.row23_variant = 1;
    entry_check(1, 1, v22, "mode diagonal");
    entry_check(2, 2, v33, "mode diagonal");
  } else {
    rep.row23_variant = 2;
    entry_check(1, 1, v33, "mode diagonal");
    entry_check(2, 2, v22, "mode diagonal");
  }

  rep.theta = {At(0, 2), At(1, 0), At(1, 4), At(1, 6), At(4, 2), At(6, 2)};
  rep.ok = rep.mismatches.empty();
  return rep;
}

Mat7 poisson_bracket(const SymbolFn& A, const SymbolFn& B, Real t, Real x1, Real delta,
                     Real eta, Real h_space, Real h_freq) {
  auto dd = [&](const SymbolFn& S, int which) {
    switch (which) {
      case 0:  // d/ddelta
        return Mat7(((S(t, x1, delta + h_freq, eta) - S(t, x1, delta - h_freq, eta)) /
                     (2 * h_freq)));
      case 1:  // d/deta
        return Mat7(((S(t, x1, delta, eta + h_freq) - S(t, x1, delta, eta - h_freq)) /
                     (2 * h_freq)));
      case 2:  // d/dt
        return Mat7(
            ((S(t + h_space, x1, delta, eta) - S(t - h_space, x1, delta, eta)) / (2 * h_space)));
      default:  // d/dx1
        return Mat7(
            ((S(t, x1 + h_space, delta, eta) - S(t, x1 - h_space, delta, eta)) / (2 * h_space)));
    }
  };
  const Complex inv_i(0, -1);
  return inv_i * (dd(A, 0) * dd(B, 2) + dd(A, 1) * dd(B, 3));
}

}  // namespace evst
