#pragma once

#include "evst/background.hpp"
#include "evst/types.hpp"

namespace evst {

/// A 7x7 complex matrix symbol with side/degree metadata. Degree-1 symbols
/// satisfy M(lam*tau, lam*eta) = lam * M(tau, eta) for lam > 0.
struct MatrixSymbol7 {
  Mat7 m;
  Side side{Side::Right};
  int degree{0};
};

/// Friedrichs symmetrizer S = diag{p'/rho, rho, ..., rho}; S*A1 and S*A2 are symmetric.
Mat7 symmetrizer_S(const SideState& s, const PressureLaw& law);

/// x1-direction coefficient matrix (equals the x2-direction one by the system's symmetry).
MatrixSymbol7 assemble_A1(const SideState& s, const PressureLaw& law, Side side = Side::Right);

MatrixSymbol7 assemble_A2(const SideState& s, const PressureLaw& law, Side side = Side::Right);

/// Boundary matrix (A2 - dtPhi*I - d1Phi*A1) / d2Phi. Rank 2 for admissible states.
MatrixSymbol7 assemble_A2tilde(const SideState& s, const PressureLaw& law,
                               Side side = Side::Right, Real kappa0 = kDefaultKappa0);

struct TransformSet {
  Mat7 T;
  Mat7 Tinv;  // closed-form inverse
  Mat7 A0;
  Side side{Side::Right};
};

/// Transformation diagonalizing the boundary matrix: A0 * Tinv * A2tilde * T = diag{0,1,1,0,...}.
TransformSet assemble_T_A0(const SideState& s, const PressureLaw& law, Side side = Side::Right,
                           Real kappa0 = kDefaultKappa0);

/// Interior principal symbol  A = tau*A0 + i*eta*A0*Tinv*A1*T  (degree 1).
MatrixSymbol7 principal_symbol(const SideState& s, const PressureLaw& law, Side side,
                               const Frequency& f, Real kappa0 = kDefaultKappa0);

/// Boundary symbols at x2 = 0. Pi * b = 0 identically; beta is the first two
/// rows of Pi * M restricted to the non-characteristic trace columns.
struct BoundarySymbols {
  Vec7 b;        // tau*b0 + i*eta*b1
  Vec7 b0, b1;   // frequency-free parts
  MatM Mmat;     // coefficient of W^n = (W2,W3,W5,W7, W9,W10,W12,W14)
  MatPi Pi;
  MatBeta beta;  // acts on W^nc = (W2,W3,W9,W10)
};

BoundarySymbols boundary_symbols(const BackgroundPoint& bp, const Frequency& f);

}  // namespace evst
