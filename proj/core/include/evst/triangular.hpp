#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "evst/background.hpp"
#include "evst/modal.hpp"
#include "evst/types.hpp"

namespace evst {

/// Transformation whose second column embeds the decaying eigenvector and whose
/// hat-components annihilate the algebraic rows of A * Q0. The free column is
/// fixed to (U2, U3) = (1, 0). xi = det(Q0) = -E2.
struct Q0Data {
  Mat7 Q0;
  std::array<Complex, 5> hat;  // W-hat components 1,4,5,6,7
  Complex xi{0};
  ModeData mode;
  Side side{Side::Right};
};

/// Hat/bar linear systems are solved in closed form after cancelling the pole
/// factors, so the construction is regular at the poles.
Q0Data build_Q0(const SideState& s, const PressureLaw& law, Side side, const Frequency& f,
                Real kappa0 = kDefaultKappa0);

struct R0Data {
  Mat7 R0;
  std::array<Complex, 5> bar;  // W-bar components 1,4,5,6,7
  Complex xi{0};
};

/// Left symmetrizer; row 3 annihilates the algebraic columns of A.
/// Throws NearGlancing when |xi| is too small.
R0Data build_R0(const SideState& s, const PressureLaw& law, Side side, const Frequency& f,
                const Q0Data& q0, Real kappa0 = kDefaultKappa0);

struct TriangularizationData {
  Side side{Side::Right};
  Mat7 Q0, R0, Atilde;
  Complex xi{0};
  ModeData mode;
  Mat7 A;  // the principal symbol used
  SideState state;
  Frequency freq;
};

TriangularizationData build_Atilde(const SideState& s, const PressureLaw& law, Side side,
                                   const Frequency& f, Real kappa0 = kDefaultKappa0);

/// Pointwise verification of the printed zero pattern and specified entries.
struct StructureReport {
  bool ok{false};
  Real max_zero_residual{0};    // relative to |R0||A||Q0|
  Real max_entry_residual{0};   // specified entries, relative
  int row23_variant{0};         // 1: (2,2)=-w-ipi,(3,3)=w-ipi; 2: swapped
  std::vector<std::string> mismatches;
  std::array<Complex, 6> theta; // measured values of the unspecified slots
};

StructureReport check_structure(const TriangularizationData& td, Real rel_tol = 1e-9);

/// Symbol-level bracket (1/i)(dA/ddelta dB/dt + dA/deta dB/dx1); finite
/// differences in (t, x1), central differences in (delta, eta) (exact for
/// degree-1 symbols). Exploratory helper.
using SymbolFn = std::function<Mat7(Real t, Real x1, Real delta, Real eta)>;
Mat7 poisson_bracket(const SymbolFn& A, const SymbolFn& B, Real t, Real x1, Real delta,
                     Real eta, Real h_space = 1e-5, Real h_freq = 1e-3);

}  // namespace evst
