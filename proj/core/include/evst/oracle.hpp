#pragma once

#include <optional>

#include "evst/background.hpp"
#include "evst/modal.hpp"
#include "evst/types.hpp"

namespace evst {

/// Decaying-mode data obtained without the closed-form mu/m/omega path:
/// the reduced 2x2 generator comes from a numeric 5x5 elimination of the
/// algebraic components of the 7x7 principal symbol.
struct OracleMode {
  Vec2c direction;  // unit-norm decaying direction of d/dx2 W = G W
  Complex lambda;   // its eigenvalue (Re < 0)
};

/// Generator G of the reduced ODE d/dx2 (W2,W3) = G (W2,W3), numerically
/// eliminated. Matches the assembled reduced symbol away from poles.
Mat2c oracle_reduced_generator(const SideState& s, const PressureLaw& law, Side side,
                               const Frequency& f);

/// Requires Re tau >= 0.05. Returns nullopt (abstention) when the spectral
/// gap is too small to classify the decaying mode.
std::optional<OracleMode> oracle_stable_subspace(const SideState& s, const PressureLaw& law,
                                                 Side side, const Frequency& f);

/// beta applied to the oracle subspace pair; determinant of the 2x2 map.
/// Directions are unit-normalized, so the value is comparable across points
/// (up to phase). Abstention propagates.
std::optional<Complex> oracle_boundary_det(const ConstantBackground& cb, const Frequency& f);

}  // namespace evst
