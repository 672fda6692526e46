#pragma once

#include <random>

#include "evst/background.hpp"
#include "evst/types.hpp"

namespace evst::test {

/// Random admissible single-side state: eikonal constraints hold by construction.
inline SideState random_side_state(std::mt19937_64& rng, Side side) {
  std::uniform_real_distribution<Real> u(-1.0, 1.0);
  SideState s;
  s.rho = 0.5 + 2.0 * std::abs(u(rng));
  s.v = 2.5 * u(rng);
  s.F11 = 1.5 * u(rng);
  s.F12 = 1.5 * u(rng);
  s.d1Phi = 1.2 * u(rng);
  s.d2Phi = (side == Side::Right ? 1 : -1) * (0.6 + std::abs(u(rng)));
  s.dtPhi = u(rng);
  s.u = s.dtPhi + s.v * s.d1Phi;
  s.F21 = s.F11 * s.d1Phi;
  s.F22 = s.F12 * s.d1Phi;
  return s;
}

/// Random admissible boundary pair: shared front trace and density.
inline BackgroundPoint random_boundary_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<Real> u(-1.0, 1.0);
  BackgroundPoint bp;
  bp.pressure = PressureLaw{};
  bp.location = {u(rng), u(rng), 0};
  const Real d1 = 0.8 * u(rng);
  const Real dt = u(rng);
  const Real rho = 0.5 + 2.0 * std::abs(u(rng));
  for (Side side : {Side::Right, Side::Left}) {
    SideState s = random_side_state(rng, side);
    s.rho = rho;
    s.d1Phi = d1;
    s.dtPhi = dt;
    s.u = s.dtPhi + s.v * s.d1Phi;
    s.F21 = s.F11 * s.d1Phi;
    s.F22 = s.F12 * s.d1Phi;
    (side == Side::Right ? bp.right : bp.left) = s;
  }
  return bp;
}

inline Frequency random_frequency(std::mt19937_64& rng, Real gamma_min = 0.0) {
  std::normal_distribution<Real> g(0.0, 1.0);
  while (true) {
    const Real a = std::abs(g(rng)), b = g(rng), c = g(rng);
    const Real n = std::sqrt(a * a + b * b + c * c);
    if (n < 1e-6) continue;
    Frequency f{a / n, b / n, c / n};
    if (f.gamma >= gamma_min) return f;
  }
}

inline ConstantBackground supersonic_example() { return {1.0, 3.0, 1.0, 0.0, PressureLaw{}}; }
inline ConstantBackground subsonic_example() { return {1.0, 0.3, 1.0, 0.0, PressureLaw{}}; }

}  // namespace evst::test
