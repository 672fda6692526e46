#pragma once

#include <array>
#include <optional>
#include <string>

#include "evst/errors.hpp"
#include "evst/types.hpp"

namespace evst {

/// Polytropic pressure law p(rho) = kappa * rho^gamma_ad.
struct PressureLaw {
  Real kappa{0.5};
  Real gamma_ad{2.0};

  Real pressure(Real rho) const;
  Real dp(Real rho) const;  // p'(rho)
};

/// Sound speed c(rho) = sqrt(p'(rho)). Throws DomainError for rho <= 0.
Real sound_speed(const PressureLaw& law, Real rho);

/// The seven physical fields plus front-map gradient data for one side,
/// at a single space-time point. Unknown ordering: (rho, v, u, F11, F21, F12, F22).
struct SideState {
  Real rho{1};
  Real v{0}, u{0};
  Real F11{0}, F21{0}, F12{0}, F22{0};
  Real dtPhi{0}, d1Phi{0}, d2Phi{1};

  /// <d1Phi> = sqrt(1 + d1Phi^2)
  Real d1_hat() const { return std::sqrt(1.0 + d1Phi * d1Phi); }
  Real Fsq() const { return F11 * F11 + F12 * F12; }

  /// Residuals of the three transport constraints tying the front map to the fields.
  std::array<Real, 3> eikonal_residuals() const;
};

struct BackgroundPoint {
  SideState right;
  SideState left;
  PressureLaw pressure;
  std::array<Real, 3> location{0, 0, 0};  // (t, x1, x2)

  const SideState& side(Side s) const { return s == Side::Right ? right : left; }
  bool on_boundary() const { return location[2] == 0.0; }
};

struct ConstantBackground {
  Real rho_bar{1};
  Real v_bar{0};
  Real F11_bar{0};
  Real F12_bar{0};
  PressureLaw pressure{};
};

/// Smooth compactly supported bump a * prod_i psi((x_i - c_i)/w_i) with
/// psi(s) = exp(1 - 1/(1-s^2)) for |s| < 1 and 0 outside.
struct Bump {
  Real amplitude{0};
  std::array<Real, 3> center{0, 0, 0};  // (t, x1, x2)
  std::array<Real, 3> width{1, 1, 1};

  Real value(Real t, Real x1, Real x2) const;
  /// d/dt, d/dx1, d/dx2
  std::array<Real, 3> gradient(Real t, Real x1, Real x2) const;
  bool empty() const { return amplitude == 0; }
};

/// Bump family for an admissible perturbed background. The front bump phi is
/// shared by both sides (its x2 factor is centered on the boundary so the trace
/// at x2 = 0 is the full bump); rho is mirrored in x2 so the density trace is
/// continuous; v, F11, F12 are free per side. u, F21, F22 are always derived.
struct PerturbationSpec {
  Bump phi;
  Bump rho;
  Bump v_r, v_l;
  Bump F11_r, F11_l;
  Bump F12_r, F12_l;

  bool empty() const;
};

enum class Regime { SupersonicStable, SubsonicStable, Excluded, OutsideTheorem };

const char* to_string(Regime r);

/// Stability classification of a constant background.
struct RegimeClass {
  Regime regime{Regime::OutsideTheorem};
  int excluded_index{0};  // 1..4 when regime == Excluded
  Real v_sq{0};
  Real F_sq{0};
  Real c_sq{0};
  std::array<Real, 4> exclusion_values{};  // the four excluded levels for v^2

  std::string describe() const;
};

BackgroundPoint make_constant_background(const ConstantBackground& cb,
                                         std::array<Real, 3> at = {0, 0, 0});

BackgroundPoint make_perturbed_background(const ConstantBackground& cb,
                                          const PerturbationSpec& pert,
                                          std::array<Real, 3> at,
                                          Real kappa0 = kDefaultKappa0);

struct ConstraintReport {
  std::array<Real, 7> rh{};       // Rankine-Hugoniot residuals (boundary points only)
  std::array<Real, 6> eikonal{};  // r side then l side
  Real max_rh{0};
  Real max_eikonal{0};
  bool boundary{false};
  bool pass{false};
};

ConstraintReport check_constraints(const BackgroundPoint& bp, Real tol);

RegimeClass classify_regime(const ConstantBackground& cb, Real tol = 1e-8);

/// Axis-aligned sampling grid covering the perturbation support.
struct GridSpec {
  std::array<Real, 2> t_range{-1, 1};
  std::array<Real, 2> x1_range{-1, 1};
  std::array<Real, 2> x2_range{0, 1};
  int nt{16}, nx1{16}, nx2{16};
};

/// Finite-difference estimate of the W^{2,inf} norm of the perturbation fields
/// and W^{3,inf} of the front perturbation on the grid.
Real perturbation_norm_estimate(const ConstantBackground& cb, const PerturbationSpec& pert,
                                const GridSpec& grid);

}  // namespace evst
