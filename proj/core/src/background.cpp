#include "evst/background.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace evst {

Real PressureLaw::pressure(Real rho) const { return kappa * std::pow(rho, gamma_ad); }

Real PressureLaw::dp(Real rho) const { return kappa * gamma_ad * std::pow(rho, gamma_ad - 1.0); }

Real sound_speed(const PressureLaw& law, Real rho) {
  if (!(rho > 0)) throw DomainError("sound_speed: rho must be positive");
  return std::sqrt(law.dp(rho));
}

std::array<Real, 3> SideState::eikonal_residuals() const {
  return {dtPhi + v * d1Phi - u, F11 * d1Phi - F21, F12 * d1Phi - F22};
}

namespace {

// psi(s) = exp(1 - 1/(1-s^2)) on (-1,1), psi(0) = 1.
Real mollifier(Real s) {
  if (std::abs(s) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - s * s));
}

Real mollifier_deriv(Real s) {
  if (std::abs(s) >= 1.0) return 0.0;
  const Real d = 1.0 - s * s;
  return mollifier(s) * (-2.0 * s / (d * d));
}

// sup |psi'| over (-1,1); the maximizer is near |s| ~ 0.46.
Real mollifier_deriv_sup() {
  static const Real sup = [] {
    Real m = 0;
    for (int i = 0; i <= 2000; ++i) m = std::max(m, std::abs(mollifier_deriv(i / 2000.0)));
    return m;
  }();
  return sup;
}

}  // namespace

Real Bump::value(Real t, Real x1, Real x2) const {
  if (amplitude == 0) return 0;
  return amplitude * mollifier((t - center[0]) / width[0]) *
         mollifier((x1 - center[1]) / width[1]) * mollifier((x2 - center[2]) / width[2]);
}

std::array<Real, 3> Bump::gradient(Real t, Real x1, Real x2) const {
  if (amplitude == 0) return {0, 0, 0};
  const Real s0 = (t - center[0]) / width[0];
  const Real s1 = (x1 - center[1]) / width[1];
  const Real s2 = (x2 - center[2]) / width[2];
  const Real p0 = mollifier(s0), p1 = mollifier(s1), p2 = mollifier(s2);
  return {amplitude * mollifier_deriv(s0) / width[0] * p1 * p2,
          amplitude * p0 * mollifier_deriv(s1) / width[1] * p2,
          amplitude * p0 * p1 * mollifier_deriv(s2) / width[2]};
}

bool PerturbationSpec::empty() const {
  return phi.empty() && rho.empty() && v_r.empty() && v_l.empty() && F11_r.empty() &&
         F11_l.empty() && F12_r.empty() && F12_l.empty();
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::SupersonicStable: return "SupersonicStable";
    case Regime::SubsonicStable: return "SubsonicStable";
    case Regime::Excluded: return "Excluded";
    case Regime::OutsideTheorem: return "OutsideTheorem";
  }
  return "?";
}

std::string RegimeClass::describe() const {
  std::ostringstream os;
  os << to_string(regime);
  if (regime == Regime::Excluded) os << "(" << excluded_index << ")";
  return os.str();
}

BackgroundPoint make_constant_background(const ConstantBackground& cb, std::array<Real, 3> at) {
  if (!(cb.rho_bar > 0)) throw DomainError("make_constant_background: rho_bar must be positive");
  BackgroundPoint bp;
  bp.pressure = cb.pressure;
  bp.location = at;
  bp.right = SideState{cb.rho_bar, cb.v_bar, 0, cb.F11_bar, 0, cb.F12_bar, 0, 0, 0, +1};
  bp.left = SideState{cb.rho_bar, -cb.v_bar, 0, -cb.F11_bar, 0, -cb.F12_bar, 0, 0, 0, -1};
  return bp;
}

BackgroundPoint make_perturbed_background(const ConstantBackground& cb,
                                          const PerturbationSpec& pert, std::array<Real, 3> at,
                                          Real kappa0) {
  if (!(cb.rho_bar > 0)) throw DomainError("make_perturbed_background: rho_bar must be positive");
  const Real t = at[0], x1 = at[1], x2 = at[2];

  // Front: Phi^{r,l} = +-x2 + phi_bump, shared between sides so the boundary
  // trace agrees. Nondegeneracy is checked against the analytic sup of |d2 bump|.
  const Real sup_d2 = std::abs(pert.phi.amplitude) * mollifier_deriv_sup() / pert.phi.width[2];
  if (1.0 - sup_d2 < kappa0) {
    std::ostringstream os;
    os << "make_perturbed_background: front bump drives |d2Phi| below kappa0=" << kappa0
       << " (sup |d2 phi_bump| = " << sup_d2 << ")";
    throw NondegeneracyError(os.str());
  }

  const Real phidot = pert.phi.value(t, x1, x2);
  const auto dphi = pert.phi.gradient(t, x1, x2);

  auto build_side = [&](Side s) {
    const Real sign = (s == Side::Right) ? 1.0 : -1.0;
    SideState st;
    // rho uses a profile mirrored in x2 so the trace is continuous at x2 = 0.
    st.rho = cb.rho_bar + pert.rho.value(t, x1, sign * x2);
    if (!(st.rho > 0)) throw DomainError("make_perturbed_background: rho perturbed to <= 0");
    const Bump& bv = (s == Side::Right) ? pert.v_r : pert.v_l;
    const Bump& b11 = (s == Side::Right) ? pert.F11_r : pert.F11_l;
    const Bump& b12 = (s == Side::Right) ? pert.F12_r : pert.F12_l;
    st.v = sign * cb.v_bar + bv.value(t, x1, x2);
    st.F11 = sign * cb.F11_bar + b11.value(t, x1, x2);
    st.F12 = sign * cb.F12_bar + b12.value(t, x1, x2);
    st.dtPhi = dphi[0];
    st.d1Phi = dphi[1];
    st.d2Phi = sign + dphi[2];
    // Constrained fields are derived, never free.
    st.u = st.dtPhi + st.v * st.d1Phi;
    st.F21 = st.F11 * st.d1Phi;
    st.F22 = st.F12 * st.d1Phi;
    (void)phidot;
    return st;
  };

  BackgroundPoint bp;
  bp.pressure = cb.pressure;
  bp.location = at;
  bp.right = build_side(Side::Right);
  bp.left = build_side(Side::Left);
  if (bp.right.d2Phi < kappa0 || bp.left.d2Phi > -kappa0)
    throw NondegeneracyError("make_perturbed_background: |d2Phi| < kappa0 at the sample point");
  return bp;
}

ConstraintReport check_constraints(const BackgroundPoint& bp, Real tol) {
  ConstraintReport rep;
  const auto er = bp.right.eikonal_residuals();
  const auto el = bp.left.eikonal_residuals();
  for (int i = 0; i < 3; ++i) {
    rep.eikonal[i] = std::abs(er[i]);
    rep.eikonal[3 + i] = std::abs(el[i]);
  }
  rep.max_eikonal = *std::max_element(rep.eikonal.begin(), rep.eikonal.end());

  rep.boundary = bp.on_boundary();
  if (rep.boundary) {
    const SideState& r = bp.right;
    const SideState& l = bp.left;
    // Both traces describe the same front, so use the r-side derivatives for phi.
    const Real p1 = r.d1Phi, pt = r.dtPhi;
    rep.rh = {std::abs((r.v - l.v) * p1 - (r.u - l.u)),
              std::abs(pt + r.v * p1 - r.u),
              std::abs((r.F11 - l.F11) * p1 - (r.F21 - l.F21)),
              std::abs(r.F11 * p1 - r.F21),
              std::abs((r.F12 - l.F12) * p1 - (r.F22 - l.F22)),
              std::abs(r.F12 * p1 - r.F22),
              std::abs(r.rho - l.rho)};
    rep.max_rh = *std::max_element(rep.rh.begin(), rep.rh.end());
  }
  rep.pass = rep.max_eikonal <= tol && (!rep.boundary || rep.max_rh <= tol);
  return rep;
}

RegimeClass classify_regime(const ConstantBackground& cb, Real tol) {
  if (!(cb.rho_bar > 0)) throw DomainError("classify_regime: rho_bar must be positive");
  RegimeClass rc;
  const Real c = sound_speed(cb.pressure, cb.rho_bar);
  rc.c_sq = c * c;
  rc.v_sq = cb.v_bar * cb.v_bar;
  rc.F_sq = cb.F11_bar * cb.F11_bar + cb.F12_bar * cb.F12_bar;

  const Real Fc = rc.F_sq + rc.c_sq;
  rc.exclusion_values = {
      rc.F_sq / 4.0,
      std::pow(std::sqrt(Fc) - std::sqrt(rc.F_sq), 2) / 4.0,
      Fc / 4.0,
      rc.F_sq * (2.0 * rc.c_sq + rc.F_sq) / (4.0 * Fc),
  };

  if (rc.v_sq > 2.0 * rc.c_sq + rc.F_sq) {
    rc.regime = Regime::SupersonicStable;
    return rc;
  }
  if (rc.v_sq < rc.F_sq) {
    int hit = 0;
    Real best = 0;
    for (int k = 0; k < 4; ++k) {
      const Real val = rc.exclusion_values[k];
      const Real d = std::abs(rc.v_sq - val);
      if (d <= tol * std::max({rc.v_sq, val, Real(1e-300)}) && (hit == 0 || d < best)) {
        hit = k + 1;
        best = d;
      }
    }
    if (hit) {
      rc.regime = Regime::Excluded;
      rc.excluded_index = hit;
    } else {
      rc.regime = Regime::SubsonicStable;
    }
    return rc;
  }
  rc.regime = Regime::OutsideTheorem;
  return rc;
}

Real perturbation_norm_estimate(const ConstantBackground& cb, const PerturbationSpec& pert,
                                const GridSpec& grid) {
  (void)cb;
  if (grid.nt < 2 || grid.nx1 < 2 || grid.nx2 < 2)
    throw ResolutionError("perturbation_norm_estimate: need at least 2 points per axis");

  const Real ht = (grid.t_range[1] - grid.t_range[0]) / (grid.nt - 1);
  const Real h1 = (grid.x1_range[1] - grid.x1_range[0]) / (grid.nx1 - 1);
  const Real h2 = (grid.x2_range[1] - grid.x2_range[0]) / (grid.nx2 - 1);

  // Require at least 4 samples per bump width in every active direction.
  auto check_resolution = [&](const Bump& b, const char* name) {
    if (b.empty()) return;
    const std::array<Real, 3> h = {ht, h1, h2};
    for (int ax = 0; ax < 3; ++ax) {
      if (b.width[ax] / h[ax] < 4.0) {
        std::ostringstream os;
        os << "perturbation_norm_estimate: grid too coarse for bump '" << name << "' along axis "
           << ax << " (" << b.width[ax] / h[ax] << " points per width, need >= 4)";
        throw ResolutionError(os.str());
      }
    }
  };
  check_resolution(pert.phi, "phi");
  check_resolution(pert.rho, "rho");
  check_resolution(pert.v_r, "v_r");
  check_resolution(pert.v_l, "v_l");
  check_resolution(pert.F11_r, "F11_r");
  check_resolution(pert.F11_l, "F11_l");
  check_resolution(pert.F12_r, "F12_r");
  check_resolution(pert.F12_l, "F12_l");

  const int nt = grid.nt, n1 = grid.nx1, n2 = grid.nx2;
  auto idx = [&](int i, int j, int k) { return (i * n1 + j) * n2 + k; };

  std::vector<Real> f(static_cast<size_t>(nt) * n1 * n2);
  const std::array<Real, 3> h = {ht, h1, h2};

  // Sup over the grid of |D^a f| for all divided differences up to `order`,
  // where D^a nests first differences along each axis.
  auto sup_norm = [&](auto&& eval, int order) {
    for (int i = 0; i < nt; ++i)
      for (int j = 0; j < n1; ++j)
        for (int k = 0; k < n2; ++k)
          f[idx(i, j, k)] = eval(grid.t_range[0] + i * ht, grid.x1_range[0] + j * h1,
                                 grid.x2_range[0] + k * h2);

    Real sup = 0;
    std::array<int, 3> a{};
    std::vector<Real> work = f, next;

    // Enumerate multi-indices |a| <= order.
    for (a[0] = 0; a[0] <= order; ++a[0])
      for (a[1] = 0; a[0] + a[1] <= order; ++a[1])
        for (a[2] = 0; a[0] + a[1] + a[2] <= order; ++a[2]) {
          work = f;
          std::array<int, 3> n = {nt, n1, n2};
          for (int ax = 0; ax < 3; ++ax) {
            for (int rep = 0; rep < a[ax]; ++rep) {
              std::array<int, 3> m = n;
              m[ax] -= 1;
              next.assign(static_cast<size_t>(m[0]) * m[1] * m[2], 0);
              for (int i = 0; i < m[0]; ++i)
                for (int j = 0; j < m[1]; ++j)
                  for (int k = 0; k < m[2]; ++k) {
                    const std::array<int, 3> p{i, j, k};
                    std::array<int, 3> q = p;
                    q[ax] += 1;
                    const Real lo = work[(p[0] * n[1] + p[1]) * n[2] + p[2]];
                    const Real hi = work[(q[0] * n[1] + q[1]) * n[2] + q[2]];
                    next[(i * m[1] + j) * m[2] + k] = (hi - lo) / h[ax];
                  }
              work.swap(next);
              n = m;
            }
          }
          for (Real val : work) sup = std::max(sup, std::abs(val));
        }
    return sup;
  };

  Real total = 0;
  // U-dot fields in W^{2,inf}.
  auto add_field = [&](auto&& eval) { total = std::max(total, sup_norm(eval, 2)); };
  add_field([&](Real t, Real x1, Real x2) { return pert.rho.value(t, x1, x2); });
  add_field([&](Real t, Real x1, Real x2) { return pert.rho.value(t, x1, -x2); });
  add_field([&](Real t, Real x1, Real x2) { return pert.v_r.value(t, x1, x2); });
  add_field([&](Real t, Real x1, Real x2) { return pert.v_l.value(t, x1, x2); });
  add_field([&](Real t, Real x1, Real x2) { return pert.F11_r.value(t, x1, x2); });
  add_field([&](Real t, Real x1, Real x2) { return pert.F11_l.value(t, x1, x2); });
  add_field([&](Real t, Real x1, Real x2) { return pert.F12_r.value(t, x1, x2); });
  add_field([&](Real t, Real x1, Real x2) { return pert.F12_l.value(t, x1, x2); });
  // Derived fields (u, F21, F22) are products of the above with front gradients;
  // their W^{2,inf} size is controlled by the same sup, so they are not re-sampled.

  // Front perturbation in W^{3,inf}.
  total = std::max(
      total, sup_norm([&](Real t, Real x1, Real x2) { return pert.phi.value(t, x1, x2); }, 3));
  return total;
}

}  // namespace evst
