#include "evst/modal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "evst/errors.hpp"

namespace evst {

namespace {

constexpr Real kPoleTol = 1e-12;
constexpr Real kGlancingTol = 1e-7;

struct SideFreqData {
  Complex k;   // tau + i v eta
  Complex q;   // k^2 + F^2 eta^2
  Real a2;     // d2Phi
  Real h;      // <d1Phi>
  Real c;
  Real Fsq;
  Real varpi;  // a2 * d1Phi * eta / h^2
};

SideFreqData side_freq(const SideState& s, const PressureLaw& law, const Frequency& f) {
  SideFreqData d;
  d.a2 = s.d2Phi;
  d.h = s.d1_hat();
  d.c = sound_speed(law, s.rho);
  d.Fsq = s.Fsq();
  d.k = f.tau() + Complex(0, s.v * f.eta);
  d.q = d.k * d.k + d.Fsq * f.eta * f.eta;
  d.varpi = d.a2 * s.d1Phi * f.eta / (d.h * d.h);
  return d;
}

}  // namespace

namespace detail {

Complex omega_squared(const SideState& s, const PressureLaw& law, const Frequency& f) {
  const SideFreqData d = side_freq(s, law, f);
  const Real h2 = d.h * d.h;
  return d.a2 * d.a2 / (d.c * d.c * h2 * h2) * (h2 * d.q + d.c * d.c * f.eta * f.eta);
}

Complex omega_branch(Complex omega_sq, const Frequency& f, Real v) {
  const Complex w = std::sqrt(omega_sq);
  if (std::abs(w) == 0) return w;
  if (std::abs(w.real()) > 1e-13 * std::abs(w)) {
    return (w.real() < 0) ? w : -w;
  }
  // Purely imaginary: take the gamma -> 0+ limit of the decaying branch,
  // omega = -i * sign(delta + v*eta) * |omega|.
  const Real drift = f.delta + v * f.eta;
  if (drift == 0) return w;  // unreachable for omega_sq < 0
  return (drift > 0) ? Complex(0, -std::abs(w)) : Complex(0, std::abs(w));
}

std::vector<Real> glancing_speeds(const SideState& s, const PressureLaw& law) {
  const Real c = sound_speed(law, s.rho);
  const Real h = s.d1_hat();
  const Real g = std::sqrt(s.Fsq() + c * c / (h * h));
  return {-s.v - g, -s.v + g};
}

Complex root_factor(int which, const BackgroundPoint& bp, Real s) {
  const Frequency f = Frequency::from_speed(s, 0);
  const SideState& r = bp.right;
  const SideState& l = bp.left;
  const Complex wr = omega_branch(omega_squared(r, bp.pressure, f), f, r.v);
  const Complex wl = omega_branch(omega_squared(l, bp.pressure, f), f, l.v);
  const Real hr2 = r.d1_hat() * r.d1_hat();
  const Real hl2 = l.d1_hat() * l.d1_hat();
  if (which == 3) return hr2 * hl2 / (r.d2Phi * l.d2Phi) * wr * wl + f.eta * f.eta;
  return hr2 * wr / r.d2Phi - hl2 * wl / l.d2Phi;
}

}  // namespace detail

ReducedSymbol reduced_symbol(const SideState& s, const PressureLaw& law, Side side,
                             const Frequency& f) {
  if (!f.valid()) throw DomainError("reduced_symbol: zero frequency");
  const SideFreqData d = side_freq(s, law, f);
  const Real lam = f.sigma_norm();
  if (std::abs(d.k) < kPoleTol * lam)
    throw PoleSingularity("reduced_symbol: velocity factor tau + i v eta vanished",
                          "velocity");
  if (std::abs(d.q) < kPoleTol * lam * lam)
    throw PoleSingularity(
        "reduced_symbol: elastic factor (tau + i v eta)^2 + F^2 eta^2 vanished", "elastic");

  const Real eta2 = f.eta * f.eta;
  const Real h3 = d.h * d.h * d.h;
  ReducedSymbol rs;
  rs.side = side;
  rs.mu = -d.a2 * d.k / (d.c * d.h) - d.a2 * d.Fsq * eta2 / (2.0 * d.h * d.c * d.k) -
          d.a2 * d.c * d.k * eta2 / (2.0 * h3 * d.q);
  rs.m = -d.a2 * d.Fsq * eta2 / (2.0 * d.h * d.c * d.k) +
         d.a2 * d.c * d.k * eta2 / (2.0 * h3 * d.q);
  rs.varpi = d.varpi;
  rs.A2x2 << rs.mu, -rs.m, rs.m, -rs.mu;
  rs.A2x2 += Complex(0, rs.varpi) * Mat2c::Identity();
  return rs;
}

ModeData mode_data(const SideState& s, const PressureLaw& law, Side side, const Frequency& f) {
  if (!f.valid()) throw DomainError("mode_data: zero frequency");
  const SideFreqData d = side_freq(s, law, f);
  const Real eta2 = f.eta * f.eta;
  const Real h3 = d.h * d.h * d.h;

  ModeData md;
  md.side = side;
  md.varpi = d.varpi;
  md.alpha = d.k * d.q;
  // Pole-cancelled products alpha*mu and alpha*m (polynomials in k, q).
  md.alpha_mu = -d.a2 * d.k * d.k * d.q / (d.c * d.h) -
                d.a2 * d.Fsq * eta2 * d.q / (2.0 * d.h * d.c) -
                d.a2 * d.c * eta2 * d.k * d.k / (2.0 * h3);
  md.alpha_m = -d.a2 * d.Fsq * eta2 * d.q / (2.0 * d.h * d.c) +
               d.a2 * d.c * eta2 * d.k * d.k / (2.0 * h3);

  const Complex w2 = detail::omega_squared(s, law, f);
  md.omega = detail::omega_branch(w2, f, s.v);
  const Real lam = f.sigma_norm();
  if (std::abs(md.omega) < kGlancingTol * lam)
    throw GlancingDegeneracy("mode_data: omega vanishes (glancing frequency)");
  md.decay_rate = md.omega.real();

  const Complex aw = md.alpha * md.omega;
  const Vec2c fam1{-(md.alpha_mu + aw), -md.alpha_m};
  const Vec2c fam2{md.alpha_m, md.alpha_mu - aw};
  const Real scale = std::pow(lam, 3);
  if (fam1.norm() < 1e-12 * scale && fam2.norm() < 1e-12 * scale)
    throw GlancingDegeneracy("mode_data: both eigenvector families degenerate");
  if (fam1.squaredNorm() >= fam2.squaredNorm()) {
    md.E = fam1;
    md.family = 1;
  } else {
    md.E = fam2;
    md.family = 2;
  }
  md.E_canonical = (side == Side::Right) ? fam1 : fam2;

  // Raw mu, m where the pole factors allow it.
  if (std::abs(md.alpha) > kPoleTol * lam * lam * lam) {
    md.mu = md.alpha_mu / md.alpha;
    md.m = md.alpha_m / md.alpha;
  } else {
    md.mu = md.m = Complex(std::nan(""), std::nan(""));
  }
  return md;
}

namespace {

Mat2c beta_pair_det_input(const BackgroundPoint& bp, const Frequency& f, const Vec2c& Er,
                          const Vec2c& El) {
  const BoundarySymbols bs = boundary_symbols(bp, f);
  Mat2c m;
  m.col(0) = bs.beta.block<2, 2>(0, 0) * Er;
  m.col(1) = bs.beta.block<2, 2>(0, 2) * El;
  return m;
}

}  // namespace

Complex lopatinskii_direct(const BackgroundPoint& bp, const Frequency& f) {
  if (!bp.on_boundary()) throw DomainError("lopatinskii_direct: boundary point required");
  const ModeData mr = mode_data(bp.right, bp.pressure, Side::Right, f);
  const ModeData ml = mode_data(bp.left, bp.pressure, Side::Left, f);
  return beta_pair_det_input(bp, f, mr.E_canonical, ml.E_canonical).determinant();
}

Real lopatinskii_direct_normalized(const BackgroundPoint& bp, const Frequency& f) {
  if (!bp.on_boundary()) throw DomainError("lopatinskii_direct: boundary point required");
  const ModeData mr = mode_data(bp.right, bp.pressure, Side::Right, f);
  const ModeData ml = mode_data(bp.left, bp.pressure, Side::Left, f);
  const Real nr = mr.E_canonical.norm();
  const Real nl = ml.E_canonical.norm();
  if (nr == 0 || nl == 0) return 0;
  return std::abs(beta_pair_det_input(bp, f, mr.E_canonical, ml.E_canonical).determinant()) /
         (nr * nl);
}

LopatinskiiFactors lopatinskii_factored(const BackgroundPoint& bp, const Frequency& f) {
  if (!bp.on_boundary()) throw DomainError("lopatinskii_factored: boundary point required");
  const SideState& r = bp.right;
  const SideState& l = bp.left;
  if (std::abs(r.rho - l.rho) > 1e-9 * std::max(r.rho, l.rho))
    throw DomainError("lopatinskii_factored: density trace must be continuous (c^r = c^l)");

  const Real c = sound_speed(bp.pressure, r.rho);
  const Real rho = r.rho;
  const Real a1 = r.d1_hat();
  const Real a2r = r.d2Phi;
  const Real a2l = l.d2Phi;
  const SideFreqData dr = side_freq(r, bp.pressure, f);
  const SideFreqData dl = side_freq(l, bp.pressure, f);
  const Complex wr = detail::omega_branch(detail::omega_squared(r, bp.pressure, f), f, r.v);
  const Complex wl = detail::omega_branch(detail::omega_squared(l, bp.pressure, f), f, l.v);

  LopatinskiiFactors lf;
  lf.factors[0] = std::pow(c, 4) * a1 * a1 / rho;
  lf.factors[1] = dr.k * dl.k;
  lf.factors[2] = std::pow(a1, 4) / (a2r * a2l) * wr * wl + f.eta * f.eta;
  lf.factors[3] = wr / a2r - wl / a2l;
  lf.factors[4] = a2r / (a1 * c) * dr.q - dr.k * wr;
  lf.factors[5] = a2l / (a1 * c) * dl.q + dl.k * wl;
  lf.value = lf.factors[0] * lf.factors[1] * lf.factors[2] * lf.factors[3] * lf.factors[4] *
             lf.factors[5];
  return lf;
}

namespace {

struct ScanRoot {
  Real speed;
  Real residual;
};

// Golden-section minimization of |g| on [a, b]; assumes a simple minimum.
Real refine_min(const std::function<Complex(Real)>& g, Real a, Real b, Real tol) {
  const Real gr = (std::sqrt(5.0) - 1.0) / 2.0;
  Real c = b - gr * (b - a);
  Real d = a + gr * (b - a);
  Real fc = std::abs(g(c)), fd = std::abs(g(d));
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = std::abs(g(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = std::abs(g(d));
    }
  }
  return 0.5 * (a + b);
}

std::vector<ScanRoot> scan_factor(const std::function<Complex(Real)>& g, Real S, int n,
                                  Real refine_tol, Real accept_rel) {
  std::vector<Real> mag(n);
  std::vector<Real> ss(n);
  Real scale = 0;
  for (int i = 0; i < n; ++i) {
    ss[i] = -S + 2.0 * S * i / (n - 1);
    mag[i] = std::abs(g(ss[i]));
    scale = std::max(scale, mag[i]);
  }
  std::vector<ScanRoot> out;
  for (int i = 1; i + 1 < n; ++i) {
    if (mag[i] <= mag[i - 1] && mag[i] <= mag[i + 1] && mag[i] < 0.5 * scale) {
      const Real s = refine_min(g, ss[i - 1], ss[i + 1], refine_tol);
      const Real res = std::abs(g(s));
      if (res <= accept_rel * scale) out.push_back({s, res});
    }
  }
  return out;
}

void merge_roots(std::vector<ScanRoot>& roots, Real merge_tol, std::vector<ElasticRoot>& dst,
                 int which) {
  std::sort(roots.begin(), roots.end(),
            [](const ScanRoot& a, const ScanRoot& b) { return a.speed < b.speed; });
  for (size_t i = 0; i < roots.size();) {
    size_t j = i + 1;
    while (j < roots.size() && roots[j].speed - roots[j - 1].speed < merge_tol) ++j;
    ElasticRoot er;
    er.speed = roots[i + (j - i) / 2].speed;
    er.factor = which;
    er.multiplicity = static_cast<int>(j - i);
    dst.push_back(er);
    i = j;
  }
}

RegimeClass midpoint_regime(const BackgroundPoint& bp) {
  ConstantBackground cb;
  cb.rho_bar = 0.5 * (bp.right.rho + bp.left.rho);
  cb.v_bar = 0.5 * (bp.right.v - bp.left.v);
  cb.F11_bar = 0.5 * (bp.right.F11 - bp.left.F11);
  cb.F12_bar = 0.5 * (bp.right.F12 - bp.left.F12);
  cb.pressure = bp.pressure;
  return classify_regime(cb);
}

}  // namespace

RootSet find_roots(const BackgroundPoint& bp, const RootScanOptions& opt) {
  RootSet rs;
  rs.velocity = {-bp.right.v, -bp.left.v};

  const Real cmax = std::max(sound_speed(bp.pressure, bp.right.rho),
                             sound_speed(bp.pressure, bp.left.rho));
  const Real vmax = std::max(std::abs(bp.right.v), std::abs(bp.left.v));
  const Real Fmax = std::sqrt(std::max(bp.right.Fsq(), bp.left.Fsq()));
  const Real S = 2.0 * (vmax + Fmax + cmax) + 1.0;

  std::vector<ElasticRoot> elastic;
  for (int which : {3, 4}) {
    auto g = [&](Real s) { return detail::root_factor(which, bp, s); };
    auto found = scan_factor(g, S, opt.scan_points, opt.refine_tol, opt.accept_rel);
    merge_roots(found, opt.merge_tol, elastic, which);
  }

  // Label: V1 <= V2 from the acoustic bracket, V3 from the sonic difference.
  int f3 = 0;
  for (auto& er : elastic)
    if (er.factor == 3) er.vk = ++f3;
  for (auto& er : elastic)
    if (er.factor == 4) er.vk = 3;
  rs.elastic = std::move(elastic);

  const RegimeClass rc = midpoint_regime(bp);
  int n3 = 0, n4 = 0;
  for (const auto& er : rs.elastic) (er.factor == 3 ? n3 : n4) += 1;
  std::ostringstream note;
  if (rc.regime == Regime::SupersonicStable && (n3 != 2 || n4 != 1)) {
    rs.count_anomaly = true;
    note << "supersonic regime expects 2+1 elastic roots, found " << n3 << "+" << n4;
  } else if ((rc.regime == Regime::SubsonicStable || rc.regime == Regime::Excluded) &&
             (n3 != 2 || n4 != 0)) {
    rs.count_anomaly = true;
    note << "subsonic regime expects 2+0 elastic roots, found " << n3 << "+" << n4;
  }
  rs.anomaly_note = note.str();
  return rs;
}

RootSet find_roots(const ConstantBackground& cb, const RootScanOptions& opt) {
  return find_roots(make_constant_background(cb), opt);
}

WeightSigma sigma_weight(const BackgroundPoint& bp, const Frequency& f) {
  const RegimeClass rc = midpoint_regime(bp);
  if (rc.regime == Regime::OutsideTheorem)
    throw UnsupportedRegime("sigma_weight: background outside the classified regimes");

  WeightSigma ws;
  ws.speeds = {-bp.right.v, -bp.left.v};
  const RootSet rs = find_roots(bp);
  for (const auto& er : rs.elastic) ws.speeds.push_back(er.speed);

  const Real lam = f.lambda();
  const Real dh = f.delta / lam;
  const Real eh = f.eta / lam;
  ws.value = lam;
  for (Real s : ws.speeds) {
    const Complex factor(dh - s * eh, 0);
    ws.factors.push_back(factor);
    ws.value *= factor;
  }
  return ws;
}

const char* to_string(FreqSet c) {
  switch (c) {
    case FreqSet::PoleVelocity: return "PoleVelocity";
    case FreqSet::PoleElastic: return "PoleElastic";
    case FreqSet::RootElastic: return "RootElastic";
    case FreqSet::OmegaZero: return "OmegaZero";
    case FreqSet::Regular: return "Regular";
  }
  return "?";
}

namespace {

// Chordal distance on the hemisphere from p to the point pair of speed s.
Real speed_distance(const Frequency& p, Real s) {
  const Real r = 1.0 / std::sqrt(1.0 + s * s);
  const Real q1[3] = {0, s * r, r};
  Real dplus = 0, dminus = 0;
  const Real pv[3] = {p.gamma, p.delta, p.eta};
  for (int i = 0; i < 3; ++i) {
    dplus += (pv[i] - q1[i]) * (pv[i] - q1[i]);
    dminus += (pv[i] + q1[i]) * (pv[i] + q1[i]);
  }
  return std::sqrt(std::min(dplus, dminus));
}

Real speed_pair_distance(Real s1, Real s2) {
  const Real r1 = 1.0 / std::sqrt(1.0 + s1 * s1);
  const Real r2 = 1.0 / std::sqrt(1.0 + s2 * s2);
  const Real a[3] = {0, s1 * r1, r1};
  const Real b[3] = {0, s2 * r2, r2};
  Real dp = 0, dm = 0;
  for (int i = 0; i < 3; ++i) {
    dp += (a[i] - b[i]) * (a[i] - b[i]);
    dm += (a[i] + b[i]) * (a[i] + b[i]);
  }
  return std::sqrt(std::min(dp, dm));
}

std::vector<CurveInfo> curve_list(const BackgroundPoint& bp, const RootSet& rs) {
  std::vector<CurveInfo> cs;
  auto add = [&](FreqSet fam, Side side, int detail, Real speed, std::string label) {
    cs.push_back({fam, side, detail, speed, std::move(label)});
  };
  add(FreqSet::PoleVelocity, Side::Right, 0, -bp.right.v, "pole_v_r");
  add(FreqSet::PoleVelocity, Side::Left, 0, -bp.left.v, "pole_v_l");
  const Real fr = std::sqrt(bp.right.Fsq());
  const Real fl = std::sqrt(bp.left.Fsq());
  add(FreqSet::PoleElastic, Side::Right, +1, -(bp.right.v + fr), "pole_e_r+");
  add(FreqSet::PoleElastic, Side::Right, -1, -(bp.right.v - fr), "pole_e_r-");
  add(FreqSet::PoleElastic, Side::Left, +1, -(bp.left.v + fl), "pole_e_l+");
  add(FreqSet::PoleElastic, Side::Left, -1, -(bp.left.v - fl), "pole_e_l-");
  // The velocity factors of the weight are the same curves as the velocity
  // poles; they are listed so the identity can be reported.
  add(FreqSet::RootElastic, Side::Right, 0, -bp.right.v, "root_v_r");
  add(FreqSet::RootElastic, Side::Left, 0, -bp.left.v, "root_v_l");
  for (const auto& er : rs.elastic)
    add(FreqSet::RootElastic, Side::Right, er.vk, er.speed, "root_V" + std::to_string(er.vk));
  const auto gr = detail::glancing_speeds(bp.right, bp.pressure);
  const auto gl = detail::glancing_speeds(bp.left, bp.pressure);
  add(FreqSet::OmegaZero, Side::Right, -1, gr[0], "omega_r-");
  add(FreqSet::OmegaZero, Side::Right, +1, gr[1], "omega_r+");
  add(FreqSet::OmegaZero, Side::Left, -1, gl[0], "omega_l-");
  add(FreqSet::OmegaZero, Side::Left, +1, gl[1], "omega_l+");
  return cs;
}

bool curves_identical(const CurveInfo& a, const CurveInfo& b) {
  // Upsilon_p^(1) and Upsilon_r^(1) are the same curves by definition.
  auto is_vel = [](const CurveInfo& ci) {
    return (ci.family == FreqSet::PoleVelocity) ||
           (ci.family == FreqSet::RootElastic && ci.detail == 0);
  };
  return is_vel(a) && is_vel(b) && a.side == b.side;
}

}  // namespace

FrequencyClass classify_frequency(const BackgroundPoint& bp, const Frequency& f, Real tol) {
  return classify_frequency(bp, find_roots(bp), f, tol);
}

FrequencyClass classify_frequency(const BackgroundPoint& bp, const RootSet& rs,
                                  const Frequency& f, Real tol) {
  const Frequency p = f.normalized();
  const auto curves = curve_list(bp, rs);

  FrequencyClass fc;
  fc.dist_pole_v = fc.dist_pole_e = fc.dist_root = fc.dist_omega =
      std::numeric_limits<Real>::infinity();
  const CurveInfo* best = nullptr;
  Real best_d = std::numeric_limits<Real>::infinity();
  for (const auto& ci : curves) {
    const Real d = speed_distance(p, ci.speed);
    Real* slot = nullptr;
    switch (ci.family) {
      case FreqSet::PoleVelocity: slot = &fc.dist_pole_v; break;
      case FreqSet::PoleElastic: slot = &fc.dist_pole_e; break;
      case FreqSet::RootElastic: slot = &fc.dist_root; break;
      case FreqSet::OmegaZero: slot = &fc.dist_omega; break;
      default: break;
    }
    if (slot) *slot = std::min(*slot, d);
    // Velocity poles win ties against their identical root curves.
    if (d < best_d - 1e-15 ||
        (best && std::abs(d - best_d) <= 1e-15 && ci.family == FreqSet::PoleVelocity)) {
      best_d = d;
      best = &ci;
    }
  }
  if (best && best_d <= tol) {
    fc.cls = best->family;
    fc.side = best->side;
    fc.detail = best->detail;
    fc.distance = best_d;
  } else {
    fc.cls = FreqSet::Regular;
    fc.distance = best_d;
  }
  return fc;
}

Real SeparationMatrix::family_distance(FreqSet a, FreqSet b) const {
  Real best = std::numeric_limits<Real>::infinity();
  for (const auto& pr : pairs) {
    if (pr.identical) continue;
    const CurveInfo *ca = nullptr, *cb = nullptr;
    for (const auto& ci : curves) {
      if (ci.label == pr.a) ca = &ci;
      if (ci.label == pr.b) cb = &ci;
    }
    if (!ca || !cb) continue;
    if ((ca->family == a && cb->family == b) || (ca->family == b && cb->family == a))
      best = std::min(best, pr.distance);
  }
  return best;
}

SeparationMatrix curve_separation(const BackgroundPoint& bp) {
  SeparationMatrix sm;
  const RootSet rs = find_roots(bp);
  sm.curves = curve_list(bp, rs);
  sm.min_nonidentical = std::numeric_limits<Real>::infinity();
  for (size_t i = 0; i < sm.curves.size(); ++i)
    for (size_t j = i + 1; j < sm.curves.size(); ++j) {
      CurvePairSeparation cp;
      cp.a = sm.curves[i].label;
      cp.b = sm.curves[j].label;
      cp.identical = curves_identical(sm.curves[i], sm.curves[j]);
      cp.distance = speed_pair_distance(sm.curves[i].speed, sm.curves[j].speed);
      if (cp.identical)
        sm.identical_notes.push_back(cp.a + " = " + cp.b);
      else if (sm.curves[i].family != sm.curves[j].family)
        sm.min_nonidentical = std::min(sm.min_nonidentical, cp.distance);
      sm.pairs.push_back(std::move(cp));
    }
  return sm;
}

SeparationMatrix curve_separation(const ConstantBackground& cb) {
  return curve_separation(make_constant_background(cb));
}

CurveBundle trace_curves(const ConstantBackground& cb, const PerturbationSpec& pert,
                         const std::vector<Real>& x2_samples, Real t, Real x1, Real kappa0) {
  CurveBundle bundle;
  bundle.x2 = x2_samples;

  const BackgroundPoint bp0 = make_perturbed_background(cb, pert, {t, x1, 0}, kappa0);
  const RootSet rs0 = find_roots(bp0);
  bundle.curves = curve_list(bp0, rs0);
  bundle.speeds.assign(bundle.curves.size(), {});

  const RegimeClass rc0 = midpoint_regime(bp0);
  for (Real x2 : x2_samples) {
    const BackgroundPoint bp = make_perturbed_background(cb, pert, {t, x1, x2}, kappa0);
    const RootSet rs = find_roots(bp);
    const auto cs = curve_list(bp, rs);
    const RegimeClass rc = midpoint_regime(bp);
    if (rc.regime != rc0.regime) {
      std::ostringstream os;
      os << "regime changed along x2 at x2=" << x2 << ": " << rc0.describe() << " -> "
         << rc.describe();
      bundle.anomalies.push_back(os.str());
    }
    for (size_t c = 0; c < bundle.curves.size(); ++c) {
      // Match by label; elastic roots are tracked by their Vk index.
      Real val = std::numeric_limits<Real>::quiet_NaN();
      for (const auto& ci : cs)
        if (ci.label == bundle.curves[c].label) val = ci.speed;
      if (std::isnan(val)) {
        bundle.anomalies.push_back("curve " + bundle.curves[c].label +
                                   " disappeared at x2=" + std::to_string(x2));
      }
      bundle.speeds[c].push_back(val);
    }
  }
  return bundle;
}

}  // namespace evst
