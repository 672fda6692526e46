#include "evst/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>

#include "evst/errors.hpp"
#include "evst/svg.hpp"
#include "evst/triangular.hpp"

namespace evst {

namespace {

Real scan_halfwidth(const BackgroundPoint& bp) {
  const Real cmax = std::max(sound_speed(bp.pressure, bp.right.rho),
                             sound_speed(bp.pressure, bp.left.rho));
  const Real vmax = std::max(std::abs(bp.right.v), std::abs(bp.left.v));
  const Real Fmax = std::sqrt(std::max(bp.right.Fsq(), bp.left.Fsq()));
  return 2.0 * (vmax + Fmax + cmax) + 1.0;
}

std::string fmt(Real x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

DetScanResult det_scan(const BackgroundPoint& bp, int grid, Real gamma, Real class_tol) {
  DetScanResult res;
  if (grid <= 0) return res;
  const RootSet roots = find_roots(bp);
  const Real S = scan_halfwidth(bp);
  res.rows.reserve(grid);
  for (int i = 0; i < grid; ++i) {
    const Real s = (grid == 1) ? 0.0 : -S + 2.0 * S * i / (grid - 1);
    const Frequency f = Frequency::from_speed(s, gamma);
    DetScanRow row;
    row.gamma = f.gamma;
    row.delta = f.delta;
    row.eta = f.eta;
    try {
      row.det = lopatinskii_direct(bp, f);
      row.abs_det_normalized = lopatinskii_direct_normalized(bp, f);
    } catch (const GlancingDegeneracy&) {
      row.det = Complex(std::nan(""), std::nan(""));
      row.abs_det_normalized = std::nan("");
    }
    const FrequencyClass fc = classify_frequency(bp, roots, f, class_tol);
    row.cls = to_string(fc.cls);
    row.dist_pole_v = fc.dist_pole_v;
    row.dist_pole_e = fc.dist_pole_e;
    row.dist_root = fc.dist_root;
    row.dist_omega = fc.dist_omega;
    res.rows.push_back(std::move(row));
  }
  return res;
}

void write_det_scan_csv(const DetScanResult& res, std::ostream& os) {
  os << "delta,eta,gamma,re_det,im_det,abs_det_normalized,class,"
        "dist_pole_v,dist_pole_e,dist_root,dist_omega\n";
  for (const auto& r : res.rows) {
    os << fmt(r.delta) << ',' << fmt(r.eta) << ',' << fmt(r.gamma) << ',' << fmt(r.det.real())
       << ',' << fmt(r.det.imag()) << ',' << fmt(r.abs_det_normalized) << ',' << r.cls << ','
       << fmt(r.dist_pole_v) << ',' << fmt(r.dist_pole_e) << ',' << fmt(r.dist_root) << ','
       << fmt(r.dist_omega) << '\n';
  }
}

RegionMapResult region_map(Real F_max, Real v_max, int nF, int nv, const PressureLaw& law,
                           Real rho_bar, Real tol) {
  if (nF <= 0 || nv <= 0) throw DomainError("region_map: resolution must be positive");
  RegionMapResult rm;
  rm.rho_bar = rho_bar;
  rm.law = law;
  const Real c = sound_speed(law, rho_bar);

  for (int i = 0; i < nF; ++i) rm.F_axis.push_back(F_max * i / std::max(1, nF - 1));
  for (int j = 0; j < nv; ++j) rm.v_axis.push_back(v_max * j / std::max(1, nv - 1));

  rm.cells.resize(nF);
  for (int i = 0; i < nF; ++i) {
    rm.cells[i].resize(nv);
    for (int j = 0; j < nv; ++j) {
      ConstantBackground cb{rho_bar, rm.v_axis[j], rm.F_axis[i], 0.0, law};
      rm.cells[i][j] = classify_regime(cb, tol);
    }
  }

  const int curve_pts = 256;
  for (int i = 0; i < curve_pts; ++i) {
    const Real F = F_max * i / (curve_pts - 1);
    const Real Fc = F * F + c * c;
    const Real vals[5] = {std::sqrt(F * F / 4.0),
                          (std::sqrt(Fc) - F) / 2.0,
                          std::sqrt(Fc) / 2.0,
                          std::sqrt(F * F * (2.0 * c * c + F * F) / (4.0 * Fc)),
                          std::sqrt(2.0 * c * c + F * F)};
    for (int k = 0; k < 5; ++k)
      if (vals[k] <= v_max) rm.curves[k].push_back({F, vals[k]});
  }
  return rm;
}

void write_region_map_csv(const RegionMapResult& rm, std::ostream& os) {
  os << "F_bar,v_bar,regime,excluded_index\n";
  for (size_t i = 0; i < rm.F_axis.size(); ++i)
    for (size_t j = 0; j < rm.v_axis.size(); ++j) {
      const RegimeClass& rc = rm.cells[i][j];
      os << fmt(rm.F_axis[i]) << ',' << fmt(rm.v_axis[j]) << ',' << to_string(rc.regime) << ','
         << (rc.regime == Regime::Excluded ? rc.excluded_index : 0) << '\n';
    }
}

void write_region_map_svg(const RegionMapResult& rm, std::ostream& os) {
  const int W = 720, H = 560;
  const int ml = 70, mr = 180, mt = 30, mb = 60;
  const Real Fmax = rm.F_axis.empty() ? 1 : rm.F_axis.back();
  const Real vmax = rm.v_axis.empty() ? 1 : rm.v_axis.back();
  const Real pw = W - ml - mr, ph = H - mt - mb;
  auto X = [&](Real F) { return ml + (Fmax > 0 ? F / Fmax : 0) * pw; };
  auto Y = [&](Real v) { return mt + ph - (vmax > 0 ? v / vmax : 0) * ph; };

  SvgWriter svg(os, W, H);
  auto color = [](const RegimeClass& rc) -> const char* {
    switch (rc.regime) {
      case Regime::SupersonicStable: return "#4575b4";
      case Regime::SubsonicStable: return "#91cf60";
      case Regime::Excluded: return "#d73027";
      case Regime::OutsideTheorem: return "#eeeeee";
    }
    return "#000000";
  };

  const Real cw = pw / std::max<size_t>(1, rm.F_axis.size());
  const Real ch = ph / std::max<size_t>(1, rm.v_axis.size());
  for (size_t i = 0; i < rm.F_axis.size(); ++i)
    for (size_t j = 0; j < rm.v_axis.size(); ++j)
      svg.rect(X(rm.F_axis[i]) - cw / 2, Y(rm.v_axis[j]) - ch / 2, cw, ch,
               color(rm.cells[i][j]));

  const char* curve_colors[5] = {"#7b3294", "#c2a5cf", "#fdae61", "#a6611a", "#000000"};
  const char* curve_names[5] = {"exclusion 1", "exclusion 2", "exclusion 3", "exclusion 4",
                                "supersonic boundary"};
  for (int k = 0; k < 5; ++k) {
    std::vector<std::array<Real, 2>> pts;
    for (const auto& p : rm.curves[k]) pts.push_back({X(p[0]), Y(p[1])});
    svg.polyline(pts, curve_colors[k], k == 4 ? 2.5 : 1.5);
  }

  svg.line(ml, mt + ph, ml + pw, mt + ph, "#000000", 1);
  svg.line(ml, mt, ml, mt + ph, "#000000", 1);
  svg.text(ml + pw / 2 - 20, H - 20, "F_bar");
  svg.text(15, mt + ph / 2, "v_bar");
  svg.text(ml, H - 40, "0");
  svg.text(ml + pw - 10, H - 40, fmt(Fmax));
  svg.text(ml - 50, mt + 10, fmt(vmax));

  Real ly = mt + 10;
  const Real lx = ml + pw + 15;
  auto legend_entry = [&](const char* col, const std::string& name) {
    svg.rect(lx, ly, 14, 14, col);
    svg.text(lx + 20, ly + 12, name);
    ly += 22;
  };
  legend_entry("#4575b4", "SupersonicStable");
  legend_entry("#91cf60", "SubsonicStable");
  legend_entry("#d73027", "Excluded");
  legend_entry("#eeeeee", "OutsideTheorem");
  for (int k = 0; k < 5; ++k) legend_entry(curve_colors[k], curve_names[k]);
  svg.finish();
}

SeparationSummary separation_report(const ConstantBackground& cb, const PerturbationSpec& pert,
                                    int x2_samples, Real x2_max, Real collision_tol) {
  SeparationSummary out;
  const BackgroundPoint bp0 = pert.empty() ? make_constant_background(cb)
                                           : make_perturbed_background(cb, pert, {0, 0, 0});
  out.boundary = curve_separation(bp0);
  Real min_sep = out.boundary.min_nonidentical;

  for (const auto& pr : out.boundary.pairs)
    if (!pr.identical && pr.distance <= collision_tol)
      out.collisions.push_back(pr.a + " / " + pr.b);

  if (!pert.empty()) {
    for (int i = 0; i < x2_samples; ++i) {
      const Real x2 = x2_max * i / std::max(1, x2_samples - 1);
      const BackgroundPoint bp = make_perturbed_background(cb, pert, {0, 0, x2});
      const SeparationMatrix sm = curve_separation(bp);
      min_sep = std::min(min_sep, sm.min_nonidentical);
      for (const auto& pr : sm.pairs)
        if (!pr.identical && pr.distance <= collision_tol) {
          std::ostringstream os;
          os << pr.a << " / " << pr.b << " at x2=" << x2;
          out.collisions.push_back(os.str());
        }
    }
  }

  out.min_nonidentical_over_trace = min_sep;
  out.suggested_radius = 0.5 * min_sep;
  out.admissible = out.collisions.empty();
  if (!out.admissible) {
    std::ostringstream os;
    os << "separation_report: colliding non-identical curve pair: " << out.collisions.front();
    throw AdmissibilityViolation(os.str());
  }
  return out;
}

namespace {

Frequency near_speed(Real s, Real radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<Real> u(-1.0, 1.0);
  const Real r = 1.0 / std::sqrt(1.0 + s * s);
  Real p[3] = {0, s * r, r};
  p[0] = std::abs(u(rng)) * radius;
  p[1] += u(rng) * radius;
  p[2] += u(rng) * radius;
  const Real n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  return {p[0] / n, p[1] / n, p[2] / n};
}

Frequency random_sigma_point(std::mt19937_64& rng, Real gamma_min = 0.0) {
  std::normal_distribution<Real> g(0.0, 1.0);
  while (true) {
    Real p[3] = {std::abs(g(rng)), g(rng), g(rng)};
    const Real n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    if (n < 1e-6) continue;
    Frequency f{p[0] / n, p[1] / n, p[2] / n};
    if (f.gamma >= gamma_min) return f;
  }
}

}  // namespace

TriangularCheckReport triangular_check(const ConstantBackground& cb, int samples,
                                       std::uint64_t seed, Real rel_tol,
                                       Real neighborhood_radius) {
  TriangularCheckReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<Real> u01(0.0, 1.0);

  PerturbationSpec pert;
  pert.phi = {0.02, {0, 0, 0}, {1.0, 1.0, 1.0}};
  pert.rho = {0.03, {0.1, -0.1, 0.4}, {1.2, 1.0, 0.8}};
  pert.v_r = {0.02, {-0.2, 0.2, 0.5}, {1.0, 1.1, 0.9}};
  pert.F11_l = {0.02, {0.0, 0.3, 0.6}, {1.0, 0.9, 1.0}};

  rep.measured_c_lower_bound = std::numeric_limits<Real>::infinity();

  // Root speeds of the constant state serve as the Case-2 neighborhood
  // centers for all samples (perturbed roots stay nearby for small K).
  const RootSet base_roots = find_roots(cb);

  for (int i = 0; i < samples; ++i) {
    // Alternate between the constant state and perturbed interior points.
    BackgroundPoint bp;
    if (i % 3 == 0) {
      const Real t = u01(rng) - 0.5, x1 = u01(rng) - 0.5, x2 = u01(rng);
      bp = make_perturbed_background(cb, pert, {t, x1, x2});
    } else {
      bp = make_constant_background(cb);
    }
    const Side side = (i % 2 == 0) ? Side::Right : Side::Left;
    const SideState& st = bp.side(side);

    // Cycle through the neighborhood types and regular points.
    Frequency f;
    bool velocity_pole = false;
    switch (i % 4) {
      case 0:
        f = near_speed(-st.v, neighborhood_radius, rng);
        velocity_pole = true;
        break;
      case 1: {
        const Real fs = std::sqrt(st.Fsq());
        f = near_speed(-(st.v + (i % 8 < 4 ? fs : -fs)), neighborhood_radius, rng);
        break;
      }
      case 2: {
        if (!base_roots.elastic.empty())
          f = near_speed(base_roots.elastic[i % base_roots.elastic.size()].speed,
                         neighborhood_radius, rng);
        else
          f = random_sigma_point(rng);
        break;
      }
      default: f = random_sigma_point(rng); break;
    }

    try {
      const TriangularizationData td = build_Atilde(st, bp.pressure, side, f);
      const StructureReport sr = check_structure(td, rel_tol);
      if (sr.max_zero_residual > rep.max_pattern_residual) {
        rep.max_pattern_residual = sr.max_zero_residual;
        std::ostringstream os;
        os << "side=" << to_string(side) << " gamma=" << f.gamma << " delta=" << f.delta
           << " eta=" << f.eta;
        rep.worst_point = os.str();
      }
      rep.max_entry_residual = std::max(rep.max_entry_residual, sr.max_entry_residual);
      if (!sr.ok) ++rep.failures;
      if (velocity_pole)
        rep.measured_c_lower_bound =
            std::min(rep.measured_c_lower_bound, -td.mode.omega.real() / f.lambda());
      ++rep.samples;
    } catch (const GlancingDegeneracy&) {
      // Neighborhoods exclude the glancing set; a random draw may still land
      // near it, which the construction legitimately refuses.
    } catch (const NearGlancing&) {
    }
  }
  return rep;
}

OracleCheckReport oracle_check(const ConstantBackground& cb, int angle_samples, int grid,
                               Real gamma_slice, std::uint64_t seed) {
  OracleCheckReport rep;
  std::mt19937_64 rng(seed);
  const BackgroundPoint bp = make_constant_background(cb);

  for (int i = 0; i < angle_samples; ++i) {
    const Frequency f = random_sigma_point(rng, 0.1);
    for (Side side : {Side::Right, Side::Left}) {
      const SideState& st = bp.side(side);
      const auto om = oracle_stable_subspace(st, bp.pressure, side, f);
      if (!om) {
        ++rep.abstentions;
        continue;
      }
      const ModeData md = mode_data(st, bp.pressure, side, f);
      const Vec2c e = md.E.normalized();
      const Real cosang = std::min(Real(1), std::abs(e.dot(om->direction)));
      rep.max_angle = std::max(rep.max_angle, std::acos(cosang));
      ++rep.angle_samples;
    }
  }

  // Paired minima of the two determinant evaluations on the gamma slice.
  const Real S = scan_halfwidth(bp);
  auto alg = [&](Real s) {
    return lopatinskii_direct_normalized(bp, Frequency::from_speed(s, gamma_slice));
  };
  auto orc = [&](Real s) {
    const auto d = oracle_boundary_det(cb, Frequency::from_speed(s, gamma_slice));
    return d ? std::abs(*d) : std::numeric_limits<Real>::quiet_NaN();
  };

  auto golden = [](auto&& fn, Real a, Real b) {
    const Real gr = (std::sqrt(5.0) - 1.0) / 2.0;
    Real c = b - gr * (b - a), d = a + gr * (b - a);
    Real fc = fn(c), fd = fn(d);
    for (int it = 0; it < 80 && b - a > 1e-12; ++it) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - gr * (b - a);
        fc = fn(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + gr * (b - a);
        fd = fn(d);
      }
    }
    return 0.5 * (a + b);
  };

  std::vector<Real> salg(grid), valg(grid), vorc(grid);
  for (int i = 0; i < grid; ++i) {
    salg[i] = -S + 2.0 * S * i / (grid - 1);
    valg[i] = alg(salg[i]);
    vorc[i] = orc(salg[i]);
  }
  rep.max_zero_mismatch = 0;
  bool all_matched = true;
  for (int i = 1; i + 1 < grid; ++i) {
    if (!(valg[i] <= valg[i - 1] && valg[i] <= valg[i + 1])) continue;
    if (!(valg[i] < 0.5 * *std::max_element(valg.begin(), valg.end()))) continue;
    const Real sa = golden(alg, salg[i - 1], salg[i + 1]);
    // Oracle minimum must exist in the same bracket.
    if (std::isnan(vorc[i])) {
      all_matched = false;
      continue;
    }
    const Real so = golden(orc, salg[i - 1], salg[i + 1]);
    rep.max_zero_mismatch = std::max(rep.max_zero_mismatch, std::abs(sa - so));
    ++rep.matched_minima;
  }
  rep.pass = all_matched && rep.max_angle < 1e-7 && rep.max_zero_mismatch < 1e-5;
  return rep;
}

}  // namespace evst
