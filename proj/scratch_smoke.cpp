// Throwaway smoke harness for the core math (deleted before shipping).
#include <cstdio>
#include <iostream>
#include <random>

#include "evst/background.hpp"
#include "evst/modal.hpp"
#include "evst/oracle.hpp"
#include "evst/symbols.hpp"
#include "evst/triangular.hpp"

using namespace evst;

int main() {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<Real> u(-1.0, 1.0);

  auto rand_side = [&](Side side) {
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
  };
  PressureLaw law;  // rho^2/2

  // 1) diagonalization identity + Tinv correctness
  Real worst_diag = 0, worst_inv = 0, worst_rank = 0;
  for (int i = 0; i < 200; ++i) {
    Side side = (i % 2 == 0) ? Side::Right : Side::Left;
    SideState s = rand_side(side);
    auto ts = assemble_T_A0(s, law, side);
    worst_inv = std::max(worst_inv, (ts.Tinv * ts.T - Mat7::Identity()).cwiseAbs().maxCoeff());
    auto a2t = assemble_A2tilde(s, law, side);
    Mat7 d = ts.A0 * ts.Tinv * a2t.m * ts.T - i2_matrix();
    worst_diag = std::max(worst_diag, d.cwiseAbs().maxCoeff());
    Eigen::JacobiSVD<Eigen::Matrix<double, 7, 7>> svd(a2t.m.real());
    worst_rank = std::max(worst_rank, svd.singularValues()(2));  // third sv should be ~0
  }
  printf("T inverse residual:        %.3e\n", worst_inv);
  printf("A0 Tinv A2t T - I2:        %.3e\n", worst_diag);
  printf("third singular value:      %.3e\n", worst_rank);

  // 2) Pi b = 0; beta consistency with Pi*M
  auto rand_bp = [&]() {
    BackgroundPoint bp;
    bp.pressure = law;
    bp.location = {u(rng), u(rng), 0};
    Real d1 = 0.8 * u(rng), dt = u(rng), rho = 0.5 + 2.0 * std::abs(u(rng));
    auto mk = [&](Side side) {
      SideState s = rand_side(side);
      s.rho = rho;
      s.d1Phi = d1;
      s.dtPhi = dt;
      s.u = s.dtPhi + s.v * s.d1Phi;
      s.F21 = s.F11 * s.d1Phi;
      s.F22 = s.F12 * s.d1Phi;
      return s;
    };
    bp.right = mk(Side::Right);
    bp.left = mk(Side::Left);
    return bp;
  };
  Real worst_pib = 0, worst_beta = 0;
  for (int i = 0; i < 200; ++i) {
    BackgroundPoint bp = rand_bp();
    Frequency f{std::abs(u(rng)), u(rng), u(rng)};
    if (!f.valid()) continue;
    auto bs = boundary_symbols(bp, f);
    worst_pib = std::max(worst_pib, (bs.Pi * bs.b).cwiseAbs().maxCoeff());
    auto pim = (bs.Pi * bs.Mmat.block<7, 8>(0, 0)).eval();
    // wait: Pi is 6x7, Mmat is 7x8 -> 6x8. beta = rows 0,1 cols 0,1,4,5.
    Eigen::Matrix<Complex, 2, 4> beta2;
    beta2 << pim(0, 0), pim(0, 1), pim(0, 4), pim(0, 5), pim(1, 0), pim(1, 1), pim(1, 4),
        pim(1, 5);
    worst_beta = std::max(worst_beta, (beta2 - bs.beta).cwiseAbs().maxCoeff());
  }
  printf("max |Pi b|:                %.3e\n", worst_pib);
  printf("beta vs rows of Pi*M:      %.3e\n", worst_beta);

  // 3) algebraic block of principal symbol vs closed form (r side)
  {
    Real worst = 0;
    for (int i = 0; i < 100; ++i) {
      SideState s = rand_side(Side::Right);
      Frequency f{std::abs(u(rng)), u(rng), u(rng)};
      if (f.sigma_norm() < 0.1) continue;
      Mat7 A = principal_symbol(s, law, Side::Right, f).m;
      const Real c = sound_speed(law, s.rho);
      const Real h = s.d1_hat();
      Complex k = f.tau() + Complex(0, s.v * f.eta);
      Complex ie(0, f.eta);
      Eigen::Matrix<Complex, 5, 7> expect = Eigen::Matrix<Complex, 5, 7>::Zero();
      expect.row(0) << k, ie * c * c / (h * s.rho), ie * c * c / (h * s.rho), -ie * s.F11,
          0, -ie * s.F12, 0;
      expect.row(1) << -ie * s.F11, 0, 0, k, 0, 0, 0;
      expect.row(2) << 0, -ie * c * s.F11 / s.rho, ie * c * s.F11 / s.rho, 0, k, 0, 0;
      expect.row(3) << -ie * s.F12, 0, 0, 0, 0, k, 0;
      expect.row(4) << 0, -ie * c * s.F12 / s.rho, ie * c * s.F12 / s.rho, 0, 0, 0, k;
      int rows[5] = {0, 3, 4, 5, 6};
      for (int r = 0; r < 5; ++r)
        worst = std::max(worst, (A.row(rows[r]) - expect.row(r)).cwiseAbs().maxCoeff());
    }
    printf("algebraic block vs print:  %.3e\n", worst);
  }

  // 3b) rows 2,3 of A on algebraic columns vs the R0-system print (r side)
  {
    Real worst = 0;
    for (int i = 0; i < 100; ++i) {
      SideState s = rand_side(Side::Right);
      Frequency f{std::abs(u(rng)), u(rng), u(rng)};
      if (f.sigma_norm() < 0.1) continue;
      Mat7 A = principal_symbol(s, law, Side::Right, f).m;
      const Real c = sound_speed(law, s.rho);
      const Real h = s.d1_hat();
      Complex ie(0, f.eta);
      Complex d = ie * s.d2Phi * s.rho / (2.0 * c * h * h);
      Complex g11 = -ie * s.d2Phi * s.rho * s.F11 / (2.0 * c * c * h);
      Complex g12 = -ie * s.d2Phi * s.rho * s.F12 / (2.0 * c * c * h);
      // printed row2 on cols (1,4,5,6,7): (d, 0, g11, 0, g12); row3: (-d, 0, g11, 0, g12)
      Eigen::Matrix<Complex, 2, 5> expect;
      expect << d, 0, g11, 0, g12, -d, 0, g11, 0, g12;
      int cols[5] = {0, 3, 4, 5, 6};
      for (int cidx = 0; cidx < 5; ++cidx) {
        worst = std::max(worst, std::abs(A(1, cols[cidx]) - expect(0, cidx)));
        worst = std::max(worst, std::abs(A(2, cols[cidx]) - expect(1, cidx)));
      }
    }
    printf("rows 2,3 alg cols vs print:%.3e\n", worst);
  }

  // 4) oracle generator vs assembled reduced symbol
  {
    Real worst = 0;
    for (int i = 0; i < 200; ++i) {
      Side side = (i % 2 == 0) ? Side::Right : Side::Left;
      SideState s = rand_side(side);
      Frequency f{0.05 + std::abs(u(rng)), u(rng), u(rng)};
      try {
        auto rs = reduced_symbol(s, law, side, f);
        Mat2c G = oracle_reduced_generator(s, law, side, f);
        worst = std::max(worst, (G - rs.A2x2).cwiseAbs().maxCoeff() /
                                    std::max(1.0, rs.A2x2.cwiseAbs().maxCoeff()));
      } catch (const PoleSingularity&) {
      }
    }
    printf("oracle G vs A2x2 (rel):    %.3e   <-- sign convention check\n", worst);
  }

  // 5) flat-state worked example
  {
    ConstantBackground cb{1.0, 0.3, 1.0, 0.0, law};
    BackgroundPoint bp = make_constant_background(cb);
    Frequency f{1, 0, 0};
    auto rsym = reduced_symbol(bp.right, law, Side::Right, f);
    printf("flat r-state mu, m:        (%.6f, %.6f), (%.6f, %.6f)\n", rsym.mu.real(),
           rsym.mu.imag(), rsym.m.real(), rsym.m.imag());
    auto md = mode_data(bp.right, law, Side::Right, f);
    printf("omega = %.6f%+.6fi  decay_rate = %.6f  family=%d\n", md.omega.real(),
           md.omega.imag(), md.decay_rate, md.family);
    printf("E = (%.6f%+.6fi, %.6f%+.6fi)\n", md.E(0).real(), md.E(0).imag(), md.E(1).real(),
           md.E(1).imag());
    auto oo = oracle_stable_subspace(bp.right, law, Side::Right, f);
    if (oo)
      printf("oracle dir = (%.6f%+.6fi, %.6f%+.6fi) lambda=%.6f%+.6fi\n", oo->direction(0).real(),
             oo->direction(0).imag(), oo->direction(1).real(), oo->direction(1).imag(),
             oo->lambda.real(), oo->lambda.imag());
  }

  // 6) factored vs direct ratio at several regular points / backgrounds
  {
    for (auto [v, F] : {std::pair{3.0, 1.0}, std::pair{0.3, 1.0}, std::pair{0.25, 1.1}}) {
      ConstantBackground cb{1.0, v, F, 0.0, law};
      BackgroundPoint bp = make_constant_background(cb);
      Complex ratio0{0, 0};
      Real spread = 0;
      int n = 0;
      for (int i = 0; i < 50; ++i) {
        Frequency f{0.05 + 0.8 * std::abs(u(rng)), u(rng), u(rng)};
        f = f.normalized();
        try {
          Complex dir = lopatinskii_direct(bp, f);
          auto lf = lopatinskii_factored(bp, f);
          if (std::abs(dir) < 1e-12) continue;
          Complex ratio = lf.value / dir;
          if (n == 0)
            ratio0 = ratio;
          else
            spread = std::max(spread, std::abs(ratio - ratio0) / std::abs(ratio0));
          ++n;
        } catch (const GlancingDegeneracy&) {
        }
      }
      printf("bg v=%.2f F=%.2f: ratio = %.9f%+.9fi spread=%.3e (n=%d)\n", v, F, ratio0.real(),
             ratio0.imag(), spread, n);
    }
  }

  // 7) roots census
  {
    ConstantBackground sup{1.0, 3.0, 1.0, 0.0, law};
    auto rs = find_roots(sup);
    printf("supersonic roots: vel={%.3f,%.3f} elastic=[", rs.velocity[0], rs.velocity[1]);
    for (auto& er : rs.elastic) printf(" V%d=%.6f(f%d)", er.vk, er.speed, er.factor);
    printf(" ] anomaly=%d %s\n", rs.count_anomaly, rs.anomaly_note.c_str());
    ConstantBackground sub{1.0, 0.3, 1.0, 0.0, law};
    auto rs2 = find_roots(sub);
    printf("subsonic roots: elastic=[");
    for (auto& er : rs2.elastic) printf(" V%d=%.6f(f%d)", er.vk, er.speed, er.factor);
    printf(" ] anomaly=%d %s\n", rs2.count_anomaly, rs2.anomaly_note.c_str());
    for (auto& er : rs.elastic) {
      BackgroundPoint bp = make_constant_background(sup);
      Real nd = lopatinskii_direct_normalized(bp, Frequency::from_speed(er.speed, 0));
      printf("  |det|_norm at V%d: %.3e\n", er.vk, nd);
    }
  }

  // 8) triangularization smoke
  {
    ConstantBackground sup{1.0, 3.0, 1.0, 0.0, law};
    BackgroundPoint bp = make_constant_background(sup);
    int tested = 0, failed = 0;
    Real worst = 0, worst_entry = 0;
    std::string worst_msg;
    for (int i = 0; i < 400; ++i) {
      Side side = (i % 2 == 0) ? Side::Right : Side::Left;
      const SideState& st = bp.side(side);
      Frequency f{std::abs(u(rng)), u(rng), u(rng)};
      if (f.sigma_norm() < 0.2) continue;
      f = f.normalized();
      if (i % 4 == 0) f = Frequency::from_speed(-st.v, 0);  // exact velocity pole
      try {
        auto td = build_Atilde(st, law, side, f);
        auto sr = check_structure(td);
        worst = std::max(worst, sr.max_zero_residual);
        worst_entry = std::max(worst_entry, sr.max_entry_residual);
        if (!sr.ok) {
          ++failed;
          if (worst_msg.empty() && !sr.mismatches.empty()) worst_msg = sr.mismatches.front();
        }
        ++tested;
      } catch (const GlancingDegeneracy&) {
      } catch (const NearGlancing&) {
      } catch (const ConstructionError& e) {
        ++failed;
        if (worst_msg.empty()) worst_msg = e.what();
        ++tested;
      }
    }
    printf("triangular: %d tested %d failed; worst zero-res %.3e entry-res %.3e %s\n", tested,
           failed, worst, worst_entry, worst_msg.c_str());
  }
  return 0;
}
