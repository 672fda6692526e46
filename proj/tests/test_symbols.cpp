#include <doctest.h>

#include <random>

#include "evst/errors.hpp"
#include "evst/symbols.hpp"
#include "support.hpp"

using namespace evst;
using evst::test::random_boundary_point;
using evst::test::random_frequency;
using evst::test::random_side_state;

TEST_SUITE_BEGIN("symbols");

namespace {
const PressureLaw kLaw{};

SideState zero_velocity_unit_state() {
  SideState s;  // U = (1, 0, 0, 0, 0, 0, 0), flat front
  s.rho = 1;
  return s;
}
}  // namespace

TEST_CASE("A1 matches the printed pattern") {
  SUBCASE("rest state has only the acoustic couplings") {
    const Mat7 a = assemble_A1(zero_velocity_unit_state(), kLaw).m;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        if ((i == 0 && j == 1) || (i == 1 && j == 0))
          CHECK(a(i, j) == Complex(1, 0));
        else
          CHECK(a(i, j) == Complex(0, 0));
      }
  }
  SUBCASE("velocity and deformation entries") {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 20; ++n) {
      const SideState s = random_side_state(rng, Side::Right);
      const Mat7 a = assemble_A1(s, kLaw).m;
      CHECK(a(2, 2) == Complex(s.v, 0));
      CHECK(a(3, 1) == Complex(-s.F11, 0));
      CHECK(a(0, 1) == Complex(s.rho, 0));
      CHECK(a(1, 0).real() == doctest::Approx(kLaw.dp(s.rho) / s.rho));
    }
  }
  CHECK_THROWS_AS(assemble_A1(SideState{-1}, kLaw), DomainError);
}

TEST_CASE("A2 matches the printed pattern") {
  SUBCASE("rest state") {
    const Mat7 a = assemble_A2(zero_velocity_unit_state(), kLaw).m;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        if ((i == 0 && j == 2) || (i == 2 && j == 0))
          CHECK(a(i, j) == Complex(1, 0));
        else
          CHECK(a(i, j) == Complex(0, 0));
      }
  }
  SUBCASE("normal deformation entries") {
    std::mt19937_64 rng(8);
    for (int n = 0; n < 20; ++n) {
      const SideState s = random_side_state(rng, Side::Left);
      const Mat7 a = assemble_A2(s, kLaw).m;
      CHECK(a(1, 3) == Complex(-s.F21, 0));
      CHECK(a(2, 6) == Complex(-s.F22, 0));
      CHECK(a(0, 2) == Complex(s.rho, 0));
    }
  }
}

TEST_CASE("symmetrizer S makes S*A1 and S*A2 symmetric") {
  std::mt19937_64 rng(9);
  for (int n = 0; n < 100; ++n) {
    const Side side = (n % 2) ? Side::Left : Side::Right;
    const SideState s = random_side_state(rng, side);
    const Mat7 S = symmetrizer_S(s, kLaw);
    const Mat7 sa1 = S * assemble_A1(s, kLaw).m;
    const Mat7 sa2 = S * assemble_A2(s, kLaw).m;
    CHECK((sa1 - sa1.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((sa2 - sa2.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("boundary matrix A2tilde") {
  ConstantBackground cb{1.0, 0.7, 0.9, 0.2, kLaw};
  const BackgroundPoint bp = make_constant_background(cb);

  SUBCASE("flat states reduce to +-A2") {
    const Mat7 a2r = assemble_A2(bp.right, kLaw).m;
    const Mat7 t_r = assemble_A2tilde(bp.right, kLaw, Side::Right).m;
    CHECK((t_r - a2r).cwiseAbs().maxCoeff() == 0.0);
    const Mat7 a2l = assemble_A2(bp.left, kLaw).m;
    const Mat7 t_l = assemble_A2tilde(bp.left, kLaw, Side::Left).m;
    CHECK((t_l + a2l).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("constant rank 2 for admissible states") {
    std::mt19937_64 rng(10);
    for (int n = 0; n < 200; ++n) {
      const Side side = (n % 2) ? Side::Left : Side::Right;
      const SideState s = random_side_state(rng, side);
      const Mat7 m = assemble_A2tilde(s, kLaw, side).m;
      Eigen::JacobiSVD<Eigen::Matrix<Real, 7, 7>> svd(m.real());
      const auto& sv = svd.singularValues();
      CHECK(sv(0) > 1e-8);
      CHECK(sv(1) > 1e-8);
      for (int k = 2; k < 7; ++k) CHECK(sv(k) < 1e-10);
    }
  }

  SUBCASE("nondegeneracy guard") {
    SideState s = bp.right;
    s.d2Phi = 0.1;
    CHECK_THROWS_AS(assemble_A2tilde(s, kLaw, Side::Right, 0.5), NondegeneracyError);
  }
}

TEST_CASE("transformation and scaling matrices") {
  std::mt19937_64 rng(12);

  SUBCASE("printed entries at a flat state") {
    ConstantBackground cb{2.0, 0.5, 0.4, 0.1, PressureLaw{0.125, 2.0}};  // c(2) = sqrt(0.5)...
    const BackgroundPoint bp = make_constant_background(cb);
    const Real c = sound_speed(bp.pressure, 2.0);
    const TransformSet ts = assemble_T_A0(bp.right, bp.pressure, Side::Right);
    CHECK(ts.T(0, 1) == Complex(1, 0));  // <d1Phi> = 1
    CHECK(ts.T(0, 2) == Complex(1, 0));
    CHECK(ts.T(1, 1) == Complex(0, 0));  // -(c/rho) d1Phi with d1Phi = 0
    CHECK(ts.T(2, 1).real() == doctest::Approx(c / 2.0));
    CHECK(ts.T(2, 2).real() == doctest::Approx(-c / 2.0));
    CHECK(ts.A0(1, 1).real() == doctest::Approx(1.0 / c));
    CHECK(ts.A0(2, 2).real() == doctest::Approx(-1.0 / c));
  }

  SUBCASE("Tinv is the exact inverse") {
    for (int n = 0; n < 200; ++n) {
      const Side side = (n % 2) ? Side::Left : Side::Right;
      const SideState s = random_side_state(rng, side);
      const TransformSet ts = assemble_T_A0(s, kLaw, side);
      CHECK((ts.Tinv * ts.T - Mat7::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  SUBCASE("diagonalization identities") {
    for (int n = 0; n < 200; ++n) {
      const Side side = (n % 2) ? Side::Left : Side::Right;
      const SideState s = random_side_state(rng, side);
      const TransformSet ts = assemble_T_A0(s, kLaw, side);
      const Mat7 a2t = assemble_A2tilde(s, kLaw, side).m;
      CHECK((ts.A0 * ts.Tinv * a2t * ts.T - i2_matrix()).cwiseAbs().maxCoeff() < 1e-12);

      const Real c = sound_speed(kLaw, s.rho);
      const Real lam = c * s.d1_hat() / s.d2Phi;
      Mat7 expect = Mat7::Zero();
      expect(1, 1) = lam;
      expect(2, 2) = -lam;
      CHECK((ts.Tinv * a2t * ts.T - expect).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("principal symbol") {
  std::mt19937_64 rng(13);

  SUBCASE("eta = 0 reduces to tau * A0") {
    ConstantBackground cb{1.0, 0.3, 1.0, 0.0, kLaw};
    const BackgroundPoint bp = make_constant_background(cb);
    const MatrixSymbol7 A = principal_symbol(bp.right, kLaw, Side::Right, {1, 0, 0});
    const TransformSet ts = assemble_T_A0(bp.right, kLaw, Side::Right);
    CHECK((A.m - ts.A0).cwiseAbs().maxCoeff() == 0.0);
    CHECK(A.degree == 1);
  }

  SUBCASE("degree-1 homogeneity is exact for lambda = 2") {
    for (int n = 0; n < 100; ++n) {
      const Side side = (n % 2) ? Side::Left : Side::Right;
      const SideState s = random_side_state(rng, side);
      const Frequency f = random_frequency(rng);
      const Mat7 a = principal_symbol(s, kLaw, side, f).m;
      const Mat7 a2 = principal_symbol(s, kLaw, side, f.scaled(2.0)).m;
      CHECK((a2 - 2.0 * a).cwiseAbs().maxCoeff() == 0.0);
    }
  }

  SUBCASE("algebraic block matches the printed matrix") {
    for (int n = 0; n < 100; ++n) {
      const SideState s = random_side_state(rng, Side::Right);
      const Frequency f = random_frequency(rng);
      const Mat7 A = principal_symbol(s, kLaw, Side::Right, f).m;
      const Real c = sound_speed(kLaw, s.rho);
      const Real h = s.d1_hat();
      const Complex k = f.tau() + Complex(0, s.v * f.eta);
      const Complex ie(0, f.eta);
      Eigen::Matrix<Complex, 5, 7> expect = Eigen::Matrix<Complex, 5, 7>::Zero();
      expect.row(0) << k, ie * c * c / (h * s.rho), ie * c * c / (h * s.rho), -ie * s.F11, 0,
          -ie * s.F12, 0;
      expect.row(1) << -ie * s.F11, 0, 0, k, 0, 0, 0;
      expect.row(2) << 0, -ie * c * s.F11 / s.rho, ie * c * s.F11 / s.rho, 0, k, 0, 0;
      expect.row(3) << -ie * s.F12, 0, 0, 0, 0, k, 0;
      expect.row(4) << 0, -ie * c * s.F12 / s.rho, ie * c * s.F12 / s.rho, 0, 0, 0, k;
      const int rows[5] = {0, 3, 4, 5, 6};
      for (int r = 0; r < 5; ++r)
        CHECK((A.row(rows[r]) - expect.row(r)).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("boundary symbols") {
  std::mt19937_64 rng(14);

  SUBCASE("Pi b vanishes identically") {
    for (int n = 0; n < 300; ++n) {
      const BackgroundPoint bp = random_boundary_point(rng);
      const Frequency f = random_frequency(rng);
      const BoundarySymbols bs = boundary_symbols(bp, f);
      CHECK((bs.Pi * bs.b).cwiseAbs().maxCoeff() < 1e-14);
    }
  }

  SUBCASE("beta equals the first two rows of Pi*M on the W^nc columns") {
    for (int n = 0; n < 100; ++n) {
      const BackgroundPoint bp = random_boundary_point(rng);
      const Frequency f = random_frequency(rng);
      const BoundarySymbols bs = boundary_symbols(bp, f);
      const auto pim = (bs.Pi * bs.Mmat).eval();
      const int cols[4] = {0, 1, 4, 5};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j)
          CHECK(std::abs(pim(i, cols[j]) - bs.beta(i, j)) < 1e-13);
    }
  }

  SUBCASE("constant background beta row 1 is (1, 1, -1, -1)") {
    ConstantBackground cb{1.0, 0.3, 1.0, 0.0, kLaw};
    const BackgroundPoint bp = make_constant_background(cb);
    const BoundarySymbols bs = boundary_symbols(bp, random_frequency(rng));
    CHECK(bs.beta(0, 0) == Complex(1, 0));
    CHECK(bs.beta(0, 1) == Complex(1, 0));
    CHECK(bs.beta(0, 2) == Complex(-1, 0));
    CHECK(bs.beta(0, 3) == Complex(-1, 0));
  }

  SUBCASE("measured per-row scaling degrees of beta") {
    const BackgroundPoint bp = random_boundary_point(rng);
    const Frequency f = random_frequency(rng);
    const Real lam = 3.0;
    const BoundarySymbols b1 = boundary_symbols(bp, f);
    const BoundarySymbols b3 = boundary_symbols(bp, f.scaled(lam));
    // Row 1 is frequency-free (degree 0); row 2 scales linearly (degree 1).
    CHECK((b3.beta.row(0) - b1.beta.row(0)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((b3.beta.row(1) - lam * b1.beta.row(1)).cwiseAbs().maxCoeff() < 1e-12);
  }

  SUBCASE("the M print agrees with assembling the raw boundary coefficient") {
    // Rebuild underline-M * diag(T^r, T^l) and compare its W^n columns.
    for (int n = 0; n < 50; ++n) {
      const BackgroundPoint bp = random_boundary_point(rng);
      const Frequency f = random_frequency(rng);
      const BoundarySymbols bs = boundary_symbols(bp, f);
      const Real p1 = bp.right.d1Phi;
      Eigen::Matrix<Complex, 7, 14> M = Eigen::Matrix<Complex, 7, 14>::Zero();
      auto setrow = [&](int r, int c_r, Real a, int c_l, Real b) {
        M(r, c_r) = a;
        if (c_l >= 0) M(r, c_l) = b;
      };
      M(0, 1) = p1; M(0, 2) = -1; M(0, 8) = -p1; M(0, 9) = 1;
      M(1, 1) = p1; M(1, 2) = -1;
      M(2, 0) = 1; M(2, 7) = -1;
      M(3, 3) = p1; M(3, 4) = -1; M(3, 10) = -p1; M(3, 11) = 1;
      M(4, 3) = p1; M(4, 4) = -1;
      M(5, 5) = p1; M(5, 6) = -1; M(5, 12) = -p1; M(5, 13) = 1;
      M(6, 5) = p1; M(6, 6) = -1;
      (void)setrow;
      Eigen::Matrix<Complex, 14, 14> TT = Eigen::Matrix<Complex, 14, 14>::Zero();
      TT.block<7, 7>(0, 0) = assemble_T_A0(bp.right, bp.pressure, Side::Right).T;
      TT.block<7, 7>(7, 7) = assemble_T_A0(bp.left, bp.pressure, Side::Left).T;
      const auto full = (M * TT).eval();
      // Tangential columns vanish identically.
      for (int c : {0, 3, 5, 7, 10, 12})
        CHECK(full.col(c).cwiseAbs().maxCoeff() < 1e-13);
      // The W^n columns reproduce the stored coefficient.
      const int ncols[8] = {1, 2, 4, 6, 8, 9, 11, 13};
      for (int j = 0; j < 8; ++j)
        CHECK((full.col(ncols[j]) - bs.Mmat.col(j)).cwiseAbs().maxCoeff() < 1e-13);
    }
  }

  SUBCASE("off-boundary points are rejected") {
    BackgroundPoint bp = random_boundary_point(rng);
    bp.location[2] = 0.5;
    CHECK_THROWS_AS(boundary_symbols(bp, Frequency{0, 1, 1}), DomainError);
  }
}

TEST_SUITE_END();
