#include <doctest.h>

#include <cmath>
#include <random>

#include "evst/background.hpp"
#include "evst/errors.hpp"
#include "support.hpp"

using namespace evst;

TEST_SUITE_BEGIN("background");

TEST_CASE("sound speed on the polytropic law") {
  CHECK(sound_speed(PressureLaw{0.5, 2.0}, 1.0) == doctest::Approx(1.0));
  CHECK(sound_speed(PressureLaw{1.0, 2.0}, 2.0) == doctest::Approx(2.0));
  CHECK(sound_speed(PressureLaw{1.0, 1.4}, 1.0) == doctest::Approx(std::sqrt(1.4)));
  CHECK_THROWS_AS(sound_speed(PressureLaw{}, 0.0), DomainError);
  CHECK_THROWS_AS(sound_speed(PressureLaw{}, -1.0), DomainError);
}

TEST_CASE("pressure law is strictly increasing with real sound speed") {
  PressureLaw law{0.7, 1.6};
  Real prev = 0;
  for (Real rho = 0.1; rho < 5.0; rho += 0.1) {
    CHECK(law.dp(rho) > 0);
    CHECK(sound_speed(law, rho) > 0);
    CHECK(law.pressure(rho) > prev);
    prev = law.pressure(rho);
  }
}

TEST_CASE("constant background produces the mirrored flat-front pair") {
  ConstantBackground cb{1.0, 3.0, 1.0, 0.0, PressureLaw{}};
  BackgroundPoint bp = make_constant_background(cb);
  CHECK(bp.right.rho == 1.0);
  CHECK(bp.right.v == 3.0);
  CHECK(bp.right.u == 0.0);
  CHECK(bp.right.F11 == 1.0);
  CHECK(bp.right.F21 == 0.0);
  CHECK(bp.right.d2Phi == 1.0);
  CHECK(bp.left.v == -3.0);
  CHECK(bp.left.F11 == -1.0);
  CHECK(bp.left.d2Phi == -1.0);

  ConstantBackground cb2{1.0, 0.3, 1.0, 0.0, PressureLaw{}};
  BackgroundPoint bp2 = make_constant_background(cb2);
  CHECK(bp2.left.v == doctest::Approx(-0.3));
  CHECK(bp2.left.F11 == -1.0);

  for (Real r : bp.right.eikonal_residuals()) CHECK(r == 0.0);
  for (Real r : bp.left.eikonal_residuals()) CHECK(r == 0.0);
  CHECK_THROWS_AS(make_constant_background({-1.0, 0, 0, 0, PressureLaw{}}), DomainError);
}

TEST_CASE("perturbed background satisfies the constraints by construction") {
  ConstantBackground cb{1.0, 0.3, 1.0, 0.0, PressureLaw{}};
  PerturbationSpec pert;
  pert.phi = {0.01, {0, 0, 0}, {1.0, 1.0, 1.0}};
  pert.rho = {0.02, {0.1, 0.0, 0.3}, {1.2, 1.0, 0.8}};
  pert.v_r = {0.015, {-0.2, 0.2, 0.4}, {1.0, 1.1, 0.9}};
  pert.F11_l = {0.01, {0.0, 0.3, 0.5}, {1.0, 0.9, 1.0}};

  SUBCASE("zero perturbation reproduces the constant background") {
    PerturbationSpec none;
    BackgroundPoint a = make_perturbed_background(cb, none, {0.3, -0.2, 0.7});
    BackgroundPoint b = make_constant_background(cb, {0.3, -0.2, 0.7});
    CHECK(a.right.v == b.right.v);
    CHECK(a.right.u == b.right.u);
    CHECK(a.left.F22 == b.left.F22);
    CHECK(a.right.d2Phi == b.right.d2Phi);
  }

  SUBCASE("boundary points pass the Rankine-Hugoniot residuals") {
    for (Real t : {-0.4, 0.0, 0.3})
      for (Real x1 : {-0.5, 0.1, 0.6}) {
        BackgroundPoint bp = make_perturbed_background(cb, pert, {t, x1, 0});
        ConstraintReport rep = check_constraints(bp, 1e-10);
        CHECK(rep.boundary);
        CHECK(rep.max_rh < 1e-12);
        CHECK(rep.max_eikonal < 1e-12);
        CHECK(rep.pass);
      }
  }

  SUBCASE("interior points satisfy the eikonal constraints") {
    for (Real x2 : {0.1, 0.5, 1.2}) {
      BackgroundPoint bp = make_perturbed_background(cb, pert, {0.1, 0.2, x2});
      CHECK(check_constraints(bp, 1e-10).max_eikonal < 1e-12);
    }
  }

  SUBCASE("front bump large enough to break nondegeneracy is rejected") {
    PerturbationSpec bad;
    bad.phi = {1.0, {0, 0, 0}, {1.0, 1.0, 1.0}};  // sup |d2 bump| > 0.5
    CHECK_THROWS_AS(make_perturbed_background(cb, bad, {0, 0, 0}, 0.5), NondegeneracyError);
  }
}

TEST_CASE("check_constraints flags corrupted states") {
  ConstantBackground cb{1.0, 0.3, 1.0, 0.0, PressureLaw{}};
  BackgroundPoint bp = make_constant_background(cb);
  CHECK(check_constraints(bp, 1e-14).pass);

  bp.right.u += 0.1;
  ConstraintReport rep = check_constraints(bp, 1e-10);
  CHECK(rep.eikonal[0] == doctest::Approx(0.1));
  CHECK_FALSE(rep.pass);
}

TEST_CASE("regime classification worked examples") {
  PressureLaw law{};  // c(1) = 1
  CHECK(classify_regime({1.0, 3.0, 1.0, 0.0, law}).regime == Regime::SupersonicStable);

  RegimeClass sub = classify_regime({1.0, 0.3, 1.0, 0.0, law});
  CHECK(sub.regime == Regime::SubsonicStable);
  CHECK(sub.exclusion_values[0] == doctest::Approx(0.25));
  CHECK(sub.exclusion_values[1] == doctest::Approx(0.25 * std::pow(std::sqrt(2.0) - 1.0, 2)));
  CHECK(sub.exclusion_values[2] == doctest::Approx(0.5));
  CHECK(sub.exclusion_values[3] == doctest::Approx(0.375));

  RegimeClass exc = classify_regime({1.0, 0.5, 1.0, 0.0, law});
  CHECK(exc.regime == Regime::Excluded);
  CHECK(exc.excluded_index == 1);

  CHECK(classify_regime({1.0, 1.5, 1.0, 0.0, law}).regime == Regime::OutsideTheorem);
}

TEST_CASE("regime classification is scale- and sign-symmetric") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<Real> u(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const Real v = u(rng), F11 = u(rng), F12 = u(rng);
    // Scaling v, F and c together is achieved by scaling kappa, since
    // c^2 = kappa*gamma_ad*rho^(gamma_ad-1) at fixed rho.
    const Real lam = 0.25 + 3.0 * std::abs(u(rng));
    ConstantBackground base{1.0, v, F11, F12, PressureLaw{0.5, 2.0}};
    ConstantBackground scaled{1.0, lam * v, lam * F11, lam * F12,
                              PressureLaw{0.5 * lam * lam, 2.0}};
    const RegimeClass a = classify_regime(base);
    const RegimeClass b = classify_regime(scaled);
    CHECK(a.regime == b.regime);
    if (a.regime == Regime::Excluded) CHECK(a.excluded_index == b.excluded_index);

    ConstantBackground flipped{1.0, -v, -F11, -F12, PressureLaw{0.5, 2.0}};
    const RegimeClass c = classify_regime(flipped);
    CHECK(a.regime == c.regime);

    // Flipping exchanges the induced side states: the flipped background's
    // left state carries the original right-state fields.
    const BackgroundPoint p = make_constant_background(base);
    const BackgroundPoint q = make_constant_background(flipped);
    CHECK(p.right.v == q.left.v);
    CHECK(p.right.F11 == q.left.F11);
    CHECK(p.right.F12 == q.left.F12);
  }
}

TEST_CASE("perturbation norm estimate") {
  ConstantBackground cb{1.0, 0.3, 1.0, 0.0, PressureLaw{}};
  GridSpec grid;
  grid.t_range = {-1.2, 1.2};
  grid.x1_range = {-1.2, 1.2};
  grid.x2_range = {0.0, 1.5};
  grid.nt = grid.nx1 = grid.nx2 = 24;

  SUBCASE("zero perturbation has zero norm") {
    CHECK(perturbation_norm_estimate(cb, PerturbationSpec{}, grid) == 0.0);
  }

  SUBCASE("sup-norm lower bound from the bump peak") {
    PerturbationSpec pert;
    pert.rho = {0.25, {0.0, 0.0, 0.75}, {1.0, 1.0, 0.7}};
    // Grid hits the bump center, so the estimate is at least the amplitude.
    grid.x2_range = {0.0, 1.5};
    grid.nx2 = 25;  // x2 = 0.75 is a grid point
    CHECK(perturbation_norm_estimate(cb, pert, grid) >= 0.25);
  }

  SUBCASE("grid refinement converges monotonically within 5%") {
    // The third derivative of the mollifier peaks on a short scale, so the
    // refinement study runs anisotropically along t.
    PerturbationSpec pert;
    pert.phi = {0.05, {0, 0, 0}, {1.0, 1.0, 1.0}};
    Real prev = -1, last_change = 1;
    bool monotone = true;
    for (int n : {64, 128, 256, 512, 1024}) {
      GridSpec g = grid;
      g.nt = n;
      g.nx1 = g.nx2 = 40;
      const Real est = perturbation_norm_estimate(cb, pert, g);
      if (prev > 0) {
        monotone = monotone && est >= prev * (1 - 1e-12);
        last_change = std::abs(est - prev) / est;
      }
      prev = est;
    }
    CHECK(monotone);
    CHECK(last_change < 0.05);
  }

  SUBCASE("coarse grid is rejected") {
    PerturbationSpec pert;
    pert.rho = {0.1, {0, 0, 0.5}, {0.05, 1.0, 1.0}};  // 4 points per width needs h <= 0.0125
    CHECK_THROWS_AS(perturbation_norm_estimate(cb, pert, grid), ResolutionError);
  }
}

TEST_SUITE_END();
