#include <cmath>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "support.hpp"
#include "zmean/special_fn.hpp"

using namespace zmean;

TEST_SUITE("special_fn") {
  TEST_CASE("gamma on the reals") {
    CHECK(gamma_real(Interval(1.0)).contains(1.0));
    CHECK(gamma_real(Interval(2.0)).contains(1.0));
    CHECK(zt::holds(gamma_real(Interval(1.5)), oracle::gamma_1_5));
    CHECK(zt::holds(gamma_real(Interval(10.0), Precision(100)), oracle::gamma_10));
    CHECK(gamma_real(Interval(1.5)).width() < 1e-13);
  }

  TEST_CASE("real zeta bounds") {
    Interval z2 = zeta_real_bounds(Interval(2.0));
    CHECK(z2.contains(1.0));
    CHECK(z2.contains(2.0));
    CHECK(zt::holds(z2, oracle::zeta_2));
    Interval z3 = zeta_real_bounds(Interval(3.0));
    CHECK(z3.contains(0.5));
    CHECK(z3.contains(1.5));
    CHECK(zt::holds(z3, oracle::zeta_3));
    Interval zh = zeta_real_bounds(Interval(0.5));
    CHECK(zh.contains(-2.0));
    CHECK(zh.contains(-1.0));
    CHECK(zt::holds(zh, oracle::zeta_half));
    CHECK_THROWS_AS(zeta_real_bounds(Interval(1.0)), domain_error);
  }

  TEST_CASE("real zeta bounds hold on the grid") {
    for (const auto& p : oracle::zeta_real_grid) {
      Interval a = Interval::parse(p.alpha);
      CHECK_MESSAGE(zt::holds(zeta_real_bounds(a), p.value), "alpha " << p.alpha);
    }
  }

  TEST_CASE("zeta ball at classical points") {
    ComplexBall z2 = zeta_ball(ComplexBall(2.0, 0.0, 0.0));
    CHECK(z2.contains(zt::oracle_d(oracle::zeta_2), 0.0));
    CHECK(z2.rad < 1e-10);
    ComplexBall z0 = zeta_ball(ComplexBall(0.0, 0.0, 0.0));
    CHECK(z0.contains(-0.5, 0.0));
    ComplexBall zz = zeta_ball(ComplexBall(0.5, 14.134725, 1e-3));
    CHECK(zz.contains(0.0, 0.0));
    ComplexBall z1 = zeta_ball(ComplexBall(1.0, 100.0, 0.0));
    double m = std::hypot(z1.mid_re, z1.mid_im);
    CHECK(std::abs(m - zt::oracle_d(oracle::abs_zeta_1_100i)) <= z1.rad + 1e-12);
  }

  TEST_CASE("zeta ball at the pole") {
    CHECK_THROWS_AS(zeta_ball(ComplexBall(1.0, 0.0, 1e-3)), pole_error);
    ComplexBall near = zeta_ball(ComplexBall(1.0, 0.05, 1e-3));
    CHECK(std::isfinite(near.rad));
  }

  TEST_CASE("regular part near the pole") {
    struct P {
      double re, im;
      const char *vre, *vim;
    };
    P pts[] = {{0.9, 0.1, oracle::zreg0_re, oracle::zreg0_im},
               {1.1, -0.05, oracle::zreg1_re, oracle::zreg1_im},
               {0.8, 0.2, oracle::zreg2_re, oracle::zreg2_im},
               {1.0, 0.01, oracle::zreg3_re, oracle::zreg3_im}};
    for (const auto& p : pts) {
      Complex v = zeta_regular_em(Complex(p.re, p.im), ZetaEvalParams(50, 12));
      CHECK(zt::holds(v.re, p.vre));
      CHECK(zt::holds(v.im, p.vim));
      CHECK(v.re.width() < 1e-10);
    }
  }

  TEST_CASE("zeta derivative sign at a real point") {
    // zeta'(2) = -0.9375482543...
    Complex d = zeta_prime_em(Complex(2.0, 0.0), ZetaEvalParams(50, 12));
    CHECK(d.re.contains(-0.93754825431584375));
  }

  TEST_CASE("eval params") {
    CHECK(ZetaEvalParams::for_height(10.0).n_terms == 50);
    CHECK(ZetaEvalParams::for_height(100.0).n_terms == 200);
    CHECK_THROWS_AS(ZetaEvalParams(0, 12), params_error);
    CHECK_THROWS_AS(ZetaEvalParams(50, 40), params_error);
  }

  TEST_CASE("abs_sq_upper") {
    Interval z = abs_sq_upper(ComplexBall(0.0, 0.0, 0.0));
    CHECK(z.lo() == 0.0);
    CHECK(z.hi() == 0.0);
    CHECK(abs_sq_upper(ComplexBall(3.0, 4.0, 0.0)).contains(25.0));
    CHECK(abs_sq_upper(ComplexBall(1.0, 0.0, 1.0)).hi() >= 4.0);
  }

  TEST_CASE("Stirling A1 at s = 10") {
    StirlingEnclosure s = stirling_enclosures(10.0, 0.0, StirlingVariant::A1);
    CHECK(zt::holds(s.modulus(), oracle::gamma_10));
    CHECK(s.value_box().re.contains(362880.0));
  }

  TEST_CASE("Stirling B2 on the critical line") {
    StirlingEnclosure s = stirling_enclosures(0.5, 100.0, StirlingVariant::B2, constants::pi() / Interval(2.0));
    CHECK(zt::holds(log(s.modulus()), oracle::log_abs_gamma_half_100i));
  }

  TEST_CASE("Stirling A2 modulus") {
    StirlingEnclosure s = stirling_enclosures(2.0, 50.0, StirlingVariant::A2);
    CHECK(zt::holds(s.modulus(), oracle::abs_gamma_2_50i));
  }

  TEST_CASE("Stirling A3 is zero on the real axis") {
    for (double x : {0.5, 2.0, 7.5}) {
      StirlingEnclosure s = stirling_enclosures(x, 0.0, StirlingVariant::A3);
      CHECK(s.value_box().re.contains(0.0));
      CHECK_THROWS_AS(s.modulus(), domain_error);
    }
    CHECK_THROWS_AS(stirling_enclosures(-1.0, 0.0, StirlingVariant::A1), domain_error);
  }

  TEST_CASE("cosine modulus") {
    CosineEnclosure c0 = cosine_modulus(0.0, 0.0);
    CHECK(c0.main.contains(0.5));
    CHECK(c0.modulus().contains(1.0));
    CosineEnclosure c10 = cosine_modulus(0.0, 10.0);
    CHECK(c10.main.contains(std::exp(5 * M_PI) / 2));
    CHECK(zt::holds(c10.modulus(), oracle::abs_cos_10i));
    CHECK(zt::holds(cosine_modulus(0.5, 20.0).modulus(), oracle::abs_cos_half_20i));
  }

  TEST_CASE("Backlund at sigma = 1") {
    Interval b = backlund_bound(1.0, 100.0);
    CHECK(b.contains(std::log(100.0) - 0.048));
    CHECK(zt::oracle_d(oracle::abs_zeta_1_100i) <= b.lo());
    CHECK_THROWS_AS(backlund_bound(0.5, 10.0), domain_error);
  }

  TEST_CASE("Bernoulli ratios") {
    CHECK(bernoulli_ratio(1).contains(1.0 / 12));
    CHECK(bernoulli_ratio(2).contains(-1.0 / 720));
  }

  TEST_CASE("zeta bases") {
    CoeffVec a = zea_2m2s();
    CHECK(a[0].contains(1.0));
    CHECK(a[2].contains(0.5));
    // magnitude of the lower bound -(1/2)/(1/2 - sigma)
    CoeffVec b = zeb_2s();
    CHECK(b.is_zero(0));
    CHECK(b[2].contains(0.5));
  }
}
