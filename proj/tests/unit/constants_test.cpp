#include <cmath>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "support.hpp"
#include "zmean/constants.hpp"

using namespace zmean;

namespace {
const Interval T100(100.0);
const Interval c1501 = Interval::parse("1.501");

SigmaRange point_range(double s) {
  return {Interval(s), Interval(s), s == 0.5 ? RangeMode::tau_half : RangeMode::tau_quarter_range};
}
}  // namespace

TEST_SUITE("constants") {
  TEST_CASE("omega") {
    CHECK(zt::rounded(omega(T100)) == "1.001");
    CHECK(zt::holds(omega(T100), oracle::omega_100));
    CHECK(omega(Interval(1e6)).hi() < 1.000001);
    CHECK(omega(Interval(1e6)).lo() > 1.0);
    CHECK(omega(Interval(50.0)).contains(2500.0 / 2496.0));
  }

  TEST_CASE("divisor family") {
    CHECK(A_half().contains(16.0 / 3));
    CHECK(A_sigma(point_range(0.25)).eval(Interval(0.25)).contains(8.0));
    // upper bound for A_sigma over the whole quarter range
    CoeffVec a = A_sigma(SigmaRange::quarter());
    for (double s : {0.25, 0.3, 0.4, 0.49}) {
      double exact = 4 + (1 + 2 * s) / (s * (2 - 2 * s));
      CHECK(a.eval(Interval(s)).hi() >= exact);
    }
    CHECK(zt::holds(D_half(), oracle::D_half));
    CHECK(zt::rounded(D_half()) == "10.822");
    LemmaConstants L = divisor_constants(SigmaRange::half(), X0_of(T100));
    CHECK(L.has("A_1/2"));
    CHECK(L.scalar("A_1/2").contains(16.0 / 3));
    CHECK_FALSE(L.has("A_sigma"));
  }

  TEST_CASE("Lemma 3.6 tails") {
    CHECK(zt::holds(F_half_half(1, T100), oracle::F1_half_half));
    CHECK(F_half_half(2, T100).is_point());
    CHECK(F_half_half(2, T100).lo() == 0.0);
    CoeffVec f6 = F_sigma_reflected(6, SigmaRange::quarter(), T100);
    CHECK(zt::holds(f6[0], oracle::F6_reflected_100));
    CHECK_THROWS(F_half_half(7, T100));
  }

  TEST_CASE("Stirling error block") {
    Interval half(0.5), tq(0.75);
    CHECK(e1_err(half, T100).lo() >= 0.0);
    CHECK(e2_err(half, T100).lo() >= 0.0);
    CHECK(E_err(half, T100).lo() >= 0.0);
    CHECK(E_err(tq, T100).hi() >= E_err(half, T100).hi());
    Interval Z = Z_const(SigmaRange::quarter(), T100);
    CHECK(Z.is_finite());
    CHECK(Z.hi() < 1.0);
    CHECK(zt::rounded(V_prime(SigmaRange::quarter(), T100)) == "0.115");
    CHECK(zt::rounded(W_const(SigmaRange::quarter(), T100)) == "0.23");
    CHECK(W_const(SigmaRange::quarter(), T100).hi() < 1.0);
  }

  TEST_CASE("Lemma 3.8 constants") {
    CHECK(H4(SigmaRange::quarter(), T100).hi() < 0.51);
    CHECK(std::abs(Hp1(T100).mid() - 1.5) < 1e-6);
    for (const Interval& v : {G1(T100), G2(T100), H1(T100), H2(T100), H3(T100), Hp1(T100),
                              Hp2(T100), Hp3(T100)})
      CHECK(v.lo() > 0.0);
  }

  TEST_CASE("Lemma 3.11 constants") {
    SigmaRange r = SigmaRange::half();
    CHECK(Q_const(r, c1501, T100).lo() > 0.0);
    CHECK(R1(r, c1501, T100).lo() > 0.0);
    CHECK(R2(r, c1501, T100).lo() > 0.0);
    CHECK(Rp1(r, c1501, T100).lo() > 0.0);
    CHECK(Rp1(r, c1501, T100).certainly_gt(R1(r, c1501, T100)));
    CHECK(FK_const(SigmaRange::half(), c1501, T100)
              .certainly_lt(FK_const(point_range(0.25), c1501, T100)));
  }

  TEST_CASE("lambda condition") {
    CHECK_NOTHROW(check_lambda(c1501, T100));
    CHECK_THROWS_AS(check_lambda(Interval(3.0), T100), parameter_error);
  }

  TEST_CASE("Lemma 3.10 constants") {
    CoeffVec p1 = P_sigma(1, SigmaRange::quarter());
    CHECK(p1.is_zero(0));
    CHECK(p1.is_zero(1));
    CHECK(p1.is_zero(2));
    CHECK(zt::holds(P_half(1, T100), oracle::P1_half));
    CHECK(zt::holds(P_half(2, T100), oracle::P2_half));
  }

  TEST_CASE("chi on vertical lines") {
    SigmaRange r = SigmaRange::half();
    CHECK(kappa(r, c1501, T100).lo() > 1.0);
    CHECK(R_prime_at(Interval(1.0), c1501, T100).certainly_lt(R_prime_at(Interval(1.5), c1501, T100)));
    CHECK(kappa(r, c1501, Interval(1e6)).hi() < kappa(r, c1501, T100).lo());
    CHECK(zt::rounded(kappa(r, c1501, T100)) == "1.001");
  }

  TEST_CASE("sum prefactors") {
    auto find = [](const std::vector<Prefactor>& v, int k) -> const OrderTerm* {
      for (const auto& p : v)
        if (p.sum_index == k) return &p.term;
      return nullptr;
    };
    auto eta = eta_coefficients(SigmaRange::half(), T100);
    const OrderTerm* eta2 = find(eta, 2);
    REQUIRE(eta2 != nullptr);
    CHECK(eta2->e_const.contains(-0.5));
    CHECK(eta2->e_tau.contains(0.0));
    CHECK(eta2->coeff[0].contains((Interval(2.0) * G2(T100)).mid()));
    // eta_6 carries the factor 1/2 - tau
    for (const auto& p : eta)
      if (p.sum_index == 6) CHECK(p.term.coeff[0].contains(0.0));

    // xi_3 carries (2 pi)^{1+lambda} / e^c
    auto xi = xi_coefficients(SigmaRange::half(), c1501, T100);
    const OrderTerm* xi3 = find(xi, 3);
    REQUIRE(xi3 != nullptr);
    Interval lam = c1501 / log(T100);
    Interval f = pow(constants::two_pi(), Interval(1.0) + lam) / exp(c1501);
    Interval expect = Interval(2.0) * R1(SigmaRange::half(), c1501, T100) * f;
    CHECK(xi3->coeff[0].contains(expect.mid()));
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(In_constants(SigmaRange::half(), Interval(10.0)), domain_error);
    CHECK_THROWS_AS(Kn_constants(SigmaRange::half(), c1501, Interval(10.0)), domain_error);
  }
}
