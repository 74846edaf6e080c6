#include "doctest.h"
#include "support.hpp"
#include "zmean/coeff.hpp"
#include "zmean/constants.hpp"
#include "zmean/special_fn.hpp"

using namespace zmean;

namespace {
bool same(const CoeffVec& a, double x, double y, double z) {
  return a[0].contains(x) && a[1].contains(y) && a[2].contains(z);
}

OrderTerm term(double e_const, double e_tau, int p, BasisTag b = BasisTag::gap_linear) {
  OrderTerm t;
  t.coeff = CoeffVec(Interval(1.0), Interval(0.0), Interval(0.0), b);
  t.e_const = Interval(e_const);
  t.e_tau = Interval(e_tau);
  t.log_power = p;
  t.label = "T^(" + std::to_string(e_const) + ")";
  return t;
}
}  // namespace

TEST_SUITE("coeff_algebra") {
  TEST_CASE("componentwise ops") {
    CHECK(same(cw_prod(Interval(2.0), CoeffVec(1.0, 0.0, 0.5)), 2, 0, 1));
    CHECK(same(cw_sum(CoeffVec(1.0, 1.0, 1.0), CoeffVec()), 1, 1, 1));
    Interval k = kappa(SigmaRange::half(), Interval::parse("1.501"), Interval(100.0));
    CoeffVec v = cw_prod(k, zea_2m2s());
    CHECK(v[0].contains(k.mid()));
    CHECK(v.is_zero(1));
    CHECK((v[2] * Interval(2.0)).contains(k.mid()));
  }

  TEST_CASE("basis mismatch is an error") {
    CoeffVec a(1.0, 0.0, 0.0, BasisTag::gap_linear);
    CoeffVec b(1.0, 0.0, 0.0, BasisTag::gap_squared);
    CHECK_THROWS_AS(cw_sum(a, b), basis_error);
  }

  TEST_CASE("rebase") {
    TauRange q{Interval(0.25), Interval(0.5)};
    Rebased r = rebase(CoeffVec(0.0, 0.0, 1.0), BasisTag::gap_squared, q);
    CHECK(r.modifier.contains(0.25));
    CHECK(same(r.vec, 0, 0, 0.25));
    CHECK(r.vec.basis == BasisTag::gap_squared);
    Rebased c = rebase(CoeffVec(1.0, 0.0, 0.0), BasisTag::gap_squared, q);
    CHECK(same(c.vec, 1, 0, 0));
    TauRange open{Interval(0.0), Interval(0.5)};
    Rebased self = rebase(CoeffVec(0.0, 3.0, 0.0), BasisTag::gap_linear, open);
    CHECK(self.modifier.contains(1.0));
    CHECK(same(self.vec, 0, 3, 0));
    CHECK_THROWS_AS(rebase(CoeffVec(1.0, 0.0, 0.0, BasisTag::reflected), BasisTag::gap_linear, q),
                    basis_error);
  }

  TEST_CASE("absorb factor") {
    TauRange q{Interval(0.25), Interval(0.5)};
    Interval T0(100.0);
    Interval f = absorb_factor(term(0.5, -1, 0), term(1.5, -2, 1), T0, q);
    CHECK(f.contains(1.0 / (std::log(100.0) * 10.0)));
    CHECK(absorb_factor(term(1, -1, 1), term(1, -1, 1), T0, q).contains(1.0));
    CHECK_THROWS_AS(absorb(term(1, 0, 1), term(0.5, 0, 2), T0, q), absorb_error);
    CHECK_THROWS_AS(absorb(term(1, 0, 2), term(1, 0, 1), T0, q), absorb_error);
  }

  TEST_CASE("absorb carries the coefficient") {
    TauRange q{Interval(0.25), Interval(0.5)};
    OrderTerm t = term(0.5, 0, 0);
    t.coeff = CoeffVec(2.0, 0.0, 1.0);
    OrderTerm target = term(1.0, 0, 0, BasisTag::gap_squared);
    Absorbed a = absorb(t, target, Interval(100.0), q);
    CHECK(a.factor.contains(0.1));
    CHECK(a.vec.basis == BasisTag::gap_squared);
    CHECK(a.vec[0].contains(0.2));
    CHECK(a.vec[2].contains(0.025));
  }

  TEST_CASE("eval bases") {
    CHECK(CoeffVec(1.0, 1.0, 1.0).eval(Interval(0.25)).contains(1 + 4 + 4));
    CHECK(CoeffVec(0.0, 0.0, 1.0, BasisTag::gap_squared).eval(Interval(0.25)).contains(16.0));
    CHECK(CoeffVec(0.0, 1.0, 1.0, BasisTag::reflected).eval(Interval(0.75)).contains(4 + 16));
    CHECK(CoeffVec(1.0, 0.0, 0.0).nonnegative());
    CHECK_FALSE(CoeffVec(-1.0, 0.0, 0.0).nonnegative());
  }
}
