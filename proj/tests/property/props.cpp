#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "suites.hpp"

namespace {
void report(const zprop::Outcome& o, long want_cases) {
  for (const auto& n : o.notes) MESSAGE(o.name << ": " << n);
  CHECK(o.cases >= want_cases);
  CHECK(o.violations == 0);
}
}  // namespace

TEST_SUITE("property") {
  TEST_CASE("interval containment fuzz") { report(zprop::interval_fuzz(), zprop::kFuzzCases); }
  TEST_CASE("Lemma 2.6 inequalities") { report(zprop::lemma_2_6(), zprop::kLemma26Cases); }
  TEST_CASE("section 2 spot checks") { report(zprop::section2(), zprop::kSection2Cases); }
  TEST_CASE("absorb soundness") { report(zprop::absorb_soundness(), zprop::kAbsorbCases); }
  TEST_CASE("T0 table monotonicity") { report(zprop::table_monotone(), 42); }
  TEST_CASE("zeta ball containment") { report(zprop::zeta_ball_oracles(), 1000); }
}
