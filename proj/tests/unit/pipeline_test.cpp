#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "zmean/pipeline.hpp"

using namespace zmean;

namespace {
PipelineConfig cfg(RangeMode m) { return PipelineConfig::make(100.0, "1.501", m); }

std::string r(const ConstantReport& rep, const std::string& name) {
  return rep.rounded(name).str();
}
}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("Prop 3.1") {
    ConstantReport h = assemble_I(cfg(RangeMode::tau_half));
    CHECK(r(h, "I_a") == "19.275");
    CHECK(r(h, "I.main_TlogT") == "1.0");
    CHECK(h.get("I.main_TlogT").value.is_point());
    ConstantReport q = assemble_I(cfg(RangeMode::tau_quarter_range));
    CHECK(r(q, "I4_2") == "1.99");
    CHECK(r(q, "I4_c") == "35.354");
  }

  TEST_CASE("Prop 3.2") {
    ConstantReport h = assemble_J(cfg(RangeMode::tau_half));
    CHECK(r(h, "J_a") == "0.47");
    CHECK(r(h, "J_b") == "2.825");
    ConstantReport q = assemble_J(cfg(RangeMode::tau_quarter_range));
    CHECK(r(q, "J4_2q") == "0.173");
    CHECK(r(q, "J4_c") == "6.76");
    CHECK(r(q, "J4_cp") == "0.1");
  }

  TEST_CASE("Prop 3.3") {
    ConstantReport h = assemble_K(cfg(RangeMode::tau_half));
    CHECK(r(h, "K_a") == "3.097");
    CHECK(r(h, "K_b") == "40.116");
    ConstantReport q = assemble_K(cfg(RangeMode::tau_quarter_range));
    CHECK(r(q, "K4_2") == "0.4");
    CHECK(r(q, "K4_c") == "20.072");
    Interval g = constants::euler_gamma() + Interval(1.0) - log(constants::two_pi());
    CHECK(g.hi() < 0.0);
  }

  TEST_CASE("main theorem, tau = 1/2") {
    ConstantReport m = assemble_main(cfg(RangeMode::tau_half));
    CHECK(r(m, "Main_a") == "4.037");
    CHECK(r(m, "Main") == "18.169");
    CHECK(m.get("Main_a").rounded == make_decimal("4.037"));
  }

  TEST_CASE("main theorem, quarter range") {
    ConstantReport m = assemble_main(cfg(RangeMode::tau_quarter_range));
    CHECK(r(m, "Main14") == "2.215");
    CHECK(r(m, "Main4_c") == "30.893");
  }

  TEST_CASE("corollary") {
    PipelineConfig c = cfg(RangeMode::tau_quarter_range);
    ConstantReport full = assemble_corollary(c, published_i_bound());
    CHECK(r(full, "Main34") == "4.613");
    CHECK(r(full, "z_bound_gap2") == "12.5");
    CHECK(r(full, "z_bound_const") == "100.0");
    ConstantReport none = assemble_corollary(c, Interval(0.0));
    CHECK(none.get("Cor4_c").value.hi() < full.get("Cor4_c").value.lo());
    CHECK(none.get("Cor4_2q").value.contains(full.get("Cor4_2q").value.mid()));
  }

  TEST_CASE("widened range") {
    ConstantReport w = widened_range(cfg(RangeMode::tau_open_range), published_ip_bound());
    ConstantReport q = assemble_main(cfg(RangeMode::tau_quarter_range));
    CHECK(w.find("Main0_0") != nullptr);
    CHECK(q.find("Main0_0") == nullptr);
    CHECK(w.get("Main0_0").value.lo() > 0.0);
    CHECK(r(w, "i'") == "159.694");
    CHECK(w.get("Main0_c").value.lo() >= q.get("Main4_c").value.hi());
    CHECK(w.get("Main0_2q").value.lo() >= q.get("Main4_2q").value.hi());
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(PipelineConfig::make(10.0, "1.501", RangeMode::tau_half).validate(),
                    parameter_error);
    CHECK_THROWS_AS(PipelineConfig::make(100.0, "9", RangeMode::tau_half).validate(),
                    parameter_error);
    CHECK(sanity_checks(Interval(100.0), Interval::parse("1.501")).empty());
  }

  TEST_CASE("order ledger") {
    OrderLedger L = I_orders(SigmaRange::half(), Interval(100.0));
    CHECK(L.find(0.5, 0.0, 0) != nullptr);
    CHECK(L.find(7.0, 0.0, 0) == nullptr);
  }

  TEST_CASE("table row identity") {
    for (double t0 : {1e3, 1e6}) {
      TableRow row = table_row(Interval(t0), Interval::parse("1.501"));
      Interval rhs = row.m11 + row.m12 / log(Interval(t0));
      CHECK(row.e1.contains(rhs.mid()));
      CHECK(row.e1.is_finite());
      CHECK(row.m22.is_finite());
    }
    TableRow r3 = table_row(Interval(1e3), Interval::parse("1.501"));
    CHECK(r3.e1.hi() < 18.169);
  }

  TEST_CASE("table row at T0 = 100 sits just below the report") {
    // the table keeps the unrounded chain, the report rounds each lemma constant first
    TableRow row = table_row(Interval(100.0), Interval::parse("1.501"));
    ConstantReport h = assemble_main(cfg(RangeMode::tau_half));
    ConstantReport q = assemble_main(cfg(RangeMode::tau_quarter_range));
    const std::pair<Interval, Decimal> cols[] = {
        {row.e1, h.rounded("Main")},      {row.m11, h.rounded("Main_a")},
        {row.m12, h.rounded("Main_b")},   {row.e2, q.rounded("Main14")},
        {row.m21, q.rounded("Main4_2q")}, {row.m22, q.rounded("Main4_c")}};
    for (const auto& [v, rep] : cols) {
      Decimal t = roundup_digits(v, 3);
      CHECK(t <= rep);
      CHECK(rep.to_double() - t.to_double() <= 0.0025);
    }
  }

  TEST_CASE("best c at small T0") {
    CHECK(best_c(Interval(100.0)).str() == "1.501");
    Interval obj = m11(Interval::parse("1.501"), Interval(100.0));
    CHECK(obj.hi() <= m11(Interval(1.0), Interval(100.0)).lo());
  }
}
