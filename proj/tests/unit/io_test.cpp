#include <string>

#include "doctest.h"
#include "output.hpp"

using namespace zmean;

TEST_SUITE("io") {
  TEST_CASE("numbers round-trip") {
    for (double x : {0.1, 1.0 / 3, 319.387276810602, -2.5e-300}) CHECK(std::stod(io::num(x)) == x);
  }

  TEST_CASE("range names") {
    CHECK(io::parse_range("half") == RangeMode::tau_half);
    CHECK(io::parse_range("quarter") == RangeMode::tau_quarter_range);
    CHECK(io::parse_range("open") == RangeMode::tau_open_range);
    CHECK_THROWS_AS(io::parse_range("full"), parameter_error);
  }

  TEST_CASE("constants report formats") {
    PipelineConfig cfg = PipelineConfig::make(100.0, "1.501", RangeMode::tau_half);
    ConstantReport r = assemble_main(cfg);
    auto j = io::to_json(r);
    CHECK(j["schema_version"] == "1");
    CHECK(j["config"]["c"] == "1.501");
    bool found = false;
    for (const auto& e : j["entries"])
      if (e["name"] == "Main") found = e["rounded"] == "18.169";
    CHECK(found);
    std::string csv = io::to_csv(r);
    CHECK(csv.rfind("name,lemma_ref,lo,hi,rounded\n", 0) == 0);
    CHECK(csv.find("Main,Thm 1.1,") != std::string::npos);
    CHECK(io::to_text(r).find("18.169") != std::string::npos);
  }

  TEST_CASE("table csv") {
    io::TableLine l{table_row(Interval(1e3), Interval::parse("1.501")), "1e3", "1.501"};
    std::string full = io::table_csv({l}, false);
    CHECK(full.rfind("T0,c,e1,m11,m12,e2,m21,m22\n1e3,1.501,", 0) == 0);
    std::string best = io::table_csv({l}, true);
    CHECK(best.rfind("T0,c,e1,m11,m12\n", 0) == 0);
  }

  TEST_CASE("junit and verify json") {
    CheckResult ok{"P3.4", "sigma=0.5", 1.0, Interval(2.0), true, 0.5, 0.5};
    CheckResult bad{"L3.6", "a<b", 3.0, Interval(2.0), false, 1.5, -0.5};
    std::string x = io::junit({ok, bad}, "divisor");
    CHECK(x.find("tests=\"2\" failures=\"1\"") != std::string::npos);
    CHECK(x.find("a&lt;b") != std::string::npos);
    auto j = io::to_json(std::vector<CheckResult>{ok, bad});
    CHECK(j["failed"] == 1);
    CHECK(j["checks"][1]["pass"] == false);
  }

  TEST_CASE("box bound json") {
    BoxGrid g;
    g.height = Interval(0.0);
    BoxBoundResult r;
    auto j = io::to_json(g, r, false);
    CHECK(j["kind"] == "boxbound");
    CHECK(j["grid"]["covering"] == "box");
    CHECK(j["bound_roundup"] == "0.0");
  }

  TEST_CASE("manifest") {
    io::RunManifest m{"constants", {{"T0", "100"}}, {"constants.json"}, 0.25, };
    auto j = m.json();
    CHECK(j["command"] == "constants");
    CHECK(j["outputs"][0] == "constants.json");
    CHECK(j["toolchain"].get<std::string>().find("C++") != std::string::npos);
  }
}
