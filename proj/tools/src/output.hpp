#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "zmean/box_bound.hpp"
#include "zmean/pipeline.hpp"
#include "zmean/verifier.hpp"

namespace zmean::io {

inline constexpr const char* kSchemaVersion = "1";

// shortest round-trip text of a double
std::string num(double x);
RangeMode parse_range(const std::string& s);

nlohmann::ordered_json to_json(const Interval& v);
nlohmann::ordered_json to_json(const PipelineConfig& cfg);
nlohmann::ordered_json to_json(const ConstantReport& r);
nlohmann::ordered_json to_json(const BoxGrid& g, const BoxBoundResult& r, bool poleguard);
nlohmann::ordered_json to_json(const std::vector<CheckResult>& checks);

// name,lemma_ref,lo,hi,rounded
std::string to_csv(const ConstantReport& r);
std::string to_text(const ConstantReport& r);

struct TableLine {
  TableRow row;
  std::string t0_text, c_text;
};
std::string table_csv(const std::vector<TableLine>& rows, bool best_c);

std::string junit(const std::vector<CheckResult>& checks, const std::string& suite);

struct RunManifest {
  std::string command;
  nlohmann::ordered_json config;
  std::vector<std::string> outputs;
  double wall_time = 0.0;

  static std::string toolchain();
  nlohmann::ordered_json json() const;
};

}  // namespace zmean::io
