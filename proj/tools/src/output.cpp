#include "output.hpp"

#include <charconv>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace zmean::io {

using nlohmann::ordered_json;

std::string num(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, p);
}

RangeMode parse_range(const std::string& s) {
  if (s == "half") return RangeMode::tau_half;
  if (s == "quarter") return RangeMode::tau_quarter_range;
  if (s == "open") return RangeMode::tau_open_range;
  throw parameter_error("unknown range '" + s + "'");
}

ordered_json to_json(const Interval& v) { return {{"lo", num(v.lo())}, {"hi", num(v.hi())}}; }

ordered_json to_json(const PipelineConfig& cfg) {
  return {{"T0", to_json(cfg.T0)},
          {"c", cfg.c_text},
          {"range", range_name(cfg.range.mode)},
          {"digits", cfg.digits},
          {"k_quarter_drops_log2", cfg.k_quarter_drops_log2}};
}

ordered_json to_json(const ConstantReport& r) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"name", e.name},
                       {"lemma_ref", e.lemma_ref},
                       {"lo", num(e.value.lo())},
                       {"hi", num(e.value.hi())},
                       {"rounded", e.rounded.str()},
                       {"terms", e.terms}});
  }
  return {{"schema_version", kSchemaVersion},
          {"kind", "constants"},
          {"config", to_json(r.config)},
          {"entries", entries}};
}

ordered_json to_json(const BoxGrid& g, const BoxBoundResult& r, bool poleguard) {
  Decimal up = roundup_digits(r.bound, 3);
  return {{"schema_version", kSchemaVersion},
          {"kind", "boxbound"},
          {"grid",
           {{"sigma_min", to_json(g.sigma_min)},
            {"sigma_max", to_json(g.sigma_max)},
            {"height", to_json(g.height)},
            {"prec", to_json(g.prec)},
            {"covering", covering_name(g.covering)},
            {"layout", layout_name(g.layout)},
            {"poleguard", poleguard}}},
          {"bound", to_json(r.bound)},
          {"bound_roundup", up.str()},
          {"cells", r.cells},
          {"pole_cells", r.pole_cells},
          {"argmax_sigma", num(r.argmax_sigma)}};
}

ordered_json to_json(const std::vector<CheckResult>& checks) {
  ordered_json arr = ordered_json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++failed;
    arr.push_back({{"lemma", c.lemma},
                   {"instance", c.instance},
                   {"pass", c.pass},
                   {"lhs", num(c.lhs)},
                   {"rhs_bound", to_json(c.rhs_bound)},
                   {"ratio", num(c.ratio)},
                   {"margin", num(c.margin)}});
  }
  return {{"schema_version", kSchemaVersion},
          {"kind", "verify"},
          {"total", checks.size()},
          {"failed", failed},
          {"checks", arr}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string to_csv(const ConstantReport& r) {
  std::ostringstream os;
  os << "name,lemma_ref,lo,hi,rounded\n";
  for (const auto& e : r.entries)
    os << csv_field(e.name) << ',' << csv_field(e.lemma_ref) << ',' << num(e.value.lo()) << ','
       << num(e.value.hi()) << ',' << e.rounded.str() << '\n';
  return os.str();
}

std::string to_text(const ConstantReport& r) {
  std::ostringstream os;
  std::size_t w = 4;
  for (const auto& e : r.entries) w = std::max(w, e.name.size());
  for (const auto& e : r.entries)
    os << std::left << std::setw(static_cast<int>(w) + 2) << e.name << std::setw(10) << e.lemma_ref
       << std::setw(12) << e.rounded.str() << e.value.str(12) << '\n';
  return os.str();
}

std::string table_csv(const std::vector<TableLine>& rows, bool best_c) {
  std::ostringstream os;
  if (best_c) {
    os << "T0,c,e1,m11,m12\n";
  } else {
    os << "T0,c,e1,m11,m12,e2,m21,m22\n";
  }
  for (const auto& l : rows) {
    const auto& r = l.row;
    os << l.t0_text << ',' << l.c_text << ',' << roundup_digits(r.e1, 3).str() << ','
       << roundup_digits(r.m11, 3).str() << ',' << roundup_digits(r.m12, 3).str();
    if (!best_c)
      os << ',' << roundup_digits(r.e2, 3).str() << ',' << roundup_digits(r.m21, 3).str() << ','
         << roundup_digits(r.m22, 3).str();
    os << '\n';
  }
  return os.str();
}

std::string junit(const std::vector<CheckResult>& checks, const std::string& suite) {
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.pass ? 0 : 1;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<testsuite name=\"" << xml_escape(suite) << "\" tests=\"" << checks.size()
     << "\" failures=\"" << failed << "\">\n";
  for (const auto& c : checks) {
    os << "  <testcase classname=\"" << xml_escape(c.lemma) << "\" name=\"" << xml_escape(c.instance)
       << "\"";
    if (c.pass) {
      os << "/>\n";
    } else {
      os << ">\n    <failure message=\"lhs " << num(c.lhs) << " exceeds " << num(c.rhs_bound.lo())
         << "\"/>\n  </testcase>\n";
    }
  }
  os << "</testsuite>\n";
  return os.str();
}

std::string RunManifest::toolchain() {
  std::string s;
#if defined(__clang__)
  s = "clang " __clang_version__;
#elif defined(__GNUC__)
  s = "gcc " __VERSION__;
#else
  s = "unknown compiler";
#endif
  return s + ", C++" + std::to_string(__cplusplus);
}

ordered_json RunManifest::json() const {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"config", config},
          {"outputs", outputs},
          {"wall_time", num(wall_time)},
          {"toolchain", toolchain()}};
}

}  // namespace zmean::io
