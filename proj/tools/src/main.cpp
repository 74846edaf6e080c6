#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "output.hpp"

namespace fs = std::filesystem;
using namespace zmean;
using nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, config_error = 2, check_failure = 3, assembly_failure = 4 };

Interval parse_number(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Interval::parse(s);
  return Interval::parse(s.substr(0, slash)) / Interval::parse(s.substr(slash + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string join_argv(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

// writes to --out or stdout, and tracks the manifest
class Sink {
 public:
  Sink(std::string command, std::string dir) : dir_(std::move(dir)) {
    manifest_.command = std::move(command);
    if (!dir_.empty()) fs::create_directories(dir_);
  }

  void emit(const std::string& name, const std::string& data) {
    if (dir_.empty()) {
      std::cout << data;
      if (!data.empty() && data.back() != '\n') std::cout << '\n';
      manifest_.outputs.push_back("<stdout>");
      return;
    }
    fs::path p = fs::path(dir_) / name;
    std::ofstream f(p, std::ios::binary);
    f << data;
    if (!f) throw std::runtime_error("cannot write " + p.string());
    manifest_.outputs.push_back(p.string());
  }

  void config(ordered_json c) { manifest_.config = std::move(c); }

  void finish() {
    manifest_.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::string m = manifest_.json().dump(2) + "\n";
    if (dir_.empty()) {
      std::cerr << "manifest: " << manifest_.json().dump() << '\n';
    } else {
      std::ofstream(fs::path(dir_) / "manifest.json", std::ios::binary) << m;
    }
  }

 private:
  std::string dir_;
  io::RunManifest manifest_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct ConstantsOpts {
  std::string t0 = "100", c = "1.501", range = "half", format = "json";
  std::string i_bound, ip_bound;
  int digits = 3;
};

int run_constants(const ConstantsOpts& o, Sink& sink) {
  RangeMode mode = io::parse_range(o.range);
  PipelineConfig cfg = PipelineConfig::make(100.0, o.c, mode, o.digits);
  cfg.T0 = parse_number(o.t0);
  cfg.validate();
  auto bad = sanity_checks(cfg.T0, cfg.c);
  if (!bad.empty()) {
    for (const auto& b : bad) std::cerr << "precondition fails: " << b << '\n';
    return config_error;
  }
  ConstantReport rep;
  ordered_json extra = io::to_json(cfg);
  if (mode == RangeMode::tau_half) {
    rep = assemble_main(cfg);
  } else if (mode == RangeMode::tau_quarter_range) {
    Interval i = o.i_bound.empty() ? published_i_bound() : parse_number(o.i_bound);
    extra["i_bound"] = io::to_json(i);
    rep = assemble_corollary(cfg, i);
  } else {
    Interval ip = o.ip_bound.empty() ? published_ip_bound() : parse_number(o.ip_bound);
    extra["ip_bound"] = io::to_json(ip);
    rep = widened_range(cfg, ip);
  }
  sink.config(extra);
  if (o.format == "json") {
    sink.emit("constants.json", io::to_json(rep).dump(2) + "\n");
  } else if (o.format == "csv") {
    sink.emit("constants.csv", io::to_csv(rep));
  } else {
    sink.emit("constants.txt", io::to_text(rep));
  }
  return ok;
}

struct TableOpts {
  std::string t0_list = "1e3,1e4,1e6,1e10,1e15,1e20,1e30,1e40";
  std::string c = "1.501";
  bool best_c = false;
};

int run_table(const TableOpts& o, Sink& sink) {
  std::vector<std::pair<std::string, Interval>> T0s;
  for (const auto& s : split(o.t0_list, ',')) {
    Interval t = parse_number(s);
    if (!(t.lo() >= 50.0)) throw parameter_error("T0 must be >= 50, got " + s);
    T0s.push_back({s, t});
  }
  if (T0s.empty()) throw parameter_error("empty T0 list");
  Interval c = Interval::parse(o.c);
  auto one = [&](const std::string& text, const Interval& T0) {
    io::TableLine l;
    l.t0_text = text;
    if (o.best_c) {
      Decimal b = best_c(T0, 3);
      l.c_text = b.str();
      l.row = table_row(T0, b.to_interval());
    } else {
      l.c_text = o.c;
      l.row = table_row(T0, c);
    }
    return l;
  };
  std::vector<std::future<io::TableLine>> jobs;
  auto policy = thread_count(0) > 1 ? std::launch::async : std::launch::deferred;
  for (const auto& [s, t] : T0s) jobs.push_back(std::async(policy, one, s, t));
  std::vector<io::TableLine> rows;
  for (auto& j : jobs) rows.push_back(j.get());
  sink.config({{"t0_list", o.t0_list}, {"c", o.best_c ? "best" : o.c}});
  sink.emit(o.best_c ? "table_best_c.csv" : "table.csv", io::table_csv(rows, o.best_c));
  return ok;
}

struct BoxOpts {
  std::vector<std::string> rect{"0.5", "0.75", "100"};
  std::string prec = "1/400", covering = "box", layout = "tiled";
  bool poleguard = false;
  unsigned threads = 0;
};

int run_boxbound(const BoxOpts& o, Sink& sink) {
  BoxGrid g;
  g.sigma_min = parse_number(o.rect.at(0));
  g.sigma_max = parse_number(o.rect.at(1));
  g.height = parse_number(o.rect.at(2));
  g.prec = parse_number(o.prec);
  g.covering = o.covering == "disk" ? Covering::disk : Covering::box;
  g.layout = o.layout == "printed" ? Layout::printed : Layout::tiled;
  g.threads = o.threads;
  g.validate();
  BoxBoundResult r = o.poleguard ? column_integral_bound_poleguard(g) : column_integral_bound(g);
  ordered_json j = io::to_json(g, r, o.poleguard);
  sink.config(j["grid"]);
  sink.emit("boxbound.json", j.dump(2) + "\n");
  return ok;
}

struct VerifyOpts {
  std::string suite = "all", junit;
  std::uint64_t seed = 42;
  int samples = 1000;
  std::string theorem_T = "150,1000,10000";
};

int run_verify(const VerifyOpts& o, Sink& sink) {
  if (o.samples < 1) throw parameter_error("samples must be >= 1");
  std::vector<CheckResult> all;
  auto append = [&](std::vector<CheckResult> v) {
    all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  };
  bool any = false;
  if (o.suite == "divisor" || o.suite == "all") {
    append(check_divisor_lemmas(DivisorGrid::defaults()));
    any = true;
  }
  if (o.suite == "theorem" || o.suite == "all") {
    std::vector<double> Ts;
    for (const auto& s : split(o.theorem_T, ',')) Ts.push_back(std::stod(s));
    append(check_theorem_grid({0.25, 0.5, 0.75}, Ts));
    any = true;
  }
  if (o.suite == "section2" || o.suite == "all") {
    append(spot_check_section2(o.samples, o.seed));
    any = true;
  }
  if (!any) throw parameter_error("unknown suite '" + o.suite + "'");
  sink.config({{"suite", o.suite},
               {"seed", std::to_string(o.seed)},
               {"samples", o.samples},
               {"theorem_T", o.theorem_T}});
  sink.emit("verify.json", io::to_json(all).dump(2) + "\n");
  if (!o.junit.empty()) std::ofstream(o.junit, std::ios::binary) << io::junit(all, o.suite);
  int failed = 0;
  for (const auto& c : all) {
    if (c.pass) continue;
    ++failed;
    std::cerr << "counterexample: " << c.lemma << ' ' << c.instance << " lhs=" << io::num(c.lhs)
              << " bound=" << io::num(c.rhs_bound.lo()) << '\n';
  }
  return failed ? check_failure : ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zmean: explicit constants for the mean square of zeta in the critical strip"};
  app.require_subcommand(1);
  std::string out;
  app.add_option("--out", out, "write data files and manifest.json into this directory");

  ConstantsOpts co;
  auto* c = app.add_subcommand("constants", "assemble the error constants");
  c->add_option("--t0", co.t0, "threshold T0")->capture_default_str();
  c->add_option("--c", co.c, "contour parameter c (lambda = c/log T)")->capture_default_str();
  c->add_option("--range", co.range, "tau range")
      ->check(CLI::IsMember({"half", "quarter", "open"}))
      ->capture_default_str();
  c->add_option("--digits", co.digits, "round-up digits")->capture_default_str();
  c->add_option("--format", co.format)
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  c->add_option("--i-bound", co.i_bound, "box bound i for the quarter range (default: published)");
  c->add_option("--ip-bound", co.ip_bound, "box bound i' for the open range (default: published)");

  TableOpts to;
  auto* t = app.add_subcommand("table", "error-term coefficients for several T0");
  t->add_option("--t0-list", to.t0_list, "comma separated T0 values")->capture_default_str();
  auto* copt = t->add_option("--c", to.c, "fixed c")->capture_default_str();
  t->add_flag("--best-c", to.best_c, "optimize c per row")->excludes(copt);

  BoxOpts bo;
  auto* b = app.add_subcommand("boxbound", "max over sigma of the integral of |zeta|^2 in a box");
  b->add_option("--rect", bo.rect, "sigma_min sigma_max height")->expected(3)->capture_default_str();
  b->add_option("--prec", bo.prec, "cell half-side (decimal or p/q)")->capture_default_str();
  b->add_flag("--poleguard", bo.poleguard, "weight |zeta|^2 by (1 - sigma), cap cells at s = 1");
  b->add_option("--covering", bo.covering)
      ->check(CLI::IsMember({"box", "disk"}))
      ->capture_default_str();
  b->add_option("--layout", bo.layout)
      ->check(CLI::IsMember({"tiled", "printed"}))
      ->capture_default_str();
  b->add_option("--threads", bo.threads, "0 = ZMEAN_THREADS or all cores");

  VerifyOpts vo;
  auto* v = app.add_subcommand("verify", "numerical checks of the lemmas and the theorem");
  v->add_option("--suite", vo.suite)
      ->check(CLI::IsMember({"divisor", "theorem", "section2", "all"}))
      ->capture_default_str();
  v->add_option("--seed", vo.seed)->capture_default_str();
  v->add_option("--samples", vo.samples, "section 2 samples")->capture_default_str();
  v->add_option("--theorem-T", vo.theorem_T, "comma separated T for the theorem check")
      ->capture_default_str();
  v->add_option("--junit", vo.junit, "also write a JUnit XML report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : config_error;
  }

  try {
    Sink sink(join_argv(argc, argv), out);
    int rc = ok;
    if (*c) rc = run_constants(co, sink);
    if (*t) rc = run_table(to, sink);
    if (*b) rc = run_boxbound(bo, sink);
    if (*v) rc = run_verify(vo, sink);
    if (rc != config_error) sink.finish();
    return rc;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return config_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return config_error;
  } catch (const absorb_error& e) {
    std::cerr << "assembly error: " << e.what() << '\n';
    return assembly_failure;
  } catch (const assembly_error& e) {
    std::cerr << "assembly error: " << e.what() << '\n';
    return assembly_failure;
  } catch (const basis_error& e) {
    std::cerr << "assembly error: " << e.what() << '\n';
    return assembly_failure;
  } catch (const verify_error& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return check_failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
