#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zmean/coeff.hpp"
#include "zmean/constants.hpp"
#include "zmean/interval.hpp"

namespace zmean {

struct PipelineConfig {
  Interval T0{100.0};
  Interval c = Interval::parse("1.501");
  std::string c_text = "1.501";
  SigmaRange range = SigmaRange::half();
  int digits = 3;
  double grid_prec = 1.0 / 400.0;
  // the quarter-range K bookkeeping leaves out the log^2 buckets
  bool k_quarter_drops_log2 = true;

  static PipelineConfig make(double T0, const std::string& c, RangeMode m, int digits = 3);
  Interval lambda() const { return c / log(T0); }
  // throws parameter_error
  void validate() const;
};

class assembly_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReportEntry {
  std::string name;
  std::string lemma_ref;
  Interval value;
  Decimal rounded;
  std::vector<std::string> terms;
};

struct ConstantReport {
  PipelineConfig config;
  std::vector<ReportEntry> entries;

  const ReportEntry& add(const std::string& name, const std::string& ref, const Interval& v,
                         std::vector<std::string> terms = {});
  // rounded value supplied (used where the value is itself a sum of round-ups)
  const ReportEntry& add_rounded(const std::string& name, const std::string& ref,
                                 const Interval& v, const Decimal& r,
                                 std::vector<std::string> terms = {});
  void merge(const ConstantReport& o);
  const ReportEntry* find(const std::string& name) const;
  const ReportEntry& get(const std::string& name) const;
  Decimal rounded(const std::string& name) const { return get(name).rounded; }
};

// one summed order bucket: coeff * T^{e_const + e_tau tau} log^p
struct Bucket {
  OrderTerm term;
  std::vector<std::string> parts;
};

// collects products of sum prefactors and inner-sum coefficients by order
class OrderLedger {
 public:
  explicit OrderLedger(bool fold_half) : fold_half_(fold_half) {}
  void add(const OrderTerm& t, const std::string& part);
  const std::vector<Bucket>& buckets() const { return buckets_; }
  const Bucket* find(double e_const, double e_tau, int log_power) const;

 private:
  bool fold_half_;
  std::vector<Bucket> buckets_;
};

// the orders entering I, J, K (exposed for tests and audit)
OrderLedger I_orders(const SigmaRange& r, const Interval& T0);
OrderLedger K_orders(const SigmaRange& r, const Interval& c, const Interval& T0);

struct Merged {
  CoeffVec vec;
  std::vector<std::string> terms;
};

// absorb every bucket accepted by keep() into target
Merged merge_orders(const OrderLedger& L, const OrderTerm& target, const Interval& T0,
                    const TauRange& range,
                    const std::function<bool(const Bucket&)>& keep = nullptr);

// unrounded building blocks
Interval I_half_final(const Interval& T0);
CoeffVec I_range_final(const SigmaRange& r, const Interval& T0);
Interval J_half_log2(const Interval& c, const Interval& T0);
Interval J_half_log(const Interval& c, const Interval& T0);
CoeffVec J_range_final(const SigmaRange& r, const Interval& c, const Interval& T0);
CoeffVec J_range_log2(const SigmaRange& r, const Interval& c, const Interval& T0);
Interval K_half_log2(const Interval& c, const Interval& T0);
Interval K_half_log(const Interval& c, const Interval& T0);
CoeffVec K_range_final(const SigmaRange& r, const Interval& c, const Interval& T0,
                       bool drop_log2);

ConstantReport assemble_I(const PipelineConfig& cfg);
ConstantReport assemble_J(const PipelineConfig& cfg);
ConstantReport assemble_K(const PipelineConfig& cfg);
ConstantReport assemble_main(const PipelineConfig& cfg);
ConstantReport assemble_corollary(const PipelineConfig& cfg, const Interval& i_bound);
ConstantReport widened_range(const PipelineConfig& cfg, const Interval& ip_bound);

// published box-bound values, used when no fresh box computation is supplied
Interval published_i_bound();
Interval published_ip_bound();

struct TableRow {
  Interval T0{0.0};
  Interval c{0.0};
  Interval e1, m11, m12, e2, m21, m22;
};

Interval m11(const Interval& c, const Interval& T0);
Interval m12(const Interval& c, const Interval& T0);
Interval m21(const Interval& c, const Interval& T0);
Interval m22(const Interval& c, const Interval& T0);
TableRow table_row(const Interval& T0, const Interval& c);
std::vector<TableRow> table_T0(const std::vector<Interval>& T0_list, const Interval& c);

// grid search over c in (1/10^d) N, 0 < c <= rounddown(log T0 / 2); first strict minimum of m11
Decimal best_c(const Interval& T0, int digits = 3);

// preconditions used by the proofs; empty when all hold
std::vector<std::string> sanity_checks(const Interval& T0, const Interval& c);

}  // namespace zmean
