#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "zmean/coeff.hpp"
#include "zmean/interval.hpp"

namespace zmean {

enum class RangeMode { tau_half, tau_quarter_range, tau_open_range };

const char* range_name(RangeMode m);

// sigma in [sigma_min, sigma_max]; the quarter and open ranges exclude 1/2
struct SigmaRange {
  Interval sigma_min{0.5};
  Interval sigma_max{0.5};
  RangeMode mode = RangeMode::tau_half;

  static SigmaRange half();
  static SigmaRange quarter();
  static SigmaRange open();
  static SigmaRange from_mode(RangeMode m);
  TauRange tau_range() const;
};

class parameter_error : public domain_error {
 public:
  using domain_error::domain_error;
};

using ConstValue = std::variant<Interval, CoeffVec>;

struct LemmaEntry {
  std::string label;
  std::string formula;
  ConstValue value;
};

struct LemmaConstants {
  std::string name;
  std::vector<LemmaEntry> values;
  Interval T0{0.0};
  Interval c{0.0};
  RangeMode range = RangeMode::tau_half;

  void add(const std::string& label, const std::string& formula, const ConstValue& v);
  const ConstValue& at(const std::string& label) const;
  Interval scalar(const std::string& label) const;
  CoeffVec vec(const std::string& label) const;
  bool has(const std::string& label) const;
};

// ---- Backlund ----
Interval omega(const Interval& T0);

// ---- divisor sums ----
Interval X0_of(const Interval& T0);  // T0 / 2pi
Interval A_half();
CoeffVec A_sigma(const SigmaRange& r);
CoeffVec C1_sigma(const SigmaRange& r);
CoeffVec C2_sigma(const SigmaRange& r, const Interval& X0);
Interval C_half(const Interval& X0);
Interval D_half();
// basis {1, 1/sigma, 1/(1/2-sigma)^2}
CoeffVec D_sigma(const SigmaRange& r);
LemmaConstants divisor_constants(const SigmaRange& r, const Interval& X0);

// ---- Lemma 3.6 tails ----
enum class Upsilon { half, one_minus_sigma };
// F_{k,sigma,1-sigma}, F_{k,sigma,1/2}; k = 1..6
CoeffVec F_sigma_reflected(int k, const SigmaRange& r, const Interval& T0);
CoeffVec F_sigma_half(int k, const SigmaRange& r, const Interval& T0);
// F_{k,1/2,1/2}
Interval F_half_half(int k, const Interval& T0);
LemmaConstants tail_constants_F(const SigmaRange& r, Upsilon u, const Interval& T0);

// ---- Stirling error block ----
Interval e1_err(const Interval& sigma, const Interval& t);
Interval e2_err(const Interval& sigma, const Interval& t);
// E(sigma, T0) = T0^2 (exp(e1 + e2) - 1)
Interval E_err(const Interval& sigma, const Interval& T0);
Interval V_prime(const SigmaRange& r, const Interval& T0);
Interval W_const(const SigmaRange& r, const Interval& T0);
Interval Z_const(const SigmaRange& r, const Interval& T0);
LemmaConstants stirling_error_block(const SigmaRange& r, const Interval& T0);

// ---- Lemma 3.8 ----
Interval G_prefactor(const Interval& T0);
Interval G1(const Interval& T0);
Interval G2(const Interval& T0);
Interval H_prefactor(const Interval& T0);
Interval H1(const Interval& T0);
Interval H2(const Interval& T0);
Interval H3(const Interval& T0);
Interval H4(const SigmaRange& r, const Interval& T0);
Interval Hp1(const Interval& T0);
Interval Hp2(const Interval& T0);
Interval Hp3(const Interval& T0);
LemmaConstants In_constants(const SigmaRange& r, const Interval& T0);

// ---- Lemma 3.11 ----
// k + c/log T0
Interval lambda_shift(const Interval& c, const Interval& T0, const Interval& k);
void check_lambda(const Interval& c, const Interval& T0);
Interval Q_const(const SigmaRange& r, const Interval& c, const Interval& T0);
Interval R_prefactor(const SigmaRange& r);
Interval FK_const(const SigmaRange& r, const Interval& c, const Interval& T0);
Interval R1(const SigmaRange& r, const Interval& c, const Interval& T0);
Interval R2(const SigmaRange& r, const Interval& c, const Interval& T0);
Interval Rp1(const SigmaRange& r, const Interval& c, const Interval& T0);
LemmaConstants Kn_constants(const SigmaRange& r, const Interval& c, const Interval& T0);

// ---- Lemma 3.10 ----
Interval P_half(int k, const Interval& T0);
CoeffVec P_sigma(int k, const SigmaRange& r);
LemmaConstants Klog_constants(const SigmaRange& r, const Interval& T0);

// ---- chi on vertical lines ----
Interval R_prime_chi(const SigmaRange& r, const Interval& c, const Interval& T0);
// R'(a, c, T0) with a the exponent before the lambda shift
Interval R_prime_at(const Interval& a, const Interval& c, const Interval& T0);
Interval kappa(const SigmaRange& r, const Interval& c, const Interval& T0);
LemmaConstants chi_line_constants(const SigmaRange& r, const Interval& c, const Interval& T0);

// ---- prefactors of the sums ----
enum class SumLemma { In_constants, Kn_constants };

// coefficient times T^{e_const + e_tau*tau} log^p (scalar coefficients)
struct Prefactor {
  int sum_index = 0;  // 0 = outside every sum
  OrderTerm term;
};

std::vector<Prefactor> eta_coefficients(const SigmaRange& r, const Interval& T0);
std::vector<Prefactor> xi_coefficients(const SigmaRange& r, const Interval& c, const Interval& T0);
LemmaConstants eta_xi_coefficients(const SigmaRange& r, const Interval& c, const Interval& T0,
                                   SumLemma which);

}  // namespace zmean
