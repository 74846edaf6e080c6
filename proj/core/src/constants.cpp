#include "zmean/constants.hpp"

#include <cmath>

#include "zmean/special_fn.hpp"

namespace zmean {

namespace {

const Interval kHalf(0.5);
const Interval kOne(1.0);
const Interval kTwo(2.0);

Interval pi_() { return constants::pi(); }
Interval tpi() { return constants::two_pi(); }
Interval gam() { return constants::euler_gamma(); }

Interval q(std::int64_t p, std::int64_t d) { return Interval::rational(p, d); }

// b^x for b > 0
Interval powr(const Interval& b, const Interval& x) { return exp(log(b) * x); }

void require_T0(const Interval& T0, double bound, const char* what) {
  if (!(T0.lo() > bound)) throw parameter_error(std::string(what) + ": T0 too small");
}

Precision bits_for(const Interval& T0) { return Precision::for_scale(T0.hi()); }

}  // namespace

const char* range_name(RangeMode m) {
  switch (m) {
    case RangeMode::tau_half: return "half";
    case RangeMode::tau_quarter_range: return "quarter";
    case RangeMode::tau_open_range: return "open";
  }
  return "?";
}

SigmaRange SigmaRange::half() { return {Interval(0.5), Interval(0.5), RangeMode::tau_half}; }
SigmaRange SigmaRange::quarter() {
  return {Interval(0.25), Interval(0.5), RangeMode::tau_quarter_range};
}
SigmaRange SigmaRange::open() { return {Interval(0.0), Interval(0.5), RangeMode::tau_open_range}; }
SigmaRange SigmaRange::from_mode(RangeMode m) {
  switch (m) {
    case RangeMode::tau_half: return half();
    case RangeMode::tau_quarter_range: return quarter();
    case RangeMode::tau_open_range: return open();
  }
  return half();
}
TauRange SigmaRange::tau_range() const { return {sigma_min, Interval(0.5)}; }

void LemmaConstants::add(const std::string& label, const std::string& formula,
                         const ConstValue& v) {
  values.push_back({label, formula, v});
}

const ConstValue& LemmaConstants::at(const std::string& label) const {
  for (const auto& e : values)
    if (e.label == label) return e.value;
  throw std::out_of_range(name + ": no constant " + label);
}

bool LemmaConstants::has(const std::string& label) const {
  for (const auto& e : values)
    if (e.label == label) return true;
  return false;
}

Interval LemmaConstants::scalar(const std::string& label) const {
  const auto& v = at(label);
  if (const auto* p = std::get_if<Interval>(&v)) return *p;
  throw std::invalid_argument(label + " is a vector");
}

CoeffVec LemmaConstants::vec(const std::string& label) const {
  const auto& v = at(label);
  if (const auto* p = std::get_if<CoeffVec>(&v)) return *p;
  return CoeffVec::scalar(std::get<Interval>(v));
}

Interval omega(const Interval& T0) {
  if (!(T0.lo() > 2.0)) throw domain_error("omega needs T0 > 2");
  Interval t2 = sqr(T0);
  return t2 / (t2 - Interval(4.0));
}

// ---------------------------------------------------------------------------
// divisor sums

Interval X0_of(const Interval& T0) { return T0 / tpi(); }

Interval A_half() { return q(16, 3); }

CoeffVec A_sigma(const SigmaRange& r) {
  return {Interval(4.0) + q(3, 2) / (kOne - r.sigma_max), kHalf, Interval(0.0)};
}

CoeffVec C1_sigma(const SigmaRange&) { return {Interval(7.0), Interval(1.0), Interval(4.0)}; }

CoeffVec C2_sigma(const SigmaRange& r, const Interval& X0) {
  Interval L = log(X0);
  return {Interval(5.0) - Interval(4.0) * r.sigma_min + Interval(4.0) / L +
              (kTwo / L) / (kOne - r.sigma_max),
          kHalf + Interval(3.0) / (kTwo * L), Interval(0.0)};
}

Interval C_half(const Interval& X0) {
  if (!(X0.lo() > 1.0)) throw parameter_error("C_1/2 needs X0 > 1");
  Interval A = A_half();
  return kHalf * A + (A + Interval(3.0) - kTwo * gam()) / log(X0);
}

Interval D_half() { return kTwo * A_half() + kTwo * gam() - kOne; }

CoeffVec D_sigma(const SigmaRange& r) {
  CoeffVec a = A_sigma(r);
  Interval modifier = kHalf - r.sigma_min;
  return {kTwo * a[0] + kOne / (kTwo - kTwo * r.sigma_max), kTwo * a[1],
          kTwo * a[2] * modifier + q(1, 4), BasisTag::gap_squared};
}

LemmaConstants divisor_constants(const SigmaRange& r, const Interval& X0) {
  LemmaConstants out;
  out.name = "divisor_constants";
  out.range = r.mode;
  out.add("A_1/2", "16/3", A_half());
  out.add("C_1/2", "A/2 + (A + 3 - 2gamma)/log X0", C_half(X0));
  out.add("D_1/2", "2A + 2gamma - 1", D_half());
  if (r.mode != RangeMode::tau_half) {
    out.add("A_sigma", "4 + (1/2)/sigma + (3/2)/(1-sigma)", A_sigma(r));
    out.add("C1_sigma", "7 + 1/sigma + 4/(1/2-sigma)", C1_sigma(r));
    out.add("C2_sigma", "(1-sigma)A + (A + (2-sigma)/(2sigma(1-sigma)))/log X0", C2_sigma(r, X0));
    out.add("D_sigma", "2A + 1/(2-2sigma) + 1/(1-2sigma)^2", D_sigma(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lemma 3.6

CoeffVec F_sigma_reflected(int k, const SigmaRange& r, const Interval& T0) {
  require_T0(T0, 2 * M_PI + 1e-9, "F_6");
  Interval a = kOne - r.sigma_max;
  Interval four_pi = Interval(4.0) * pi_();
  switch (k) {
    case 1: return cw_prod(kOne / powr(four_pi, a), zea_2m2s());
    case 2: return cw_prod(kTwo / (powr(four_pi, a) * a), zea_2m2s());
    case 3: return cw_prod(kTwo, A_sigma(r));
    case 4: return cw_prod((kTwo - r.sigma_min) * (kOne - r.sigma_min), A_sigma(r));
    case 5: return CoeffVec();
    case 6: return CoeffVec::scalar(T0 / (T0 - tpi()));
    default: break;
  }
  throw std::out_of_range("F index");
}

CoeffVec F_sigma_half(int k, const SigmaRange& r, const Interval& T0) {
  require_T0(T0, 2 * M_PI + 1e-9, "F_6");
  Interval a = q(3, 2) - kTwo * r.sigma_max;
  Interval four_pi = Interval(4.0) * pi_();
  Interval b = kHalf - r.sigma_max;
  switch (k) {
    case 1: return cw_prod(kOne / powr(four_pi, a), zea_2m2s());
    case 2: return cw_prod(kTwo / (powr(four_pi, a) * a), zea_2m2s());
    case 3: return cw_prod(kTwo / powr(tpi(), b), A_sigma(r));
    case 4: return CoeffVec();
    case 5:
      return cw_prod(Interval(3.0) * (kOne - r.sigma_min) / powr(Interval(6.0) * pi_(), b),
                     A_sigma(r));
    case 6: return CoeffVec::scalar(T0 / (T0 - tpi()));
    default: break;
  }
  throw std::out_of_range("F index");
}

Interval F_half_half(int k, const Interval& T0) {
  switch (k) {
    case 1: return sqrt(pi_()) / (kTwo * sqrt(kTwo));
    case 2: return Interval(0.0);
    case 3: return kTwo * A_half();
    case 4: return q(3, 4) * A_half();
    case 5: return Interval(0.0);
    case 6:
      require_T0(T0, 2 * M_PI + 1e-9, "F_6");
      return abs(kOne - (kTwo - kTwo * gam())) * T0 / (T0 - tpi());
    default: break;
  }
  throw std::out_of_range("F index");
}

LemmaConstants tail_constants_F(const SigmaRange& r, Upsilon u, const Interval& T0) {
  LemmaConstants out;
  out.name = "tail_constants_F";
  out.range = r.mode;
  out.T0 = T0;
  for (int k = 1; k <= 6; ++k) {
    std::string idx = std::to_string(k);
    if (r.mode == RangeMode::tau_half) {
      if (u != Upsilon::half) throw domain_error("F_{k,1/2,1/2} only");
      out.add("F_" + idx + ",1/2,1/2", "Lemma 3.6 table", F_half_half(k, T0));
    } else if (u == Upsilon::half) {
      out.add("F_" + idx + ",sigma,1/2", "Lemma 3.6 table", F_sigma_half(k, r, T0));
    } else {
      out.add("F_" + idx + ",sigma,1-sigma", "Lemma 3.6 table", F_sigma_reflected(k, r, T0));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stirling error terms

Interval e1_err(const Interval& si, const Interval& t) {
  Interval t2 = sqr(t);
  Interval g = abs(si - kHalf);
  Interval s2 = sqr(si), s3 = ipow(si, 3), s4 = ipow(si, 4);
  return (g * (s2 / kTwo + s4 / (Interval(4.0) * t2)) + s3 / Interval(3.0) + si / Interval(12.0) +
          kOne / (Interval(90.0) * abs(t)) + s3 / (Interval(12.0) * t2)) /
         t2;
}

Interval e2_err(const Interval& si, const Interval& t) {
  Interval g = abs(si - kHalf);
  Interval s2 = sqr(si), s3 = ipow(si, 3), s4 = ipow(si, 4);
  return (s4 / Interval(4.0) + g * s3 / Interval(3.0) + q(1, 90) + s2 / Interval(12.0)) /
         ipow(abs(t), 3);
}

Interval E_err(const Interval& si, const Interval& T0) {
  return sqr(T0) * expm1_hi(e1_err(si, T0) + e2_err(si, T0), bits_for(T0));
}

Interval V_prime(const SigmaRange& r, const Interval& T0) {
  const Interval& m = r.sigma_max;
  return (kHalf - r.sigma_min) * (sqr(m) / kTwo + ipow(m, 4) / (Interval(4.0) * T0)) +
         m / Interval(12.0) + ipow(m, 3) / Interval(3.0) + kOne / (Interval(90.0) * T0);
}

Interval W_const(const SigmaRange& r, const Interval& T0) {
  Interval t2 = sqr(T0);
  return t2 * expm1_hi(kTwo * V_prime(r, T0) / t2, bits_for(T0));
}

Interval Z_const(const SigmaRange& r, const Interval& T0) {
  Interval ept = exp(-(pi_() * T0));
  Interval factor = W_const(r, T0) * (kOne + ept) + sqr(T0) * ept;
  return kTwo * factor + sqr(factor) / sqr(T0);
}

LemmaConstants stirling_error_block(const SigmaRange& r, const Interval& T0) {
  require_T0(T0, 50.0 - 1e-9, "stirling_error_block");
  LemmaConstants out;
  out.name = "stirling_error_block";
  out.range = r.mode;
  out.T0 = T0;
  Interval top = kOne - r.sigma_min;
  out.add("e1", "e1(1-sigma_min, T0)", e1_err(top, T0));
  out.add("e2", "e2(1-sigma_min, T0)", e2_err(top, T0));
  out.add("E", "T0^2 (exp(e1+e2) - 1) at 1-sigma_min", E_err(top, T0));
  out.add("E_1/2", "E(1/2, T0)", E_err(kHalf, T0));
  out.add("V'", "(1/2-smin)(smax^2/2 + smax^4/(4T0)) + smax/12 + smax^3/3 + 1/(90T0)",
          V_prime(r, T0));
  out.add("W", "T0^2 (exp(2V'/T0^2) - 1)", W_const(r, T0));
  out.add("Z", "2F + F^2/T0^2, F = W(1+e^{-pi T0}) + T0^2 e^{-pi T0}", Z_const(r, T0));
  return out;
}

// ---------------------------------------------------------------------------
// Lemma 3.8

Interval G_prefactor(const Interval& T0) {
  Interval e2 = exp(kTwo), e4 = exp(Interval(4.0));
  return sqrt(tpi()) / kTwo *
         exp(kOne / (Interval(48.0) * e2 * T0) + kOne / (Interval(120.0) * e4 * sqr(T0))) *
         (kOne + kOne / exp(tpi() * e2 * T0));
}

Interval G1(const Interval& T0) {
  return G_prefactor(T0) * constants::e() /
         (sqrt(tpi()) * log(kTwo * exp(Interval(4.0))));
}

Interval G2(const Interval& T0) {
  return G_prefactor(T0) / (sqrt(kTwo) * constants::e() * constants::log2());
}

Interval H_prefactor(const Interval& T0) {
  Interval e2 = exp(kTwo);
  return (kTwo * e2 - kOne) / kTwo * (kOne + kOne / exp(pi_() * T0));
}

Interval H1(const Interval& T0) { return H_prefactor(T0) * kTwo / (kTwo * exp(kTwo) - kOne); }
Interval H2(const Interval& T0) { return H_prefactor(T0) / (Interval(48.0) * exp(kTwo)); }
Interval H3(const Interval& T0) {
  return H_prefactor(T0) * E_err(kHalf, T0) / (kTwo * exp(kTwo));
}
Interval H4(const SigmaRange& r, const Interval& T0) {
  return kHalf * (kOne + kOne / exp(pi_() * T0)) *
         (kOne + E_err(kOne - r.sigma_min, T0) / sqr(T0));
}
Interval Hp1(const Interval& T0) {
  return H_prefactor(T0) * Interval(3.0) / (kTwo * exp(kTwo) - kOne);
}
Interval Hp2(const Interval& T0) { return H_prefactor(T0) / (kTwo * exp(kTwo) - kOne); }
Interval Hp3(const Interval& T0) { return H_prefactor(T0) / (Interval(48.0) * exp(kTwo)); }

LemmaConstants In_constants(const SigmaRange& r, const Interval& T0) {
  require_T0(T0, 50.0 - 1e-9, "In_constants");
  LemmaConstants out;
  out.name = "In_constants";
  out.range = r.mode;
  out.T0 = T0;
  out.add("G1", "g e/(sqrt(2pi) log(2e^4))", G1(T0));
  out.add("G2", "g/(sqrt2 e log2)", G2(T0));
  out.add("H1", "h 2/(2e^2-1)", H1(T0));
  out.add("H2", "h/(48e^2)", H2(T0));
  out.add("H3", "h E(1/2,T0)/(2e^2)", H3(T0));
  out.add("H4", "(1+e^{-pi T0})(1+E(1-smin,T0)/T0^2)/2", H4(r, T0));
  out.add("H'1", "h 3/(2e^2-1)", Hp1(T0));
  out.add("H'2", "h/(2e^2-1)", Hp2(T0));
  out.add("H'3", "h/(48e^2)", Hp3(T0));
  out.add("H'4", "H3", H3(T0));
  out.add("H'5", "H4", H4(r, T0));
  return out;
}

// ---------------------------------------------------------------------------
// Lemma 3.11

Interval lambda_shift(const Interval& c, const Interval& T0, const Interval& k) {
  return k + c / log(T0);
}

void check_lambda(const Interval& c, const Interval& T0) {
  Interval lam = c / log(T0);
  if (!(lam.lo() > 0.0)) throw parameter_error("lambda = c/log T0 must be positive");
  if (!(lam.hi() < 0.5)) throw parameter_error("lambda = c/log T0 must be < 1/2");
}

Interval Q_const(const SigmaRange& r, const Interval& c, const Interval& T0) {
  Interval x = lambda_shift(c, T0, kTwo - kTwo * r.sigma_min);
  // Gamma <= 1 on [1, 2]
  Interval g = x.certainly_le(kTwo) ? kOne : gamma_real(x);
  return exp(pi_() / kTwo) * g / powr(tpi(), kTwo - kTwo * r.sigma_max);
}

Interval R_prefactor(const SigmaRange& r) {
  Interval ep = exp(pi_());
  return (ep + kOne) / (kTwo * ep * powr(tpi(), q(3, 2) - kTwo * r.sigma_max));
}

Interval FK_const(const SigmaRange& r, const Interval& c, const Interval& T0) {
  return E_err(lambda_shift(c, T0, kTwo - kTwo * r.sigma_min), T0);
}

namespace {
Interval R_bracket(const SigmaRange& r, const Interval& c, const Interval& T0,
                   const Interval& add) {
  Interval a = lambda_shift(c, T0, kTwo - kTwo * r.sigma_min);
  Interval b = lambda_shift(c, T0, kOne - kTwo * r.sigma_min);
  return R_prefactor(r) * exp(c) / kTwo * (a * b + add);
}
}  // namespace

Interval R1(const SigmaRange& r, const Interval& c, const Interval& T0) {
  return R_bracket(r, c, T0, q(25, 6));
}

Interval R2(const SigmaRange& r, const Interval& c, const Interval& T0) {
  return R_prefactor(r) * FK_const(r, c, T0) / (kHalf - c / log(T0));
}

Interval Rp1(const SigmaRange& r, const Interval& c, const Interval& T0) {
  return R_bracket(r, c, T0, q(37, 6));
}

LemmaConstants Kn_constants(const SigmaRange& r, const Interval& c, const Interval& T0) {
  require_T0(T0, 50.0 - 1e-9, "Kn_constants");
  check_lambda(c, T0);
  LemmaConstants out;
  out.name = "Kn_constants";
  out.range = r.mode;
  out.T0 = T0;
  out.c = c;
  out.add("Q", "e^{pi/2} Gamma(2-2smin+lambda)/(2pi)^{2-2smax}", Q_const(r, c, T0));
  out.add("F(c,T0)", "E(2-2smin+lambda, T0)", FK_const(r, c, T0));
  out.add("R1", "r e^c/2 ((2-2s+l)(1-2s+l) + 25/6)", R1(r, c, T0));
  out.add("R2", "r F(c,T0)/(1/2-lambda)", R2(r, c, T0));
  out.add("R'1", "r e^c/2 ((2-2s+l)(1-2s+l) + 37/6)", Rp1(r, c, T0));
  out.add("R'2", "R2", R2(r, c, T0));
  return out;
}

// ---------------------------------------------------------------------------
// Lemma 3.10

Interval P_half(int k, const Interval& T0) {
  Interval A = A_half();
  Interval four_pi = Interval(4.0) * pi_();
  switch (k) {
    case 1: return kOne / four_pi;
    case 2: return (kTwo * gam() - log(pi_())) / four_pi;
    case 3: return A * sqrt(kTwo / pi_()) * sqrt(kOne + kOne / sqrt(T0));
    case 4: return A / (kTwo * sqrt(tpi()));
    case 5: return Interval(4.0) * A * sqrt(pi_());
    default: break;
  }
  throw std::out_of_range("P index");
}

CoeffVec P_sigma(int k, const SigmaRange& r) {
  CoeffVec A = A_sigma(r);
  switch (k) {
    case 1: return CoeffVec();
    case 2: return cw_prod(kOne / (Interval(4.0) * pi_()), zea_2m2s());
    case 3: return cw_prod(kTwo / powr(tpi(), r.sigma_min), A);
    case 4: return cw_prod((kOne - r.sigma_min) / powr(tpi(), r.sigma_min), A);
    case 5: return cw_prod(kTwo / powr(pi_(), r.sigma_min), A);
    default: break;
  }
  throw std::out_of_range("P index");
}

LemmaConstants Klog_constants(const SigmaRange& r, const Interval& T0) {
  require_T0(T0, 2 * M_PI + 1e-9, "Klog_constants");
  LemmaConstants out;
  out.name = "Klog_constants";
  out.range = r.mode;
  out.T0 = T0;
  for (int k = 1; k <= 5; ++k) {
    std::string idx = std::to_string(k);
    if (r.mode == RangeMode::tau_half)
      out.add("P_" + idx + ",1/2", "Lemma 3.10 table", P_half(k, T0));
    else
      out.add("P_" + idx + ",sigma", "Lemma 3.10 table", P_sigma(k, r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// chi on vertical lines

Interval R_prime_at(const Interval& a, const Interval& c, const Interval& T0) {
  Interval si = lambda_shift(c, T0, a);
  return (si - kHalf) * (sqr(si) / kTwo + ipow(si, 4) / (Interval(4.0) * sqr(T0))) +
         si / Interval(12.0) + ipow(si, 3) / Interval(3.0) + kOne / (Interval(90.0) * T0);
}

Interval R_prime_chi(const SigmaRange& r, const Interval& c, const Interval& T0) {
  return R_prime_at(kTwo - kTwo * r.sigma_min, c, T0);
}

Interval kappa(const SigmaRange& r, const Interval& c, const Interval& T0) {
  Interval x = R_prime_chi(r, c, T0) / sqr(T0);
  return exp(x) + exp(x - pi_() * T0);
}

LemmaConstants chi_line_constants(const SigmaRange& r, const Interval& c, const Interval& T0) {
  require_T0(T0, 50.0 - 1e-9, "chi_line_constants");
  check_lambda(c, T0);
  LemmaConstants out;
  out.name = "chi_line_constants";
  out.range = r.mode;
  out.T0 = T0;
  out.c = c;
  out.add("R'(3/2,c,T0)", "R'(a) at a = 3/2", R_prime_at(q(3, 2), c, T0));
  out.add("R'(1,c,T0)", "R'(a) at a = 1", R_prime_at(kOne, c, T0));
  out.add("R'", "R'(2-2smin, c, T0)", R_prime_chi(r, c, T0));
  out.add("kappa", "exp(R'/T0^2) + exp(R'/T0^2 - pi T0)", kappa(r, c, T0));
  return out;
}

// ---------------------------------------------------------------------------
// sum prefactors

namespace {
Prefactor pf(int sum, const Interval& v, double ec, double et, const std::string& label) {
  OrderTerm t;
  t.coeff = CoeffVec::scalar(v);
  t.e_const = Interval(ec);
  t.e_tau = Interval(et);
  t.log_power = 0;
  t.label = label;
  return {sum, t};
}
}  // namespace

std::vector<Prefactor> eta_coefficients(const SigmaRange& r, const Interval& T0) {
  Interval s = powr(tpi(), kHalf - r.sigma_max);
  Interval h4 = H4(r, T0);
  std::vector<Prefactor> v;
  v.push_back(pf(0, tpi(), 0, 0, "eta_out"));
  v.push_back(pf(1, kTwo * G1(T0), 0, 0, "eta1:2G1"));
  v.push_back(pf(1, kTwo * H3(T0), -1, 0, "eta1:2H3/T"));
  v.push_back(pf(2, kTwo * G2(T0), -0.5, 0, "eta2:2G2/sqrtT"));
  v.push_back(pf(3, kTwo * H1(T0), 1, 0, "eta3:2H1 T"));
  v.push_back(pf(3, kTwo * H2(T0), 0, 0, "eta3:2H2"));
  v.push_back(pf(4, kTwo * h4 / s, 1.5, -1, "eta4:2H4 T^{3/2-tau}/(2pi)^{1/2-smax}"));
  v.push_back(pf(5, kTwo * Hp1(T0), 0.5, 0, "eta5:2H'1 sqrtT"));
  v.push_back(pf(5, kTwo * Hp2(T0), 0, 0, "eta5:2H'2"));
  v.push_back(pf(5, kTwo * Hp3(T0), -0.5, 0, "eta5:2H'3/sqrtT"));
  v.push_back(pf(6, kTwo * (kHalf - r.sigma_min) * h4 / s, 0.5, -1,
                 "eta6:2(1/2-smin)H4 T^{1/2-tau}/(2pi)^{1/2-smax}"));
  return v;
}

std::vector<Prefactor> xi_coefficients(const SigmaRange& r, const Interval& c,
                                       const Interval& T0) {
  check_lambda(c, T0);
  Interval r1 = R1(r, c, T0);
  std::vector<Prefactor> v;
  v.push_back(pf(1, kTwo * Q_const(r, c, T0), 0, 0, "xi1:2Q"));
  v.push_back(pf(1, kTwo * R2(r, c, T0), 1, -2, "xi1:2R2 T^{1-2tau}"));
  v.push_back(pf(2, kTwo * Rp1(r, c, T0), 2, -2, "xi2:2R'1 T^{2-2tau}"));
  v.push_back(pf(3, kTwo * r1 * powr(tpi(), lambda_shift(c, T0, kOne)) / exp(c), 1.5, -2,
                 "xi3:2R1(2pi)^{1+lambda}/e^c T^{3/2-2tau}"));
  v.push_back(pf(4, kTwo * r1 / constants::log2(), 1.5, -2, "xi4:2R1/log2 T^{3/2-2tau}"));
  return v;
}

LemmaConstants eta_xi_coefficients(const SigmaRange& r, const Interval& c, const Interval& T0,
                                   SumLemma which) {
  LemmaConstants out;
  out.range = r.mode;
  out.T0 = T0;
  out.c = c;
  std::vector<Prefactor> v;
  if (which == SumLemma::In_constants) {
    out.name = "eta_coefficients";
    v = eta_coefficients(r, T0);
  } else {
    out.name = "xi_coefficients";
    v = xi_coefficients(r, c, T0);
  }
  for (const auto& p : v) {
    std::string order = "T^{" + Interval(p.term.e_const).str(4) + " + " +
                        Interval(p.term.e_tau).str(4) + " tau}";
    out.add(p.term.label, order, p.term.coeff[0]);
  }
  return out;
}

}  // namespace zmean
