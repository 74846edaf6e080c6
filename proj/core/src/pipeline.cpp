#include "zmean/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

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
Interval powr(const Interval& b, const Interval& x) { return exp(log(b) * x); }

std::string fmt_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string order_name(double ec, double et, int p) {
  std::string s = "T^(" + fmt_num(ec);
  if (et != 0.0) s += (et > 0 ? "+" : "") + fmt_num(et) + "tau";
  s += ")";
  if (p == 1) s += "log";
  if (p > 1) s += "log^" + std::to_string(p);
  return s;
}

OrderTerm ot(const CoeffVec& v, double ec, double et, int p, const std::string& label) {
  OrderTerm t;
  t.coeff = v;
  t.e_const = Interval(ec);
  t.e_tau = Interval(et);
  t.log_power = p;
  t.label = label;
  return t;
}

OrderTerm ot(const Interval& v, double ec, double et, int p, const std::string& label) {
  return ot(CoeffVec::scalar(v), ec, et, p, label);
}

OrderTerm target_term(double ec, double et, int p, BasisTag b) {
  return ot(CoeffVec(Interval(0.0), Interval(0.0), Interval(0.0), b), ec, et, p,
            order_name(ec, et, p));
}

struct Inner {
  int sum_index;
  OrderTerm term;
};

void expand(OrderLedger& L, const std::vector<Prefactor>& pre, const std::vector<Inner>& inner) {
  for (const auto& p : pre) {
    for (const auto& in : inner) {
      if (in.sum_index != p.sum_index) continue;
      OrderTerm t;
      t.coeff = cw_prod(p.term.coeff[0], in.term.coeff);
      t.e_const = p.term.e_const + in.term.e_const;
      t.e_tau = p.term.e_tau + in.term.e_tau;
      t.log_power = p.term.log_power + in.term.log_power;
      L.add(t, p.term.label + " * " + in.term.label);
    }
  }
}

// (1 - 1/sqrt T0)^{-a}
Interval shrink_factor(const Interval& T0, const Interval& a) {
  return kOne / powr(kOne - kOne / sqrt(T0), a);
}

std::vector<Inner> I_inner_range(const SigmaRange& r, const Interval& T0) {
  const Interval& smin = r.sigma_min;
  const Interval& smax = r.sigma_max;
  CoeffVec A = A_sigma(r);
  std::vector<Inner> v;
  auto add = [&](int s, const CoeffVec& c, double ec, double et, int p, const std::string& l) {
    v.push_back({s, ot(c, ec, et, p, l)});
  };
  add(0, cw_prod(kOne / powr(tpi(), kOne - smax), A), 1, -1, 0, "A/(2pi)^{1-smax}");

  add(1, cw_prod(kOne / sqrt(tpi()), zeb_2s()), 0.5, 0, 0, "zeta(2s)/sqrt(2pi)");
  Interval a1 = q(3, 2) - kTwo * smax;
  add(1, cw_prod(kOne / (a1 * powr(tpi(), a1)), zea_2m2s()), 1.5, -2, 0,
      "zeta(2-2s)/((3/2-2s)(2pi)^{3/2-2s})");
  add(1, cw_prod(kOne / powr(tpi(), kHalf - smax), C1_sigma(r)), 0.5, -1, 0,
      "C1/(2pi)^{1/2-s}");

  add(2, cw_prod(kOne / tpi(), zeb_2s()), 1, 0, 0, "zeta(2s)/(2pi)");
  Interval a2 = kTwo - kTwo * smax;
  add(2, cw_prod(kOne / (powr(tpi(), a2) * a2), zea_2m2s()), 2, -2, 0,
      "zeta(2-2s)/((2-2s)(2pi)^{2-2s})");
  add(2, cw_prod(kOne / powr(tpi(), kOne - smax), A), 1, -1, 0, "A/(2pi)^{1-s}");

  add(3, F_sigma_half(1, r, T0), 0.5, -2, 1, "F1s2");
  add(3, F_sigma_half(2, r, T0), 0.5, -2, 0, "F2s2");
  add(3, F_sigma_half(3, r, T0), 0, -1, 0, "F3s2");
  add(3, F_sigma_half(4, r, T0), -0.5, -1, 1, "F4s2");
  add(3, F_sigma_half(5, r, T0), -0.5, -1, 0, "F5s2");
  add(3, F_sigma_half(6, r, T0), -1, 0, 0, "F6s2");

  add(4, F_sigma_reflected(1, r, T0), 0, -1, 1, "F1s1");
  add(4, F_sigma_reflected(2, r, T0), 0, -1, 0, "F2s1");
  add(4, F_sigma_reflected(3, r, T0), -0.5, 0, 0, "F3s1");
  add(4, F_sigma_reflected(4, r, T0), -1, 0, 1, "F4s1");
  add(4, cw_sum(F_sigma_reflected(5, r, T0), F_sigma_reflected(6, r, T0)), -1, 0, 0,
      "F5s1+F6s1");

  Interval u5 = shrink_factor(T0, kHalf);
  add(5, cw_prod(u5 / sqrt(tpi()), zeb_2s()), 0, 0, 0, "u zeta(2s)/sqrt(2pi)");
  add(5, cw_prod(u5 / powr(tpi(), kHalf - kTwo * smax), zea_2m2s()), 1, -2, 0,
      "u zeta(2-2s)/(2pi)^{1/2-2s}");
  add(5, cw_prod(u5 * kTwo / powr(tpi(), kHalf - smax), A), 0.5, -1, 0, "u 2A/(2pi)^{1/2-s}");

  Interval u6 = shrink_factor(T0, kOne - smax);
  add(6, cw_prod(u6 / powr(tpi(), smin), zeb_2s()), -0.5, 1, 0, "v zeta(2s)/(2pi)^smin");
  add(6, cw_prod(u6 * powr(tpi(), smax), zea_2m2s()), 0.5, -1, 0, "v (2pi)^smax zeta(2-2s)");
  add(6, cw_prod(u6 * kTwo, A), 0, 0, 0, "v 2A");
  return v;
}

std::vector<Inner> I_inner_half(const Interval& T0) {
  Interval A = A_half();
  std::vector<Inner> v;
  auto add = [&](int s, const Interval& c, double ec, int p, const std::string& l) {
    v.push_back({s, ot(c, ec, 0, p, l)});
  };
  add(0, A / sqrt(tpi()), 0.5, 0, "A/sqrt(2pi)");
  add(1, kTwo / sqrt(tpi()), 0.5, 1, "2/sqrt(2pi)");
  add(1, C_half(X0_of(T0)), 0, 1, "C_1/2");
  add(2, kOne / tpi(), 1, 1, "1/(2pi)");
  add(2, (kTwo * gam() - kOne) / tpi(), 1, 0, "(2gamma-1)/(2pi)");
  add(2, A / sqrt(tpi()), 0.5, 0, "A/sqrt(2pi)");
  add(3, F_half_half(1, T0), -0.5, 1, "F1");
  add(3, F_half_half(2, T0) + F_half_half(3, T0), -0.5, 0, "F2+F3");
  add(3, F_half_half(4, T0), -1, 1, "F4");
  add(3, F_half_half(5, T0) + F_half_half(6, T0), -1, 0, "F5+F6");
  Interval s1 = sqrt(kOne - kOne / sqrt(T0));
  add(5, kOne / (sqrt(tpi()) * s1), 0, 1, "1/(sqrt(2pi) sqrt(1-1/sqrtT0))");
  Interval st = sqrt(T0);
  add(5,
      (kOne / sqrt(tpi()) * (st / (st - kOne) - log(tpi()) + kTwo * gam() - kOne) + kTwo * A) /
          s1,
      0, 0, "sum5 constant");
  return v;
}

std::vector<Inner> K_inner_range(const SigmaRange& r, const Interval& c, const Interval& T0) {
  const Interval& smin = r.sigma_min;
  Interval lam = c / log(T0);
  Interval ec = exp(c);
  CoeffVec A = A_sigma(r);
  std::vector<Inner> v;
  auto add = [&](int s, const CoeffVec& x, double e0, double et, int p, const std::string& l) {
    v.push_back({s, ot(x, e0, et, p, l)});
  };
  auto tail_sum = [&](int s, const Interval& base, const std::string& b) {
    Interval pl = powr(base, lam);
    Interval pl1 = powr(base, kOne + lam);
    add(s, CoeffVec::scalar(pl * (kTwo - kTwo * smin + lam) / (sqr(c) * ec)), 0, 0, 2,
        b + "^l (2-2smin+l)/(c^2 e^c)");
    add(s, CoeffVec(Interval(0.0), Interval(0.0), pl * kHalf / (c * ec)), 0, 0, 1,
        b + "^l (1/2)/(c e^c) [gap]");
    add(s, CoeffVec::scalar(pl / ec), 0, 0, 0, b + "^l/e^c");
    add(s, CoeffVec::scalar(pl1 * (Interval(3.0) - kTwo * smin + lam) / (c * ec)), -1, 0, 1,
        b + "^{1+l}(3-2smin+l)/(c e^c)");
    add(s, CoeffVec::scalar(pl1 / ec), -1, 0, 0, b + "^{1+l}/e^c");
  };
  tail_sum(1, tpi(), "(2pi)");
  Interval p2 = powr(tpi(), lam);
  Interval pa = powr(tpi(), kOne - smin + lam);
  add(2, cw_prod(p2 / ec, zea_2m2s()), -0.5, 0, 0, "(2pi)^l/e^c zeta(2-2s)");
  add(2, cw_prod(kTwo * pa / ec, A), -1, 1, 0, "2(2pi)^{1-smin+l}/e^c A");
  add(2, cw_prod(pa * (kOne - smin) / ec, A), -1.5, 1, 0, "(2pi)^{1-smin+l}(1-smin)/e^c A");
  add(3, P_sigma(1, r), 0, 0, 2, "P1");
  add(3, P_sigma(2, r), 0, 0, 1, "P2");
  add(3, P_sigma(3, r), -0.5, 1, 0, "P3");
  add(3, P_sigma(4, r), -1, 1, 1, "P4");
  add(3, P_sigma(5, r), -1, 1, 0, "P5");
  tail_sum(4, pi_(), "pi");
  return v;
}

std::vector<Inner> K_inner_half(const Interval& c, const Interval& T0) {
  Interval lam = c / log(T0);
  Interval ec = exp(c);
  Interval A = A_half();
  std::vector<Inner> v;
  auto add = [&](int s, const Interval& x, double e0, int p, const std::string& l) {
    v.push_back({s, ot(x, e0, 0, p, l)});
  };
  Interval p2 = powr(tpi(), lam);
  Interval p21 = powr(tpi(), kOne + lam);
  Interval p2h = powr(tpi(), kHalf + lam);
  add(1, p2 * (c + kOne) / (sqr(c) * ec), 0, 2, "(2pi)^l(c+1)/(c^2 e^c)");
  add(1, p2 / ec, 0, 0, "(2pi)^l/e^c");
  add(1, Interval(5.0) * p21 / (Interval(3.0) * c * ec), -1, 1, "5(2pi)^{1+l}/(3c e^c)");
  add(1, p21 / ec, -1, 0, "(2pi)^{1+l}/e^c");
  add(2, p2 / ec, -0.5, 1, "(2pi)^l/e^c");
  add(2, ((kTwo * gam() - log(tpi())) * p2 + kTwo * p2h * A) / ec, -0.5, 0,
      "((2gamma-log2pi)(2pi)^l + 2(2pi)^{1/2+l}A)/e^c");
  add(2, (p2 + kHalf * p2h * A) / ec, -1, 0, "((2pi)^l + (2pi)^{1/2+l}A/2)/e^c");
  add(3, P_half(1, T0), 0, 2, "P1");
  add(3, P_half(2, T0), 0, 1, "P2");
  add(3, P_half(3, T0), 0, 0, "P3");
  add(3, P_half(4, T0), -0.5, 1, "P4");
  add(3, P_half(5, T0), -0.5, 0, "P5");
  Interval pp = powr(pi_(), lam);
  Interval pp1 = powr(pi_(), kOne + lam);
  add(4, pp * (c + kOne) / (sqr(c) * ec), 0, 2, "pi^l(c+1)/(c^2 e^c)");
  add(4, pp * (gam() + kOne - log(pi_())) / (c * ec), 0, 1, "pi^l(gamma+1-log pi)/(c e^c)");
  add(4, pp / ec, 0, 0, "pi^l/e^c");
  add(4, Interval(5.0) * pp1 / (Interval(3.0) * c * ec), -1, 1, "5pi^{1+l}/(3c e^c)");
  add(4, pp1 / ec, -1, 0, "pi^{1+l}/e^c");
  return v;
}

TauRange half_tau() { return {kHalf, kHalf}; }

// ---- J (basis over {1, 1/sigma, 1/(1/2-sigma)^2}) ----

CoeffVec J_L1_1mtlq(const SigmaRange& r, const Interval& c, const Interval& T0) {
  Interval v = kappa(r, c, T0) / kTwo * sqr(omega(T0)) * r.sigma_max /
               powr(tpi(), kOne - r.sigma_max);
  return CoeffVec::scalar(v, BasisTag::gap_squared);
}

CoeffVec J_L1_32m2tl(const SigmaRange& r, const Interval& c, const Interval& T0) {
  Interval g = (kOne + log(tpi()) / log(T0 / tpi())) / powr(tpi(), kHalf - r.sigma_max);
  Interval term1 = kTwo * omega(T0) * g;
  Interval term2 = (exp(c) - kOne) * g;
  Interval k = kappa(r, c, T0) / kTwo;
  Interval tail = kOne / powr(tpi(), kOne - r.sigma_max);
  Interval v = r.sigma_min.certainly_ge(kHalf) ? k * term2 * tail : k * (term1 + term2) * tail;
  return CoeffVec::scalar(v, BasisTag::gap_squared);
}

Interval J_L2_const(const SigmaRange& r, const Interval& c, const Interval& T0) {
  return kappa(r, c, T0) * exp(c) / kTwo * lambda_shift(c, T0, kOne - r.sigma_min) /
         powr(tpi(), q(3, 2) - kTwo * r.sigma_max);
}

}  // namespace

// ---------------------------------------------------------------------------

PipelineConfig PipelineConfig::make(double t0, const std::string& c, RangeMode m, int digits) {
  PipelineConfig cfg;
  cfg.T0 = Interval(t0);
  cfg.c = Interval::parse(c);
  cfg.c_text = c;
  cfg.range = SigmaRange::from_mode(m);
  cfg.digits = digits;
  return cfg;
}

void PipelineConfig::validate() const {
  if (!(T0.lo() >= 50.0)) throw parameter_error("T0 must be >= 50");
  if (!T0.is_finite()) throw parameter_error("T0 must be finite");
  if (digits < 1 || digits > 12) throw parameter_error("digits must be in 1..12");
  check_lambda(c, T0);
  if (!(grid_prec > 0.0)) throw parameter_error("grid precision must be positive");
}

const ReportEntry& ConstantReport::add(const std::string& name, const std::string& ref,
                                       const Interval& v, std::vector<std::string> terms) {
  return add_rounded(name, ref, v, roundup_digits(v, config.digits), std::move(terms));
}

const ReportEntry& ConstantReport::add_rounded(const std::string& name, const std::string& ref,
                                               const Interval& v, const Decimal& r,
                                               std::vector<std::string> terms) {
  for (auto& e : entries) {
    if (e.name == name) {
      e = {name, ref, v, r, std::move(terms)};
      return e;
    }
  }
  entries.push_back({name, ref, v, r, std::move(terms)});
  return entries.back();
}

void ConstantReport::merge(const ConstantReport& o) {
  for (const auto& e : o.entries) add_rounded(e.name, e.lemma_ref, e.value, e.rounded, e.terms);
}

const ReportEntry* ConstantReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

const ReportEntry& ConstantReport::get(const std::string& name) const {
  const ReportEntry* e = find(name);
  if (!e) throw std::out_of_range("report has no entry " + name);
  return *e;
}

void OrderLedger::add(const OrderTerm& t0, const std::string& part) {
  OrderTerm t = t0;
  if (fold_half_) {
    t.e_const = t.e_const + t.e_tau * kHalf;
    t.e_tau = Interval(0.0);
  }
  double ec = t.e_const.mid(), et = t.e_tau.mid();
  for (auto& b : buckets_) {
    if (b.term.e_const.mid() == ec && b.term.e_tau.mid() == et &&
        b.term.log_power == t.log_power) {
      b.term.coeff = cw_sum(b.term.coeff, t.coeff);
      b.parts.push_back(part);
      return;
    }
  }
  t.label = order_name(ec, et, t.log_power);
  buckets_.push_back({t, {part}});
}

const Bucket* OrderLedger::find(double ec, double et, int p) const {
  for (const auto& b : buckets_)
    if (b.term.e_const.mid() == ec && b.term.e_tau.mid() == et && b.term.log_power == p)
      return &b;
  return nullptr;
}

OrderLedger I_orders(const SigmaRange& r, const Interval& T0) {
  bool half = r.mode == RangeMode::tau_half;
  OrderLedger L(half);
  auto eta = eta_coefficients(r, T0);
  if (half) {
    std::vector<Prefactor> used;
    for (const auto& p : eta)
      if (p.sum_index != 4 && p.sum_index != 6) used.push_back(p);
    expand(L, used, I_inner_half(T0));
  } else {
    expand(L, eta, I_inner_range(r, T0));
  }
  return L;
}

OrderLedger K_orders(const SigmaRange& r, const Interval& c, const Interval& T0) {
  bool half = r.mode == RangeMode::tau_half;
  OrderLedger L(half);
  auto xi = xi_coefficients(r, c, T0);
  expand(L, xi, half ? K_inner_half(c, T0) : K_inner_range(r, c, T0));
  return L;
}

Merged merge_orders(const OrderLedger& L, const OrderTerm& target, const Interval& T0,
                    const TauRange& range, const std::function<bool(const Bucket&)>& keep) {
  Merged m;
  m.vec = target.coeff;
  for (int i = 0; i < 3; ++i) m.vec[i] = Interval(0.0);
  for (const auto& b : L.buckets()) {
    if (keep && !keep(b)) {
      m.terms.push_back("dropped " + b.term.label);
      continue;
    }
    Absorbed a = absorb(b.term, target, T0, range);
    m.vec = cw_sum(m.vec, a.vec);
    m.terms.push_back(b.term.label + " x " + a.factor.str(8));
  }
  return m;
}

// ---- I ----

Interval I_half_final(const Interval& T0) {
  auto L = I_orders(SigmaRange::half(), T0);
  auto m = merge_orders(L, target_term(0.5, 0, 1, BasisTag::gap_linear), T0, half_tau());
  return m.vec[0];
}

CoeffVec I_range_final(const SigmaRange& r, const Interval& T0) {
  auto L = I_orders(r, T0);
  return merge_orders(L, target_term(1.5, -2, 1, BasisTag::gap_linear), T0, r.tau_range()).vec;
}

// ---- J ----

Interval J_half_log2(const Interval& c, const Interval& T0) {
  SigmaRange h = SigmaRange::half();
  CoeffVec x1 = J_L1_1mtlq(h, c, T0);
  if (!x1.is_zero(2)) throw assembly_error("J: gap component at tau = 1/2");
  return x1[0] + x1[1] / kHalf + J_L2_const(h, c, T0) * kHalf;
}

Interval J_half_log(const Interval& c, const Interval& T0) {
  SigmaRange h = SigmaRange::half();
  CoeffVec x1 = J_L1_32m2tl(h, c, T0);
  if (!x1.is_zero(2)) throw assembly_error("J: gap component at tau = 1/2");
  Interval k = J_L2_const(h, c, T0);
  Interval lt = log(tpi());
  Interval x2l = k * max(Interval(0.0), kTwo * gam() - lt);
  Interval x2 = k * (kHalf * sqr(lt) - kTwo * gam() * lt + D_half());
  OrderTerm t = ot(x2, 0.5, 0, 0, "J L2 sqrtT");
  Interval f = absorb_factor(t, target_term(0.5, 0, 1, BasisTag::gap_linear), T0, half_tau());
  return x1[0] + x1[1] / kHalf + x2l + x2 * f;
}

CoeffVec J_range_final(const SigmaRange& r, const Interval& c, const Interval& T0) {
  Interval k = J_L2_const(r, c, T0);
  CoeffVec z = zea_2m2s();
  CoeffVec ze(z[0], z[1], z[2] * (kHalf - r.sigma_min), BasisTag::gap_squared);
  OrderTerm target = target_term(1.5, -2, 1, BasisTag::gap_squared);
  OrderTerm lower = ot(cw_prod(k, D_sigma(r)), 1.5, -2, 0, "J L2 T^(3/2-2tau)");
  CoeffVec x = cw_sum(J_L1_32m2tl(r, c, T0), cw_prod(k, ze));
  return cw_sum(x, absorb(lower, target, T0, r.tau_range()).vec);
}

CoeffVec J_range_log2(const SigmaRange& r, const Interval& c, const Interval& T0) {
  return J_L1_1mtlq(r, c, T0);
}

// ---- K ----

Interval K_half_log2(const Interval& c, const Interval& T0) {
  auto L = K_orders(SigmaRange::half(), c, T0);
  const Bucket* b = L.find(0.5, 0, 2);
  if (!b) throw assembly_error("K: no sqrtT log^2 bucket");
  return b->term.coeff[0];
}

Interval K_half_log(const Interval& c, const Interval& T0) {
  auto L = K_orders(SigmaRange::half(), c, T0);
  auto keep = [](const Bucket& b) {
    return !(b.term.e_const.mid() == 0.5 && b.term.log_power == 2);
  };
  return merge_orders(L, target_term(0.5, 0, 1, BasisTag::gap_linear), T0, half_tau(), keep)
      .vec[0];
}

CoeffVec K_range_final(const SigmaRange& r, const Interval& c, const Interval& T0,
                       bool drop_log2) {
  auto L = K_orders(r, c, T0);
  std::function<bool(const Bucket&)> keep;
  if (drop_log2) keep = [](const Bucket& b) { return b.term.log_power != 2; };
  return merge_orders(L, target_term(1.5, -2, 2, BasisTag::gap_linear), T0, r.tau_range(), keep)
      .vec;
}

// ---------------------------------------------------------------------------
// reports

namespace {

void add_buckets(ConstantReport& rep, const std::string& prefix, const OrderLedger& L,
                 const char* ref) {
  for (const auto& b : L.buckets()) {
    for (int i = 0; i < 3; ++i) {
      if (b.term.coeff.is_zero(i)) continue;
      rep.add(prefix + "[" + b.term.label + "][" + std::to_string(i) + "]", ref, b.term.coeff[i],
              b.parts);
    }
  }
}

bool drop_k_log2(const PipelineConfig& cfg) {
  return cfg.k_quarter_drops_log2 && cfg.range.mode == RangeMode::tau_quarter_range;
}

Interval fold_inv_tau(const CoeffVec& v, const SigmaRange& r) {
  return v[0] + v[1] / r.sigma_min;
}

}  // namespace

ConstantReport assemble_I(const PipelineConfig& cfg) {
  cfg.validate();
  ConstantReport rep;
  rep.config = cfg;
  const auto& r = cfg.range;
  auto L = I_orders(r, cfg.T0);
  add_buckets(rep, "I.order", L, "Prop 3.1");
  if (r.mode == RangeMode::tau_half) {
    auto m = merge_orders(L, target_term(0.5, 0, 1, BasisTag::gap_linear), cfg.T0, half_tau());
    rep.add("I.main_TlogT", "Prop 3.1", Interval(1.0));
    rep.add("I.main_T", "Prop 3.1", kTwo * gam() - kOne - log(tpi()));
    rep.add("I_a", "Prop 3.1", m.vec[0], m.terms);
  } else {
    auto m = merge_orders(L, target_term(1.5, -2, 1, BasisTag::gap_linear), cfg.T0, r.tau_range());
    if (r.mode == RangeMode::tau_quarter_range) {
      rep.add("I4_2", "Prop 3.1", m.vec[2], m.terms);
      rep.add("I4_c", "Prop 3.1", fold_inv_tau(m.vec, r), m.terms);
    } else {
      rep.add("I0_vec_c", "Sec 5", m.vec[0], m.terms);
      rep.add("I0_vec_inv_tau", "Sec 5", m.vec[1], m.terms);
      rep.add("I0_vec_gap", "Sec 5", m.vec[2], m.terms);
    }
  }
  return rep;
}

ConstantReport assemble_J(const PipelineConfig& cfg) {
  cfg.validate();
  ConstantReport rep;
  rep.config = cfg;
  const auto& r = cfg.range;
  rep.add("kappa", "Prop 3.2", kappa(r, cfg.c, cfg.T0));
  rep.add("omega", "Cor 2.3", omega(cfg.T0));
  if (r.mode == RangeMode::tau_half) {
    rep.add("J_a", "Prop 3.2", J_half_log2(cfg.c, cfg.T0));
    rep.add("J_b", "Prop 3.2", J_half_log(cfg.c, cfg.T0));
    return rep;
  }
  CoeffVec v = J_range_final(r, cfg.c, cfg.T0);
  CoeffVec w = J_range_log2(r, cfg.c, cfg.T0);
  if (!w.is_zero(2))
    throw assembly_error("J: T^(1-tau)log^2 term has a 1/(1/2-tau)^2 component");
  if (r.mode == RangeMode::tau_quarter_range) {
    rep.add("J4_2q", "Prop 3.2", v[2]);
    rep.add("J4_c", "Prop 3.2", fold_inv_tau(v, r));
    rep.add("J4_cp", "Prop 3.2", fold_inv_tau(w, r));
    rep.add("J4_cp_2q", "Prop 3.2", w[2]);
  } else {
    rep.add("J0_vec_c", "Sec 5", v[0]);
    rep.add("J0_vec_inv_tau", "Sec 5", v[1]);
    rep.add("J0_vec_gap2", "Sec 5", v[2]);
    rep.add("J0_log2_c", "Sec 5", w[0]);
    rep.add("J0_log2_inv_tau", "Sec 5", w[1]);
    rep.add("J0_log2_gap2", "Sec 5", w[2]);
  }
  return rep;
}

ConstantReport assemble_K(const PipelineConfig& cfg) {
  cfg.validate();
  ConstantReport rep;
  rep.config = cfg;
  const auto& r = cfg.range;
  auto L = K_orders(r, cfg.c, cfg.T0);
  add_buckets(rep, "K.order", L, "Prop 3.3");
  if (r.mode == RangeMode::tau_half) {
    rep.add("K_a", "Prop 3.3", K_half_log2(cfg.c, cfg.T0));
    rep.add("K_b", "Prop 3.3", K_half_log(cfg.c, cfg.T0));
    return rep;
  }
  CoeffVec v = K_range_final(r, cfg.c, cfg.T0, drop_k_log2(cfg));
  if (r.mode == RangeMode::tau_quarter_range) {
    rep.add("K4_2", "Prop 3.3", v[2]);
    rep.add("K4_c", "Prop 3.3", fold_inv_tau(v, r));
  } else {
    rep.add("K0_vec_c", "Sec 5", v[0]);
    rep.add("K0_vec_inv_tau", "Sec 5", v[1]);
    rep.add("K0_vec_gap", "Sec 5", v[2]);
  }
  return rep;
}

namespace {
Interval dec(const ConstantReport& r, const std::string& n) {
  return r.rounded(n).to_interval();
}
}  // namespace

ConstantReport assemble_main(const PipelineConfig& cfg) {
  cfg.validate();
  ConstantReport rep;
  rep.config = cfg;
  auto I = assemble_I(cfg);
  auto J = assemble_J(cfg);
  auto K = assemble_K(cfg);
  rep.merge(I);
  rep.merge(J);
  rep.merge(K);
  Interval L = log(cfg.T0);
  Interval st = sqrt(cfg.T0);
  switch (cfg.range.mode) {
    case RangeMode::tau_half: {
      // sum of two rounded decimals with equal digits: exact, no further rounding
      Decimal ja = J.rounded("J_a"), ka = K.rounded("K_a");
      Decimal a{2 * ja.scaled + ka.scaled, ja.digits};
      rep.add_rounded("Main_a", "Thm 3.4", a.to_interval(), a, {"2 J_a + K_a"});
      Interval b = dec(I, "I_a") + kTwo * dec(J, "J_b") + dec(K, "K_b") + pi_() / kTwo / (st * L);
      rep.add("Main_b", "Thm 3.4", b, {"I_a + 2 J_b + K_b + pi/(2 sqrtT0 log T0)"});
      Interval m = dec(rep, "Main_a") + dec(rep, "Main_b") / L;
      rep.add("Main", "Thm 1.1", m, {"Main_a + Main_b/log T0"});
      break;
    }
    case RangeMode::tau_quarter_range: {
      Interval mod = kHalf - cfg.range.sigma_min;
      Interval q2 = dec(I, "I4_2") * mod / L + kTwo * dec(J, "J4_2q") / L + dec(K, "K4_2") * mod;
      rep.add("Main4_2q", "Thm 3.4", q2, {"I4_2 m/log T0 + 2 J4_2q/log T0 + K4_2 m"});
      Interval c = dec(I, "I4_c") / L + kTwo * dec(J, "J4_c") / L + kTwo * dec(J, "J4_cp") +
                   dec(K, "K4_c") + pi_() / kTwo / (st * sqr(L));
      rep.add("Main4_c", "Thm 3.4", c,
              {"I4_c/log T0 + 2 J4_c/log T0 + 2 J4_cp + K4_c + pi/(2 sqrtT0 log^2 T0)"});
      Interval m = dec(rep, "Main4_2q") + dec(rep, "Main4_c") * sqr(mod);
      rep.add("Main14", "Thm 1.1", m, {"Main4_2q + Main4_c m^2"});
      break;
    }
    case RangeMode::tau_open_range: {
      Interval mod = kHalf - cfg.range.sigma_min;
      CoeffVec Iv = I_range_final(cfg.range, cfg.T0);
      CoeffVec Jv = J_range_final(cfg.range, cfg.c, cfg.T0);
      CoeffVec Jw = J_range_log2(cfg.range, cfg.c, cfg.T0);
      CoeffVec Kv = K_range_final(cfg.range, cfg.c, cfg.T0, false);
      Interval other = pi_() / kTwo / (st * sqr(L));
      Interval m2q = Iv[2] * mod / L + kTwo * (Jv[2] / L + Jw[2]) + Kv[2] * mod;
      Interval m0 = Iv[1] / L + kTwo * (Jv[1] / L + Jw[1]) + Kv[1];
      Interval mc = Iv[0] / L + kTwo * (Jv[0] / L + Jw[0]) + Kv[0] + other;
      rep.add("Main0_2q", "Sec 5", m2q);
      rep.add("Main0_0", "Sec 5", m0);
      rep.add("Main0_c", "Sec 5", mc);
      break;
    }
  }
  return rep;
}

Interval published_i_bound() { return Interval(319.387276810602); }
Interval published_ip_bound() { return Interval(159.693638459782); }

ConstantReport assemble_corollary(const PipelineConfig& cfg0, const Interval& i_bound) {
  PipelineConfig cfg = cfg0;
  cfg.range = SigmaRange::quarter();
  ConstantReport rep = assemble_main(cfg);
  rep.config = cfg0;
  const Interval& T0 = cfg.T0;
  Interval L = log(T0);
  Interval st = sqrt(T0);
  Interval mod = kHalf - cfg.range.sigma_min;
  Interval Z = Z_const(cfg.range, T0);
  Interval zf = kOne + Z / sqr(T0);
  // 2 (2pi/T0)^{1 - 2 tau'} at tau' = 1/2
  Interval pre = kTwo * powr(tpi() / T0, Interval(0.0));
  rep.add("V'", "Cor 3.5", V_prime(cfg.range, T0));
  rep.add("W", "Cor 3.5", W_const(cfg.range, T0));
  rep.add("Z", "Cor 3.5", Z);
  rep.add("i", "Cor 3.5", i_bound);
  rep.add("z_bound_gap2", "Cor 3.5", T0 / Interval(8.0), {"|z| <= (1 + 1/(8(1/2-tau')^2)) T0"});
  rep.add("z_bound_const", "Cor 3.5", T0);
  Interval c2q = pre * zf * dec(rep, "Main4_2q") + q(1, 8) * T0 * zf / (st * sqr(L));
  rep.add("Cor4_2q", "Cor 3.5", c2q);
  Interval cc = pre * zf * dec(rep, "Main4_c") + (i_bound + T0 * zf) / (st * sqr(L));
  rep.add("Cor4_c", "Cor 3.5", cc);
  Interval m = dec(rep, "Cor4_2q") + dec(rep, "Cor4_c") * sqr(mod);
  rep.add("Main34", "Thm 1.1", m, {"Cor4_2q + Cor4_c m^2"});
  return rep;
}

ConstantReport widened_range(const PipelineConfig& cfg0, const Interval& ip_bound) {
  PipelineConfig cfg = cfg0;
  cfg.range = SigmaRange::open();
  ConstantReport rep = assemble_main(cfg);
  const Interval& T0 = cfg.T0;
  Interval L = log(T0);
  Interval st = sqrt(T0);
  Interval Z = Z_const(cfg.range, T0);
  Interval zf = kOne + Z / sqr(T0);
  Interval pre = kTwo * powr(tpi() / T0, Interval(0.0));
  rep.add("Z0", "Sec 5", Z);
  rep.add("i'", "Sec 5", ip_bound);
  Interval den = st * sqr(L);
  rep.add("Cor0_2q", "Sec 5", pre * zf * dec(rep, "Main0_2q") + q(1, 4) * T0 * zf / den);
  rep.add("Cor0_1q", "Sec 5",
          pre * zf * dec(rep, "Main0_0") * kHalf + (ip_bound + q(1, 4) * T0 * zf) / den);
  rep.add("Cor0_c", "Sec 5", pre * zf * dec(rep, "Main0_c") + T0 * zf / den);
  return rep;
}

// ---------------------------------------------------------------------------
// tables

Interval m11(const Interval& c, const Interval& T0) {
  return kTwo * J_half_log2(c, T0) + K_half_log2(c, T0);
}

Interval m12(const Interval& c, const Interval& T0) {
  return I_half_final(T0) + kTwo * J_half_log(c, T0) + K_half_log(c, T0) +
         pi_() / kTwo / (sqrt(T0) * log(T0));
}

Interval m21(const Interval& c, const Interval& T0) {
  SigmaRange r = SigmaRange::quarter();
  Interval mod = kHalf - r.sigma_min;
  Interval L = log(T0);
  return I_range_final(r, T0)[2] * mod / L + kTwo * J_range_final(r, c, T0)[2] / L +
         K_range_final(r, c, T0, true)[2] * mod;
}

Interval m22(const Interval& c, const Interval& T0) {
  SigmaRange r = SigmaRange::quarter();
  Interval L = log(T0);
  CoeffVec w = J_range_log2(r, c, T0);
  if (!w.is_zero(1) || !w.is_zero(2)) throw assembly_error("J: unexpected log^2 components");
  return fold_inv_tau(I_range_final(r, T0), r) / L +
         kTwo * fold_inv_tau(J_range_final(r, c, T0), r) / L + kTwo * w[0] +
         fold_inv_tau(K_range_final(r, c, T0, true), r) + pi_() / kTwo / (sqrt(T0) * sqr(L));
}

TableRow table_row(const Interval& T0, const Interval& c) {
  check_lambda(c, T0);
  TableRow row;
  row.T0 = T0;
  row.c = c;
  Interval L = log(T0);
  row.m11 = m11(c, T0);
  row.m12 = m12(c, T0);
  row.e1 = row.m11 + row.m12 / L;
  row.m21 = m21(c, T0);
  row.m22 = m22(c, T0);
  row.e2 = row.m21 + row.m22 * sqr(q(1, 4));
  return row;
}

std::vector<TableRow> table_T0(const std::vector<Interval>& T0_list, const Interval& c) {
  std::vector<TableRow> out;
  out.reserve(T0_list.size());
  for (const auto& t : T0_list) {
    if (!(t.lo() >= 50.0)) throw parameter_error("table: T0 must be >= 50");
    out.push_back(table_row(t, c));
  }
  return out;
}

Decimal best_c(const Interval& T0, int digits) {
  if (!(T0.lo() >= 50.0)) throw parameter_error("best_c: T0 must be >= 50");
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Decimal limit = rounddown_digits(log(T0) / kTwo, digits);
  Decimal best{0, digits};
  Interval best_y(std::numeric_limits<double>::infinity());
  for (std::int64_t n = 1; n <= limit.scaled; ++n) {
    Interval c = Interval::rational(n, scale);
    Interval y;
    try {
      y = m11(c, T0);
    } catch (const domain_error&) {
      continue;
    }
    if (y.certainly_lt(best_y)) {
      best = {n, digits};
      best_y = y;
    }
  }
  return best;
}

std::vector<std::string> sanity_checks(const Interval& T0, const Interval& c) {
  std::vector<std::string> bad;
  if (!T0.certainly_gt(exp(kTwo))) bad.push_back("T0 > e^2");
  if (!(T0 / tpi()).certainly_gt(kOne)) bad.push_back("T0/(2pi) > 1");
  if (!(T0 / (Interval(4.0) * pi_())).certainly_lt((T0 - sqrt(T0)) / tpi()))
    bad.push_back("T0/(4pi) < (T0 - sqrt T0)/(2pi)");
  if (!(kTwo * log(T0 / tpi())).certainly_gt(Interval(4.0) * (kOne - gam())))
    bad.push_back("2 log(T0/2pi) > 4(1 - gamma)");
  Interval s2 = sqrt(kTwo);
  Interval klog = -kTwo * s2 + log(kOne + sqrt(kOne + kOne / sqrt(T0))) + log(q(7, 3)) -
                  log((s2 + kOne) / (s2 - kOne));
  if (!klog.certainly_lt(Interval(0.0))) bad.push_back("sqrt T term in the K log-sum negative");
  if (!(T0.lo() >= 50.0)) bad.push_back("T0 >= 50");
  if (!(c / log(T0)).certainly_lt(kHalf)) bad.push_back("lambda < 1/2");
  return bad;
}

}  // namespace zmean
