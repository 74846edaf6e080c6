#include "zmean/special_fn.hpp"

#include <mpfr.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>

namespace zmean {

using constants::pi;

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator*(const Interval& a, const Complex& b) { return {a * b.re, a * b.im}; }

Complex operator/(const Complex& a, const Complex& b) {
  Interval d = sqr(b.re) + sqr(b.im);
  if (d.lo() <= 0) throw domain_error("complex division by box containing 0");
  Complex n = a * b.conj();
  return {n.re / d, n.im / d};
}

Interval abs_sq(const Complex& z) { return sqr(z.re) + sqr(z.im); }
Interval abs(const Complex& z) { return sqrt(abs_sq(z)); }

Complex cexp(const Complex& z) {
  Interval m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex pow_neg(const Interval& log_n, const Complex& s) {
  Interval m = exp(-(s.re * log_n));
  Interval ph = s.im * log_n;
  return {m * cos(ph), -(m * sin(ph))};
}

ComplexBall::ComplexBall(double re, double im, double r) : mid_re(re), mid_im(im), rad(r) {
  if (!(r >= 0)) throw domain_error("ball radius must be nonnegative");
}

ComplexBall ComplexBall::from_box(const Complex& z) {
  double mr = z.re.mid(), mi = z.im.mid();
  double rr = z.re.rad(), ri = z.im.rad();
  double r = sqrt_up(add_up(mul_up(rr, rr), mul_up(ri, ri)));
  return {mr, mi, r};
}

Complex ComplexBall::box() const {
  return {Interval(add_down(mid_re, -rad), add_up(mid_re, rad)),
          Interval(add_down(mid_im, -rad), add_up(mid_im, rad))};
}

bool ComplexBall::contains(double re, double im) const {
  Interval dr = Interval(re) - Interval(mid_re);
  Interval di = Interval(im) - Interval(mid_im);
  Interval d2 = sqr(dr) + sqr(di);
  return d2.lo() <= mul_up(rad, rad);
}

ZetaEvalParams::ZetaEvalParams(int n, int m) : n_terms(n), em_order(m) {
  if (m < 1 || m > 24) throw params_error("em_order out of range");
  if (n < 2 * m) throw params_error("n_terms must be at least 2*em_order");
}

ZetaEvalParams ZetaEvalParams::for_height(double t) {
  int n = std::max(50, static_cast<int>(std::ceil(2.0 * std::fabs(t))));
  return {n, 12};
}

namespace {

constexpr int kMaxBernoulli = 26;

std::array<Interval, kMaxBernoulli + 1> make_bernoulli() {
  std::array<Interval, kMaxBernoulli + 1> out{};
  mpfr_t z, p, tp;
  mpfr_inits2(256, z, p, tp, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(tp, MPFR_RNDN);
  mpfr_mul_ui(tp, tp, 2, MPFR_RNDN);
  for (int k = 1; k <= kMaxBernoulli; ++k) {
    // B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}
    mpfr_zeta_ui(z, static_cast<unsigned long>(2 * k), MPFR_RNDN);
    mpfr_pow_ui(p, tp, static_cast<unsigned long>(2 * k), MPFR_RNDN);
    mpfr_div(z, z, p, MPFR_RNDN);
    mpfr_mul_ui(z, z, 2, MPFR_RNDN);
    if (k % 2 == 0) mpfr_neg(z, z, MPFR_RNDN);
    double lo = next_down(mpfr_get_d(z, MPFR_RNDD));
    double hi = next_up(mpfr_get_d(z, MPFR_RNDU));
    out[static_cast<std::size_t>(k)] = Interval(lo, hi);
  }
  mpfr_clears(z, p, tp, static_cast<mpfr_ptr>(nullptr));
  return out;
}

const std::array<Interval, kMaxBernoulli + 1>& bernoulli_table() {
  static const auto table = make_bernoulli();
  return table;
}

Interval log_int(int n) { return log(Interval(static_cast<double>(n))); }

// sup |s(s+1)...(s+m-1)| over the box
double rising_abs_hi(const Complex& s, int m) {
  Interval acc(1.0);
  for (int j = 0; j < m; ++j) acc = acc * abs(Complex(s.re + Interval(static_cast<double>(j)), s.im));
  return acc.hi();
}

Complex widen(const Complex& z, double r) {
  Interval e(-r, r);
  return {z.re + e, z.im + e};
}

void check_domain(const Complex& s, const ZetaEvalParams& p) {
  if (s.contains(1.0, 0.0)) throw pole_error("zeta: box contains the pole s = 1");
  if (!(s.re.lo() > -(2.0 * p.em_order + 1.0) + 1.0))
    throw params_error("zeta: real part too negative for the Euler-Maclaurin order");
}

}  // namespace

const Interval& bernoulli_ratio(int k) {
  if (k < 1 || k > kMaxBernoulli) throw domain_error("bernoulli index out of range");
  return bernoulli_table()[static_cast<std::size_t>(k)];
}

Interval zeta_em_remainder(const Complex& s, const ZetaEvalParams& p) {
  const int M = p.em_order;
  double sig = s.re.lo();
  Interval denom = Interval(sig) + Interval(2.0 * M + 1.0);
  if (denom.lo() <= 0) throw params_error("zeta remainder: sigma + 2M + 1 <= 0");
  Interval N(static_cast<double>(p.n_terms));
  Interval b = abs(bernoulli_ratio(M + 1));
  Interval np = exp(-(Interval(sig) + Interval(2.0 * M + 1.0)) * log(N));
  Interval r = Interval(rising_abs_hi(s, 2 * M + 2)) * b * np / denom;
  if (!std::isfinite(r.hi())) throw params_error("zeta remainder diverges");
  return Interval(0.0, r.hi());
}

namespace {

// N^{-s}/2 + Bernoulli terms + remainder, i.e. the tail without N^{1-s}/(s-1)
Complex em_tail_regular(const Complex& s, const ZetaEvalParams& p, const Complex& nps) {
  const int M = p.em_order;
  Interval N(static_cast<double>(p.n_terms));
  Complex total = Interval(0.5) * nps;
  Complex P = s;  // rising factorial s^{(2k-1)}
  Interval npow = Interval(1.0) / N;  // N^{-(2k-1)}
  Interval n2 = Interval(1.0) / sqr(N);
  for (int k = 1; k <= M; ++k) {
    total = total + (bernoulli_ratio(k) * npow) * (P * nps);
    // advance P to s^{(2k+1)}
    P = P * (s + Complex(Interval(2.0 * k - 1.0)));
    P = P * (s + Complex(Interval(2.0 * k)));
    npow = npow * n2;
  }
  double r = zeta_em_remainder(s, p).hi();
  return widen(total, r);
}

// (e^w - 1)/w for |w| < 2
Complex expm1_over(const Complex& w) {
  Interval rho = abs(w);
  if (!(rho.hi() < 2.0)) throw params_error("expm1_over: |w| too large");
  const int K = 24;
  Complex term(Interval(1.0)), sum(Interval(1.0));
  Interval fact(1.0);  // (k+1)!
  for (int k = 1; k < K; ++k) {
    term = (Interval(1.0) / Interval(k + 1.0)) * (term * w);
    sum = sum + term;
    fact = fact * Interval(k + 1.0);
  }
  fact = fact * Interval(K + 1.0);
  Interval tail = ipow(Interval(rho.hi()), K) / fact / (Interval(1.0) - Interval(rho.hi()) / Interval(K + 2.0));
  return widen(sum, tail.hi());
}

}  // namespace

Complex zeta_em_tail(const Complex& s, const ZetaEvalParams& p) {
  check_domain(s, p);
  Interval N(static_cast<double>(p.n_terms));
  Complex nps = pow_neg(log(N), s);  // N^{-s}
  Complex a = (N * nps) / (s - Complex(Interval(1.0)));
  return a + em_tail_regular(s, p, nps);
}

Complex zeta_regular_em(const Complex& s, const ZetaEvalParams& p) {
  if (!(s.re.lo() > -(2.0 * p.em_order + 1.0) + 1.0))
    throw params_error("zeta: real part too negative for the Euler-Maclaurin order");
  Interval N(static_cast<double>(p.n_terms));
  Interval lN = log(N);
  Complex nps = pow_neg(lN, s);
  // (N^{1-s} - 1)/(s - 1) = -log N (e^w - 1)/w, w = (1 - s) log N
  Complex w = lN * (Complex(Interval(1.0)) - s);
  Complex total = -(lN * expm1_over(w)) + em_tail_regular(s, p, nps);
  Complex sum(Interval(1.0), Interval(0.0));
  for (int n = 2; n < p.n_terms; ++n) sum = sum + pow_neg(log_int(n), s);
  return sum + total;
}

Complex zeta_prime_em_tail(const Complex& s, const ZetaEvalParams& p) {
  check_domain(s, p);
  const int M = p.em_order;
  Interval N(static_cast<double>(p.n_terms));
  Interval lN = log(N);
  Complex nps = pow_neg(lN, s);
  Complex sm1 = s - Complex(Interval(1.0));
  Complex a = (N * nps) / sm1;
  // d/ds N^{1-s}/(s-1) = -A (log N + 1/(s-1))
  Complex total = -(a * (Complex(lN) + Complex(Interval(1.0)) / sm1));
  total = total - (Interval(0.5) * lN) * nps;
  Complex P = s, dP = Complex(Interval(1.0));
  Interval npow = Interval(1.0) / N;
  Interval n2 = Interval(1.0) / sqr(N);
  for (int k = 1; k <= M; ++k) {
    Complex inner = dP - lN * P;
    total = total + (bernoulli_ratio(k) * npow) * (inner * nps);
    for (int j = 2 * k - 1; j <= 2 * k; ++j) {
      Complex f = s + Complex(Interval(static_cast<double>(j)));
      dP = dP * f + P;
      P = P * f;
    }
    npow = npow * n2;
  }
  // Cauchy estimate of the remainder derivative on a unit circle
  Complex big = widen(s, 1.0);
  if (!(big.re.lo() > -(2.0 * M + 1.0))) throw params_error("zeta': real part too negative");
  double r = zeta_em_remainder(big, p).hi();
  return widen(total, r);
}

Complex zeta_em(const Complex& s, const ZetaEvalParams& p) {
  Complex tail = zeta_em_tail(s, p);
  Complex sum(Interval(1.0), Interval(0.0));
  for (int n = 2; n < p.n_terms; ++n) sum = sum + pow_neg(log_int(n), s);
  return sum + tail;
}

Complex zeta_prime_em(const Complex& s, const ZetaEvalParams& p) {
  Complex tail = zeta_prime_em_tail(s, p);
  Complex sum(Interval(0.0), Interval(0.0));
  for (int n = 2; n < p.n_terms; ++n) {
    Interval ln = log_int(n);
    sum = sum - ln * pow_neg(ln, s);
  }
  return sum + tail;
}

namespace {

// 1/(s-1) over the disk exactly (a disk again), plus zeta - 1/(s-1) over the box
ComplexBall zeta_ball_polar(const ComplexBall& s, const ZetaEvalParams& p) {
  Complex c(Interval(s.mid_re) - Interval(1.0), Interval(s.mid_im));
  Interval den = abs_sq(c) - sqr(Interval(s.rad));
  if (!(den.lo() > 0.0)) throw pole_error("zeta_ball: ball contains s = 1");
  ComplexBall u = ComplexBall::from_box((Interval(1.0) / den) * c.conj());
  u.rad = add_up(u.rad, (Interval(s.rad) / den).hi());
  ComplexBall h = s.rad == 0.0 ? ComplexBall::from_box(zeta_regular_em(
                                     Complex(Interval(s.mid_re), Interval(s.mid_im)), p))
                               : ComplexBall::from_box(zeta_regular_em(s.box(), p));
  ComplexBall out = ComplexBall::from_box(
      Complex(Interval(u.mid_re) + Interval(h.mid_re), Interval(u.mid_im) + Interval(h.mid_im)));
  out.rad = add_up(out.rad, add_up(u.rad, h.rad));
  return out;
}

double sup_abs(const ComplexBall& z) { return abs_sq_upper(z).hi(); }

}  // namespace

ComplexBall zeta_ball(const ComplexBall& s, const ZetaEvalParams& p) {
  if (s.contains(1.0, 0.0)) throw pole_error("zeta_ball: ball contains s = 1");
  bool near_pole = std::hypot(s.mid_re - 1.0, s.mid_im) < kPolarSplitRadius;
  ComplexBall polar;
  if (near_pole) polar = zeta_ball_polar(s, p);
  Complex m(Interval(s.mid_re), Interval(s.mid_im));
  ComplexBall out;
  try {
    out = ComplexBall::from_box(zeta_em(m, p));
    if (s.rad != 0.0) {
      Complex b = s.box();
      if (b.contains(1.0, 0.0)) throw pole_error("zeta_ball: covering box touches s = 1");
      Interval d = abs(zeta_prime_em(b, p));
      out.rad = add_up(out.rad, mul_up(s.rad, d.hi()));
    }
  } catch (const pole_error&) {
    if (!near_pole) throw;
    return polar;
  }
  // both are enclosures; keep the tighter one
  if (near_pole && sup_abs(polar) < sup_abs(out)) return polar;
  return out;
}

ComplexBall zeta_ball(const ComplexBall& s) {
  double t = std::fabs(s.mid_im) + s.rad;
  return zeta_ball(s, ZetaEvalParams::for_height(t));
}

Interval abs_sq_upper(const ComplexBall& z) {
  Interval m = sqrt(sqr(Interval(z.mid_re)) + sqr(Interval(z.mid_im)));
  Interval r = m + Interval(z.rad);
  Interval sq = sqr(r);
  Interval lo_part = sqr(max(Interval(0.0), m - Interval(z.rad)));
  return {std::min(lo_part.lo(), sq.hi()), sq.hi()};
}

Interval zeta_real_bounds(const Interval& alpha) {
  if (!(alpha.lo() > 0)) throw domain_error("zeta_real_bounds: alpha must be positive");
  if (alpha.contains(1.0)) throw domain_error("zeta_real_bounds: alpha straddles 1");
  Interval am1 = alpha - Interval(1.0);
  Interval lo = Interval(1.0) / am1;
  Interval hi = alpha / am1;
  return {lo.lo(), hi.hi()};
}

CoeffVec zeb_2s() { return {Interval(0.0), Interval(0.0), Interval(0.5)}; }
CoeffVec zea_2m2s() { return {Interval(1.0), Interval(0.0), Interval(0.5)}; }

Interval gamma_real(const Interval& x, Precision) {
  if (!(x.lo() > 0)) throw domain_error("gamma_real: nonpositive argument");
  // shift to y >= 10, then Stirling through B_14; for real y the remainder is
  // below the first omitted term B_16 / (16 * 15 * y^15)
  Interval y = x, denom(1.0);
  while (y.lo() < 10.0) {
    denom = denom * y;
    y = y + Interval(1.0);
  }
  static const std::int64_t B[][2] = {{1, 6},    {-1, 30},   {1, 42},   {-1, 30},
                                      {5, 66},   {-691, 2730}, {7, 6}, {-3617, 510}};
  Interval half(0.5);
  Interval lg = half * log(constants::two_pi()) + (y - half) * log(y) - y;
  Interval inv = Interval(1.0) / y, inv2 = sqr(inv), p = inv;
  for (int k = 1; k <= 7; ++k) {
    Interval b = Interval::rational(B[k - 1][0], B[k - 1][1] * 2 * k * (2 * k - 1));
    lg = lg + b * p;
    p = p * inv2;
  }
  Interval err = abs(Interval::rational(B[7][0], B[7][1] * 16 * 15)) * p;
  lg = lg + Interval(-err.hi(), err.hi());
  return exp(lg) / denom;
}

namespace {

Interval arg_of(double sigma, double t) {
  Interval s(sigma), tt(t);
  if (sigma > 0) return atan(tt / s);
  if (sigma == 0) {
    if (t == 0) throw domain_error("arg of 0");
    Interval hp = pi() * Interval(0.5);
    return t > 0 ? hp : -hp;
  }
  if (t == 0) throw domain_error("stirling: s on the negative real axis");
  Interval a = atan(tt / s);
  return t > 0 ? a + pi() : a - pi();
}

}  // namespace

Complex StirlingEnclosure::value_box() const {
  Interval e(-radius.hi(), radius.hi());
  switch (variant) {
    case StirlingVariant::A1:
    case StirlingVariant::B1: {
      // Gamma = exp(main + eps), |eps| <= r
      Complex z = cexp(main);
      Interval scale = abs(z);
      // |Gamma - e^main| <= |e^main| (e^r - 1)
      Interval d = scale * (exp(Interval(radius.hi())) - Interval(1.0));
      Interval w(-d.hi(), d.hi());
      return {z.re + w, z.im + w};
    }
    case StirlingVariant::A2:
    case StirlingVariant::B2: {
      Interval v = exp(main.re + e);
      return {v, Interval(0.0)};
    }
    case StirlingVariant::A3:
    case StirlingVariant::B3: return {main.re + e, Interval(0.0)};
  }
  throw domain_error("unknown variant");
}

Interval StirlingEnclosure::modulus() const {
  Interval e(-radius.hi(), radius.hi());
  switch (variant) {
    case StirlingVariant::A1:
    case StirlingVariant::B1: return exp(main.re + e);
    case StirlingVariant::A2:
    case StirlingVariant::B2: return exp(main.re + e);
    default: throw domain_error("modulus not available for A3/B3");
  }
}

StirlingEnclosure stirling_enclosures(double sigma, double t, StirlingVariant v,
                                      const Interval& theta) {
  if (t == 0 && sigma <= 0) throw domain_error("stirling: s in (-inf, 0]");
  Interval s(sigma), tt(t), half(0.5);
  Interval mod2 = sqr(s) + sqr(tt);
  Interval mod = sqrt(mod2);
  Interval logmod = half * log(mod2);
  Interval arg = arg_of(sigma, t);
  Interval half_log_2pi = half * log(constants::two_pi());
  bool tnz = t != 0;
  Interval sgn(t > 0 ? 1.0 : (t < 0 ? -1.0 : 0.0));
  Interval hp = pi() * half;

  bool bvar = v == StirlingVariant::B1 || v == StirlingVariant::B2 || v == StirlingVariant::B3;
  Interval F(0.0);
  if (bvar) {
    if (!(theta.lo() > 0 && theta.hi() < pi().lo())) throw domain_error("stirling: theta not in (0, pi)");
    if (std::fabs(arg.hi()) > (pi() - theta).lo() || std::fabs(arg.lo()) > (pi() - theta).lo())
      throw domain_error("stirling: |arg s| exceeds pi - theta");
    Interval sn = sin(theta * half);
    F = Interval(1.0) / (Interval(360.0) * ipow(sn, 4));
  }
  Interval a_err = Interval(1.0) / (Interval(60.0) * mod * (mod + s));
  Interval b_err = F / (mod * mod2);

  StirlingEnclosure out{v, Complex(), Interval(0.0)};
  switch (v) {
    case StirlingVariant::A1:
    case StirlingVariant::B1: {
      Complex sc(s, tt);
      Complex lg(logmod, arg);
      Complex inv12 = Complex(s / (Interval(12.0) * mod2), -(tt / (Interval(12.0) * mod2)));
      out.main = Complex(half_log_2pi) + (sc - Complex(half)) * lg - sc + inv12;
      out.radius = v == StirlingVariant::A1 ? a_err : b_err;
      break;
    }
    case StirlingVariant::A2: {
      out.main = Complex(half_log_2pi + (s - half) * logmod - hp * abs(tt) - s +
                         s / (Interval(12.0) * mod2));
      out.radius = (tnz ? abs(s) : Interval(0.0)) + a_err;
      break;
    }
    case StirlingVariant::B2: {
      Interval sig_term = tnz ? Interval(0.0) : s;
      out.main = Complex(half_log_2pi + (s - half) * logmod - hp * abs(tt) - sig_term +
                         s / (Interval(12.0) * mod2));
      out.radius = (tnz ? ipow(abs(s), 3) / (Interval(3.0) * sqr(tt)) : Interval(0.0)) + b_err;
      break;
    }
    case StirlingVariant::A3: {
      out.main = Complex(tt * logmod + sgn * (s - half) * hp - tt - tt / (Interval(12.0) * mod2));
      out.radius = (tnz ? abs(s - half) * abs(s) / abs(tt) : Interval(0.0)) + a_err;
      break;
    }
    case StirlingVariant::B3: {
      Interval corr = tnz ? s / tt : Interval(0.0);
      out.main = Complex(tt * logmod + (s - half) * (sgn * hp - corr) - tt -
                         tt / (Interval(12.0) * mod2));
      out.radius =
          (tnz ? abs(s - half) * ipow(abs(s), 3) / (Interval(3.0) * ipow(abs(tt), 3)) : Interval(0.0)) +
          b_err;
      break;
    }
  }
  return out;
}

Interval CosineEnclosure::modulus() const {
  Interval r(-rel_rad.hi(), rel_rad.hi());
  return main * (Interval(1.0) + r);
}

CosineEnclosure cosine_modulus(double, double t) {
  Interval at = abs(Interval(t));
  CosineEnclosure c;
  c.main = exp(pi() * at * Interval(0.5)) * Interval(0.5);
  c.rel_rad = exp(-(pi() * at));
  return c;
}

Interval backlund_bound(double sigma, double t) {
  if (t < 50) throw domain_error("backlund_bound requires t >= 50");
  Interval tt(t), s(sigma);
  Interval lt = log(tt);
  Interval x = tt / constants::two_pi();
  if (sigma >= 1) return lt - Interval::parse("0.048");
  if (sigma >= 0) {
    Interval w = sqr(tt) / (sqr(tt) - Interval(4.0));
    return w * exp((Interval(1.0) - s) * Interval(0.5) * log(x)) * lt;
  }
  if (sigma >= -0.5) return exp((Interval(0.5) - s) * log(x)) * lt;
  throw domain_error("backlund_bound requires sigma >= -1/2");
}

}  // namespace zmean
