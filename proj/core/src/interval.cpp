#include "zmean/interval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <bit>
#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace zmean {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// below this magnitude the fma residuals may be inexact
constexpr double kTiny = 0x1p-960;

// exact error of a + b (TwoSum); valid when a + b does not overflow
inline double two_sum_err(double a, double b, double s) {
  double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

double pad_down(double x) { return std::isnan(x) ? -kInf : next_down(x); }
double pad_up(double x) { return std::isnan(x) ? kInf : next_up(x); }

void check_nan(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi)) throw domain_error("interval: NaN endpoint");
}

struct MpfrTmp {
  mpfr_t v;
  explicit MpfrTmp(mpfr_prec_t p) { mpfr_init2(v, p); }
  ~MpfrTmp() { mpfr_clear(v); }
  MpfrTmp(const MpfrTmp&) = delete;
  MpfrTmp& operator=(const MpfrTmp&) = delete;
};

}  // namespace

Precision::Precision(int b) : bits(b) {
  if (b < 53) throw domain_error("precision below 53 bits");
}

Precision Precision::for_scale(double scale) {
  int need = static_cast<int>(std::ceil(3.0 * std::log2(scale)));
  return Precision(std::max(53, need));
}

double next_up(double x) {
  if (std::isnan(x) || x == kInf) return x;
  if (x == 0.0) return std::numeric_limits<double>::denorm_min();
  auto u = std::bit_cast<std::uint64_t>(x);
  u = (x > 0) ? u + 1 : u - 1;
  return std::bit_cast<double>(u);
}

double next_down(double x) { return -next_up(-x); }

double add_down(double a, double b) {
  double s = a + b;
  if (!std::isfinite(s)) {
    if (s == kInf && std::isfinite(a) && std::isfinite(b)) return DBL_MAX;
    return std::isnan(s) ? -kInf : s;
  }
  double e = two_sum_err(a, b, s);
  return e < 0 ? next_down(s) : s;
}

double add_up(double a, double b) { return -add_down(-a, -b); }

double mul_down(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  double p = a * b;
  if (!std::isfinite(p)) {
    if (std::isinf(p) && std::isfinite(a) && std::isfinite(b))
      return p > 0 ? DBL_MAX : -kInf;
    return std::isnan(p) ? -kInf : p;
  }
  if (std::fabs(p) < kTiny) return next_down(p);
  double e = std::fma(a, b, -p);
  return e < 0 ? next_down(p) : p;
}

double mul_up(double a, double b) { return -mul_down(-a, b); }

double div_down(double a, double b) {
  if (a == 0.0 && b != 0.0) return 0.0;
  double q = a / b;
  if (!std::isfinite(q)) {
    if (std::isinf(q) && std::isfinite(a) && std::isfinite(b) && b != 0.0)
      return q > 0 ? DBL_MAX : -kInf;
    return std::isnan(q) ? -kInf : q;
  }
  if (std::fabs(q) < kTiny || std::fabs(a) < kTiny || !std::isfinite(b)) return next_down(q);
  // exact remainder a - q*b; true quotient exceeds q iff r/b > 0
  double r = std::fma(-q, b, a);
  bool below = (r < 0 && b > 0) || (r > 0 && b < 0);
  return below ? next_down(q) : q;
}

double div_up(double a, double b) { return -div_down(-a, b); }

double sqrt_down(double a) {
  if (a < 0) throw domain_error("sqrt of negative");
  double r = std::sqrt(a);
  if (a < kTiny || !std::isfinite(r)) return a == 0.0 ? 0.0 : next_down(r);
  double e = std::fma(-r, r, a);
  return e < 0 ? next_down(r) : r;
}

double sqrt_up(double a) {
  if (a < 0) throw domain_error("sqrt of negative");
  double r = std::sqrt(a);
  if (a < kTiny || !std::isfinite(r)) return a == 0.0 ? 0.0 : next_up(r);
  double e = std::fma(-r, r, a);
  return e > 0 ? next_up(r) : r;
}

Interval::Interval(double x) : lo_(x), hi_(x) { check_nan(x, x); }

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  check_nan(lo, hi);
  if (lo > hi) throw domain_error("interval with lo > hi");
}

Interval Interval::hull(double a, double b) { return {std::min(a, b), std::max(a, b)}; }

Interval Interval::entire() { return {-kInf, kInf}; }

Interval Interval::parse(const std::string& dec) {
  MpfrTmp t(53);
  double lo, hi;
  if (mpfr_set_str(t.v, dec.c_str(), 10, MPFR_RNDD) != 0)
    throw domain_error("cannot parse decimal '" + dec + "'");
  lo = mpfr_get_d(t.v, MPFR_RNDD);
  mpfr_set_str(t.v, dec.c_str(), 10, MPFR_RNDU);
  hi = mpfr_get_d(t.v, MPFR_RNDU);
  return {lo, hi};
}

Interval Interval::rational(std::int64_t p, std::int64_t q) {
  if (q == 0) throw domain_error("rational with zero denominator");
  return Interval::parse(std::to_string(p)) / Interval::parse(std::to_string(q));
}

double Interval::mid() const {
  if (lo_ == -kInf && hi_ == kInf) return 0.0;
  if (lo_ == -kInf) return -DBL_MAX;
  if (hi_ == kInf) return DBL_MAX;
  double m = 0.5 * lo_ + 0.5 * hi_;
  return std::clamp(m, lo_, hi_);
}

double Interval::rad() const {
  double m = mid();
  return std::max(add_up(m, -lo_), add_up(hi_, -m));
}

double Interval::width() const { return add_up(hi_, -lo_); }

bool Interval::is_finite() const { return std::isfinite(lo_) && std::isfinite(hi_); }

Interval& Interval::operator+=(const Interval& o) { return *this = *this + o; }
Interval& Interval::operator-=(const Interval& o) { return *this = *this - o; }
Interval& Interval::operator*=(const Interval& o) { return *this = *this * o; }
Interval& Interval::operator/=(const Interval& o) { return *this = *this / o; }

std::string Interval::str(int sig) const {
  std::ostringstream os;
  os << std::setprecision(sig) << '[' << lo_ << ", " << hi_ << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << x.str(); }

Interval operator+(const Interval& a, const Interval& b) {
  return {add_down(a.lo(), b.lo()), add_up(a.hi(), b.hi())};
}

Interval operator-(const Interval& a, const Interval& b) {
  return {add_down(a.lo(), -b.hi()), add_up(a.hi(), -b.lo())};
}

Interval operator*(const Interval& a, const Interval& b) {
  double al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
  if (al >= 0 && bl >= 0) return {mul_down(al, bl), mul_up(ah, bh)};
  if (ah <= 0 && bh <= 0) return {mul_down(ah, bh), mul_up(al, bl)};
  double lo = std::min({mul_down(al, bl), mul_down(al, bh), mul_down(ah, bl), mul_down(ah, bh)});
  double hi = std::max({mul_up(al, bl), mul_up(al, bh), mul_up(ah, bl), mul_up(ah, bh)});
  return {lo, hi};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw domain_error("division by interval containing 0");
  double al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
  double lo = std::min({div_down(al, bl), div_down(al, bh), div_down(ah, bl), div_down(ah, bh)});
  double hi = std::max({div_up(al, bl), div_up(al, bh), div_up(ah, bl), div_up(ah, bh)});
  return {lo, hi};
}

Interval iv_arith(const Interval& a, const Interval& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw domain_error("unknown op");
}

Interval abs(const Interval& a) {
  if (a.lo() >= 0) return a;
  if (a.hi() <= 0) return -a;
  return {0.0, std::max(-a.lo(), a.hi())};
}

Interval sqr(const Interval& a) {
  Interval m = abs(a);
  return {mul_down(m.lo(), m.lo()), mul_up(m.hi(), m.hi())};
}

Interval ipow(const Interval& a, int n) {
  if (n < 0) return Interval(1.0) / ipow(a, -n);
  if (n == 0) return Interval(1.0);
  if (n % 2 == 0) {
    Interval h = ipow(a, n / 2);
    return sqr(h);
  }
  if (a.lo() >= 0) {
    Interval r = a;
    for (int i = 1; i < n; ++i) r = r * a;
    return r;
  }
  return a * ipow(a, n - 1);
}

Interval sqrt(const Interval& a) {
  if (a.lo() < 0) throw domain_error("sqrt of interval with negative part");
  return {sqrt_down(a.lo()), sqrt_up(a.hi())};
}

Interval exp(const Interval& a) {
  auto down = [](double x) {
    if (x == 0.0) return 1.0;
    if (x == -kInf) return 0.0;
    return std::max(0.0, pad_down(std::exp(x)));
  };
  auto up = [](double x) {
    if (x == 0.0) return 1.0;
    double y = std::exp(x);
    return y == kInf ? kInf : pad_up(y);
  };
  return {down(a.lo()), up(a.hi())};
}

Interval exp(const Interval& a, Precision) { return exp(a); }

Interval expm1_hi(const Interval& a, Precision p) {
  MpfrTmp t(p.bits);
  mpfr_set_d(t.v, a.lo(), MPFR_RNDN);
  mpfr_expm1(t.v, t.v, MPFR_RNDD);
  double lo = mpfr_get_d(t.v, MPFR_RNDD);
  mpfr_set_d(t.v, a.hi(), MPFR_RNDN);
  mpfr_expm1(t.v, t.v, MPFR_RNDU);
  double hi = mpfr_get_d(t.v, MPFR_RNDU);
  return {lo, hi};
}

Interval log(const Interval& a) {
  if (!(a.lo() > 0)) throw domain_error("log of interval not strictly positive");
  auto down = [](double x) { return x == 1.0 ? 0.0 : pad_down(std::log(x)); };
  auto up = [](double x) {
    if (x == 1.0) return 0.0;
    double y = std::log(x);
    return y == kInf ? kInf : pad_up(y);
  };
  return {down(a.lo()), up(a.hi())};
}

Interval log(const Interval& a, Precision) { return log(a); }

Interval pow(const Interval& a, const Interval& b) { return exp(b * log(a)); }

Interval atan(const Interval& a) {
  static constexpr double half_pi_hi = 0x1.921fb54442d19p+0;
  auto down = [](double x) { return x == 0.0 ? 0.0 : std::max(-half_pi_hi, pad_down(std::atan(x))); };
  auto up = [](double x) { return x == 0.0 ? 0.0 : std::min(half_pi_hi, pad_up(std::atan(x))); };
  return {down(a.lo()), up(a.hi())};
}

namespace {
// f is sin or cos; both are 1-Lipschitz and bounded by 1
template <class F>
Interval trig(const Interval& a, F f) {
  if (!a.is_finite()) return {-1.0, 1.0};
  double m = a.mid();
  double r = a.rad();
  if (r > 3.2) return {-1.0, 1.0};
  double y = f(m);
  double lo = add_down(pad_down(y), -r);
  double hi = add_up(pad_up(y), r);
  return {std::max(-1.0, lo), std::min(1.0, hi)};
}
}  // namespace

Interval sin(const Interval& a) {
  if (a.is_point() && a.lo() == 0.0) return Interval(0.0);
  return trig(a, [](double x) { return std::sin(x); });
}

Interval cos(const Interval& a) {
  if (a.is_point() && a.lo() == 0.0) return Interval(1.0);
  return trig(a, [](double x) { return std::cos(x); });
}

Interval max(const Interval& a, const Interval& b) {
  return {std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Interval min(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

Interval join(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

namespace constants {
Interval pi() {
  static const Interval v = Interval::parse("3.14159265358979323846264338327950288419716939937510582097494");
  return v;
}
Interval e() {
  static const Interval v = Interval::parse("2.71828182845904523536028747135266249775724709369995957496697");
  return v;
}
Interval euler_gamma() {
  static const Interval v = Interval::parse("0.577215664901532860606512090082402431042159335939923598805767");
  return v;
}
Interval log2() {
  static const Interval v = Interval::parse("0.693147180559945309417232121458176568075500134360255254120680");
  return v;
}
Interval two_pi() {
  static const Interval v = Interval::parse("6.28318530717958647692528676655900576839433879875021164194989");
  return v;
}
}  // namespace constants

namespace {
double pow10(int d) {
  if (d < 0 || d > 18) throw domain_error("digits out of range");
  double s = 1.0;
  for (int i = 0; i < d; ++i) s *= 10.0;
  return s;
}

std::int64_t ceil_scaled(double x, double scale) {
  double k = std::ceil(x * scale);
  // sign of x*scale - k is exact through fma
  while (std::fma(x, scale, -k) > 0) k += 1.0;
  while (std::fma(x, scale, -(k - 1.0)) <= 0) k -= 1.0;
  return static_cast<std::int64_t>(k);
}

std::int64_t floor_scaled(double x, double scale) { return -ceil_scaled(-x, scale); }
}  // namespace

double Decimal::to_double() const { return to_interval().mid(); }

Interval Decimal::to_interval() const {
  std::int64_t q = 1;
  for (int i = 0; i < digits; ++i) q *= 10;
  return Interval::rational(scaled, q);
}

std::string Decimal::str() const {
  std::int64_t q = 1;
  for (int i = 0; i < digits; ++i) q *= 10;
  std::int64_t a = scaled < 0 ? -scaled : scaled;
  std::string frac = std::to_string(a % q);
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
  if (frac.empty()) frac = "0";
  return (scaled < 0 ? "-" : "") + std::to_string(a / q) + "." + frac;
}

bool Decimal::operator==(const Decimal& o) const {
  // compare as rationals
  int d = std::max(digits, o.digits);
  std::int64_t a = scaled, b = o.scaled;
  for (int i = digits; i < d; ++i) a *= 10;
  for (int i = o.digits; i < d; ++i) b *= 10;
  return a == b;
}

bool Decimal::operator<(const Decimal& o) const {
  int d = std::max(digits, o.digits);
  std::int64_t a = scaled, b = o.scaled;
  for (int i = digits; i < d; ++i) a *= 10;
  for (int i = o.digits; i < d; ++i) b *= 10;
  return a < b;
}

Decimal roundup_digits(const Interval& a, int d) {
  if (d < 1) throw domain_error("roundup digits must be >= 1");
  if (!std::isfinite(a.hi())) throw domain_error("roundup of unbounded interval");
  return {ceil_scaled(a.hi(), pow10(d)), d};
}

Decimal rounddown_digits(const Interval& a, int d) {
  if (d < 1) throw domain_error("rounddown digits must be >= 1");
  if (!std::isfinite(a.lo())) throw domain_error("rounddown of unbounded interval");
  return {floor_scaled(a.lo(), pow10(d)), d};
}

Decimal make_decimal(const std::string& s) {
  auto dot = s.find('.');
  std::string digits_part = s;
  int d = 0;
  if (dot != std::string::npos) {
    d = static_cast<int>(s.size() - dot - 1);
    digits_part = s.substr(0, dot) + s.substr(dot + 1);
  }
  std::size_t used = 0;
  std::int64_t v = std::stoll(digits_part, &used);
  if (used != digits_part.size()) throw domain_error("bad decimal '" + s + "'");
  return {v, d};
}

}  // namespace zmean
