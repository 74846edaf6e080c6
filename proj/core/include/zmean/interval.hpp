#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace zmean {

class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Precision {
  int bits = 53;
  explicit Precision(int b = 53);
  // max(53, ceil(3*log2(scale)))
  static Precision for_scale(double scale);
};

// Closed interval [lo, hi] of doubles.  Every operation returns an enclosure
// of the exact result.
class Interval {
 public:
  constexpr Interval() = default;
  // implicit: doubles and ints convert exactly
  Interval(double x);  // NOLINT
  Interval(int x) : Interval(static_cast<double>(x)) {}  // NOLINT
  Interval(double lo, double hi);

  static Interval hull(double a, double b);
  // tight enclosure of a decimal literal
  static Interval parse(const std::string& dec);
  // p / q as an enclosure
  static Interval rational(std::int64_t p, std::int64_t q);
  static Interval entire();

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const;
  double rad() const;  // upper bound for max distance from mid()
  double width() const;

  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool is_point() const { return lo_ == hi_; }
  bool is_finite() const;
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }

  // certainly-comparisons (every point of *this against every point of o)
  bool certainly_lt(const Interval& o) const { return hi_ < o.lo_; }
  bool certainly_le(const Interval& o) const { return hi_ <= o.lo_; }
  bool certainly_gt(const Interval& o) const { return lo_ > o.hi_; }
  bool certainly_ge(const Interval& o) const { return lo_ >= o.hi_; }

  Interval operator-() const { return {-hi_, -lo_}; }
  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

  std::string str(int sig = 17) const;

 private:
  double lo_ = 0.0, hi_ = 0.0;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
std::ostream& operator<<(std::ostream& os, const Interval& x);

enum class ArithOp { add, sub, mul, div };
Interval iv_arith(const Interval& a, const Interval& b, ArithOp op);

// directed-rounded scalar kernels
double add_down(double a, double b);
double add_up(double a, double b);
double mul_down(double a, double b);
double mul_up(double a, double b);
double div_down(double a, double b);
double div_up(double a, double b);
double sqrt_down(double a);
double sqrt_up(double a);
double next_up(double x);
double next_down(double x);

Interval sqr(const Interval& a);
Interval ipow(const Interval& a, int n);
Interval abs(const Interval& a);
Interval sqrt(const Interval& a);
Interval exp(const Interval& a);
Interval exp(const Interval& a, Precision p);
Interval expm1_hi(const Interval& a, Precision p);
Interval log(const Interval& a);
Interval log(const Interval& a, Precision p);
Interval pow(const Interval& a, const Interval& b);
Interval atan(const Interval& a);
Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);
Interval join(const Interval& a, const Interval& b);

namespace constants {
Interval pi();
Interval e();
Interval euler_gamma();
Interval log2();
Interval two_pi();
}  // namespace constants

// Decimal with a fixed number of fractional digits: value = scaled / 10^digits.
struct Decimal {
  std::int64_t scaled = 0;
  int digits = 0;

  double to_double() const;
  Interval to_interval() const;
  std::string str() const;
  bool operator==(const Decimal& o) const;
  bool operator<(const Decimal& o) const;
  bool operator<=(const Decimal& o) const { return !(o < *this); }
};

// smallest d-digit decimal >= a.hi
Decimal roundup_digits(const Interval& a, int d);
// largest d-digit decimal <= a.lo
Decimal rounddown_digits(const Interval& a, int d);
Decimal make_decimal(const std::string& s);

}  // namespace zmean
