#pragma once

#include <vector>

#include "zmean/coeff.hpp"
#include "zmean/interval.hpp"

namespace zmean {

class pole_error : public domain_error {
 public:
  using domain_error::domain_error;
};

class params_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// rectangular complex interval
struct Complex {
  Interval re{0.0}, im{0.0};
  Complex() = default;
  Complex(Interval r, Interval i = Interval(0.0)) : re(r), im(i) {}  // NOLINT
  Complex(double r, double i = 0.0) : re(r), im(i) {}  // NOLINT

  Complex conj() const { return {re, -im}; }
  bool contains(double x, double y) const { return re.contains(x) && im.contains(y); }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Interval& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Interval abs_sq(const Complex& z);
Interval abs(const Complex& z);
// exp(z)
Complex cexp(const Complex& z);
// n^{-s} given log n
Complex pow_neg(const Interval& log_n, const Complex& s);

// midpoint-radius complex enclosure (Euclidean radius)
struct ComplexBall {
  double mid_re = 0.0, mid_im = 0.0, rad = 0.0;
  ComplexBall() = default;
  ComplexBall(double re, double im, double r);
  static ComplexBall from_box(const Complex& z);
  Complex box() const;
  bool contains(double re, double im) const;
};

struct ZetaEvalParams {
  int n_terms = 50;
  int em_order = 12;
  ZetaEvalParams() = default;
  ZetaEvalParams(int n, int m);
  // N = max(50, ceil(2|t|)), 12 Bernoulli corrections
  static ZetaEvalParams for_height(double t);
};

// Bernoulli B_{2k}/(2k)! for k = 1..26 as enclosures
const Interval& bernoulli_ratio(int k);

Interval gamma_real(const Interval& x, Precision p = Precision());

// 1/(a-1) < zeta(a) < a/(a-1)
Interval zeta_real_bounds(const Interval& alpha);
// zeta(2 sigma) > -(1/2)/(1/2 - sigma)
CoeffVec zeb_2s();
// zeta(2 - 2 sigma) < 1 + (1/2)/(1/2 - sigma)
CoeffVec zea_2m2s();

// enclosure of zeta over every s in the rectangle
Complex zeta_em(const Complex& s, const ZetaEvalParams& p);
// enclosure of zeta' over every s in the rectangle
Complex zeta_prime_em(const Complex& s, const ZetaEvalParams& p);
// the Euler-Maclaurin part beyond sum_{n<N} n^{-s} (includes the remainder bound)
// zeta(s) - 1/(s-1), entire; needs |s - 1| log N < 2
Complex zeta_regular_em(const Complex& s, const ZetaEvalParams& p);
Complex zeta_em_tail(const Complex& s, const ZetaEvalParams& p);
Complex zeta_prime_em_tail(const Complex& s, const ZetaEvalParams& p);
// bound on the Euler-Maclaurin remainder over the rectangle
Interval zeta_em_remainder(const Complex& s, const ZetaEvalParams& p);

// within this distance of s = 1 the ball also tries 1/(s-1) + regular part
inline constexpr double kPolarSplitRadius = 0.25;
ComplexBall zeta_ball(const ComplexBall& s, const ZetaEvalParams& p);
ComplexBall zeta_ball(const ComplexBall& s);

// sup |w|^2 over the ball: (|mid| + rad)^2
Interval abs_sq_upper(const ComplexBall& z);

enum class StirlingVariant { A1, A2, A3, B1, B2, B3 };

// main term and O*-radius of one identity of the explicit Stirling formula.
// A1/B1 bound log Gamma(s) (complex); A2/B2 bound log|Gamma(s)|; A3/B3 bound Im log Gamma(s).
struct StirlingEnclosure {
  StirlingVariant variant;
  Complex main;     // main term (log Gamma for A1/B1, log|Gamma| for A2/B2, Im log Gamma for A3/B3)
  Interval radius;  // O* bound on the exponent / additive error
  // enclosure of the target quantity itself: |Gamma|, Gamma or Im log Gamma
  Complex value_box() const;
  Interval modulus() const;  // enclosure of |Gamma(s)| (A1, A2, B1, B2)
};

StirlingEnclosure stirling_enclosures(double sigma, double t, StirlingVariant v,
                                      const Interval& theta = Interval(0.0));

struct CosineEnclosure {
  Interval main;      // e^{pi|t|/2}/2
  Interval rel_rad;   // e^{-pi|t|}
  Interval modulus() const;  // main * (1 +- rel_rad)
};

CosineEnclosure cosine_modulus(double sigma, double t);

// Backlund's convexity bound for |zeta(sigma+it)|, t >= 50
Interval backlund_bound(double sigma, double t);

}  // namespace zmean
