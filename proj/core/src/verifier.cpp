#include "zmean/verifier.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <random>

#include "zmean/special_fn.hpp"

namespace zmean {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGamma = 0.57721566490153286061;

// rounding slack allowed between a double-precision left side and its bound
double slack_for(double scale) { return 1e-10 * (1.0 + std::fabs(scale)); }

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Interval zeta_real(double x) {
  Complex z = zeta_em(Complex(Interval(x)), ZetaEvalParams(60, 12));
  return z.re;
}

double Adbl(double s) {
  if (s == 0.5) return 16.0 / 3.0;
  return 4.0 + (1.0 + 2.0 * s) / (s * (2.0 - 2.0 * s));
}

// keeps the worst instance of one (lemma, parameter) family
struct Worst {
  CheckResult r;
  bool have = false;
  bool all_pass = true;
  std::size_t count = 0;

  void offer(const std::string& lemma, const std::string& inst, double lhs, double rhs,
             double scale) {
    ++count;
    bool pass = lhs <= rhs + slack_for(scale);
    double ratio = rhs > 0 ? lhs / rhs : (lhs <= 0 ? 0.0 : INFINITY);
    all_pass = all_pass && pass;
    if (!have || ratio > r.ratio || (!pass && r.pass)) {
      r.lemma = lemma;
      r.instance = inst;
      r.lhs = lhs;
      r.rhs_bound = Interval(rhs);
      r.pass = pass;
      r.ratio = ratio;
      r.margin = 1.0 - ratio;
      have = true;
    }
  }
  CheckResult done(std::vector<CheckResult>& out) {
    if (have) {
      r.pass = all_pass;
      r.instance += fmt(" [%g instances]", static_cast<double>(count));
      out.push_back(r);
    }
    return r;
  }
};

void need_sigma(double s) {
  if (!(s > 0.0 && s <= 0.5)) throw verify_error("sigma must lie in (0, 1/2]");
}

std::vector<double> prefix(const DivisorTable& d, double weight_exp) {
  std::vector<double> S(d.values.size(), 0.0);
  long double acc = 0;
  for (std::int64_t n = 1; n <= d.X; ++n) {
    acc += static_cast<long double>(d[n]) * std::pow(static_cast<long double>(n), -weight_exp);
    S[static_cast<std::size_t>(n)] = static_cast<double>(acc);
  }
  return S;
}

// ---- Prop 3.4 ----
void check_P3_4(double s, std::int64_t cap, std::vector<CheckResult>& out) {
  DivisorTable d = divisor_sieve(1.0 - 2.0 * s, cap);
  auto S = prefix(d, 0.0);
  double A = Adbl(s);
  double z1 = s == 0.5 ? 0 : zeta_real(2 * s).mid(), z2 = s == 0.5 ? 0 : zeta_real(2 - 2 * s).mid();
  auto main = [&](double X) {
    if (s == 0.5) return X * std::log(X) + (2 * kGamma - 1) * X;
    return z1 * X + z2 / (2 - 2 * s) * std::pow(X, 2 - 2 * s);
  };
  Worst w;
  for (std::int64_t N = 1; N <= cap; ++N) {
    // at X = N and as X -> (N+1)^-
    for (double X : {static_cast<double>(N), static_cast<double>(N + 1)}) {
      if (X > static_cast<double>(cap)) continue;
      double v = S[static_cast<std::size_t>(N)];
      double m = main(X);
      w.offer("P3.4", fmt("sigma=%g X<=%g", s, static_cast<double>(cap)), std::fabs(v - m),
              A * std::pow(X, 1 - s), v);
    }
  }
  w.done(out);
}

// ---- Prop 3.5 ----
void check_P3_5(double s, std::int64_t cap, double X0, std::vector<CheckResult>& out) {
  DivisorTable d = divisor_sieve(1.0 - 2.0 * s, cap);
  auto S = prefix(d, 0.5);
  double A = Adbl(s);
  double z1 = s == 0.5 ? 0 : zeta_real(2 * s).mid(), z2 = s == 0.5 ? 0 : zeta_real(2 - 2 * s).mid();
  double C = s == 0.5 ? 0.5 * A + (A + 3 - 2 * kGamma) / std::log(X0)
                      : 3 + (2 - 2 * s) / (1 - 2 * s) * A;
  auto main = [&](double X) {
    if (s == 0.5) return 2 * std::sqrt(X) * std::log(X) - 4 * (1 - kGamma) * std::sqrt(X);
    return 2 * z1 * std::sqrt(X) + z2 / (1.5 - 2 * s) * std::pow(X, 1.5 - 2 * s);
  };
  auto bound = [&](double X) {
    return s == 0.5 ? C * std::log(X) : C * std::pow(X, 0.5 - s);
  };
  Worst w;
  auto N0 = static_cast<std::int64_t>(std::floor(X0));
  for (std::int64_t N = std::max<std::int64_t>(1, N0); N <= cap; ++N) {
    for (double X : {static_cast<double>(N), static_cast<double>(N + 1)}) {
      if (X < X0) X = X0;
      if (X > static_cast<double>(cap)) continue;
      double v = S[static_cast<std::size_t>(N)];
      w.offer("P3.5", fmt("sigma=%g X0=%g X<=%g", s, X0, static_cast<double>(cap)),
              std::fabs(v - main(X)), bound(X), v);
    }
  }
  w.done(out);
}

// ---- Prop 3.9 ----
void check_P3_9(double s, std::int64_t cap, std::vector<CheckResult>& out) {
  DivisorTable d = divisor_sieve(1.0 - 2.0 * s, cap);
  auto S = prefix(d, 2.0 - 2.0 * s);
  double A = Adbl(s);
  double z2 = s == 0.5 ? 0 : zeta_real(2 - 2 * s).mid();
  double D = s == 0.5 ? 2 * A + 2 * kGamma - 1
                      : 2 * A + 1 / (2 - 2 * s) + 1 / ((1 - 2 * s) * (1 - 2 * s));
  auto main = [&](double X) {
    double l = std::log(X);
    return s == 0.5 ? 0.5 * l * l + 2 * kGamma * l : z2 * l;
  };
  Worst w;
  for (std::int64_t N = 1; N <= cap; ++N) {
    for (double X : {static_cast<double>(N), static_cast<double>(N + 1)}) {
      if (X > static_cast<double>(cap)) continue;
      double v = S[static_cast<std::size_t>(N)];
      w.offer("P3.9", fmt("sigma=%g X<=%g", s, static_cast<double>(cap)), std::fabs(v - main(X)),
              D, v);
    }
  }
  w.done(out);
}

// ---- Prop 3.12 ----
void check_P3_12(double s, double lam, std::int64_t cap, std::vector<CheckResult>& out) {
  DivisorTable d = divisor_sieve(1.0 - 2.0 * s, cap);
  double e = 2.0 - 2.0 * s + lam;
  auto S = prefix(d, e);
  // sum over all n of d_{1-2s}(n) n^{-e} = zeta(e) zeta(e - 1 + 2s)
  Interval total = zeta_real(e) * zeta_real(1.0 + lam);
  double ze = zeta_real(e).mid(), z1 = zeta_real(1.0 + lam).mid();
  auto main = [&](double X) {
    if (s == 0.5) return std::log(X) / (lam * std::pow(X, lam));
    return ze / (lam * std::pow(X, lam));
  };
  auto bound = [&](double X) {
    double xl = std::pow(X, lam);
    if (s == 0.5) return (1 + (z1 + kGamma) / lam + (z1 + 2 / (3 * lam)) / X) / xl;
    return (1 / (2 - 2 * s) + 1 / ((1 - 2 * s) * (1 - 2 * s + lam))) / xl +
           (ze + 1 / (1 - 2 * s + lam) + 1) / (X * xl);
  };
  Worst w;
  for (std::int64_t N = 1; N <= cap; ++N) {
    double tail = total.mid() - S[static_cast<std::size_t>(N)];
    for (double X : {static_cast<double>(N), static_cast<double>(N + 1)}) {
      if (X > static_cast<double>(cap)) continue;
      w.offer("P3.12", fmt("sigma=%g lambda=%g X<=%g", s, lam, static_cast<double>(cap)),
              std::fabs(tail - main(X)), bound(X), total.mid() + total.rad() * 1e6);
    }
  }
  w.done(out);
}

// ---- Lemma 3.6 ----
struct FLemma {
  double F[7] = {0, 0, 0, 0, 0, 0, 0};
};

FLemma F_point(double s, bool ups_half, double T0) {
  FLemma f;
  double A = Adbl(s);
  double f6 = T0 / (T0 - 2 * kPi);
  if (s == 0.5) {
    f.F[1] = std::sqrt(kPi) / (2 * std::sqrt(2.0));
    f.F[2] = 0;
    f.F[3] = 2 * A;
    f.F[4] = 3 * A / 4;
    f.F[5] = 0;
    f.F[6] = (2 * kGamma - 1) * f6;
    return f;
  }
  double z2 = zeta_real(2 - 2 * s).hi();
  if (!ups_half) {
    f.F[1] = z2 / std::pow(4 * kPi, 1 - s);
    f.F[2] = 2 * z2 / (std::pow(4 * kPi, 1 - s) * (1 - s));
    f.F[3] = 2 * A;
    f.F[4] = (2 - s) * (1 - s) * A;
    f.F[5] = 0;
  } else {
    f.F[1] = z2 / std::pow(4 * kPi, 1.5 - 2 * s);
    f.F[2] = 2 * z2 / (std::pow(4 * kPi, 1.5 - 2 * s) * (1.5 - 2 * s));
    f.F[3] = 2 * A / std::pow(2 * kPi, 0.5 - s);
    f.F[4] = 0;
    f.F[5] = 3 * (1 - s) * A / (std::pow(6 * kPi, 0.5 - s) * (1 - 2 * s));
  }
  f.F[6] = f6;
  return f;
}

// T at which n enters the range n <= (T - sqrt T)/2pi
double T_enter_low(double n) {
  double r = (1 + std::sqrt(1 + 8 * kPi * n)) / 2;
  return r * r;
}

// T at which (T + sqrt T)/2pi reaches n
double T_enter_high(double n) {
  double r = (-1 + std::sqrt(1 + 8 * kPi * n)) / 2;
  return r * r;
}

std::vector<double> T_instances(const DivisorGrid& g, bool low_side) {
  std::vector<double> Ts;
  double Tmax = 0;
  for (double T : g.T_values) {
    Ts.push_back(T);
    Tmax = std::max(Tmax, T);
  }
  for (double n = 1;; n += 1) {
    double T = low_side ? T_enter_low(n) : T_enter_high(n);
    if (T > Tmax) break;
    if (T >= g.T0) Ts.push_back(low_side ? T : std::nextafter(T, 0.0));
  }
  if (!low_side)
    for (double m = 1; kPi * m <= Tmax; m += 1)
      if (kPi * m >= g.T0) Ts.push_back(kPi * m);
  std::sort(Ts.begin(), Ts.end());
  return Ts;
}

void check_L3_6(double s, bool ups_half, const DivisorGrid& g, std::vector<CheckResult>& out) {
  if (s == 0.5 && !ups_half) return;
  double ups = ups_half ? 0.5 : 1 - s;
  double Tmax = *std::max_element(g.T_values.begin(), g.T_values.end());
  auto cap = static_cast<std::int64_t>(Tmax / (2 * kPi)) + 2;
  DivisorTable d = divisor_sieve(1.0 - 2.0 * s, cap);
  std::vector<double> w(static_cast<std::size_t>(cap) + 1, 0.0);
  for (std::int64_t n = 1; n <= cap; ++n)
    w[static_cast<std::size_t>(n)] = d[n] / std::pow(static_cast<double>(n), ups);
  FLemma f = F_point(s, ups_half, g.T0);
  Worst wr;
  for (double T : T_instances(g, true)) {
    double top = (T - std::sqrt(T)) / (2 * kPi);
    long double acc = 0;
    for (std::int64_t n = 1; static_cast<double>(n) <= top * (1 + 1e-15); ++n)
      acc += w[static_cast<std::size_t>(n)] / (T - 2 * kPi * static_cast<double>(n));
    double L = std::log(T);
    double rhs = f.F[1] * L / std::pow(T, 2 * s - 1 + ups) + f.F[2] / std::pow(T, 2 * s - 1 + ups) +
                 f.F[3] / std::pow(T, s - 0.5 + ups) + f.F[4] * L / std::pow(T, s + ups) +
                 f.F[5] / std::pow(T, s + ups) + f.F[6] / T;
    wr.offer("L3.6", fmt("sigma=%g upsilon=%g T<=%g", s, ups, Tmax), static_cast<double>(acc), rhs,
             static_cast<double>(acc));
  }
  wr.done(out);
}

// ---- Lemma 3.10 ----
void check_L3_10(double s, const DivisorGrid& g, std::vector<CheckResult>& out) {
  double Tmax = *std::max_element(g.T_values.begin(), g.T_values.end());
  auto cap = static_cast<std::int64_t>(Tmax / kPi) + 2;
  DivisorTable d = divisor_sieve(1.0 - 2.0 * s, cap);
  std::vector<double> w(static_cast<std::size_t>(cap) + 1, 0.0);
  for (std::int64_t n = 1; n <= cap; ++n)
    w[static_cast<std::size_t>(n)] = d[n] / std::pow(static_cast<double>(n), 1 - 2 * s);
  double A = Adbl(s);
  double P[6];
  if (s == 0.5) {
    P[1] = 1 / (4 * kPi);
    P[2] = (2 * kGamma - std::log(kPi)) / (4 * kPi);
    P[3] = A * std::sqrt(2.0) / std::sqrt(kPi) * std::sqrt(1 + 1 / std::sqrt(g.T0));
    P[4] = A / (2 * std::sqrt(2 * kPi));
    P[5] = 4 * A * std::sqrt(kPi);
  } else {
    P[1] = 0;
    P[2] = zeta_real(2 - 2 * s).hi() / (4 * kPi);
    P[3] = 2 * A / std::pow(2 * kPi, s);
    P[4] = A * (1 - s) / std::pow(2 * kPi, s);
    P[5] = 2 * A / std::pow(kPi, s);
  }
  Worst wr;
  for (double T : T_instances(g, false)) {
    double lo = (T + std::sqrt(T)) / (2 * kPi), hi = T / kPi;
    long double acc = 0;
    auto n0 = static_cast<std::int64_t>(std::floor(lo)) + 1;
    for (std::int64_t n = n0; static_cast<double>(n) <= hi * (1 + 1e-15); ++n)
      acc += w[static_cast<std::size_t>(n)] / (2 * kPi * static_cast<double>(n) - T);
    double L = std::log(T);
    double rhs = P[1] * L * L + P[2] * L + P[3] / std::pow(T, 0.5 - s) +
                 P[4] * L / std::pow(T, 1 - s) + P[5] / std::pow(T, 1 - s);
    wr.offer("L3.10", fmt("sigma=%g T<=%g", s, Tmax), static_cast<double>(acc), rhs,
             static_cast<double>(acc));
  }
  wr.done(out);
}

}  // namespace

const char* lemma_name(DivisorLemma l) {
  switch (l) {
    case DivisorLemma::P3_4: return "P3.4";
    case DivisorLemma::P3_5: return "P3.5";
    case DivisorLemma::P3_9: return "P3.9";
    case DivisorLemma::P3_12: return "P3.12";
    case DivisorLemma::L3_6: return "L3.6";
    case DivisorLemma::L3_10: return "L3.10";
  }
  return "?";
}

DivisorTable divisor_sieve(double a, std::int64_t X) {
  if (X < 1) throw verify_error("sieve: X must be >= 1");
  if (X > kSieveCap) throw verify_error("sieve: X above the memory cap");
  DivisorTable t;
  t.a = a;
  t.X = X;
  t.values.assign(static_cast<std::size_t>(X) + 1, 0.0);
  for (std::int64_t d = 1; d <= X; ++d) {
    double p = a == 0.0 ? 1.0 : std::pow(static_cast<double>(d), a);
    for (std::int64_t m = d; m <= X; m += d) t.values[static_cast<std::size_t>(m)] += p;
  }
  return t;
}

std::vector<std::int64_t> divisor_counts(std::int64_t X) {
  if (X < 0 || X > kSieveCap) throw verify_error("divisor_counts: X out of range");
  std::vector<std::int64_t> c(static_cast<std::size_t>(X) + 1, 0);
  for (std::int64_t d = 1; d <= X; ++d)
    for (std::int64_t m = d; m <= X; m += d) ++c[static_cast<std::size_t>(m)];
  return c;
}

std::int64_t hyperbola_divisor_sum(std::int64_t X) {
  if (X < 1) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(X)));
  while (r * r > X) --r;
  while ((r + 1) * (r + 1) <= X) ++r;
  std::int64_t s = 0;
  for (std::int64_t m = 1; m <= r; ++m) s += X / m;
  return 2 * s - r * r;
}

DivisorGrid DivisorGrid::defaults() {
  DivisorGrid g;
  for (int k = 1; k <= 10; ++k) g.sigmas.push_back(0.05 * k);
  g.sigmas.back() = 0.5;
  g.X_caps = {10, 100, 1000, 10000};
  g.T_values = {150, 1000, 10000};
  g.lambdas = {0.2, 0.326, 0.45};
  g.T0 = 100;
  return g;
}

std::vector<CheckResult> check_divisor_lemma(DivisorLemma l, const DivisorGrid& g) {
  std::vector<CheckResult> out;
  for (double s : g.sigmas) {
    need_sigma(s);
    switch (l) {
      case DivisorLemma::P3_4:
        for (auto X : g.X_caps) check_P3_4(s, X, out);
        break;
      case DivisorLemma::P3_5:
        for (auto X : g.X_caps) {
          if (s == 0.5) {
            check_P3_5(s, X, 2.0, out);
            if (static_cast<double>(X) >= g.T0 / (2 * kPi)) check_P3_5(s, X, g.T0 / (2 * kPi), out);
          } else {
            check_P3_5(s, X, 1.0, out);
          }
        }
        break;
      case DivisorLemma::P3_9:
        for (auto X : g.X_caps) check_P3_9(s, X, out);
        break;
      case DivisorLemma::P3_12:
        for (double lam : g.lambdas)
          for (auto X : g.X_caps) check_P3_12(s, lam, X, out);
        break;
      case DivisorLemma::L3_6:
        check_L3_6(s, true, g, out);
        check_L3_6(s, false, g, out);
        break;
      case DivisorLemma::L3_10:
        check_L3_10(s, g, out);
        break;
    }
  }
  return out;
}

std::vector<CheckResult> check_divisor_lemmas(const DivisorGrid& g) {
  std::vector<CheckResult> out;
  for (auto l : {DivisorLemma::P3_4, DivisorLemma::P3_5, DivisorLemma::P3_9, DivisorLemma::P3_12,
                 DivisorLemma::L3_6, DivisorLemma::L3_10}) {
    auto r = check_divisor_lemma(l, g);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// point zeta

namespace {

int point_terms(double t) { return std::max(30, static_cast<int>(std::ceil(0.5 * std::fabs(t))) + 20); }

std::complex<double> em_tail(std::complex<double> s, int N) {
  using C = std::complex<double>;
  double Nd = N;
  C nps = std::exp(-s * std::log(Nd));
  C total = Nd * nps / (s - 1.0) + 0.5 * nps;
  C P = s;
  double npow = 1.0 / Nd;
  for (int k = 1; k <= 12; ++k) {
    total += bernoulli_ratio(k).mid() * npow * P * nps;
    P *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    npow /= Nd * Nd;
  }
  return total;
}

}  // namespace

std::complex<double> zeta_point(std::complex<double> s) {
  int N = point_terms(s.imag());
  if (s.real() < -10) N += static_cast<int>(-s.real());
  std::complex<double> sum = 0.0;
  for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
  return sum + em_tail(s, N);
}

ZetaLine::ZetaLine(double sigma, double t_max) : sigma_(sigma) {
  int N = point_terms(t_max) + 1;
  logn_.resize(static_cast<std::size_t>(N));
  npow_.resize(static_cast<std::size_t>(N));
  for (int n = 1; n < N; ++n) {
    logn_[static_cast<std::size_t>(n)] = std::log(static_cast<double>(n));
    npow_[static_cast<std::size_t>(n)] = std::pow(static_cast<double>(n), -sigma);
  }
}

std::complex<double> ZetaLine::operator()(double t) const {
  int N = point_terms(t);
  if (static_cast<std::size_t>(N) >= logn_.size()) throw verify_error("ZetaLine: t above t_max");
  double re = 0, im = 0;
  for (int n = 1; n < N; ++n) {
    double a = t * logn_[static_cast<std::size_t>(n)];
    re += npow_[static_cast<std::size_t>(n)] * std::cos(a);
    im -= npow_[static_cast<std::size_t>(n)] * std::sin(a);
  }
  return std::complex<double>(re, im) + em_tail({sigma_, t}, N);
}

std::vector<Quadrature> mean_square_quadrature(double tau, const std::vector<double>& Ts,
                                               double tol) {
  if (!(tau >= 0.25 && tau <= 0.75)) throw verify_error("quadrature: tau must lie in [1/4, 3/4]");
  if (Ts.empty()) return {};
  if (!std::is_sorted(Ts.begin(), Ts.end())) throw verify_error("quadrature: heights must increase");
  if (Ts.front() < 0 || Ts.back() > 2e4) throw verify_error("quadrature: T must lie in [0, 2e4]");
  ZetaLine z(tau, Ts.back() + 1);
  auto f = [&](double t) { return std::norm(z(t)); };
  std::vector<Quadrature> out;
  long double acc = 0, err = 0;
  double a = 0;
  for (double T : Ts) {
    while (a < T) {
      double b = std::min(T, a + 1.0);
      double e = 0;
      // relative tolerance per panel; the panel errors then sum to <= tol * integral
      double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 6, tol, &e);
      acc += v;
      err += e;
      a = b;
    }
    if (static_cast<double>(err) > tol * std::max(1.0, static_cast<double>(acc)))
      throw verify_error("quadrature: tolerance not met");
    out.push_back({static_cast<double>(acc), static_cast<double>(err)});
  }
  return out;
}

Quadrature mean_square_quadrature(double tau, double T, double tol) {
  return mean_square_quadrature(tau, std::vector<double>{T}, tol).front();
}

// ---------------------------------------------------------------------------
// Theorem 1.1

Interval theorem_main_terms(double tau, double T) {
  Interval t(T), ta(tau);
  if (tau == 0.5) return t * log(t) + (Interval(2.0) * constants::euler_gamma() - Interval(1.0) -
                                       log(constants::two_pi())) * t;
  Interval z2 = zeta_real(2 - 2 * tau), z1 = zeta_real(2 * tau);
  Interval e = Interval(2.0) - Interval(2.0) * ta;
  return z2 / (e * exp(log(constants::two_pi()) * (Interval(1.0) - Interval(2.0) * ta))) *
             exp(e * log(t)) +
         z1 * t;
}

Interval theorem_error_bound(double tau, double T, const TheoremConstants& k) {
  Interval t(T), ta(tau), L = log(t);
  if (tau == 0.5) return k.half * sqrt(t) * sqr(L);
  if (tau >= 0.25 && tau < 0.5)
    return k.below / sqr(Interval(0.5) - ta) * exp((Interval(1.5) - Interval(2.0) * ta) * L) * sqr(L);
  if (tau > 0.5 && tau <= 0.75)
    return k.above / sqr(ta - Interval(0.5)) * exp((Interval(2.0) * ta - Interval(0.5)) * L) * sqr(L);
  throw verify_error("theorem: tau outside [1/4, 3/4]");
}

namespace {
CheckResult theorem_result(double tau, double T, const Quadrature& q, const TheoremConstants& k) {
  Interval m = theorem_main_terms(tau, T);
  Interval b = theorem_error_bound(tau, T, k);
  CheckResult r;
  r.lemma = "Thm1.1";
  r.instance = fmt("tau=%g T=%g", tau, T);
  double dev = std::max(std::fabs(q.value - m.lo()), std::fabs(q.value - m.hi())) + q.error;
  r.lhs = dev;
  r.rhs_bound = b;
  r.pass = dev <= b.lo();
  r.ratio = dev / b.lo();
  r.margin = 1.0 - r.ratio;
  return r;
}
}  // namespace

CheckResult check_theorem(double tau, double T, const TheoremConstants& k) {
  if (T < 100) throw verify_error("theorem check needs T >= 100");
  return theorem_result(tau, T, mean_square_quadrature(tau, T), k);
}

std::vector<CheckResult> check_theorem_grid(const std::vector<double>& taus,
                                            const std::vector<double>& Ts,
                                            const TheoremConstants& k) {
  std::vector<double> sorted = Ts;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() < 100) throw verify_error("theorem check needs T >= 100");
  std::vector<CheckResult> out;
  for (double tau : taus) {
    auto qs = mean_square_quadrature(tau, sorted);
    for (std::size_t i = 0; i < sorted.size(); ++i)
      out.push_back(theorem_result(tau, sorted[i], qs[i], k));
  }
  return out;
}

// ---------------------------------------------------------------------------
// section 2

namespace {

using CL = std::complex<long double>;

// log Gamma by upward shift and the Stirling series
CL log_gamma_oracle(CL s) {
  const int K = 24;
  CL shift = 0;
  CL z = s;
  for (int k = 0; k < K; ++k) {
    shift += std::log(z);
    z += 1.0L;
  }
  static const long double b[] = {1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66,
                                  -691.0L / 2730, 7.0L / 6, -3617.0L / 510};
  CL series = 0;
  CL zp = z;
  CL z2 = z * z;
  for (int k = 1; k <= 8; ++k) {
    series += b[k - 1] / (2.0L * k * (2.0L * k - 1)) / zp;
    zp *= z2;
  }
  const long double half_log_2pi = 0.918938533204672741780329736406L;
  return (z - 0.5L) * std::log(z) - z + half_log_2pi + series - shift;
}

bool within(long double v, const Interval& lo_hi, long double tol) {
  return v >= static_cast<long double>(lo_hi.lo()) - tol &&
         v <= static_cast<long double>(lo_hi.hi()) + tol;
}

}  // namespace

std::vector<CheckResult> spot_check_section2(int samples, std::uint64_t seed) {
  if (samples < 1) throw verify_error("spot checks need samples >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> us(-2.0, 3.0), ut(1.0, 300.0), ub(-0.5, 1.5),
      utb(50.0, 500.0);
  Worst wA1, wA2, wA3, wB1, wB2, wB3, wcos, wback, wzeta;
  const Interval theta = constants::pi() * Interval(0.25);
  const long double eps = 64 * LDBL_EPSILON;
  for (int i = 0; i < samples; ++i) {
    double sg = us(rng), t = ut(rng);
    CL s(sg, t);
    CL lg = log_gamma_oracle(s);
    long double tol = eps * (1 + std::abs(lg));
    std::string inst = fmt("s=%.6g+%.6gi", sg, t);
    for (auto v : {StirlingVariant::A1, StirlingVariant::A2, StirlingVariant::A3,
                   StirlingVariant::B1, StirlingVariant::B2, StirlingVariant::B3}) {
      bool b = v == StirlingVariant::B1 || v == StirlingVariant::B2 || v == StirlingVariant::B3;
      StirlingEnclosure e;
      try {
        e = stirling_enclosures(sg, t, v, b ? theta : Interval(0.0));
      } catch (const domain_error&) {
        continue;  // |arg s| > pi - theta: the B variants do not apply
      }
      Worst* w = nullptr;
      long double dev = 0;
      double rad = e.radius.hi();
      switch (v) {
        case StirlingVariant::A1:
        case StirlingVariant::B1: {
          long double dr = std::max(std::fabs(lg.real() - (long double)e.main.re.lo()),
                                    std::fabs(lg.real() - (long double)e.main.re.hi()));
          long double di = std::max(std::fabs(lg.imag() - (long double)e.main.im.lo()),
                                    std::fabs(lg.imag() - (long double)e.main.im.hi()));
          dev = std::sqrt(dr * dr + di * di);
          w = v == StirlingVariant::A1 ? &wA1 : &wB1;
          break;
        }
        case StirlingVariant::A2:
        case StirlingVariant::B2:
          dev = std::max(std::fabs(lg.real() - (long double)e.main.re.lo()),
                         std::fabs(lg.real() - (long double)e.main.re.hi()));
          w = v == StirlingVariant::A2 ? &wA2 : &wB2;
          break;
        case StirlingVariant::A3:
        case StirlingVariant::B3:
          dev = std::max(std::fabs(lg.imag() - (long double)e.main.re.lo()),
                         std::fabs(lg.imag() - (long double)e.main.re.hi()));
          w = v == StirlingVariant::A3 ? &wA3 : &wB3;
          break;
      }
      static const char* names[] = {"T2.1(A1)", "T2.1(A2)", "T2.1(A3)",
                                    "T2.1(B1)", "T2.1(B2)", "T2.1(B3)"};
      w->offer(names[static_cast<int>(v)], inst, static_cast<double>(dev - tol), rad, 0.0);
    }
    // cosine
    CL c = std::cos(static_cast<long double>(kPi) * s / 2.0L);
    CosineEnclosure ce = cosine_modulus(sg, t);
    long double cm = std::abs(c);
    Interval m = ce.modulus();
    bool in = within(cm, m, eps * cm);
    wcos.offer("P2.2", inst, in ? 0.0 : INFINITY, 1.0, 0.0);
    // Backlund and the zeta enclosure
    double sb = ub(rng), tb = utb(rng);
    std::complex<double> zp = zeta_point({sb, tb});
    double za = std::abs(zp);
    wback.offer("T2.3", fmt("s=%.6g+%.6gi", sb, tb), za, backlund_bound(sb, tb).lo(), 0.0);
    Complex ze = zeta_em(Complex(Interval(sb), Interval(tb)), ZetaEvalParams::for_height(tb));
    double zt = 1e-12 * (1 + za);
    bool zin = within(zp.real(), ze.re, zt) && within(zp.imag(), ze.im, zt);
    wzeta.offer("zeta-enclosure", fmt("s=%.6g+%.6gi", sb, tb), zin ? 0.0 : INFINITY, 1.0, 0.0);
  }
  std::vector<CheckResult> out;
  for (Worst* w : {&wA1, &wA2, &wA3, &wB1, &wB2, &wB3, &wcos, &wback, &wzeta}) w->done(out);
  return out;
}

}  // namespace zmean
