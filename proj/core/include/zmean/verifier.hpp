#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "zmean/interval.hpp"

namespace zmean {

class verify_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// d_a(n) = sum_{d | n} d^a for n <= X; index 0 unused
struct DivisorTable {
  double a = 0.0;
  std::int64_t X = 0;
  std::vector<double> values;

  double operator[](std::int64_t n) const { return values[static_cast<std::size_t>(n)]; }
};

inline constexpr std::int64_t kSieveCap = 10'000'000;

DivisorTable divisor_sieve(double a, std::int64_t X);
// exact divisor counts d(n), n <= X
std::vector<std::int64_t> divisor_counts(std::int64_t X);
// sum_{n <= X} d(n) via the hyperbola identity
std::int64_t hyperbola_divisor_sum(std::int64_t X);

enum class DivisorLemma { P3_4, P3_5, P3_9, P3_12, L3_6, L3_10 };
const char* lemma_name(DivisorLemma l);

struct CheckResult {
  std::string lemma;
  std::string instance;
  double lhs = 0.0;
  Interval rhs_bound{0.0};
  bool pass = false;
  double ratio = 0.0;   // lhs / rhs_bound.lo
  double margin = 0.0;  // 1 - ratio
};

struct DivisorGrid {
  std::vector<double> sigmas;        // in (0, 1/2]
  std::vector<std::int64_t> X_caps;  // checks run over every X <= cap
  std::vector<double> T_values;      // T >= T0
  std::vector<double> lambdas;       // for P3.12
  double T0 = 100.0;

  static DivisorGrid defaults();
};

// every instance of one lemma over the grid
std::vector<CheckResult> check_divisor_lemma(DivisorLemma l, const DivisorGrid& g);
std::vector<CheckResult> check_divisor_lemmas(const DivisorGrid& g);

// point zeta (not certified), Euler-Maclaurin in double precision
std::complex<double> zeta_point(std::complex<double> s);

// zeta(sigma + it) along a fixed vertical line, reusing n^{-sigma} and log n
class ZetaLine {
 public:
  ZetaLine(double sigma, double t_max);
  std::complex<double> operator()(double t) const;
  double sigma() const { return sigma_; }

 private:
  double sigma_;
  std::vector<double> logn_, npow_;
};

struct Quadrature {
  double value = 0.0;
  double error = 0.0;
};

// int_0^T |zeta(tau + it)|^2 dt by panelwise adaptive Gauss-Kronrod
Quadrature mean_square_quadrature(double tau, double T, double tol = 1e-8);
// int_0^{T_k} for increasing T_k, one sweep
std::vector<Quadrature> mean_square_quadrature(double tau, const std::vector<double>& Ts,
                                               double tol = 1e-8);

struct TheoremConstants {
  // published Theorem 1.1 constants
  Interval half{18.169}, below{2.215}, above{4.613};
};

// main terms of the mean square at tau, as an enclosure
Interval theorem_main_terms(double tau, double T);
// error-term bound of Theorem 1.1
Interval theorem_error_bound(double tau, double T, const TheoremConstants& k = {});

CheckResult check_theorem(double tau, double T, const TheoremConstants& k = {});
std::vector<CheckResult> check_theorem_grid(const std::vector<double>& taus,
                                            const std::vector<double>& Ts,
                                            const TheoremConstants& k = {});

// random enclosure checks for the section 2 statements
std::vector<CheckResult> spot_check_section2(int samples, std::uint64_t seed = 42);

}  // namespace zmean
