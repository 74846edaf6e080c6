#pragma once

#include <array>
#include <string>
#include <vector>

#include "zmean/interval.hpp"

namespace zmean {

enum class BasisTag { gap_linear, gap_squared, reflected };

const char* basis_name(BasisTag t);

// weights over {1, 1/tau, 1/(1/2-tau)} (or the squared / reflected bases)
struct CoeffVec {
  std::array<Interval, 3> w{Interval(0.0), Interval(0.0), Interval(0.0)};
  BasisTag basis = BasisTag::gap_linear;

  CoeffVec() = default;
  CoeffVec(Interval c, Interval inv_tau, Interval inv_gap, BasisTag b = BasisTag::gap_linear)
      : w{c, inv_tau, inv_gap}, basis(b) {}
  static CoeffVec scalar(const Interval& c, BasisTag b = BasisTag::gap_linear) {
    return {c, Interval(0.0), Interval(0.0), b};
  }

  const Interval& operator[](int i) const { return w[static_cast<std::size_t>(i)]; }
  Interval& operator[](int i) { return w[static_cast<std::size_t>(i)]; }
  bool nonnegative() const;
  bool is_zero(int i) const { return (*this)[i].lo() == 0.0 && (*this)[i].hi() == 0.0; }
  // value of the weighted basis at a given tau
  Interval eval(const Interval& tau) const;
};

class basis_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class absorb_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CoeffVec cw_sum(const CoeffVec& a, const CoeffVec& b);
CoeffVec cw_prod(const Interval& s, const CoeffVec& b);
CoeffVec cw_prod(const CoeffVec& a, const CoeffVec& b);
CoeffVec operator+(const CoeffVec& a, const CoeffVec& b);
CoeffVec operator*(const Interval& s, const CoeffVec& b);

// tau in [lo, hi); lo may be 0 (open) for the widened range
struct TauRange {
  Interval lo, hi;
};

struct Rebased {
  CoeffVec vec;
  Interval modifier;
};

// gap_linear -> gap_squared multiplies the gap component by max(1/2 - tau)
Rebased rebase(const CoeffVec& a, BasisTag to, const TauRange& range);

// T^{a + b*tau} log(T)^p
struct OrderTerm {
  CoeffVec coeff;
  Interval e_const{0.0};
  Interval e_tau{0.0};
  int log_power = 0;
  std::string label;
};

struct Absorbed {
  CoeffVec vec;
  Interval factor;
};

// dominate term by target for all T >= T0 and tau in range
Absorbed absorb(const OrderTerm& term, const OrderTerm& target, const Interval& T0,
                const TauRange& range);

// factor T0^{e} * log(T0)^{p} with e, p relative to target; exposed for tests
Interval absorb_factor(const OrderTerm& term, const OrderTerm& target, const Interval& T0,
                       const TauRange& range);

}  // namespace zmean
