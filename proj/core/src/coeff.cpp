#include "zmean/coeff.hpp"

#include <cmath>

namespace zmean {

const char* basis_name(BasisTag t) {
  switch (t) {
    case BasisTag::gap_linear: return "gap_linear";
    case BasisTag::gap_squared: return "gap_squared";
    case BasisTag::reflected: return "reflected";
  }
  return "?";
}

bool CoeffVec::nonnegative() const {
  for (const auto& x : w)
    if (x.lo() < 0) return false;
  return true;
}

Interval CoeffVec::eval(const Interval& tau) const {
  Interval half = Interval(0.5);
  switch (basis) {
    case BasisTag::gap_linear: return w[0] + w[1] / tau + w[2] / (half - tau);
    case BasisTag::gap_squared: return w[0] + w[1] / tau + w[2] / sqr(half - tau);
    case BasisTag::reflected: return w[0] + w[1] / (Interval(1.0) - tau) + w[2] / sqr(tau - half);
  }
  throw basis_error("unknown basis");
}

CoeffVec cw_sum(const CoeffVec& a, const CoeffVec& b) {
  if (a.basis != b.basis)
    throw basis_error(std::string("cw_sum basis mismatch: ") + basis_name(a.basis) + " vs " +
                      basis_name(b.basis));
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a.basis};
}

CoeffVec cw_prod(const Interval& s, const CoeffVec& b) { return {s * b[0], s * b[1], s * b[2], b.basis}; }

CoeffVec cw_prod(const CoeffVec& a, const CoeffVec& b) {
  if (a.is_zero(1) && a.is_zero(2)) return cw_prod(a[0], b);
  if (b.is_zero(1) && b.is_zero(2)) return cw_prod(b[0], a);
  throw basis_error("cw_prod of two non-scalar vectors");
}

CoeffVec operator+(const CoeffVec& a, const CoeffVec& b) { return cw_sum(a, b); }
CoeffVec operator*(const Interval& s, const CoeffVec& b) { return cw_prod(s, b); }

Rebased rebase(const CoeffVec& a, BasisTag to, const TauRange& range) {
  if (a.basis == to) return {a, Interval(1.0)};
  if (a.basis == BasisTag::gap_linear && to == BasisTag::gap_squared) {
    // 1/(1/2-tau) <= max(1/2-tau)/(1/2-tau)^2
    Interval modifier = Interval(0.5) - range.lo;
    if (modifier.lo() < 0) throw basis_error("rebase: range exceeds 1/2");
    return {CoeffVec(a[0], a[1], modifier * a[2], to), modifier};
  }
  throw basis_error(std::string("unsupported rebase ") + basis_name(a.basis) + " -> " +
                    basis_name(to));
}

namespace {
Interval log_power(const Interval& L, int p) {
  if (p >= 0) return ipow(L, p);
  return Interval(1.0) / ipow(L, -p);
}
}  // namespace

Interval absorb_factor(const OrderTerm& term, const OrderTerm& target, const Interval& T0,
                       const TauRange& range) {
  Interval dc = term.e_const - target.e_const;
  Interval dt = term.e_tau - target.e_tau;
  Interval g_lo = dc + dt * range.lo;
  Interval g_hi = dc + dt * range.hi;
  Interval gap = max(g_lo, g_hi);
  int p = term.log_power - target.log_power;
  if (gap.hi() > 0)
    throw absorb_error("cannot absorb " + term.label + " into " + target.label +
                       ": exponent gap positive");
  Interval L = log(T0);
  if (L.lo() <= 0) throw absorb_error("absorb needs T0 > 1");
  if (gap.hi() == 0.0 || gap.contains_zero()) {
    if (p > 0)
      throw absorb_error("cannot absorb " + term.label + " into " + target.label +
                         ": equal exponent with larger log power");
    return log_power(L, p);
  }
  // T^{-delta} log^p is decreasing on [T0, inf) once log T0 >= p/delta
  if (p > 0) {
    Interval need = Interval(static_cast<double>(p)) / (-gap);
    if (!(L.lo() >= need.hi()))
      throw absorb_error("cannot absorb " + term.label + " into " + target.label +
                         ": T0 below the monotonicity threshold");
  }
  return exp(gap * L) * log_power(L, p);
}

Absorbed absorb(const OrderTerm& term, const OrderTerm& target, const Interval& T0,
                const TauRange& range) {
  Interval f = absorb_factor(term, target, T0, range);
  CoeffVec v = cw_prod(f, term.coeff);
  v = rebase(v, target.coeff.basis, range).vec;
  return {v, f};
}

}  // namespace zmean
