#include "zmean/box_bound.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace zmean {

namespace {

// exact-ish count of steps for a ratio of rationals
std::size_t step_count(const Interval& ratio, bool inclusive) {
  double r = ratio.mid();
  double n = std::round(r);
  bool integral = std::fabs(r - n) < 1e-9 * std::max(1.0, n);
  if (integral) return static_cast<std::size_t>(n) + (inclusive ? 1 : 0);
  return inclusive ? static_cast<std::size_t>(std::floor(r)) + 1 : static_cast<std::size_t>(std::ceil(r));
}

ZetaEvalParams cell_params(double t) {
  // the remainder is bounded rigorously for any N; this keeps it negligible up to t ~ 10^3
  int n = std::max(40, static_cast<int>(std::ceil(0.6 * std::fabs(t))) + 30);
  return {n, 12};
}

struct Plan {
  std::vector<Interval> sigmas;  // column centers
  Interval t0, t_step;           // t_k = t0 + k t_step
  std::size_t rows = 0;
  double half_side = 0.0;        // upper bound on prec
  double cover_rad = 0.0;
  Interval weight;               // 2 prec
};

Plan make_plan(const BoxGrid& g) {
  Plan p;
  const Interval& prec = g.prec;
  p.half_side = prec.hi();
  p.cover_rad = g.covering == Covering::box ? mul_up(prec.hi(), sqrt(Interval(2.0)).hi())
                                            : prec.hi();
  p.weight = Interval(2.0) * prec;
  std::size_t cols = g.column_count();
  for (std::size_t j = 0; j < cols; ++j) {
    Interval jj(static_cast<double>(j));
    if (g.layout == Layout::tiled)
      p.sigmas.push_back(g.sigma_min + (Interval(2.0) * jj + Interval(1.0)) * prec);
    else
      p.sigmas.push_back(g.sigma_min + jj * prec);
  }
  if (g.layout == Layout::tiled) {
    p.t0 = prec;
    p.t_step = Interval(2.0) * prec;
  } else {
    p.t0 = Interval(0.0);
    p.t_step = prec;
  }
  p.rows = g.cells_per_column();
  return p;
}

bool square_meets_one(double sc, double tc, double h) {
  const double slack = 1e-12;
  return std::fabs(sc - 1.0) <= h + slack && std::fabs(tc) <= h + slack;
}

template <class CellFn>
BoxBoundResult sweep(const BoxGrid& g, CellFn cell) {
  g.validate();
  Plan p = make_plan(g);
  std::vector<ColumnSum> cols(p.sigmas.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t j = next.fetch_add(1);
      if (j >= cols.size()) return;
      const Interval& sc = p.sigmas[j];
      ColumnSum cs;
      cs.sigma = sc.mid();
      Interval S(0.0);
      for (std::size_t k = 0; k < p.rows; ++k) {
        Interval tc = p.t0 + Interval(static_cast<double>(k)) * p.t_step;
        double slack = std::max(sc.rad(), tc.rad());
        bool pole = square_meets_one(sc.mid(), tc.mid(), p.half_side);
        Interval v;
        if (!pole) {
          try {
            v = cell(sc.mid(), tc.mid(), add_up(p.cover_rad, 2.0 * slack), p) * p.weight;
          } catch (const pole_error&) {
            pole = true;
          }
        }
        if (pole) {
          // the Lavrik cap enters once per pole cell, without the strip width
          v = Interval(kLavrikCap);
          ++cs.pole_cells;
        }
        S = S + v;
      }
      cs.sum = S;
      cols[j] = cs;
    }
  };
  unsigned n = std::min<unsigned>(thread_count(g.threads), static_cast<unsigned>(cols.size()));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  BoxBoundResult r;
  r.cells = cols.size() * p.rows;
  double best_lo = 0.0, best_hi = 0.0;
  for (const auto& c : cols) {
    r.pole_cells += c.pole_cells;
    if (c.sum.hi() > best_hi) {
      best_hi = c.sum.hi();
      r.argmax_sigma = c.sigma;
    }
    best_lo = std::max(best_lo, c.sum.lo());
  }
  r.bound = Interval(std::min(best_lo, best_hi), best_hi);
  r.columns = std::move(cols);
  return r;
}

}  // namespace

const char* covering_name(Covering c) { return c == Covering::box ? "box" : "disk"; }
const char* layout_name(Layout l) { return l == Layout::tiled ? "tiled" : "printed"; }

void BoxGrid::validate() const {
  if (!prec.certainly_gt(Interval(0.0))) throw grid_error("prec must be positive");
  if (!prec.certainly_lt(Interval::rational(1, 40))) throw grid_error("prec must be < 1/40");
  if (!sigma_min.certainly_lt(sigma_max)) throw grid_error("need sigma_min < sigma_max");
  if (height.lo() < 0.0) throw grid_error("height must be >= 0");
  if (height.hi() > 1000.0) throw grid_error("height above 10^3 is not supported");
}

std::size_t BoxGrid::column_count() const {
  Interval w = sigma_max - sigma_min;
  if (layout == Layout::tiled) return step_count(w / (Interval(2.0) * prec), false);
  return step_count(w / prec, true);
}

std::size_t BoxGrid::cells_per_column() const {
  if (height.hi() <= 0.0) return 0;
  if (layout == Layout::tiled) return step_count(height / (Interval(2.0) * prec), false);
  return step_count(height / prec, true);
}

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* e = std::getenv("ZMEAN_THREADS")) {
    int v = std::atoi(e);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

Interval cell_sup_abs_sq(double sigma, double t, double rad) {
  ComplexBall s(sigma, t, rad);
  ComplexBall z = zeta_ball(s, cell_params(std::fabs(t) + rad));
  return abs_sq_upper(z);
}

BoxBoundResult column_integral_bound(const BoxGrid& g) {
  return sweep(g, [](double sc, double tc, double rad, const Plan&) {
    return cell_sup_abs_sq(sc, tc, rad);
  });
}

BoxBoundResult column_integral_bound_poleguard(const BoxGrid& g) {
  return sweep(g, [](double sc, double tc, double rad, const Plan& p) {
    // weight 1 - sigma over the square, at its left edge
    Interval w = Interval(1.0) - Interval(sc) + Interval(p.half_side) + Interval(0.0, 1e-15);
    return cell_sup_abs_sq(sc, tc, rad) * w;
  });
}

}  // namespace zmean
