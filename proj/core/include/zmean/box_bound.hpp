#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zmean/interval.hpp"
#include "zmean/special_fn.hpp"

namespace zmean {

class grid_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// how a square cell of half-side prec is enclosed before evaluating zeta
enum class Covering {
  box,   // whole square: disk of radius prec*sqrt(2) around the center
  disk,  // disk of radius prec around the center
};

enum class Layout {
  tiled,    // centers sigma_min + (2j+1) prec, t = (2k+1) prec, weight 2 prec
  printed,  // sigma = sigma_min + j prec (inclusive), t = k prec <= height, weight 2 prec
};

const char* covering_name(Covering c);
const char* layout_name(Layout l);

struct BoxGrid {
  Interval sigma_min{0.5};
  Interval sigma_max{0.75};
  Interval height{100.0};
  Interval prec = Interval::rational(1, 400);
  Covering covering = Covering::box;
  Layout layout = Layout::tiled;
  // 0 = ZMEAN_THREADS or hardware concurrency
  unsigned threads = 0;

  // throws grid_error
  void validate() const;
  std::size_t column_count() const;
  std::size_t cells_per_column() const;
};

struct ColumnSum {
  double sigma = 0.0;  // column center
  Interval sum{0.0};
  std::size_t pole_cells = 0;
};

struct BoxBoundResult {
  Interval bound{0.0};
  double argmax_sigma = 0.0;
  std::size_t cells = 0;
  std::size_t pole_cells = 0;
  std::vector<ColumnSum> columns;
};

// sup |zeta|^2 over one covered cell
Interval cell_sup_abs_sq(double sigma, double t, double rad);

// max over sigma columns of sum over cells sup|zeta|^2 * 2 prec
BoxBoundResult column_integral_bound(const BoxGrid& g);

// sup |zeta|^2 (1 - sigma) per cell; a cell whose enclosure meets s = 1 adds the cap 5
BoxBoundResult column_integral_bound_poleguard(const BoxGrid& g);

// Lavrik: |zeta(s)|^2 <= 5/(1-sigma)^2 for |1-s| <= 1/10
inline constexpr double kLavrikCap = 5.0;

unsigned thread_count(unsigned requested);

}  // namespace zmean
