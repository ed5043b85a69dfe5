#pragma once

#include <vector>

#include "cyclab/series.hpp"
#include "cyclab/spaces.hpp"

namespace cyclab {

// p / p(r z1, z2) truncated to `box`. Throws ZeroConstantTerm if p(0,0) == 0.
BivariateSeries dilation_quotient(const BivariateSeries& p, double r, Box box);

// Coefficients of P(z) / P(r z) up to degree n.
std::vector<Complex> one_var_quotient(const std::vector<Complex>& P, double r, int n);

struct DilationRecord {
  double r = 0.0;
  double norm_sq = 0.0;   // coefficient norm
  double seminorm = 0.0;  // split integral norm |F(0)|^2 + seminorm; NaN when some alpha >= 2
  Box box;
  double tail = 0.0;      // relative change of norm_sq when the box was doubled
  bool reliable = false;  // tail < 1%
};

using DilationSweep = std::vector<DilationRecord>;

// Truncation starts at about 8 / (1 - r) terms and doubles until norm_sq
// changes by less than 1%.
DilationSweep one_var_quotient_sweep(const std::vector<Complex>& P, double alpha,
                                     const std::vector<double>& r_grid);

// Diagonal p is reduced to its one-variable profile in D_(a1 + a2). Other
// p double a square box from min(cap / 2, 4 / (1 - r)) up to `box_cap`.
DilationSweep two_var_sweep(const BivariateSeries& p, WeightPair w, const std::vector<double>& r_grid,
                            int box_cap = 512);

// Coefficient norms of d^order/dz1^order F_r in the space with alpha1
// lowered by 2 * order, one entry per r.
std::vector<double> derivative_sweep(const BivariateSeries& p, WeightPair w,
                                     const std::vector<double>& r_grid, int order, Box box);

// Quadrature value of int int (1 - r) / |1 - r z1 z2|^4 dA(z1) dA(z2).
double model_integral(double r);

struct Boundedness {
  double max_over_min = 0.0;
  double last_decade_growth = 0.0;  // last value over the first of the last three
  bool bounded = false;
  bool divergent = false;
};

// divergent: across the last three values (0.9, 0.99, 0.999 on the default
// grid) the value grows by at least `blowup`. bounded: max/min below `factor`
// and not divergent.
Boundedness assess_boundedness(const std::vector<double>& values, double factor = 10.0,
                               double blowup = 5.0);

}  // namespace cyclab
