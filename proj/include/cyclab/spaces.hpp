#pragma once

#include <span>

#include "cyclab/quadrature.hpp"
#include "cyclab/series.hpp"

namespace cyclab {

// (alpha1, alpha2); any finite reals.
struct WeightPair {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  friend bool operator==(const WeightPair&, const WeightPair&) = default;
};

double coeff_weight(int k, int l, WeightPair w);

// sum (k+1)^alpha1 (l+1)^alpha2 |a_kl|^2 over the stored box.
double coeff_norm_sq(const BivariateSeries& f, WeightPair w);
Complex inner_product(const BivariateSeries& f, const BivariateSeries& g, WeightPair w);

double one_var_norm_sq(std::span<const Complex> F, double alpha);
Complex one_var_inner(std::span<const Complex> F, std::span<const Complex> G, double alpha);

// Disk rules for both axes; both alphas must be < 2.
struct QuadratureGrid {
  DiskRule axis1;
  DiskRule axis2;
};
QuadratureGrid make_grid(WeightPair w, int radial_n, int angular_n);

// Pieces of the split integral norm
//   |f(0,0)|^2 + int |d1 f(z,0)|^2 dA_a1 + int |d2 f(0,z)|^2 dA_a2
//              + int int |d1 d2 f|^2 dA_a1 dA_a2.
struct IntegralNorm {
  double constant = 0.0;
  double axis1 = 0.0;
  double axis2 = 0.0;
  double mixed = 0.0;
  double seminorm() const { return axis1 + axis2 + mixed; }
  double total() const { return constant + seminorm(); }
};

// Quadrature evaluation on a fixed grid. Throws ParameterOutOfRange unless
// both alphas are < 2.
IntegralNorm integral_seminorm(const BivariateSeries& f, WeightPair w, const QuadratureGrid& grid);

// Same, with node counts doubled from a degree-based start until the total
// changes by less than 0.1%.
IntegralNorm integral_seminorm(const BivariateSeries& f, WeightPair w);

// Closed form through the monomial moments
//   int |z|^(2j) dA_alpha = B(j + 1, 2 - alpha).
IntegralNorm seminorm_moments(const BivariateSeries& f, WeightPair w);
double one_var_integral_norm_sq(std::span<const Complex> F, double alpha);

// int int |d2 d1 (z1 z2 f)|^2 dA_a1 dA_a2 by quadrature; an equivalent norm
// that gives 1/((2 - a1)(2 - a2)) for f = 1.
double compact_integral_norm_sq(const BivariateSeries& f, WeightPair w, const QuadratureGrid& grid);

// int_D (1 - |z|)^a / |1 - conj(w) z|^(2 + a + b) dA(z) for |w| = w_mod.
// w_mod is capped at 0.9999. Throws ParameterOutOfRange when a <= -1.
double forelli_rudin(double a, double b, double w_mod);

// Uncapped kernel integral int_D (1 - |z|)^a |1 - w z|^(-2s) dA(z), w >= 0.
double kernel_integral(double a, double s, double w);

// ||d_axis f||^2 in the space with that axis parameter lowered by 2, divided
// by ||f||^2. Bounded ratios witness d1 f in D_(a1-2, a2) for f in D_(a1, a2).
double derivative_shift_ratio(const BivariateSeries& f, WeightPair w, Axis axis);

}  // namespace cyclab
