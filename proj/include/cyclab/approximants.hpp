#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "cyclab/series.hpp"
#include "cyclab/spaces.hpp"

namespace cyclab {

enum class BasisShape { square, diagonal };

// Exponents (k, l) of the approximant monomials, in the order used for the
// Gram matrix rows.
std::vector<Box> basis_indices(Box box, BasisShape shape = BasisShape::square);

// Normal equations for min ||p q - 1|| over q in span{z1^k z2^l : (k,l) in basis}.
// gram(a, b) = <z^b p, z^a p>_w and rhs(a) = <1, z^a p>_w.
struct GramSystem {
  std::vector<Box> basis;
  Eigen::MatrixXcd gram;
  Eigen::VectorXcd rhs;
};

GramSystem build_gram(const BivariateSeries& p, const std::vector<Box>& basis, WeightPair w);
GramSystem build_gram(const BivariateSeries& p, Box box, WeightPair w);

struct OptimalApproximant {
  BivariateSeries q;
  double dist_sq = 0.0;  // 1 - Re(p(0,0) q(0,0))
};

// Cholesky solve with one step of iterative refinement. Throws
// NumericalBreakdown (last_completed = -1) if the factorisation fails.
OptimalApproximant solve_optimal(const BivariateSeries& p, const std::vector<Box>& basis,
                                 WeightPair w);
OptimalApproximant solve_optimal(const BivariateSeries& p, Box box, WeightPair w,
                                 BasisShape shape = BasisShape::square);

// ||p q - 1||_w^2 evaluated directly from the product.
double residual_norm_sq(const BivariateSeries& p, const BivariateSeries& q, WeightPair w);

// Max over basis monomials of |<p q - 1, z^a p>_w|.
double orthogonality_defect(const BivariateSeries& p, const BivariateSeries& q,
                            const std::vector<Box>& basis, WeightPair w);

struct DistancePoint {
  int n = 0;
  double dist_sq = 0.0;
};
using DistanceSequence = std::vector<DistancePoint>;

// Solves for boxes (N, N), or N+1 diagonal monomials, for N = 0..n_max.
// Propagates NumericalBreakdown carrying the largest completed N.
DistanceSequence distance_sequence(const BivariateSeries& p, WeightPair w, int n_max,
                                   BasisShape shape = BasisShape::square);

// One-variable shorthand: P in D_alpha, degrees 0..n_max.
DistanceSequence one_var_distance_sequence(const std::vector<Complex>& P, double alpha, int n_max);

// Closed form for P = 1 - z: 1 / sum_{k=0}^{n+1} (k+1)^(-alpha).
double one_minus_z_dist_sq(double alpha, int n);

enum class Regime { power_law, logarithmic, plateau, inconclusive };
const char* to_string(Regime r);

struct DecayFit {
  Regime regime = Regime::inconclusive;
  double slope = 0.0;      // power law: d log dist / d log N; logarithmic: d log dist / d log log N
  double r_squared = 0.0;  // of the reported model
  double limit = 0.0;      // plateau estimate
  int window_start = 0;    // first N used by the fits
  std::string detail;
};

struct DecayFitOptions {
  double plateau_step = 1e-6;      // strict plateau: last successive difference
  double plateau_floor = 1e-3;     // minimum limit for a plateau
  double aitken_max_ratio = 0.6;   // D2/D1 of the extrapolation triple
  double aitken_min_fraction = 0.25;
  double min_r_squared = 0.9;
  double max_power_slope = -0.3;
  double log_slope_lo = -1.5;
  double log_slope_hi = -0.75;
  double converged_floor = 1e-13;  // values below count as decayed
};

// Requires at least 8 points; throws InvalidArgument otherwise.
DecayFit decay_fit(const DistanceSequence& seq, const DecayFitOptions& opt = {});

// For p = 2 - z1 - z2: builds the orthogonal complement of
// span{z^a p : a + (1,1) <= (box, box)} inside polynomials of box (box, box),
// forms b_kl = (k+1)^a1 (l+1)^a2 f_kl for each complement vector (scaled to
// max |b| = 1) and returns the largest |sum_s conj(p_s) b_{a+s}| over the
// interior indices a. For p = 2 - z1 - z2 that is |2 b_kl - b_{k+1,l} - b_{k,l+1}|.
// Works for any p; an empty complement gives 0.
double orthocomplement_recurrence_check(const BivariateSeries& p, WeightPair w, int box);

}  // namespace cyclab
