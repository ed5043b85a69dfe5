#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace cyclab {

using Complex = std::complex<double>;

// Nodes and weights for a one-dimensional rule.
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss rule for the integral over [0, 1] of (1 - u)^beta g(u) du,
// beta > -1, computed by Golub-Welsch.
Rule gauss_jacobi01(int n, double beta);
inline Rule gauss_legendre01(int n) { return gauss_jacobi01(n, 0.0); }

// Composite rule for the integral over [0, 1] of (1 - x)^a g(x) dx whose
// panels halve in width towards x = 1 until they are narrower than `finest`.
// The panel touching 1 carries the singular weight exactly.
Rule graded_rule_to_one(double finest, int points_per_panel, double a);

// Composite Gauss-Legendre on [0, len] with panels halving towards 0.
Rule graded_rule_to_zero(double len, double finest, int points_per_panel);

// Tensor rule for integrating against dA_alpha = (1 - |z|^2)^(1 - alpha) dA
// over the unit disk, with dA normalised to total mass 1. After u = |z|^2 the
// measure is (1 - u)^(1 - alpha) du dtheta / (2 pi).
struct DiskRule {
  double alpha = 0.0;
  Rule radial;  // in u
  int angular = 0;

  double integrate(const std::function<double(Complex)>& g) const;
};

// Requires alpha < 2; throws ParameterOutOfRange otherwise.
DiskRule make_disk_rule(double alpha, int radial_n, int angular_n);

}  // namespace cyclab
