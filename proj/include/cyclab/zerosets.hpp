#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cyclab/series.hpp"

namespace cyclab {

struct ReflectionTest {
  bool proportional = false;
  Complex lambda;          // reflect(p) = lambda p when proportional
  double deviation = 0.0;  // max |reflect(p) - lambda p| / max |p|
};

// Proportionality tolerance 1e-10 relative to the largest coefficient.
ReflectionTest reflection_test(const BivariateSeries& p);

enum class TorusClass { empty, finite, curve };
const char* to_string(TorusClass c);

// Where the zeros live: the torus, or the unit circle of the only variable
// p depends on.
enum class Face { torus, z1_circle, z2_circle };
const char* to_string(Face f);

struct TorusZero {
  double s = 0.0;  // arg z1 in (-pi, pi]
  double t = 0.0;  // arg z2 in (-pi, pi]; 0 on a z1_circle face
  double residual = 0.0;
};

struct TorusZeroSet {
  TorusClass cls = TorusClass::empty;
  Face face = Face::torus;
  std::vector<TorusZero> points;  // finite zeros, or curve samples
  std::optional<Complex> lambda;  // curve witness
  bool resolution_warning = false;
  std::string note;
};

// Curve when reflect(p) is proportional to p, sampled by solving for z1 at
// grid_n values of arg z2. Otherwise |p|^2 is scanned on a grid_n x grid_n
// angle grid and local minima are refined by damped Gauss-Newton in (s, t);
// zeros within 1e-6 are merged. Distinct zeros closer than 1e-4 raise the
// resolution warning.
TorusZeroSet torus_zero_search(const BivariateSeries& p, int grid_n = 512);

struct StabilityReport {
  bool zero_free = true;
  std::optional<std::array<Complex, 2>> witness;  // (z1, z2) with |p| small inside the bidisk
  double min_root_modulus = 0.0;       // over the closed-disk sweep
  std::vector<double> per_radius_min;  // min root modulus per sweep radius
  bool sides_zero_free = true;         // no zeros on (D x T) u (T x D)
  int degenerate_slices = 0;           // sweep points where the leading slice vanished
  Axis sweep_axis = Axis::z2;          // variable swept over the grid
};

// For each z2 on `radii` x `angles` points of the closed disk (radii
// i / (radii - 1)), finds the z1-roots of p(., z2) from the companion
// matrix. Zero-free when every root with |z2| < 1 has modulus >= 1 - 1e-9.
// Axes are swapped when p does not depend on z1.
StabilityReport stability_check(const BivariateSeries& p, int radii = 64, int angles = 256);

enum class Irreducibility { irreducible, reducible, unknown };
const char* to_string(Irreducibility v);

struct IrreducibilityReport {
  Irreducibility verdict = Irreducibility::unknown;
  std::optional<BivariateSeries> factor_hint;
  std::string reason;
};

// Heuristic only: one-variable content via gcd of coefficient slices, degree
// one in a variable, then transitivity of the monodromy around the singular
// set. Answers unknown when the numerics are inconclusive.
IrreducibilityReport heuristic_irreducibility(const BivariateSeries& p);

}  // namespace cyclab
