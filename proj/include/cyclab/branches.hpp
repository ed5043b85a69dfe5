#pragma once

// Branch functions h_j(z2) with p(z1, z2) = A_0(z2) prod_j (1 - h_j(z2) z1).
// The 1/h_j are the z1-roots of p(., z2); h_j = 0 stands for a root at
// infinity and an infinite h_j for a root at zero.

#include <cstdint>
#include <string>
#include <vector>

#include "cyclab/series.hpp"

namespace cyclab {

enum class SingularKind { branch, leading_degeneration };
const char* to_string(SingularKind k);

struct SingularPoint {
  Complex a;
  SingularKind kind = SingularKind::branch;
  double discriminant = 0.0;  // |Res(a)| relative to the resultant's coefficient scale
};

// Res_{z1}(p, dp/dz1) as a polynomial in z2 (ascending), using the formal
// z1-degrees m and m - 1. Computed by evaluation on the unit circle and
// discrete Fourier interpolation.
std::vector<Complex> discriminant_polynomial(const BivariateSeries& p);

// Points of the z2-plane where two z1-roots collide (branch) or where both
// A_m and A_{m-1} vanish (leading_degeneration). Throws DegenerateInput when
// p does not depend on z2 or has z1-degree 0.
std::vector<SingularPoint> singular_set(const BivariateSeries& p);

// The m branch values at z2, unordered.
std::vector<Complex> branch_values(const BivariateSeries& p, Complex z2);

struct BranchTrack {
  std::vector<Complex> nodes;                // z2 along the path
  std::vector<std::vector<Complex>> values;  // values[i][j] = h_j(nodes[i])
  // For closed paths: branch j ends on the starting value of branch
  // permutation[j]. Identity for open paths.
  std::vector<int> permutation;
};

// Continuation along the polyline `path` with steps of at most 0.1 times the
// distance to `singular` (and 0.02), refined further whenever the root
// matching is not clearly separated. Branches are matched in the chordal
// metric. Throws MatchingAmbiguity if the best and second best pairings
// differ by less than 1e-9, and InvalidArgument if the path passes within
// 1e-3 of a singular point.
BranchTrack track_branches(const BivariateSeries& p, const std::vector<Complex>& path,
                           const std::vector<SingularPoint>& singular);
BranchTrack track_branches(const BivariateSeries& p, const std::vector<Complex>& path);

// Closed polygon approximating the circle |z - center| = radius, starting
// and ending at center + radius.
std::vector<Complex> circle_path(Complex center, double radius, int segments = 64);

// Monodromy of a small loop around a; the radius is a quarter of the
// distance to the nearest other singular point (points within 1e-3 of a
// count as a itself), capped at 0.25.
std::vector<int> monodromy_around(const BivariateSeries& p, Complex a,
                                  const std::vector<SingularPoint>& singular);

bool is_transposition(const std::vector<int>& perm);
bool is_identity(const std::vector<int>& perm);
// 1-based one-line notation, e.g. "[2,1]".
std::string one_line(const std::vector<int>& perm);

struct HopfReport {
  double min_ratio = 0.0;  // min over samples and branches of (1-|h|^2)/(1-|z|^2)
  Complex argmin;
  double max_abs_h = 0.0;
  int samples = 0;
  // Largest number of z2 in the disk sharing one sampled branch value.
  int max_multiplicity = 0;
};

// Halton points in the unit disk, starting at index seed + 1, skipping
// points within 1e-2 of the singular set.
HopfReport hopf_ratio(const BivariateSeries& p, int sample_n, std::uint64_t seed = 0);

struct ExponentFit {
  double slope = 0.0;
  double r_squared = 0.0;
  bool no_blowup = false;  // slope >= -0.05
  std::vector<double> radii;
  std::vector<double> derivative;  // max over branches of |h'|
};

// Centered differences with step 1e-3 * radius along the ray from a towards
// the origin (or the positive axis when a = 0).
ExponentFit branch_exponent(const BivariateSeries& p, Complex a,
                            const std::vector<double>& radii = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5});

// Max over samples z2 and z2-roots zeta of p(1/z2, .) of min_k |h_k(zeta) - z2|:
// the z2-side branches composed with the z1-side ones return z2.
double reciprocal_branch_residual(const BivariateSeries& p, const std::vector<Complex>& samples);

// Halton point in the unit disk (area-uniform) for index i >= 1.
Complex halton_disk_point(std::uint64_t i);

}  // namespace cyclab
