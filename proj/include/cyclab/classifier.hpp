#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclab/approximants.hpp"
#include "cyclab/series.hpp"
#include "cyclab/spaces.hpp"
#include "cyclab/zerosets.hpp"

namespace cyclab {

enum class Verdict { cyclic, not_cyclic, out_of_theorem_scope };
const char* to_string(Verdict v);

enum class VerdictRule {
  interior_zero,
  product,
  constant,
  one_variable,
  case1,  // alpha1 + alpha2 <= 1
  case2,  // sum > 1, min <= 1: cyclic iff the torus set is empty or finite
  case3,  // min > 1: cyclic iff the torus set is empty
  scope,  // irreducibility unavailable or zero set unresolved
};
const char* to_string(VerdictRule r);

struct Assertions {
  bool irreducible = false;
  std::vector<BivariateSeries> factors;
};

// Everything about p that does not depend on the weights.
struct Evidence {
  BivariateSeries p;
  bool constant = false;
  std::optional<Axis> only_axis;  // set when p depends on a single variable
  StabilityReport stability;
  TorusZeroSet zeros;
  Irreducibility irreducibility = Irreducibility::unknown;
  bool irreducibility_asserted = false;
  std::string irreducibility_reason;
  std::vector<Evidence> factors;
  double factor_mismatch = 0.0;  // max |prod(factors) - c p| / max |p|
};

struct CrossCheck {
  Regime regime = Regime::inconclusive;
  BasisShape shape = BasisShape::square;
  int n_max = 0;
  double last_dist_sq = 0.0;
  enum class Agreement { agree, inconclusive, contradict } agreement = Agreement::inconclusive;
  std::string detail;
};
const char* to_string(CrossCheck::Agreement a);

struct CyclicityVerdict {
  Verdict verdict = Verdict::out_of_theorem_scope;
  VerdictRule rule = VerdictRule::scope;
  WeightPair w;
  std::string reason;
  std::vector<CyclicityVerdict> factor_verdicts;
  std::optional<CrossCheck> cross_check;
};

struct AnalyzeOptions {
  int grid_n = 512;
  int disk_radii = 64;
  int disk_angles = 256;
};

Evidence analyze(const BivariateSeries& p, const Assertions& assertions = {},
                 const AnalyzeOptions& opt = {});
CyclicityVerdict decide(const Evidence& e, WeightPair w);
CyclicityVerdict classify(const BivariateSeries& p, WeightPair w, const Assertions& assertions = {},
                          const AnalyzeOptions& opt = {});

// Diagonal p uses the diagonal basis, anything else square boxes. Throws
// InvalidArgument when the verdict is out_of_theorem_scope.
CrossCheck cross_validate(const BivariateSeries& p, WeightPair w, const CyclicityVerdict& v,
                          int n_max);
int default_cross_nmax(const BivariateSeries& p);

}  // namespace cyclab
