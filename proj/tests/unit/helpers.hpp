#pragma once

#include <random>

#include "cyclab/series.hpp"

namespace testing {

// Random series on `box` with coefficients in the unit square; f(0,0) is
// pushed to modulus at least 0.5.
inline cyclab::BivariateSeries random_series(cyclab::Box box, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  cyclab::BivariateSeries f(box);
  for (int k = 0; k <= box.k; ++k)
    for (int l = 0; l <= box.l; ++l) f.at(k, l) = {u(rng), u(rng)};
  if (std::abs(f(0, 0)) < 0.5) f.at(0, 0) += 1.0;
  return f;
}

inline double max_diff(const cyclab::BivariateSeries& a, const cyclab::BivariateSeries& b) {
  double m = 0.0;
  const int K = std::max(a.max_k(), b.max_k()), L = std::max(a.max_l(), b.max_l());
  for (int k = 0; k <= K; ++k)
    for (int l = 0; l <= L; ++l) m = std::max(m, std::abs(a(k, l) - b(k, l)));
  return m;
}

}  // namespace testing
