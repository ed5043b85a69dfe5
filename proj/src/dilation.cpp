#include "cyclab/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cyclab/errors.hpp"
#include "cyclab/parallel.hpp"
#include "cyclab/spaces.hpp"

namespace cyclab {

BivariateSeries dilation_quotient(const BivariateSeries& p, double r, Box box) {
  return multiply(p, reciprocal(dilate_z1(p, r), box), box);
}

std::vector<Complex> one_var_quotient(const std::vector<Complex>& P, double r, int n) {
  if (P.empty() || P[0] == Complex{0.0, 0.0}) {
    throw Error(ErrorKind::ZeroConstantTerm, "one_var_quotient: P(0) == 0");
  }
  std::vector<Complex> Pr(P.size());
  double rk = 1.0;
  for (std::size_t k = 0; k < P.size(); ++k, rk *= r) Pr[k] = rk * P[k];
  const auto len = static_cast<std::size_t>(n) + 1;
  std::vector<Complex> g(len, Complex{0.0, 0.0});
  const Complex inv = 1.0 / Pr[0];
  for (std::size_t k = 0; k < len; ++k) {
    Complex acc = k == 0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
    for (std::size_t j = 1; j < Pr.size() && j <= k; ++j) acc -= Pr[j] * g[k - j];
    g[k] = acc * inv;
  }
  std::vector<Complex> F(len, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < len; ++k)
    for (std::size_t j = 0; j < P.size() && j <= k; ++j) F[k] += P[j] * g[k - j];
  return F;
}

namespace {

constexpr double kTailTolerance = 0.01;
constexpr int kOneVarCap = 1 << 22;

double nan() { return std::numeric_limits<double>::quiet_NaN(); }

// Split integral norm of F(z1 z2): only the mixed term survives.
double diagonal_integral_norm_sq(const std::vector<Complex>& F, WeightPair w) {
  std::vector<double> t;
  for (std::size_t j = 1; j < F.size(); ++j) {
    const double jj = static_cast<double>(j);
    const double lb1 = std::lgamma(jj) + std::lgamma(2.0 - w.alpha1) - std::lgamma(jj + 2.0 - w.alpha1);
    const double lb2 = std::lgamma(jj) + std::lgamma(2.0 - w.alpha2) - std::lgamma(jj + 2.0 - w.alpha2);
    t.push_back(jj * jj * jj * jj * std::exp(lb1 + lb2) * std::norm(F[j]));
  }
  return std::norm(F[0]) + pairwise_sum(t.data(), t.size());
}

// Shared driver for profiles F(z) = P(z)/P(rz) measured by `norm` and `semi`.
template <class Norm, class Semi>
DilationRecord one_var_record(const std::vector<Complex>& P, double r, Norm norm, Semi semi) {
  DilationRecord rec;
  rec.r = r;
  int n = std::max(16, static_cast<int>(std::ceil(8.0 / (1.0 - r))));
  double prev = norm(one_var_quotient(P, r, n));
  for (;;) {
    const int n2 = 2 * n;
    const auto F = one_var_quotient(P, r, n2);
    const double next = norm(F);
    rec.tail = std::abs(next - prev) / std::max(next, std::numeric_limits<double>::min());
    rec.norm_sq = next;
    rec.box = {n2, 0};
    if (rec.tail < kTailTolerance || n2 >= kOneVarCap) {
      rec.reliable = rec.tail < kTailTolerance;
      rec.seminorm = semi(F);
      return rec;
    }
    prev = next;
    n = n2;
  }
}

void check_grid(const std::vector<double>& r_grid) {
  for (double r : r_grid) {
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::ParameterOutOfRange, "r must lie in (0, 1)");
  }
}

}  // namespace

DilationSweep one_var_quotient_sweep(const std::vector<Complex>& P, double alpha,
                                     const std::vector<double>& r_grid) {
  check_grid(r_grid);
  DilationSweep sweep(r_grid.size());
  parallel_for(r_grid.size(), [&](std::size_t i) {
    sweep[i] = one_var_record(
        P, r_grid[i], [&](const std::vector<Complex>& F) { return one_var_norm_sq(F, alpha); },
        [&](const std::vector<Complex>& F) {
          return alpha < 2.0 ? one_var_integral_norm_sq(F, alpha) : nan();
        });
  });
  return sweep;
}

DilationSweep two_var_sweep(const BivariateSeries& p, WeightPair w, const std::vector<double>& r_grid,
                            int box_cap) {
  check_grid(r_grid);
  const BivariateSeries pt = trim(p);
  DilationSweep sweep(r_grid.size());
  const bool integrable = w.alpha1 < 2.0 && w.alpha2 < 2.0;

  if (const auto diag = diagonal_extract(pt)) {
    // p(z1, z2) = P(z1 z2) and p(r z1, z2) = P(r z1 z2).
    const double s = w.alpha1 + w.alpha2;
    parallel_for(r_grid.size(), [&](std::size_t i) {
      sweep[i] = one_var_record(
          *diag, r_grid[i], [&](const std::vector<Complex>& F) { return one_var_norm_sq(F, s); },
          [&](const std::vector<Complex>& F) { return integrable ? diagonal_integral_norm_sq(F, w) : nan(); });
      sweep[i].box = {sweep[i].box.k, sweep[i].box.k};
    });
    return sweep;
  }

  parallel_for(r_grid.size(), [&](std::size_t i) {
    const double r = r_grid[i];
    DilationRecord rec;
    rec.r = r;
    int n = std::max(8, std::min(box_cap / 2, static_cast<int>(std::ceil(4.0 / (1.0 - r)))));
    double prev = coeff_norm_sq(dilation_quotient(pt, r, Box{n, n}), w);
    for (;;) {
      const int n2 = std::min(2 * n, std::max(box_cap, n));
      const BivariateSeries F = dilation_quotient(pt, r, Box{n2, n2});
      const double next = coeff_norm_sq(F, w);
      rec.tail = std::abs(next - prev) / std::max(next, std::numeric_limits<double>::min());
      rec.norm_sq = next;
      rec.box = {n2, n2};
      if (rec.tail < kTailTolerance || n2 >= box_cap) {
        rec.reliable = rec.tail < kTailTolerance;
        rec.seminorm = integrable ? seminorm_moments(F, w).total() : nan();
        break;
      }
      prev = next;
      n = n2;
    }
    sweep[i] = rec;
  });
  return sweep;
}

std::vector<double> derivative_sweep(const BivariateSeries& p, WeightPair w,
                                     const std::vector<double>& r_grid, int order, Box box) {
  check_grid(r_grid);
  const WeightPair shifted{w.alpha1 - 2.0 * order, w.alpha2};
  std::vector<double> out(r_grid.size());
  parallel_for(r_grid.size(), [&](std::size_t i) {
    BivariateSeries F = dilation_quotient(p, r_grid[i], box);
    for (int k = 0; k < order; ++k) F = partial_derivative(F, Axis::z1);
    out[i] = coeff_norm_sq(F, shifted);
  });
  return out;
}

double model_integral(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorKind::ParameterOutOfRange, "r must lie in [0, 1)");
  // The inner integral over z2 depends on |z1| only:
  //   int |1 - r rho z2|^-4 dA(z2) = kernel_integral(0, 2, r rho).
  const Rule radial = graded_rule_to_one(std::max(1e-12, (1.0 - r) / 8.0), 16, 0.0);
  std::vector<double> vals(radial.nodes.size());
  parallel_for(radial.nodes.size(), [&](std::size_t i) {
    const double rho = radial.nodes[i];
    vals[i] = radial.weights[i] * 2.0 * rho * kernel_integral(0.0, 2.0, r * rho);
  });
  return (1.0 - r) * pairwise_sum(vals.data(), vals.size());
}

Boundedness assess_boundedness(const std::vector<double>& values, double factor, double blowup) {
  Boundedness b;
  if (values.empty()) return b;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  b.max_over_min = *hi / *lo;
  const std::size_t back = values.size() >= 3 ? values.size() - 3 : 0;
  b.last_decade_growth = values.back() / values[back];
  b.divergent = b.last_decade_growth >= blowup;
  b.bounded = b.max_over_min < factor && !b.divergent;
  return b;
}

}  // namespace cyclab
