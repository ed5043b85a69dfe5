#include "cyclab/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "cyclab/errors.hpp"
#include "cyclab/parallel.hpp"

namespace cyclab {

double coeff_weight(int k, int l, WeightPair w) {
  return std::pow(k + 1.0, w.alpha1) * std::pow(l + 1.0, w.alpha2);
}

double coeff_norm_sq(const BivariateSeries& f, WeightPair w) {
  std::vector<double> rows(static_cast<std::size_t>(f.max_k()) + 1);
  std::vector<double> terms(static_cast<std::size_t>(f.max_l()) + 1);
  for (int k = 0; k <= f.max_k(); ++k) {
    const auto r = f.row(k);
    for (int l = 0; l <= f.max_l(); ++l) terms[l] = coeff_weight(k, l, w) * std::norm(r[l]);
    rows[k] = pairwise_sum(terms.data(), terms.size());
  }
  return pairwise_sum(rows.data(), rows.size());
}

Complex inner_product(const BivariateSeries& f, const BivariateSeries& g, WeightPair w) {
  Complex acc{0.0, 0.0};
  const int kk = std::min(f.max_k(), g.max_k());
  const int ll = std::min(f.max_l(), g.max_l());
  for (int k = 0; k <= kk; ++k)
    for (int l = 0; l <= ll; ++l) acc += coeff_weight(k, l, w) * f(k, l) * std::conj(g(k, l));
  return acc;
}

double one_var_norm_sq(std::span<const Complex> F, double alpha) {
  std::vector<double> t(F.size());
  for (std::size_t k = 0; k < F.size(); ++k) t[k] = std::pow(k + 1.0, alpha) * std::norm(F[k]);
  return pairwise_sum(t.data(), t.size());
}

Complex one_var_inner(std::span<const Complex> F, std::span<const Complex> G, double alpha) {
  Complex acc{0.0, 0.0};
  const std::size_t n = std::min(F.size(), G.size());
  for (std::size_t k = 0; k < n; ++k) acc += std::pow(k + 1.0, alpha) * F[k] * std::conj(G[k]);
  return acc;
}

QuadratureGrid make_grid(WeightPair w, int radial_n, int angular_n) {
  return {make_disk_rule(w.alpha1, radial_n, angular_n),
          make_disk_rule(w.alpha2, radial_n, angular_n)};
}

namespace {

void require_integrable(WeightPair w) {
  if (!(w.alpha1 < 2.0) || !(w.alpha2 < 2.0)) {
    throw Error(ErrorKind::ParameterOutOfRange, "integral norm requires alpha1, alpha2 < 2");
  }
}

double disk_norm_sq(const std::vector<Complex>& c, const DiskRule& rule) {
  return rule.integrate([&](Complex z) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return std::norm(acc);
  });
}

// int int |g(z1, z2)|^2 over both disks for a bivariate polynomial g.
double bidisk_norm_sq(const BivariateSeries& g, const QuadratureGrid& grid) {
  const DiskRule& r1 = grid.axis1;
  const std::size_t nr = r1.radial.nodes.size();
  std::vector<double> ring(nr);
  parallel_for(nr, [&](std::size_t i) {
    const double rad = std::sqrt(r1.radial.nodes[i]);
    std::vector<double> vals(static_cast<std::size_t>(r1.angular));
    std::vector<Complex> slice(static_cast<std::size_t>(g.max_l()) + 1);
    for (int j = 0; j < r1.angular; ++j) {
      const Complex z1 = std::polar(rad, 2.0 * std::numbers::pi * j / r1.angular);
      // Coefficients in z2 of g(z1, .).
      std::fill(slice.begin(), slice.end(), Complex{0.0, 0.0});
      for (int k = g.max_k(); k >= 0; --k) {
        const auto row = g.row(k);
        for (int l = 0; l <= g.max_l(); ++l) slice[l] = slice[l] * z1 + row[l];
      }
      vals[j] = disk_norm_sq(slice, grid.axis2);
    }
    ring[i] = r1.radial.weights[i] * pairwise_sum(vals.data(), vals.size()) / r1.angular;
  });
  return pairwise_sum(ring.data(), ring.size());
}

// Log of the Beta function.
double log_beta(double x, double y) { return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y); }

}  // namespace

IntegralNorm integral_seminorm(const BivariateSeries& f, WeightPair w, const QuadratureGrid& grid) {
  require_integrable(w);
  IntegralNorm out;
  out.constant = std::norm(f(0, 0));
  const BivariateSeries d1 = partial_derivative(f, Axis::z1);
  const BivariateSeries d2 = partial_derivative(f, Axis::z2);
  out.axis1 = disk_norm_sq(slice_z2(d1, 0), grid.axis1);
  out.axis2 = disk_norm_sq(slice_z1(d2, 0), grid.axis2);
  out.mixed = bidisk_norm_sq(partial_derivative(d1, Axis::z2), grid);
  return out;
}

IntegralNorm integral_seminorm(const BivariateSeries& f, WeightPair w) {
  require_integrable(w);
  const int deg = std::max(f.max_k(), f.max_l());
  int radial = deg / 2 + 2;
  int angular = 2 * (deg + 1);
  IntegralNorm prev = integral_seminorm(f, w, make_grid(w, radial, angular));
  for (int it = 0; it < 8; ++it) {
    radial *= 2;
    angular *= 2;
    const IntegralNorm next = integral_seminorm(f, w, make_grid(w, radial, angular));
    const double change = std::abs(next.total() - prev.total());
    prev = next;
    if (change <= 1e-3 * std::abs(next.total())) break;
  }
  return prev;
}

IntegralNorm seminorm_moments(const BivariateSeries& f, WeightPair w) {
  require_integrable(w);
  auto moment = [](int j, double alpha) {
    // int |d/dz z^j|^2 dA_alpha = j^2 B(j, 2 - alpha)
    return static_cast<double>(j) * j * std::exp(log_beta(j, 2.0 - alpha));
  };
  IntegralNorm out;
  out.constant = std::norm(f(0, 0));
  std::vector<double> m1(static_cast<std::size_t>(f.max_k()) + 1, 0.0);
  std::vector<double> m2(static_cast<std::size_t>(f.max_l()) + 1, 0.0);
  for (int k = 1; k <= f.max_k(); ++k) m1[k] = moment(k, w.alpha1);
  for (int l = 1; l <= f.max_l(); ++l) m2[l] = moment(l, w.alpha2);

  std::vector<double> t1, t2, tm;
  for (int k = 1; k <= f.max_k(); ++k) t1.push_back(m1[k] * std::norm(f(k, 0)));
  for (int l = 1; l <= f.max_l(); ++l) t2.push_back(m2[l] * std::norm(f(0, l)));
  for (int k = 1; k <= f.max_k(); ++k)
    for (int l = 1; l <= f.max_l(); ++l) tm.push_back(m1[k] * m2[l] * std::norm(f(k, l)));
  out.axis1 = pairwise_sum(t1.data(), t1.size());
  out.axis2 = pairwise_sum(t2.data(), t2.size());
  out.mixed = pairwise_sum(tm.data(), tm.size());
  return out;
}

double one_var_integral_norm_sq(std::span<const Complex> F, double alpha) {
  if (!(alpha < 2.0)) {
    throw Error(ErrorKind::ParameterOutOfRange, "integral norm requires alpha < 2");
  }
  std::vector<double> t;
  t.reserve(F.size());
  for (std::size_t j = 1; j < F.size(); ++j) {
    const double jj = static_cast<double>(j);
    t.push_back(jj * jj * std::exp(log_beta(jj, 2.0 - alpha)) * std::norm(F[j]));
  }
  return (F.empty() ? 0.0 : std::norm(F[0])) + pairwise_sum(t.data(), t.size());
}

double compact_integral_norm_sq(const BivariateSeries& f, WeightPair w, const QuadratureGrid& grid) {
  require_integrable(w);
  // d2 d1 (z1 z2 f) has coefficients (k+1)(l+1) a_kl.
  BivariateSeries g(f.box());
  for (int k = 0; k <= f.max_k(); ++k)
    for (int l = 0; l <= f.max_l(); ++l) g.at(k, l) = (k + 1.0) * (l + 1.0) * f(k, l);
  return bidisk_norm_sq(g, grid);
}

double kernel_integral(double a, double s, double w) {
  if (!(a > -1.0)) throw Error(ErrorKind::ParameterOutOfRange, "kernel exponent a must exceed -1");
  constexpr int kPanelPoints = 24;
  const double finest = std::max(1e-12, (1.0 - w) / 8.0);
  const Rule radial = graded_rule_to_one(finest, kPanelPoints, a);
  const Rule angle = graded_rule_to_zero(std::numbers::pi, finest, kPanelPoints);
  const std::size_t nr = radial.nodes.size();
  std::vector<double> ring(nr);
  parallel_for(nr, [&](std::size_t i) {
    const double r = radial.nodes[i];
    const double rho = w * r;
    std::vector<double> vals(angle.nodes.size());
    for (std::size_t j = 0; j < angle.nodes.size(); ++j) {
      const double sh = std::sin(0.5 * angle.nodes[j]);
      // |1 - rho e^{i theta}|^2 without cancellation.
      const double d2 = (1.0 - rho) * (1.0 - rho) + 4.0 * rho * sh * sh;
      vals[j] = angle.weights[j] * std::pow(d2, -s);
    }
    // dA = r dr dtheta / pi; the angular rule covers [0, pi] of a symmetric integrand.
    ring[i] = radial.weights[i] * r * pairwise_sum(vals.data(), vals.size());
  });
  return 2.0 / std::numbers::pi * pairwise_sum(ring.data(), ring.size());
}

double forelli_rudin(double a, double b, double w_mod) {
  if (!(a > -1.0)) throw Error(ErrorKind::ParameterOutOfRange, "Forelli-Rudin requires a > -1");
  if (w_mod < 0.0) throw Error(ErrorKind::ParameterOutOfRange, "w_mod must be nonnegative");
  const double w = std::min(w_mod, 0.9999);
  return kernel_integral(a, 0.5 * (2.0 + a + b), w);
}

double derivative_shift_ratio(const BivariateSeries& f, WeightPair w, Axis axis) {
  const WeightPair shifted =
      axis == Axis::z1 ? WeightPair{w.alpha1 - 2.0, w.alpha2} : WeightPair{w.alpha1, w.alpha2 - 2.0};
  const double base = coeff_norm_sq(f, w);
  if (base == 0.0) return 0.0;
  return coeff_norm_sq(partial_derivative(f, axis), shifted) / base;
}

}  // namespace cyclab
