#include "cyclab/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <string>

#include "cyclab/errors.hpp"
#include "cyclab/parallel.hpp"

namespace cyclab {

Rule gauss_jacobi01(int n, double beta) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "quadrature needs at least one node");
  if (!(beta > -1.0)) {
    throw Error(ErrorKind::ParameterOutOfRange, "Jacobi exponent must exceed -1");
  }
  // Weight (1 - x)^a (1 + x)^b on [-1, 1] with a = beta, b = 0.
  const double a = beta, b = 0.0, ab = a + b;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    J(k, k) = (k == 0) ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
    if (k + 1 < n) {
      const double kk = k + 1.0;
      const double t = 2.0 * kk + ab;
      const double beta_k =
          4.0 * kk * (kk + a) * (kk + b) * (kk + ab) / (t * t * (t + 1.0) * (t - 1.0));
      J(k, k + 1) = J(k + 1, k) = std::sqrt(beta_k);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  // Total mass of (1 - u)^beta on [0, 1].
  const double mu0 = 1.0 / (beta + 1.0);
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = 0.5 * (es.eigenvalues()(i) + 1.0);
    const double v = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v * v;
  }
  return r;
}

Rule graded_rule_to_one(double finest, int points_per_panel, double a) {
  const Rule plain = gauss_legendre01(points_per_panel);
  const Rule end = gauss_jacobi01(points_per_panel, a);
  Rule r;
  double lo = 0.0, width = 0.5;
  while (width > finest) {
    for (std::size_t i = 0; i < plain.nodes.size(); ++i) {
      const double x = lo + width * plain.nodes[i];
      r.nodes.push_back(x);
      r.weights.push_back(width * plain.weights[i] * std::pow(1.0 - x, a));
    }
    lo += width;
    width *= 0.5;
  }
  // Last panel [lo, 1]: (1 - x)^a = h^a (1 - t)^a with x = lo + h t.
  const double h = 1.0 - lo;
  for (std::size_t i = 0; i < end.nodes.size(); ++i) {
    r.nodes.push_back(lo + h * end.nodes[i]);
    r.weights.push_back(std::pow(h, a + 1.0) * end.weights[i]);
  }
  return r;
}

Rule graded_rule_to_zero(double len, double finest, int points_per_panel) {
  const Rule plain = gauss_legendre01(points_per_panel);
  Rule r;
  double hi = len;
  while (hi > finest) {
    const double lo = 0.5 * hi, width = hi - lo;
    for (std::size_t i = 0; i < plain.nodes.size(); ++i) {
      r.nodes.push_back(lo + width * plain.nodes[i]);
      r.weights.push_back(width * plain.weights[i]);
    }
    hi = lo;
  }
  for (std::size_t i = 0; i < plain.nodes.size(); ++i) {
    r.nodes.push_back(hi * plain.nodes[i]);
    r.weights.push_back(hi * plain.weights[i]);
  }
  return r;
}

double DiskRule::integrate(const std::function<double(Complex)>& g) const {
  const std::size_t nr = radial.nodes.size();
  std::vector<double> ring(nr);
  std::vector<double> vals(static_cast<std::size_t>(angular));
  for (std::size_t i = 0; i < nr; ++i) {
    const double rad = std::sqrt(radial.nodes[i]);
    for (int j = 0; j < angular; ++j) {
      const double th = 2.0 * std::numbers::pi * j / angular;
      vals[j] = g(std::polar(rad, th));
    }
    ring[i] = radial.weights[i] * pairwise_sum(vals.data(), vals.size()) / angular;
  }
  return pairwise_sum(ring.data(), ring.size());
}

DiskRule make_disk_rule(double alpha, int radial_n, int angular_n) {
  if (!(alpha < 2.0)) {
    throw Error(ErrorKind::ParameterOutOfRange,
                "integral norm requires alpha < 2 (got " + std::to_string(alpha) + ")");
  }
  if (angular_n < 1) throw Error(ErrorKind::InvalidArgument, "angular node count must be positive");
  return DiskRule{alpha, gauss_jacobi01(radial_n, 1.0 - alpha), angular_n};
}

}  // namespace cyclab
