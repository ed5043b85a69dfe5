#include "cyclab/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

namespace cyclab {

Complex poly_eval(std::span<const Complex> c, Complex x) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

std::vector<Complex> poly_derivative(std::span<const Complex> c) {
  if (c.size() <= 1) return {Complex{0.0, 0.0}};
  std::vector<Complex> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = static_cast<double>(i) * c[i];
  return d;
}

std::vector<Complex> poly_multiply(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Complex> c(a.size() + b.size() - 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

int effective_degree(std::span<const Complex> c, double rel_tol) {
  double scale = 0.0;
  for (Complex x : c) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return -1;
  int d = static_cast<int>(c.size()) - 1;
  while (d > 0 && std::abs(c[d]) <= rel_tol * scale) --d;
  return d;
}

namespace {

// Parlett-Reinsch style diagonal balancing of a dense matrix in place.
void balance(Eigen::MatrixXcd& A) {
  const Eigen::Index n = A.rows();
  constexpr double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(A(j, i));
        r += std::abs(A(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix, f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        A.row(i) /= f;
        A.col(i) *= f;
      }
    }
  }
}

Complex newton_polish(std::span<const Complex> c, std::span<const Complex> dc, Complex x) {
  for (int it = 0; it < 4; ++it) {
    const Complex fx = poly_eval(c, x);
    const Complex dfx = poly_eval(dc, x);
    if (dfx == Complex{0.0, 0.0}) break;
    const Complex step = fx / dfx;
    const Complex y = x - step;
    // Accept only steps that do not increase the residual.
    if (!(std::abs(poly_eval(c, y)) <= std::abs(fx))) break;
    x = y;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

}  // namespace

std::vector<Complex> poly_roots(std::span<const Complex> c, double rel_tol) {
  const int d = effective_degree(c, rel_tol);
  if (d <= 0) return {};

  // Zero roots are split off exactly.
  int low = 0;
  while (low < d && c[low] == Complex{0.0, 0.0}) ++low;
  std::vector<Complex> roots(static_cast<std::size_t>(low), Complex{0.0, 0.0});
  const int dd = d - low;
  if (dd == 0) return roots;

  std::vector<Complex> q(c.begin() + low, c.begin() + d + 1);
  if (dd == 1) {
    roots.push_back(-q[0] / q[1]);
    return roots;
  }

  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(dd, dd);
  for (int i = 1; i < dd; ++i) A(i, i - 1) = 1.0;
  for (int i = 0; i < dd; ++i) A(i, dd - 1) = -q[i] / q[dd];
  balance(A);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A, false);
  const auto dq = poly_derivative(q);
  for (int i = 0; i < dd; ++i) roots.push_back(newton_polish(q, dq, es.eigenvalues()(i)));
  return roots;
}

bool is_infinite(Complex z) { return std::isinf(z.real()) || std::isinf(z.imag()); }

Complex complex_infinity() {
  return {std::numeric_limits<double>::infinity(), 0.0};
}

double chordal_distance(Complex a, Complex b) {
  const bool ia = is_infinite(a), ib = is_infinite(b);
  if (ia && ib) return 0.0;
  if (ia) return 2.0 / std::sqrt(1.0 + std::norm(b));
  if (ib) return 2.0 / std::sqrt(1.0 + std::norm(a));
  return 2.0 * std::abs(a - b) / std::sqrt((1.0 + std::norm(a)) * (1.0 + std::norm(b)));
}

namespace {

double max_abs(const std::vector<Complex>& p) {
  double s = 0.0;
  for (Complex x : p) s = std::max(s, std::abs(x));
  return s;
}

// Scale to unit max-norm and drop negligible leading terms.
void normalise(std::vector<Complex>& p, double tol) {
  const double s = max_abs(p);
  if (s == 0.0) {
    p = {Complex{0.0, 0.0}};
    return;
  }
  for (Complex& x : p) x /= s;
  while (p.size() > 1 && std::abs(p.back()) <= tol) p.pop_back();
}

}  // namespace

std::vector<Complex> poly_gcd(std::vector<Complex> a, std::vector<Complex> b, double tol) {
  normalise(a, tol);
  normalise(b, tol);
  if (a.size() < b.size()) std::swap(a, b);
  while (max_abs(b) > tol) {
    std::vector<Complex> r = a;
    while (r.size() >= b.size()) {
      const Complex f = r.back() / b.back();
      const std::size_t shift = r.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
      r.pop_back();
    }
    if (r.empty()) r.push_back(0.0);
    a = std::move(b);
    if (max_abs(r) <= tol) break;
    normalise(r, tol);
    b = std::move(r);
  }
  const Complex lead = a.back();
  for (Complex& x : a) x /= lead;
  return a;
}

}  // namespace cyclab
