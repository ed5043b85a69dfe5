#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cyclab/errors.hpp"
#include "cyclab/expression.hpp"
#include "cyclab/parallel.hpp"
#include "cyclab/quadrature.hpp"
#include "cyclab/roots.hpp"
#include "cyclab/spaces.hpp"

using namespace cyclab;

namespace {

double beta_fn(double a, double b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); }

}  // namespace

TEST_CASE("companion roots") {
  // (x - 1)(x + 2)(x - 0.5i)
  std::vector<Complex> c{1.0};
  for (Complex r : {Complex(1.0), Complex(-2.0), Complex(0.0, 0.5)}) c = poly_multiply(c, std::vector<Complex>{-r, 1.0});
  auto roots = poly_roots(c);
  REQUIRE(roots.size() == 3);
  for (Complex r : {Complex(1.0), Complex(-2.0), Complex(0.0, 0.5)}) {
    double best = 1e9;
    for (Complex z : roots) best = std::min(best, std::abs(z - r));
    CHECK(best < 1e-13);
  }
  // Negligible leading coefficient drops the degree.
  CHECK(poly_roots(std::vector<Complex>{1.0, -1.0, 1e-20}).size() == 1);
  CHECK(poly_roots(std::vector<Complex>{0.0, 0.0, 1.0}).size() == 2);
}

TEST_CASE("gcd and chordal metric") {
  const std::vector<Complex> a = poly_multiply(std::vector<Complex>{-1.0, 1.0}, std::vector<Complex>{2.0, 1.0});
  const std::vector<Complex> b = poly_multiply(std::vector<Complex>{-1.0, 1.0}, std::vector<Complex>{-3.0, 1.0});
  const auto g = poly_gcd(a, b);
  REQUIRE(g.size() == 2);
  CHECK(std::abs(g[0] + 1.0) < 1e-12);
  CHECK(poly_gcd(std::vector<Complex>{2.0, 1.0}, std::vector<Complex>{-3.0, 1.0}).size() == 1);
  CHECK(chordal_distance(complex_infinity(), complex_infinity()) == 0.0);
  CHECK(chordal_distance(0.0, complex_infinity()) == doctest::Approx(2.0));
  CHECK(chordal_distance(1.0, -1.0) == doctest::Approx(2.0));
  CHECK(chordal_distance(0.0, 1.0) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("Gauss-Jacobi moments are exact") {
  for (double beta : {-0.5, 0.0, 1.0, 2.5}) {
    const Rule r = gauss_jacobi01(12, beta);
    for (int j = 0; j < 20; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], j);
      CHECK(std::abs(s - beta_fn(j + 1, beta + 1)) < 1e-13 * std::max(1.0, beta_fn(j + 1, beta + 1)));
    }
  }
  CHECK_THROWS(make_disk_rule(2.0, 8, 8));
}

TEST_CASE("coefficient norm") {
  CHECK(coeff_norm_sq(parse_polynomial("z1*z2"), {1, 1}) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(coeff_norm_sq(parse_polynomial("1 - z1*z2"), {-2, 2}) == doctest::Approx(2.0));
  CHECK(coeff_norm_sq(parse_polynomial("3*z1^2"), {1, 0}) == doctest::Approx(27.0));
  const auto f = parse_polynomial("1 + z1 - 2*z2");
  CHECK(std::abs(inner_product(f, f, {0.5, -1.0}) - Complex(coeff_norm_sq(f, {0.5, -1.0}))) < 1e-15);
}

TEST_CASE("integral norm by quadrature equals the moment formula") {
  const auto f = parse_polynomial("1 - 0.5*z1^2 - 0.5*z2 + z1^2*z2 + 0.25*z1^3*z2^2");
  for (WeightPair w : {WeightPair{0, 0}, WeightPair{0.5, 1.5}, WeightPair{-1, 1}}) {
    const auto q = integral_seminorm(f, w, make_grid(w, 24, 32));
    const auto m = seminorm_moments(f, w);
    CHECK(q.total() == doctest::Approx(m.total()).epsilon(1e-12));
    CHECK(q.mixed == doctest::Approx(m.mixed).epsilon(1e-12));
  }
  // One-variable Dirichlet space: the integral norm of z^k is k^2 B(k, 2 - alpha) plus nothing at 0.
  const std::vector<Complex> zk{0.0, 0.0, 0.0, 1.0};
  CHECK(one_var_integral_norm_sq(zk, 1.0) == doctest::Approx(9.0 * beta_fn(3, 1)));
  CHECK(compact_integral_norm_sq(BivariateSeries::constant(1.0), {0.5, 1.0}, make_grid({0.5, 1.0}, 16, 16)) ==
        doctest::Approx(1.0 / (1.5 * 1.0)));
}

TEST_CASE("split integral norm at alpha = (1, 1) has weights max(1,k) max(1,l)") {
  const auto f = parse_polynomial("2 - z1 + 3*z2 - z1*z2^2 + 0.5*z1^3");
  double direct = 0.0;
  for (const auto& t : support(f)) direct += std::norm(t.c) * std::max(1, t.k) * std::max(1, t.l);
  CHECK(seminorm_moments(f, {1, 1}).total() == doctest::Approx(direct));
}

TEST_CASE("Forelli-Rudin against series oracles") {
  // a = 0: int |1 - w z|^(-2s) dA = sum_k (s)_k^2 / (k!)^2 w^(2k) / (k+1).
  auto oracle = [](double s, double w) {
    double term = 1.0, sum = 0.0;
    for (int k = 0; k < 20000; ++k) {
      sum += term * term * std::pow(w, 2.0 * k) / (k + 1);
      term *= (s + k) / (k + 1);
    }
    return sum;
  };
  for (double b : {-1.0, 0.0, 1.0}) {
    for (double w : {0.0, 0.5, 0.9}) {
      CAPTURE(b);
      CAPTURE(w);
      CHECK(forelli_rudin(0.0, b, w) == doctest::Approx(oracle(1.0 + b / 2.0, w)).epsilon(1e-10));
    }
  }
  CHECK(forelli_rudin(0.0, 0.0, 0.9) == doctest::Approx(-std::log(1 - 0.81) / 0.81).epsilon(1e-10));
  CHECK_THROWS_AS(forelli_rudin(-1.0, 0.0, 0.5), Error);
}

TEST_CASE("derivative shift ratio is finite") {
  const double r = derivative_shift_ratio(parse_polynomial("1 - z1*z2"), {1.0, 0.0}, Axis::z1);
  // d1(1 - z1 z2) = -z2 with weight 1 * 2^0 = 1 in D_(-1, 0); norm of p in D_(1,0) is 1 + 2.
  CHECK(r == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("parallel_for is deterministic and propagates exceptions") {
  set_thread_count(4);
  std::vector<double> out(1000);
  parallel_for(out.size(), [&](std::size_t i) { out[i] = std::sin(double(i)); });
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == std::sin(double(i)));
  CHECK_THROWS(parallel_for(10, [](std::size_t i) {
    if (i == 7) throw std::runtime_error("boom");
  }));
  set_thread_count(1);
  std::vector<double> x(1001, 0.1);
  CHECK(pairwise_sum(x.data(), x.size()) == doctest::Approx(100.1));
}
