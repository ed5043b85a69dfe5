#include <doctest.h>

#include <cmath>

#include "cyclab/dilation.hpp"
#include "cyclab/expression.hpp"
#include "cyclab/spaces.hpp"

using namespace cyclab;

TEST_CASE("dilation quotient hand case") {
  const auto F = dilation_quotient(parse_polynomial("2 - z1 - z2"), 0.5, {1, 1});
  CHECK(std::abs(F(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(F(1, 0) + 0.25) < 1e-15);
  CHECK(std::abs(F(0, 1)) < 1e-15);
  CHECK(std::abs(F(1, 1) + 0.125) < 1e-15);
}

TEST_CASE("quotient of 1 - z1 z2 is a geometric series") {
  const double r = 0.7;
  const auto F = dilation_quotient(parse_polynomial("1 - z1*z2"), r, {6, 6});
  for (int k = 0; k <= 6; ++k) {
    const double want = k == 0 ? 1.0 : std::pow(r, k) - std::pow(r, k - 1);
    CHECK(std::abs(F(k, k) - want) < 1e-14);
    if (k < 6) CHECK(std::abs(F(k + 1, k)) == 0.0);
  }
}

TEST_CASE("entrywise convergence to 1") {
  for (const char* e : {"1 - z1*z2", "2 - z1 - z2", "1 - 0.5*z1^2 - 0.5*z2 + z1^2*z2"}) {
    const auto F = dilation_quotient(parse_polynomial(e), 0.9999, {8, 8});
    for (int k = 0; k <= 8; ++k)
      for (int l = 0; l <= 8; ++l) CHECK(std::abs(F(k, l) - (k == 0 && l == 0 ? 1.0 : 0.0)) < 1e-3);
  }
}

TEST_CASE("one-variable sweeps") {
  const auto s0 = one_var_quotient_sweep({1.0, -1.0}, 0.0, {0.9, 0.99, 0.999});
  for (const auto& d : s0) CHECK(d.reliable);
  CHECK(std::abs(s0.back().norm_sq - 1.0) < 2e-3);
  // P/P_r = 1 - (1 - r) sum r^(k-1) z^k has Hardy norm 1 + (1 - r)^2 / (1 - r^2).
  for (const auto& d : s0) CHECK(d.norm_sq == doctest::Approx(1.0 + (1 - d.r) / (1 + d.r)).epsilon(1e-6));
  const auto s1 = one_var_quotient_sweep({1.0, -1.0}, 1.0, {0.9, 0.99, 0.999});
  std::vector<double> v;
  for (const auto& d : s1) v.push_back(d.norm_sq);
  CHECK(assess_boundedness(v, 4.0).bounded);
}

TEST_CASE("two-variable sweeps") {
  const std::vector<double> grid{0.5, 0.9, 0.99, 0.999};
  const auto p = parse_polynomial("1 - z1*z2");
  auto values = [](const DilationSweep& s) {
    std::vector<double> v;
    for (const auto& d : s) v.push_back(d.norm_sq);
    return v;
  };
  CHECK(assess_boundedness(values(two_var_sweep(p, {0.5, 0.5}, grid))).bounded);
  CHECK(assess_boundedness(values(two_var_sweep(p, {-2, 2}, grid))).bounded);
  const auto div = assess_boundedness(values(two_var_sweep(p, {1, 1}, grid)));
  CHECK(div.divergent);
  CHECK_FALSE(div.bounded);
  // Constant multiples give the same verdicts.
  const auto q = parse_polynomial("3 - 3*z1*z2");
  CHECK(assess_boundedness(values(two_var_sweep(q, {1, 1}, grid))).divergent);
  // General (non-diagonal) path with the tail monitor.
  const auto g = two_var_sweep(parse_polynomial("3 - z1 - z2"), {0.5, 0.5}, {0.5, 0.9}, 128);
  for (const auto& d : g) CHECK(d.reliable);
}

TEST_CASE("model integral") {
  for (double r : {0.1, 0.5, 0.9, 0.99}) CHECK(model_integral(r) == doctest::Approx(1.0 / (1.0 + r)).epsilon(1e-6));
  CHECK(model_integral(1e-6) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("derivative sweep stays bounded for a cyclic case") {
  const auto d = derivative_sweep(parse_polynomial("1 - z1*z2"), {1.0, -1.0}, {0.9, 0.99}, 1, {400, 400});
  REQUIRE(d.size() == 2);
  CHECK(d[1] / d[0] < 5.0);
}
