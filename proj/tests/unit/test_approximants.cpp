#include <doctest.h>

#include <cmath>

#include "cyclab/approximants.hpp"
#include "cyclab/errors.hpp"
#include "cyclab/expression.hpp"

using namespace cyclab;

TEST_CASE("one-variable closed form for 1 - z") {
  for (double a : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
    const auto seq = one_var_distance_sequence({1.0, -1.0}, a, 20);
    for (const auto& d : seq) {
      CAPTURE(a);
      CHECK(d.dist_sq == doctest::Approx(one_minus_z_dist_sq(a, d.n)).epsilon(1e-11));
    }
  }
  CHECK(one_minus_z_dist_sq(0.0, 0) == doctest::Approx(0.5));
}

TEST_CASE("approximant is the orthogonal projection") {
  const auto p = parse_polynomial("2 - z1 - z2");
  for (WeightPair w : {WeightPair{0, 0}, WeightPair{1, 1}, WeightPair{0.5, 2}}) {
    const auto basis = basis_indices({5, 5});
    const auto opt = solve_optimal(p, basis, w);
    CHECK(residual_norm_sq(p, opt.q, w) == doctest::Approx(opt.dist_sq).epsilon(1e-10));
    CHECK(orthogonality_defect(p, opt.q, basis, w) < 1e-12);
    const auto g = build_gram(p, basis, w);
    CHECK((g.gram - g.gram.adjoint()).norm() < 1e-12 * g.gram.norm());
  }
}

TEST_CASE("distance is nonincreasing on nested boxes") {
  const auto p = parse_polynomial("1 - 0.5*z1^2 - 0.5*z2 + z1^2*z2");
  const auto seq = distance_sequence(p, {0.25, 0.5}, 10);
  for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i].dist_sq <= seq[i - 1].dist_sq + 1e-14);
  CHECK(seq.front().dist_sq > 0.0);
}

TEST_CASE("interior zeros keep the distance away from zero") {
  // 1 - 2 z1 vanishes at z1 = 1/2; point evaluation there bounds dist below.
  const auto seq = distance_sequence(parse_polynomial("1 - 2*z1"), {0, 0}, 20);
  // Hardy space: dist^2 >= 1 - |1/2|^2 on the limit side, i.e. 3/4.
  for (const auto& d : seq) CHECK(d.dist_sq >= 0.75 - 1e-12);
  CHECK(decay_fit(seq).regime == Regime::plateau);
  // z1 kills the constant term: nothing in z1 P reaches 1.
  const auto z = distance_sequence(parse_polynomial("z1"), {0, 0}, 8);
  for (const auto& d : z) CHECK(d.dist_sq == doctest::Approx(1.0));
}

TEST_CASE("tensor examples with w = (-2, 2)") {
  const auto a = distance_sequence(parse_polynomial("1 - z2"), {-2, 2}, 16);
  CHECK(a.back().dist_sq > 0.5);
  const auto b = distance_sequence(parse_polynomial("1 - z1*z2"), {-2, 2}, 60, BasisShape::diagonal);
  CHECK(b.back().dist_sq < 0.02);
  CHECK(b.back().dist_sq == doctest::Approx(1.0 / 62));
}

TEST_CASE("decay_fit on synthetic sequences") {
  auto make = [](auto f) {
    DistanceSequence s;
    for (int n = 0; n <= 200; ++n) s.push_back({n, f(n)});
    return s;
  };
  const auto pw = decay_fit(make([](int n) { return 1.0 / (n + 2); }));
  CHECK(pw.regime == Regime::power_law);
  CHECK(pw.slope == doctest::Approx(-1.0).epsilon(0.05));
  const auto lg = decay_fit(make([](int n) { return 1.0 / std::log(n + 2.0); }));
  CHECK(lg.regime == Regime::logarithmic);
  const auto pl = decay_fit(make([](int n) { return 0.3 + std::pow(0.5, n); }));
  CHECK(pl.regime == Regime::plateau);
  CHECK(pl.limit == doctest::Approx(0.3).epsilon(1e-6));
  const auto geo = decay_fit(make([](int n) { return std::pow(0.5, n); }));
  CHECK(geo.regime == Regime::power_law);
  DistanceSequence tiny{{0, 1.0}, {1, 0.5}};
  CHECK_THROWS_AS(decay_fit(tiny), Error);
}

TEST_CASE("diagonal identity on square boxes") {
  const auto p = parse_polynomial("1 - z1*z2");
  for (WeightPair w : {WeightPair{0, 0}, WeightPair{-2, 2}, WeightPair{0.5, 0.5}, WeightPair{1, 1}}) {
    const auto two = distance_sequence(p, w, 12);
    const auto one = one_var_distance_sequence({1.0, -1.0}, w.alpha1 + w.alpha2, 12);
    for (int n = 0; n <= 12; ++n) CHECK(std::abs(two[n].dist_sq - one[n].dist_sq) < 1e-10);
  }
}

TEST_CASE("orthocomplement recurrence") {
  const auto p = parse_polynomial("2 - z1 - z2");
  for (WeightPair w : {WeightPair{0, 0}, WeightPair{1, 1}, WeightPair{2, 0.5}}) {
    CHECK(orthocomplement_recurrence_check(p, w, 8) < 1e-10);
  }
}
