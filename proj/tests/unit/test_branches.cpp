#include <doctest.h>

#include <cmath>

#include "cyclab/branches.hpp"
#include "cyclab/errors.hpp"
#include "cyclab/expression.hpp"

using namespace cyclab;

namespace {
const char* kExample = "1 - 0.5*z1^2 - 0.5*z2 + z1^2*z2";
}

TEST_CASE("singular sets") {
  const auto s0 = singular_set(parse_polynomial("1 + z1^2*z2"));
  REQUIRE(s0.size() == 1);
  CHECK(std::abs(s0[0].a) < 1e-8);

  const auto s1 = singular_set(parse_polynomial(kExample));
  REQUIRE(s1.size() == 2);
  CHECK(std::abs(s1[0].a - 0.5) < 1e-6);
  CHECK(std::abs(s1[1].a - 2.0) < 1e-6);

  CHECK(singular_set(parse_polynomial("1 - z1*z2")).empty());
  CHECK_THROWS_AS(singular_set(parse_polynomial("1 - z1^2")), Error);
}

TEST_CASE("discriminant of a quadratic in z1") {
  // p = z1^2 - z2: Res(p, 2 z1) = 4 * (-z2) up to the Sylvester sign.
  const auto d = discriminant_polynomial(parse_polynomial("z1^2 - z2"));
  REQUIRE(d.size() >= 2);
  CHECK(std::abs(d[0]) < 1e-12);
  CHECK(std::abs(std::abs(d[1]) - 4.0) < 1e-12);
  for (std::size_t i = 2; i < d.size(); ++i) CHECK(std::abs(d[i]) < 1e-12);
}

TEST_CASE("monodromy") {
  const auto p = parse_polynomial(kExample);
  const auto S = singular_set(p);
  const auto perm = monodromy_around(p, 0.5, S);
  CHECK(is_transposition(perm));
  CHECK(one_line(perm) == "[2,1]");
  // A loop enclosing both points composes two transpositions.
  const auto big = track_branches(p, circle_path(1.25, 1.25 + 0.3), S);
  CHECK(is_identity(big.permutation));
  // An open path keeps the identity and tracks continuously.
  const auto open = track_branches(p, {Complex(0.0), Complex(0.2, 0.3)}, S);
  CHECK(is_identity(open.permutation));
  CHECK(open.nodes.size() == open.values.size());
  CHECK_THROWS_AS(track_branches(p, circle_path(0.5, 1e-4), S), Error);
}

TEST_CASE("three sheets permute transitively") {
  const auto p = parse_polynomial("1 + z1^3*z2");
  const auto S = singular_set(p);
  const auto perm = monodromy_around(p, 0.0, S);
  CHECK(perm.size() == 3);
  CHECK(one_line(perm).size() == 7);
  int fixed = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) fixed += perm[i] == static_cast<int>(i);
  CHECK(fixed == 0);
}

TEST_CASE("Puiseux exponent") {
  CHECK(branch_exponent(parse_polynomial("1 + z1^2*z2"), 0.0).slope == doctest::Approx(-0.5).epsilon(0.02));
  CHECK(std::abs(branch_exponent(parse_polynomial(kExample), 0.5).slope + 0.5) < 0.05);
  CHECK(branch_exponent(parse_polynomial("1 + z1^3*z2"), 0.0).slope == doctest::Approx(-2.0 / 3.0).epsilon(0.05));
  const auto regular = branch_exponent(parse_polynomial(kExample), Complex(0.1, 0.0));
  CHECK(regular.no_blowup);
}

TEST_CASE("Hopf ratio") {
  const auto a = hopf_ratio(parse_polynomial("1 + z1^2*z2"), 2048, 7);
  const auto b = hopf_ratio(parse_polynomial("1 + z1^2*z2"), 2048, 7);
  CHECK(a.min_ratio == b.min_ratio);
  CHECK(a.argmin == b.argmin);
  CHECK(a.max_abs_h < 1.0);
  CHECK(a.min_ratio >= 0.5 - 1e-3);
  // For the example the infimum is (1 - a) / (2 (1 + a)) = 1/6 at z2 -> -1.
  const auto c = hopf_ratio(parse_polynomial(kExample), 4096, 0);
  CHECK(c.min_ratio > 1.0 / 6.0 - 1e-6);
  CHECK(c.min_ratio < 0.2);
  CHECK(c.max_abs_h < 1.0);
  CHECK(c.max_multiplicity <= 1);
}

TEST_CASE("reciprocal branches compose to the identity") {
  std::vector<Complex> samples;
  for (std::uint64_t i = 1; i <= 32; ++i) samples.push_back(0.9 * halton_disk_point(i));
  CHECK(reciprocal_branch_residual(parse_polynomial(kExample), samples) < 1e-10);
  for (std::uint64_t i = 1; i <= 100; ++i) CHECK(std::abs(halton_disk_point(i)) < 1.0);
}
