#include <doctest.h>

#include <cmath>

#include "cyclab/errors.hpp"
#include "cyclab/expression.hpp"
#include "cyclab/series.hpp"
#include "helpers.hpp"

using namespace cyclab;
using testing::max_diff;

TEST_CASE("multiply is commutative and associative on the common box") {
  std::mt19937_64 rng(1);
  const Box box{6, 5};
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = testing::random_series({4, 3}, rng);
    const auto g = testing::random_series({3, 4}, rng);
    const auto h = testing::random_series({2, 2}, rng);
    CHECK(max_diff(multiply(f, g, box), multiply(g, f, box)) < 1e-14);
    CHECK(max_diff(multiply(multiply(f, g, box), h, box), multiply(f, multiply(g, h, box), box)) < 1e-13);
  }
}

TEST_CASE("reciprocal round trip") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto unit = [&] { return std::polar(std::sqrt(u(rng)), 2 * M_PI * u(rng)); };
  const Box box{10, 10};
  for (int trial = 0; trial < 20; ++trial) {
    BivariateSeries f(Box{3, 3});
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= 3; ++l) f.at(k, l) = unit();
    f.at(0, 0) = std::polar(0.5 + 0.5 * u(rng), 2 * M_PI * u(rng));
    const auto g = reciprocal(f, box);
    const auto prod = multiply(f, g, box);
    // Error relative to the magnitude of the convolution terms; 1/f itself
    // grows geometrically with the box.
    for (int k = 0; k <= box.k; ++k)
      for (int l = 0; l <= box.l; ++l) {
        double mag = 0.0;
        for (int i = 0; i <= std::min(k, 3); ++i)
          for (int j = 0; j <= std::min(l, 3); ++j) mag += std::abs(f(i, j)) * std::abs(g(k - i, l - j));
        CHECK(std::abs(prod(k, l) - (k == 0 && l == 0 ? 1.0 : 0.0)) <= 1e-14 * mag);
      }
  }
  // Dominant constant term: 1/f has bounded coefficients and the round
  // trip is exact to 1e-12 per coefficient.
  for (int trial = 0; trial < 20; ++trial) {
    BivariateSeries f(Box{3, 3});
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= 3; ++l) f.at(k, l) = unit() / 32.0;
    f.at(0, 0) = std::polar(0.5 + 0.5 * u(rng), 2 * M_PI * u(rng));
    const auto prod = multiply(f, reciprocal(f, box), box);
    CHECK(max_diff(prod, BivariateSeries::constant(1.0)) < 1e-12);
  }
}

TEST_CASE("reciprocal of 1 - z1 z2 is the geometric series") {
  const auto g = reciprocal(parse_polynomial("1 - z1*z2"), {5, 5});
  for (int k = 0; k <= 5; ++k)
    for (int l = 0; l <= 5; ++l) CHECK(g(k, l) == Complex(k == l ? 1.0 : 0.0));
}

TEST_CASE("reciprocal rejects a zero constant term") {
  CHECK_THROWS_AS(reciprocal(parse_polynomial("z1 + z2"), {2, 2}), Error);
  try {
    reciprocal(parse_polynomial("z1"), {2, 2});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroConstantTerm);
  }
}

TEST_CASE("reflection") {
  CHECK(max_diff(reflect(parse_polynomial("1 - z1*z2")), parse_polynomial("z1*z2 - 1")) == 0.0);
  CHECK(max_diff(reflect(parse_polynomial("2 - z1 - z2")), parse_polynomial("2*z1*z2 - z1 - z2")) == 0.0);
  // Involution up to conjugating twice.
  std::mt19937_64 rng(3);
  const auto f = testing::random_series({3, 2}, rng);
  CHECK(max_diff(reflect(reflect(f)), f) == 0.0);
}

TEST_CASE("evaluate matches the term sum") {
  std::mt19937_64 rng(4);
  const auto f = testing::random_series({4, 3}, rng);
  const Complex z1{0.3, -0.2}, z2{-0.5, 0.4};
  Complex direct{0.0, 0.0};
  for (const auto& t : support(f)) direct += t.c * std::pow(z1, t.k) * std::pow(z2, t.l);
  CHECK(std::abs(evaluate(f, z1, z2) - direct) < 1e-14);
}

TEST_CASE("dilation and derivative") {
  const auto p = parse_polynomial("1 + 2*z1 + 3*z1^2*z2");
  const auto d = dilate_z1(p, 0.5);
  CHECK(d(1, 0) == Complex(1.0));
  CHECK(d(2, 1) == Complex(0.75));
  CHECK(max_diff(dilate_z2(p, 0.5), transpose(dilate_z1(transpose(p), 0.5))) == 0.0);
  const auto dp = partial_derivative(p, Axis::z1);
  CHECK(dp(0, 0) == Complex(2.0));
  CHECK(dp(1, 1) == Complex(6.0));
  const auto dq = partial_derivative(p, Axis::z2);
  CHECK(dq(2, 0) == Complex(3.0));
}

TEST_CASE("slices, bidegree, trim") {
  const auto p = parse_polynomial("1 - 0.5*z1^2 - 0.5*z2 + z1^2*z2");
  CHECK(bidegree(p) == Bidegree{2, 1});
  const auto A2 = slice_z1(p, 2);
  CHECK(A2.size() == 2);
  CHECK(A2[0] == Complex(-0.5));
  CHECK(A2[1] == Complex(1.0));
  const auto B1 = slice_z2(p, 1);
  CHECK(B1[0] == Complex(-0.5));
  CHECK(B1[2] == Complex(1.0));
  BivariateSeries padded(Box{5, 5});
  padded.at(1, 0) = 1.0;
  padded.at(4, 4) = 1e-15;
  CHECK(trim(padded).box() == Box{1, 0});
  CHECK(depends_on(p, Axis::z2));
  CHECK_FALSE(depends_on(parse_polynomial("1 - z1"), Axis::z2));
}

TEST_CASE("diagonal extraction") {
  const auto F = diagonal_extract(parse_polynomial("1 - z1*z2"));
  REQUIRE(F);
  CHECK(F->size() == 2);
  CHECK((*F)[1] == Complex(-1.0));
  CHECK_FALSE(diagonal_extract(parse_polynomial("2 - z1 - z2")));
  CHECK(max_diff(embed_diagonal(*F), parse_polynomial("1 - z1*z2")) == 0.0);
}

TEST_CASE("Mobius change of variable moves the slice at 0 to a") {
  const auto p = parse_polynomial("1 + z1^2*z2");
  const Complex a{0.5, 0.0};
  const auto q = mobius_z2(p, a);
  for (Complex z1 : {Complex{0.3, 0.1}, Complex{-0.7, 0.2}}) {
    const Complex lhs = evaluate(q, z1, a);
    const Complex rhs = (1.0 - std::norm(a)) * evaluate(p, z1, 0.0);
    CHECK(std::abs(lhs - rhs) < 1e-14);
  }
  // With a = 1/2 this is the branch example up to a constant factor.
  const auto ex = parse_polynomial("1 - 0.5*z1^2 - 0.5*z2 + z1^2*z2");
  const auto qq = trim(q);
  const Complex c = ex(0, 0) / qq(0, 0);
  CHECK(max_diff(scale(qq, c), ex) < 1e-14);
}
