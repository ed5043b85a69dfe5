#include <doctest.h>

#include <cmath>

#include "cyclab/expression.hpp"
#include "cyclab/roots.hpp"
#include "cyclab/zerosets.hpp"

using namespace cyclab;

namespace {
const char* kExample = "1 - 0.5*z1^2 - 0.5*z2 + z1^2*z2";
}

TEST_CASE("reflection test") {
  const auto a = reflection_test(parse_polynomial("1 - z1*z2"));
  CHECK(a.proportional);
  CHECK(std::abs(a.lambda + 1.0) < 1e-14);
  CHECK_FALSE(reflection_test(parse_polynomial("2 - z1 - z2")).proportional);
  CHECK(reflection_test(parse_polynomial(kExample)).proportional);
}

TEST_CASE("torus classes") {
  const auto c = torus_zero_search(parse_polynomial("1 - z1*z2"), 256);
  CHECK(c.cls == TorusClass::curve);
  CHECK(c.points.size() >= 256);
  for (const auto& q : c.points) {
    CHECK(q.residual < 1e-8);
    CHECK(std::abs(std::remainder(q.s + q.t, 2 * M_PI)) < 1e-10);
  }

  const auto f = torus_zero_search(parse_polynomial("2 - z1 - z2"));
  CHECK(f.cls == TorusClass::finite);
  REQUIRE(f.points.size() == 1);
  CHECK(std::hypot(f.points[0].s, f.points[0].t) < 1e-8);

  CHECK(torus_zero_search(parse_polynomial("3 - z1 - z2")).cls == TorusClass::empty);

  const auto four = torus_zero_search(parse_polynomial("2 - z1^2 - z2^2"));
  CHECK(four.cls == TorusClass::finite);
  CHECK(four.points.size() == 4);
}

TEST_CASE("finite zeros are shared with the reflection") {
  for (const char* e : {"2 - z1 - z2", "2 - z1^2 - z2^2", "4 - z1 - z2 - z1*z2 - z1^2"}) {
    const auto p = parse_polynomial(e);
    const auto r = reflect(p);
    const auto z = torus_zero_search(p);
    for (const auto& q : z.points) {
      const Complex z1 = std::polar(1.0, q.s), z2 = std::polar(1.0, q.t);
      CHECK(std::abs(evaluate(r, z1, z2)) < 1e-8);
    }
  }
}

TEST_CASE("one-variable factors live on a circle face") {
  const auto a = torus_zero_search(parse_polynomial("1 - z1"));
  CHECK(a.face == Face::z1_circle);
  CHECK(a.cls == TorusClass::finite);
  const auto b = torus_zero_search(parse_polynomial("2 - z2"));
  CHECK(b.face == Face::z2_circle);
  CHECK(b.cls == TorusClass::empty);
}

TEST_CASE("reducible product with a curve is flagged") {
  const auto z = torus_zero_search(parse_polynomial("(1 - z1*z2)*(2 - z1 - z2)"));
  CHECK(z.resolution_warning);
}

TEST_CASE("stability") {
  const auto a = stability_check(parse_polynomial("2 - z1 - z2"));
  CHECK(a.zero_free);
  CHECK(a.sides_zero_free);
  const auto b = stability_check(parse_polynomial("z2"));
  CHECK_FALSE(b.zero_free);
  REQUIRE(b.witness);
  CHECK(std::abs((*b.witness)[1]) < 1e-12);
  const auto c = stability_check(parse_polynomial(kExample));
  CHECK(c.zero_free);
  CHECK(c.sides_zero_free);
  CHECK_FALSE(stability_check(parse_polynomial("1 - 3*z1*z2")).zero_free);
  // Swapping variables does not change the verdict.
  for (const char* e : {"2 - z1 - z2", "1 - 3*z1*z2", kExample, "1 + 0.5*z1 - 0.9*z2^2"}) {
    const auto p = parse_polynomial(e);
    CHECK(stability_check(p).zero_free == stability_check(transpose(p)).zero_free);
  }
}

TEST_CASE("curve-class zeros off the torus split across the circle") {
  for (const char* e : {"1 - z1*z2", kExample}) {
    const auto p = parse_polynomial(e);
    for (double rho : {0.3, 0.7, 1.5, 3.0}) {
      for (int j = 0; j < 8; ++j) {
        const Complex z2 = std::polar(rho, 0.4 + j * 0.7);
        std::vector<Complex> c(p.max_k() + 1);
        for (int k = 0; k <= p.max_k(); ++k) c[k] = poly_eval(slice_z1(p, k), z2);
        for (Complex z1 : poly_roots(c)) {
          CHECK(std::max(std::abs(z1), rho) > 1.0);
          CHECK(std::min(std::abs(z1), rho) < 1.0);
        }
      }
    }
  }
}

TEST_CASE("irreducibility heuristic") {
  const auto a = heuristic_irreducibility(parse_polynomial("(1 - z1)*(1 - z2)"));
  CHECK(a.verdict == Irreducibility::reducible);
  REQUIRE(a.factor_hint);
  const auto h = trim(*a.factor_hint);
  CHECK(std::abs(h(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(h(1, 0) + 1.0) < 1e-12);
  CHECK(h.max_l() == 0);

  CHECK(heuristic_irreducibility(parse_polynomial("1 - z1*z2")).verdict == Irreducibility::irreducible);
  CHECK(heuristic_irreducibility(parse_polynomial("2 - z1 - z2")).verdict == Irreducibility::irreducible);
  CHECK(heuristic_irreducibility(parse_polynomial("2 - z1^2 - z2^2")).verdict == Irreducibility::irreducible);
  CHECK(heuristic_irreducibility(parse_polynomial("(2 - z1 - z2)^2")).verdict == Irreducibility::reducible);
  CHECK(heuristic_irreducibility(parse_polynomial("(1 - z1*z2)*(2 - z1 - z2)")).verdict ==
        Irreducibility::reducible);
}
