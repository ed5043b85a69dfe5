#include <doctest.h>

#include "cyclab/errors.hpp"
#include "cyclab/expression.hpp"
#include "cyclab/report.hpp"

using namespace cyclab;

TEST_CASE("parser produces the documented coefficient form") {
  const auto p = parse_polynomial("1 - z1*z2");
  CHECK(series_to_json(p).dump() == R"({"coeffs":[[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[-1.0,0.0]]]})");
  const auto q = parse_polynomial("2 - z1 - z2");
  CHECK(q(0, 0) == Complex(2.0));
  CHECK(q(1, 0) == Complex(-1.0));
  CHECK(q(0, 1) == Complex(-1.0));
  CHECK(q(1, 1) == Complex(0.0));
}

TEST_CASE("parser arithmetic") {
  const auto p = parse_polynomial("(1 - z1)^2 * (2 + 0.5*z2) - -3");
  CHECK(p(0, 0) == Complex(5.0));
  CHECK(p(1, 0) == Complex(-4.0));
  CHECK(p(2, 1) == Complex(0.5));
  CHECK(parse_polynomial("z1 - z1 + 1").box() == Box{0, 0});
}

TEST_CASE("parse errors report a column") {
  for (const char* bad : {"1 - z3", "1 +", "(1 - z1", "z1^-1", "", "1 ** 2", "z1^z2"}) {
    CAPTURE(bad);
    try {
      parse_polynomial(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
    }
  }
}
