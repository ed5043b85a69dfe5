#include <doctest.h>

#include "cyclab/classifier.hpp"
#include "cyclab/expression.hpp"

using namespace cyclab;

namespace {
const char* kExample = "1 - 0.5*z1^2 - 0.5*z2 + z1^2*z2";
}

TEST_CASE("classifier examples") {
  const auto a = classify(parse_polynomial("1 - z1*z2"), {-2, 2});
  CHECK(a.verdict == Verdict::cyclic);
  CHECK(a.rule == VerdictRule::case1);

  const auto b = classify(parse_polynomial("1 - z2"), {-2, 2});
  CHECK(b.verdict == Verdict::not_cyclic);
  CHECK(b.rule == VerdictRule::one_variable);

  const auto c = classify(parse_polynomial("2 - z1 - z2"), {1.5, 1.5});
  CHECK(c.verdict == Verdict::not_cyclic);
  CHECK(c.rule == VerdictRule::case3);

  const auto d = classify(parse_polynomial("2 - z1 - z2"), {0.5, 2});
  CHECK(d.verdict == Verdict::cyclic);
  CHECK(d.rule == VerdictRule::case2);

  const auto e = classify(parse_polynomial("1 - z1*z2"), {1, 1});
  CHECK(e.verdict == Verdict::not_cyclic);
  CHECK(e.rule == VerdictRule::case2);
}

TEST_CASE("special inputs") {
  CHECK(classify(BivariateSeries::constant(3.0), {2.5, 2.5}).verdict == Verdict::cyclic);
  const auto z = classify(parse_polynomial("z2"), {0, 0});
  CHECK(z.verdict == Verdict::not_cyclic);
  CHECK(z.rule == VerdictRule::interior_zero);
  CHECK(classify(parse_polynomial("1 - 2*z1*z2"), {-1, -1}).rule == VerdictRule::interior_zero);
  // Equality cases sit on the cyclic side.
  CHECK(classify(parse_polynomial("1 - z1"), {1, 5}).verdict == Verdict::cyclic);
  CHECK(classify(parse_polynomial("1 - z1*z2"), {0.25, 0.75}).verdict == Verdict::cyclic);
  CHECK(classify(parse_polynomial("2 - z1 - z2"), {1, 7}).verdict == Verdict::cyclic);
  CHECK(classify(parse_polynomial("2 - z1"), {9, 9}).verdict == Verdict::cyclic);
}

TEST_CASE("reducible input needs factors or an assertion") {
  const auto p = parse_polynomial("(1 - z1)*(1 - z2)");
  const auto none = classify(p, {0, 0});
  CHECK(none.verdict == Verdict::out_of_theorem_scope);

  Assertions as;
  as.factors = {parse_polynomial("1 - z2"), parse_polynomial("1 - z1")};
  const auto v = classify(p, {0.5, 1.5}, as);
  CHECK(v.verdict == Verdict::not_cyclic);
  CHECK(v.rule == VerdictRule::product);
  CHECK(v.factor_verdicts.size() == 2);

  Assertions swapped;
  swapped.factors = {parse_polynomial("1 - z1"), parse_polynomial("1 - z2")};
  for (double a1 : {-1.0, 0.5, 1.0, 2.0})
    for (double a2 : {-1.0, 0.5, 1.0, 2.0})
      CHECK(classify(p, {a1, a2}, as).verdict == classify(p, {a1, a2}, swapped).verdict);

  Assertions wrong;
  wrong.factors = {parse_polynomial("1 - z1"), parse_polynomial("1 + z2")};
  CHECK(classify(p, {0, 0}, wrong).verdict == Verdict::out_of_theorem_scope);

  const auto prod = parse_polynomial("(1 - z1*z2)*(2 - z1 - z2)");
  CHECK(classify(prod, {0, 0}).verdict == Verdict::out_of_theorem_scope);
  Assertions pf;
  pf.factors = {parse_polynomial("1 - z1*z2"), parse_polynomial("2 - z1 - z2")};
  CHECK(classify(prod, {0.5, 2}, pf).verdict == Verdict::not_cyclic);
  CHECK(classify(prod, {0.5, 0.5}, pf).verdict == Verdict::cyclic);
}

TEST_CASE("region monotonicity and swap symmetry") {
  const std::vector<double> grid{-2.0, -0.5, 0.5, 1.0, 1.5, 2.5};
  for (const char* e : {"1 - z1*z2", "2 - z1 - z2", "3 - z1 - z2", kExample, "2 - z1^2 - z2^2"}) {
    const auto p = parse_polynomial(e);
    const auto ev = analyze(p);
    const auto evt = analyze(transpose(p));
    for (double a1 : grid)
      for (double a2 : grid) {
        CAPTURE(e);
        CAPTURE(a1);
        CAPTURE(a2);
        const auto v = decide(ev, {a1, a2});
        CHECK(v.verdict == decide(evt, {a2, a1}).verdict);
        if (v.verdict != Verdict::cyclic) continue;
        for (double b1 : grid)
          for (double b2 : grid)
            if (b1 <= a1 && b2 <= a2) CHECK(decide(ev, {b1, b2}).verdict == Verdict::cyclic);
      }
  }
}

TEST_CASE("cross validation") {
  const auto p = parse_polynomial("1 - z1*z2");
  auto check = [&](WeightPair w, Regime want) {
    const auto v = classify(p, w);
    const auto cc = cross_validate(p, w, v, 200);
    CHECK(cc.regime == want);
    CHECK(cc.agreement == CrossCheck::Agreement::agree);
  };
  check({0, 0}, Regime::power_law);
  check({1.5, 1.5}, Regime::plateau);

  const auto q = parse_polynomial("2 - z1 - z2");
  const auto v = classify(q, {1, 1});
  CHECK(v.verdict == Verdict::cyclic);
  CHECK(cross_validate(q, {1, 1}, v, 24).agreement != CrossCheck::Agreement::contradict);

  const auto out = classify(parse_polynomial("(1 - z1)*(1 - z2)"), {0, 0});
  CHECK_THROWS(cross_validate(parse_polynomial("(1 - z1)*(1 - z2)"), {0, 0}, out, 24));
}
