#include "cyclab/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "cyclab/approximants.hpp"
#include "cyclab/branches.hpp"
#include "cyclab/classifier.hpp"
#include "cyclab/dilation.hpp"
#include "cyclab/errors.hpp"
#include "cyclab/expression.hpp"
#include "cyclab/spaces.hpp"
#include "cyclab/zerosets.hpp"

namespace cyclab {

namespace {

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const char* kBranchExample = "1 - 0.5*z1^2 - 0.5*z2 + z1^2*z2";

// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double u = std::log(x[i]), v = std::log(y[i]);
    sx += u;
    sy += v;
    sxx += u * u;
    sxy += u * v;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CriterionResult c1() {
  CriterionResult r{1, "diagonal identity", true, "", 0};
  const auto p = parse_polynomial("1 - z1*z2");
  double worst = 0.0;
  for (WeightPair w : {WeightPair{0, 0}, WeightPair{-2, 2}, WeightPair{0.5, 0.5}, WeightPair{1, 1}}) {
    const auto two = distance_sequence(p, w, 16, BasisShape::square);
    const auto one = one_var_distance_sequence({1.0, -1.0}, w.alpha1 + w.alpha2, 16);
    for (int n = 0; n <= 16; ++n) worst = std::max(worst, std::abs(two[n].dist_sq - one[n].dist_sq));
  }
  r.pass = worst < 1e-9;
  r.detail = fmt("max |two-var - one-var| = %.2e over N<=16, 4 weights (tol 1e-9)", worst);
  return r;
}

CriterionResult c2() {
  CriterionResult r{2, "Hardy closed form", true, "", 0};
  const auto seq = one_var_distance_sequence({1.0, -1.0}, 0.0, 30);
  double worst = 0.0;
  for (int n = 0; n <= 30; ++n) worst = std::max(worst, std::abs(seq[n].dist_sq - 1.0 / (n + 2)));
  const bool hand = std::abs(seq[0].dist_sq - 0.5) < 1e-12;
  r.pass = worst < 1e-9 && hand;
  r.detail = fmt("max |d_n - 1/(n+2)| = %.2e for n<=30, d_0 = %.15g", worst, seq[0].dist_sq);
  return r;
}

CriterionResult c3() {
  CriterionResult r{3, "decay regimes", true, "", 0};
  const auto p = parse_polynomial("1 - z1*z2");
  std::string d;
  for (double s : {0.0, 0.5}) {
    const auto seq = distance_sequence(p, {s / 2, s / 2}, 200, BasisShape::diagonal);
    std::vector<double> x, y;
    for (int n = 100; n <= 200; ++n) {
      x.push_back(n);
      y.push_back(seq[n].dist_sq);
    }
    const double slope = loglog_slope(x, y);
    const bool ok = std::abs(slope - (s - 1.0)) <= 0.15;
    r.pass = r.pass && ok;
    d += fmt("s=%g slope %.3f (target %g+-0.15) %s; ", s, slope, s - 1.0, ok ? "ok" : "FAIL");
  }
  {
    const auto seq = distance_sequence(p, {0.5, 0.5}, 200, BasisShape::diagonal);
    double lo = 1e300, hi = 0.0;
    for (int n = 0; n <= 200; ++n) {
      double h = 0.0;
      for (int k = 0; k <= n + 1; ++k) h += 1.0 / (k + 1);
      lo = std::min(lo, seq[n].dist_sq * h);
      hi = std::max(hi, seq[n].dist_sq * h);
    }
    const bool ok = lo >= 0.5 && hi <= 2.0;
    r.pass = r.pass && ok;
    d += fmt("s=1 d*H in [%.4f, %.4f] %s; ", lo, hi, ok ? "ok" : "FAIL");
  }
  {
    const auto seq = distance_sequence(p, {0.75, 0.75}, 200, BasisShape::diagonal);
    const double last = seq[200].dist_sq;
    const double diff = std::abs(seq[199].dist_sq - last);
    const bool ok = last > 1e-3 && diff < 1e-4;
    r.pass = r.pass && ok;
    d += fmt("s=1.5 d_200 = %.4f, |d_200-d_199| = %.1e %s", last, diff, ok ? "ok" : "FAIL");
  }
  r.detail = d;
  return r;
}

CriterionResult c4() {
  CriterionResult r{4, "finite-zero case", true, "", 0};
  const auto p = parse_polynomial("2 - z1 - z2");
  const auto a = distance_sequence(p, {0.5, 2.0}, 24);
  const double drop = 1.0 - a[24].dist_sq / a[4].dist_sq;
  const bool ok1 = drop >= 0.30;
  const auto b = distance_sequence(p, {1.5, 1.5}, 24);
  const double diff = std::abs(b[24].dist_sq - b[20].dist_sq);
  const bool ok2 = b[24].dist_sq > 0.05 && diff < 1e-3;
  r.pass = ok1 && ok2;
  r.detail = fmt("w=(0.5,2): d_4=%.4f d_24=%.4f drop %.1f%% (>=30%%) %s; w=(1.5,1.5): d_24=%.4f "
                 "|d_24-d_20|=%.2e (<1e-3) %s",
                 a[4].dist_sq, a[24].dist_sq, 100 * drop, ok1 ? "ok" : "FAIL", b[24].dist_sq, diff,
                 ok2 ? "ok" : "FAIL");
  return r;
}

CriterionResult c5() {
  CriterionResult r{5, "dilation boundedness", true, "", 0};
  const std::vector<double> tail{0.9, 0.99, 0.999};
  std::string d;

  auto range = [](const DilationSweep& s, auto field) {
    double lo = 1e300, hi = 0.0;
    for (const auto& x : s) {
      lo = std::min(lo, field(x));
      hi = std::max(hi, field(x));
    }
    return hi / lo;
  };
  const auto s1 = one_var_quotient_sweep({1.0, -1.0}, 1.0, tail);
  const double f1 = range(s1, [](const DilationRecord& x) { return x.norm_sq; });
  const bool ok1 = f1 < 4.0;
  d += fmt("alpha=1 max/min %.3f (<4) %s; ", f1, ok1 ? "ok" : "FAIL");

  // Growth at alpha = 1.5 is judged on the integral form of the norm; the
  // coefficient form is printed alongside.
  const auto s15 = one_var_quotient_sweep({1.0, -1.0}, 1.5, tail);
  const double gi = s15.back().seminorm / s15.front().seminorm;
  const double gc = s15.back().norm_sq / s15.front().norm_sq;
  const bool ok2 = gi > 5.0;
  d += fmt("alpha=1.5 growth %.3f integral, %.3f coeff (>5) %s; ", gi, gc, ok2 ? "ok" : "FAIL");

  const auto p = parse_polynomial("1 - z1*z2");
  const std::vector<double> grid{0.5, 0.9, 0.99, 0.999};
  auto norms = [](const DilationSweep& s) {
    std::vector<double> v;
    for (const auto& x : s) v.push_back(x.norm_sq);
    return v;
  };
  const auto ba = assess_boundedness(norms(two_var_sweep(p, {0.5, 0.5}, grid)));
  const bool ok3 = ba.bounded;
  d += fmt("(0.5,0.5) max/min %.3f bounded %s; ", ba.max_over_min, ok3 ? "ok" : "FAIL");
  const auto bb = assess_boundedness(norms(two_var_sweep(p, {1.0, 1.0}, grid)));
  const bool ok4 = bb.divergent;
  d += fmt("(1,1) growth %.2f divergent %s; ", bb.last_decade_growth, ok4 ? "ok" : "FAIL");

  double lo = 1e300, hi = 0.0;
  for (double rr : {0.5, 0.9, 0.99}) {
    const double v = model_integral(rr);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const bool ok5 = hi / lo < 2.0;
  d += fmt("model integral max/min %.3f (<2) %s", hi / lo, ok5 ? "ok" : "FAIL");

  r.pass = ok1 && ok2 && ok3 && ok4 && ok5;
  r.detail = d;
  return r;
}

CriterionResult c6() {
  CriterionResult r{6, "Forelli-Rudin regimes", true, "", 0};
  auto normalised = [](double b, double w) {
    const double v = forelli_rudin(0.0, b, w);
    const double t = 1.0 - w * w;
    if (b < 0) return v;
    if (b == 0) return v / -std::log(t);
    return v * std::pow(t, b);
  };
  std::string d;
  for (double b : {-1.0, 0.0, 2.0}) {
    const double x = normalised(b, 0.99), y = normalised(b, 0.999);
    const double rel = std::abs(y / x - 1.0);
    const bool ok = rel <= 0.2;
    r.pass = r.pass && ok;
    d += fmt("b=%g: %.4f -> %.4f (%.1f%%) %s; ", b, x, y, 100 * rel, ok ? "ok" : "FAIL");
  }
  r.detail = d.substr(0, d.size() - 2);
  return r;
}

double max_residual(const TorusZeroSet& z) {
  double m = 0.0;
  for (const auto& q : z.points) m = std::max(m, q.residual);
  return m;
}

bool near_origin(const TorusZero& q) { return std::hypot(q.s, q.t) < 1e-8; }

CriterionResult c7() {
  CriterionResult r{7, "zero-set suite", true, "", 0};
  int agree = 0, total = 0;
  double res = 0.0;
  std::string d;
  auto check = [&](const std::string& label, bool ok, const TorusZeroSet& z) {
    ++total;
    agree += ok;
    res = std::max(res, max_residual(z));
    if (!ok) d += label + " mismatch (" + to_string(z.cls) + "); ";
  };
  {
    const auto z = torus_zero_search(parse_polynomial("1 - z1*z2"));
    check("1-z1z2", z.cls == TorusClass::curve, z);
  }
  {
    const auto z = torus_zero_search(parse_polynomial("2 - z1 - z2"));
    check("2-z1-z2", z.cls == TorusClass::finite && z.points.size() == 1 && near_origin(z.points[0]), z);
  }
  {
    const auto z = torus_zero_search(parse_polynomial("3 - z1 - z2"));
    check("3-z1-z2", z.cls == TorusClass::empty, z);
  }
  {
    const auto z = torus_zero_search(parse_polynomial("1 - z1"));
    check("factor 1-z1", z.cls == TorusClass::finite && z.face == Face::z1_circle && z.points.size() == 1 &&
                             near_origin(z.points[0]), z);
    const auto y = torus_zero_search(parse_polynomial("1 - z2"));
    check("factor 1-z2", y.cls == TorusClass::finite && y.face == Face::z2_circle && y.points.size() == 1 &&
                             near_origin(y.points[0]), y);
  }
  {
    const auto z = torus_zero_search(parse_polynomial(kBranchExample));
    check("branch example", z.cls == TorusClass::curve, z);
  }
  r.pass = agree == total && res < 1e-8;
  r.detail = fmt("%d/%d classes agree, max residual %.1e (<1e-8)", agree, total, res) +
             (d.empty() ? "" : "; " + d);
  return r;
}

CriterionResult c8() {
  CriterionResult r{8, "branch analysis", true, "", 0};
  std::string d;
  struct Case {
    const char* expr;
    Complex a;
  };
  for (const Case& c : {Case{"1 + z1^2*z2", 0.0}, Case{kBranchExample, 0.5}}) {
    const auto p = parse_polynomial(c.expr);
    const auto S = singular_set(p);
    const auto fit = branch_exponent(p, c.a);
    const bool ok_exp = std::abs(fit.slope + 0.5) <= 0.05;
    const auto perm = monodromy_around(p, c.a, S);
    const bool ok_mono = is_transposition(perm);
    const auto hopf = hopf_ratio(p, 4096, 0);
    const bool ok_h = hopf.max_abs_h < 1.0;
    const bool ok_hopf = hopf.min_ratio >= 0.2;
    r.pass = r.pass && ok_exp && ok_mono && ok_h && ok_hopf;
    d += fmt("%s: exponent %.4f %s, monodromy %s %s, max|h| %.6f %s, Hopf min %.4f (>=0.2) %s; ", c.expr,
             fit.slope, ok_exp ? "ok" : "FAIL", one_line(perm).c_str(), ok_mono ? "ok" : "FAIL",
             hopf.max_abs_h, ok_h ? "ok" : "FAIL", hopf.min_ratio, ok_hopf ? "ok" : "FAIL");
  }
  r.detail = d.substr(0, d.size() - 2);
  return r;
}

CriterionResult c9() {
  CriterionResult r{9, "orthocomplement recurrence", true, "", 0};
  const auto p = parse_polynomial("2 - z1 - z2");
  double worst = 0.0;
  for (WeightPair w : {WeightPair{0, 0}, WeightPair{1, 1}, WeightPair{2, 0.5}}) {
    worst = std::max(worst, orthocomplement_recurrence_check(p, w, 8));
  }
  r.pass = worst < 1e-10;
  r.detail = fmt("max residual %.2e at box 8 (<1e-10)", worst);
  return r;
}

CriterionResult c10() {
  CriterionResult r{10, "classifier lattice", true, "", 0};
  struct Entry {
    std::string expr;
    std::vector<std::string> factors;
    std::function<bool(double, double)> region;
  };
  auto curve = [](double a, double b) { return a + b <= 1.0; };
  auto finite = [](double a, double b) { return a + b <= 1.0 || std::min(a, b) <= 1.0; };
  auto empty = [](double, double) { return true; };
  const std::vector<Entry> corpus{
      {"1 - z1*z2", {}, curve},
      {"2 - z1 - z2", {}, finite},
      {"3 - z1 - z2", {}, empty},
      {"(1 - z1)*(1 - z2)", {"1 - z1", "1 - z2"}, [](double a, double b) { return a <= 1.0 && b <= 1.0; }},
      {kBranchExample, {}, curve},
  };
  const std::vector<double> lattice{-2.0, -1.25, -0.5, 0.25, 1.0, 1.75, 2.5};

  int match = 0, total = 0;
  std::string d;
  std::vector<Evidence> evidence;
  for (const Entry& e : corpus) {
    Assertions as;
    for (const auto& f : e.factors) as.factors.push_back(parse_polynomial(f));
    evidence.push_back(analyze(parse_polynomial(e.expr), as));
    for (double a1 : lattice) {
      for (double a2 : lattice) {
        const auto v = decide(evidence.back(), {a1, a2});
        const Verdict want = e.region(a1, a2) ? Verdict::cyclic : Verdict::not_cyclic;
        ++total;
        if (v.verdict == want) {
          ++match;
        } else if (d.size() < 300) {
          d += fmt("%s at (%g,%g): %s; ", e.expr.c_str(), a1, a2, to_string(v.verdict));
        }
      }
    }
  }
  const bool ok_lattice = match == total;

  struct Spot {
    int entry;
    WeightPair w;
  };
  const std::vector<Spot> spots{
      {0, {0, 0}},   {0, {1.5, 1.5}}, {0, {-2, 2}},   {0, {1, 1}}, {0, {0.25, 0.25}}, {1, {1, 1}},
      {1, {1.5, 1.5}}, {1, {0.5, 2}}, {1, {0, 0}},     {2, {1.5, 1.5}}, {2, {0, 0}}, {4, {0, 0}},
  };
  int agree = 0, inconclusive = 0, contradict = 0;
  std::string sd;
  for (const Spot& s : spots) {
    const auto v = decide(evidence[s.entry], s.w);
    const auto cc = cross_validate(evidence[s.entry].p, s.w, v, default_cross_nmax(evidence[s.entry].p));
    switch (cc.agreement) {
      case CrossCheck::Agreement::agree: ++agree; break;
      case CrossCheck::Agreement::inconclusive: ++inconclusive; break;
      case CrossCheck::Agreement::contradict:
        ++contradict;
        sd += fmt("%s at (%g,%g): %s vs %s; ", corpus[s.entry].expr.c_str(), s.w.alpha1, s.w.alpha2,
                  to_string(v.verdict), to_string(cc.regime));
        break;
    }
  }
  r.pass = ok_lattice && contradict == 0;
  r.detail = fmt("lattice %d/%d match; cross-check %d agree, %d inconclusive, %d contradict", match, total,
                 agree, inconclusive, contradict) +
             (d.empty() ? "" : "; " + d) + (sd.empty() ? "" : "; " + sd);
  return r;
}

}  // namespace

CriterionResult run_criterion(int id) {
  static const std::function<CriterionResult()> table[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  if (id < 1 || id > kCriterionCount) {
    throw Error(ErrorKind::InvalidArgument, "no acceptance criterion " + std::to_string(id));
  }
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = table[id - 1]();
  } catch (const std::exception& e) {
    r.id = id;
    r.name = "criterion " + std::to_string(id);
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids) {
  std::vector<CriterionResult> out;
  if (ids.empty()) {
    for (int i = 1; i <= kCriterionCount; ++i) out.push_back(run_criterion(i));
  } else {
    for (int i : ids) out.push_back(run_criterion(i));
  }
  return out;
}

}  // namespace cyclab
