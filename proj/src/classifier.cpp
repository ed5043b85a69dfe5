#include "cyclab/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "cyclab/errors.hpp"

namespace cyclab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::cyclic: return "cyclic";
    case Verdict::not_cyclic: return "not_cyclic";
    case Verdict::out_of_theorem_scope: return "out_of_theorem_scope";
  }
  return "?";
}

const char* to_string(VerdictRule r) {
  switch (r) {
    case VerdictRule::interior_zero: return "interior_zero";
    case VerdictRule::product: return "product";
    case VerdictRule::constant: return "constant";
    case VerdictRule::one_variable: return "one_variable";
    case VerdictRule::case1: return "case1";
    case VerdictRule::case2: return "case2";
    case VerdictRule::case3: return "case3";
    case VerdictRule::scope: return "scope";
  }
  return "?";
}

const char* to_string(CrossCheck::Agreement a) {
  switch (a) {
    case CrossCheck::Agreement::agree: return "agree";
    case CrossCheck::Agreement::inconclusive: return "inconclusive";
    case CrossCheck::Agreement::contradict: return "contradict";
  }
  return "?";
}

namespace {

double mismatch(const BivariateSeries& p, const std::vector<BivariateSeries>& factors) {
  BivariateSeries prod = BivariateSeries::constant(1.0);
  for (const auto& f : factors) {
    const BivariateSeries g = trim(f);
    prod = multiply(prod, g, Box{prod.max_k() + g.max_k(), prod.max_l() + g.max_l()});
  }
  // Best scalar c with prod ~ c p.
  const Box box{std::max(prod.max_k(), p.max_k()), std::max(prod.max_l(), p.max_l())};
  Complex num{0.0, 0.0};
  double den = 0.0;
  for (int k = 0; k <= box.k; ++k)
    for (int l = 0; l <= box.l; ++l) {
      num += prod(k, l) * std::conj(p(k, l));
      den += std::norm(p(k, l));
    }
  const Complex c = num / den;
  double dev = 0.0;
  for (int k = 0; k <= box.k; ++k)
    for (int l = 0; l <= box.l; ++l) dev = std::max(dev, std::abs(prod(k, l) - c * p(k, l)));
  return dev / (std::abs(c) * p.max_abs());
}

CyclicityVerdict make(Verdict v, VerdictRule r, WeightPair w, std::string reason) {
  CyclicityVerdict out;
  out.verdict = v;
  out.rule = r;
  out.w = w;
  out.reason = std::move(reason);
  return out;
}

}  // namespace

Evidence analyze(const BivariateSeries& p_in, const Assertions& assertions,
                 const AnalyzeOptions& opt) {
  Evidence e;
  e.p = trim(p_in);
  if (e.p.max_abs() == 0.0) throw Error(ErrorKind::InvalidArgument, "classify: p is identically zero");

  const bool d1 = depends_on(e.p, Axis::z1);
  const bool d2 = depends_on(e.p, Axis::z2);
  e.constant = !d1 && !d2;
  if (d1 != d2) e.only_axis = d1 ? Axis::z1 : Axis::z2;

  if (!e.constant) e.stability = stability_check(e.p, opt.disk_radii, opt.disk_angles);
  if (!e.constant) e.zeros = torus_zero_search(e.p, opt.grid_n);

  if (!assertions.factors.empty()) {
    e.factor_mismatch = mismatch(e.p, assertions.factors);
    Assertions sub;
    sub.irreducible = true;
    for (const auto& f : assertions.factors) e.factors.push_back(analyze(f, sub, opt));
    return e;
  }

  if (d1 && d2) {
    if (assertions.irreducible) {
      e.irreducibility = Irreducibility::irreducible;
      e.irreducibility_asserted = true;
      e.irreducibility_reason = "asserted";
    } else {
      const auto rep = heuristic_irreducibility(e.p);
      e.irreducibility = rep.verdict;
      e.irreducibility_reason = rep.reason;
    }
  }
  return e;
}

CyclicityVerdict decide(const Evidence& e, WeightPair w) {
  if (!e.constant && !e.stability.zero_free) {
    return make(Verdict::not_cyclic, VerdictRule::interior_zero, w, "p vanishes inside the bidisk");
  }

  if (!e.factors.empty()) {
    if (e.factor_mismatch > 1e-8) {
      return make(Verdict::out_of_theorem_scope, VerdictRule::product, w,
                  "supplied factors do not multiply to p");
    }
    CyclicityVerdict out = make(Verdict::cyclic, VerdictRule::product, w, "all factors cyclic");
    for (const auto& f : e.factors) {
      CyclicityVerdict fv = decide(f, w);
      if (fv.verdict == Verdict::not_cyclic) {
        out.verdict = Verdict::not_cyclic;
        out.reason = "a factor is not cyclic";
      } else if (fv.verdict == Verdict::out_of_theorem_scope && out.verdict == Verdict::cyclic) {
        out.verdict = Verdict::out_of_theorem_scope;
        out.reason = "a factor is out of scope";
      }
      out.factor_verdicts.push_back(std::move(fv));
    }
    return out;
  }

  if (e.constant) return make(Verdict::cyclic, VerdictRule::constant, w, "nonzero constant");

  if (e.only_axis) {
    const double a = *e.only_axis == Axis::z1 ? w.alpha1 : w.alpha2;
    const char* name = *e.only_axis == Axis::z1 ? "alpha1" : "alpha2";
    if (e.zeros.cls == TorusClass::empty) {
      return make(Verdict::cyclic, VerdictRule::one_variable, w, "no zeros on the closed disk");
    }
    if (a <= 1.0) {
      return make(Verdict::cyclic, VerdictRule::one_variable, w, std::string(name) + " <= 1");
    }
    return make(Verdict::not_cyclic, VerdictRule::one_variable, w,
                std::string("zeros on the circle and ") + name + " > 1");
  }

  if (e.irreducibility != Irreducibility::irreducible) {
    return make(Verdict::out_of_theorem_scope, VerdictRule::scope, w,
                std::string("irreducibility ") + to_string(e.irreducibility) + ": " +
                    e.irreducibility_reason);
  }
  if (e.zeros.resolution_warning) {
    return make(Verdict::out_of_theorem_scope, VerdictRule::scope, w,
                "torus zero set unresolved: " + e.zeros.note);
  }

  const double sum = w.alpha1 + w.alpha2;
  const double mn = std::min(w.alpha1, w.alpha2);
  const TorusClass c = e.zeros.cls;
  if (sum <= 1.0) return make(Verdict::cyclic, VerdictRule::case1, w, "alpha1 + alpha2 <= 1");
  if (mn <= 1.0) {
    const bool ok = c != TorusClass::curve;
    return make(ok ? Verdict::cyclic : Verdict::not_cyclic, VerdictRule::case2, w,
                std::string("sum > 1, min <= 1, torus set ") + to_string(c));
  }
  const bool ok = c == TorusClass::empty;
  return make(ok ? Verdict::cyclic : Verdict::not_cyclic, VerdictRule::case3, w,
              std::string("min > 1, torus set ") + to_string(c));
}

CyclicityVerdict classify(const BivariateSeries& p, WeightPair w, const Assertions& assertions,
                          const AnalyzeOptions& opt) {
  return decide(analyze(p, assertions, opt), w);
}

int default_cross_nmax(const BivariateSeries& p) {
  return diagonal_extract(trim(p)) ? 200 : 24;
}

CrossCheck cross_validate(const BivariateSeries& p, WeightPair w, const CyclicityVerdict& v,
                          int n_max) {
  if (v.verdict == Verdict::out_of_theorem_scope) {
    throw Error(ErrorKind::InvalidArgument, "cross_validate needs a cyclic or not_cyclic verdict");
  }
  CrossCheck cc;
  cc.shape = diagonal_extract(trim(p)) ? BasisShape::diagonal : BasisShape::square;
  cc.n_max = n_max;

  DistanceSequence seq;
  try {
    seq = distance_sequence(p, w, n_max, cc.shape);
  } catch (const NumericalBreakdown& err) {
    if (err.last_completed() < 7) {
      cc.detail = std::string("breakdown: ") + err.what();
      return cc;
    }
    seq = distance_sequence(p, w, err.last_completed(), cc.shape);
    cc.n_max = err.last_completed();
    cc.detail = "truncated at breakdown; ";
  }
  cc.last_dist_sq = seq.back().dist_sq;
  const DecayFit fit = decay_fit(seq);
  cc.regime = fit.regime;
  cc.detail += fit.detail;

  const bool decays = fit.regime == Regime::power_law || fit.regime == Regime::logarithmic;
  if (fit.regime == Regime::inconclusive) {
    cc.agreement = CrossCheck::Agreement::inconclusive;
  } else if ((v.verdict == Verdict::cyclic) == decays) {
    cc.agreement = CrossCheck::Agreement::agree;
  } else {
    cc.agreement = CrossCheck::Agreement::contradict;
  }
  return cc;
}

}  // namespace cyclab
