#include "cyclab/approximants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cyclab/errors.hpp"
#include "cyclab/parallel.hpp"

namespace cyclab {

std::vector<Box> basis_indices(Box box, BasisShape shape) {
  std::vector<Box> out;
  if (shape == BasisShape::diagonal) {
    const int n = std::min(box.k, box.l);
    for (int j = 0; j <= n; ++j) out.push_back({j, j});
    return out;
  }
  for (int k = 0; k <= box.k; ++k)
    for (int l = 0; l <= box.l; ++l) out.push_back({k, l});
  return out;
}

namespace {

struct WeightTable {
  int cols;
  std::vector<double> w;
  WeightTable(Box box, WeightPair wp) : cols(box.l + 1) {
    w.resize(static_cast<std::size_t>(box.k + 1) * cols);
    for (int k = 0; k <= box.k; ++k)
      for (int l = 0; l <= box.l; ++l) w[static_cast<std::size_t>(k) * cols + l] = coeff_weight(k, l, wp);
  }
  double operator()(int k, int l) const { return w[static_cast<std::size_t>(k) * cols + l]; }
};

Box basis_extent(const std::vector<Box>& basis) {
  Box e{0, 0};
  for (const Box& b : basis) {
    e.k = std::max(e.k, b.k);
    e.l = std::max(e.l, b.l);
  }
  return e;
}

}  // namespace

GramSystem build_gram(const BivariateSeries& p, const std::vector<Box>& basis, WeightPair w) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "build_gram: p is identically zero");
  const auto terms = support(p);
  const Box ext = basis_extent(basis);
  const WeightTable W(Box{ext.k + p.max_k(), ext.l + p.max_l()}, w);

  // Position of each exponent in the basis, -1 when absent.
  const int cols = ext.l + 1;
  std::vector<int> slot(static_cast<std::size_t>(ext.k + 1) * cols, -1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    slot[static_cast<std::size_t>(basis[i].k) * cols + basis[i].l] = static_cast<int>(i);
  }

  const auto n = static_cast<Eigen::Index>(basis.size());
  GramSystem sys;
  sys.basis = basis;
  sys.gram = Eigen::MatrixXcd::Zero(n, n);
  sys.rhs = Eigen::VectorXcd::Zero(n);

  // gram(a, b) = sum over s, t in supp p with b + s == a + t of p_s conj(p_t) W(a + t).
  parallel_for(basis.size(), [&](std::size_t ia) {
    const Box a = basis[ia];
    for (const Term& t : terms) {
      const double wt = W(a.k + t.k, a.l + t.l);
      for (const Term& s : terms) {
        const int bk = a.k + t.k - s.k;
        const int bl = a.l + t.l - s.l;
        if (bk < 0 || bl < 0 || bk > ext.k || bl > ext.l) continue;
        const int ib = slot[static_cast<std::size_t>(bk) * cols + bl];
        if (ib < 0) continue;
        sys.gram(static_cast<Eigen::Index>(ia), ib) += s.c * std::conj(t.c) * wt;
      }
    }
  });
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].k == 0 && basis[i].l == 0) sys.rhs(static_cast<Eigen::Index>(i)) = std::conj(p(0, 0));
  }
  return sys;
}

GramSystem build_gram(const BivariateSeries& p, Box box, WeightPair w) {
  return build_gram(p, basis_indices(box), w);
}

OptimalApproximant solve_optimal(const BivariateSeries& p, const std::vector<Box>& basis,
                                 WeightPair w) {
  const GramSystem sys = build_gram(p, basis, w);
  Eigen::LLT<Eigen::MatrixXcd> llt(sys.gram);
  if (llt.info() != Eigen::Success) {
    throw NumericalBreakdown("Cholesky factorisation of the Gram matrix failed", -1);
  }
  Eigen::VectorXcd q = llt.solve(sys.rhs);
  const Eigen::VectorXcd r = sys.rhs - sys.gram * q;
  q += llt.solve(r);
  if (!q.allFinite()) throw NumericalBreakdown("Gram solve produced non-finite values", -1);

  const Box ext = basis_extent(basis);
  OptimalApproximant out{BivariateSeries(ext), 0.0};
  for (std::size_t i = 0; i < basis.size(); ++i) out.q.at(basis[i].k, basis[i].l) = q(static_cast<Eigen::Index>(i));
  out.dist_sq = 1.0 - std::real(p(0, 0) * out.q(0, 0));
  return out;
}

OptimalApproximant solve_optimal(const BivariateSeries& p, Box box, WeightPair w, BasisShape shape) {
  return solve_optimal(p, basis_indices(box, shape), w);
}

double residual_norm_sq(const BivariateSeries& p, const BivariateSeries& q, WeightPair w) {
  const Box box{p.max_k() + q.max_k(), p.max_l() + q.max_l()};
  BivariateSeries r = multiply(p, q, box);
  r.at(0, 0) -= 1.0;
  return coeff_norm_sq(r, w);
}

double orthogonality_defect(const BivariateSeries& p, const BivariateSeries& q,
                            const std::vector<Box>& basis, WeightPair w) {
  const Box ext = basis_extent(basis);
  const Box box{p.max_k() + std::max(q.max_k(), ext.k), p.max_l() + std::max(q.max_l(), ext.l)};
  BivariateSeries r = multiply(p, q, box);
  r.at(0, 0) -= 1.0;
  double worst = 0.0;
  for (const Box& a : basis) {
    const BivariateSeries phi = multiply(BivariateSeries::monomial(a.k, a.l), p, box);
    worst = std::max(worst, std::abs(inner_product(r, phi, w)));
  }
  return worst;
}

namespace {

DistanceSequence run_sequence(int n_max, const std::function<OptimalApproximant(int)>& solve) {
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n_max must be nonnegative");
  const auto count = static_cast<std::size_t>(n_max) + 1;
  std::vector<double> dist(count, std::numeric_limits<double>::quiet_NaN());
  std::vector<char> failed(count, 0);
  parallel_for(count, [&](std::size_t i) {
    try {
      dist[i] = solve(static_cast<int>(i)).dist_sq;
    } catch (const NumericalBreakdown&) {
      failed[i] = 1;
    }
  });
  DistanceSequence seq;
  for (std::size_t i = 0; i < count; ++i) {
    if (failed[i]) {
      throw NumericalBreakdown("Gram solve broke down at N = " + std::to_string(i),
                               static_cast<int>(i) - 1);
    }
    seq.push_back({static_cast<int>(i), dist[i]});
  }
  return seq;
}

}  // namespace

DistanceSequence distance_sequence(const BivariateSeries& p, WeightPair w, int n_max, BasisShape shape) {
  return run_sequence(n_max, [&](int n) { return solve_optimal(p, Box{n, n}, w, shape); });
}

DistanceSequence one_var_distance_sequence(const std::vector<Complex>& P, double alpha, int n_max) {
  BivariateSeries p(Box{static_cast<int>(P.size()) - 1, 0});
  for (std::size_t k = 0; k < P.size(); ++k) p.at(static_cast<int>(k), 0) = P[k];
  const WeightPair w{alpha, 0.0};
  return run_sequence(n_max, [&](int n) { return solve_optimal(p, Box{n, 0}, w); });
}

double one_minus_z_dist_sq(double alpha, int n) {
  double s = 0.0;
  for (int k = n + 1; k >= 0; --k) s += std::pow(k + 1.0, -alpha);
  return 1.0 / s;
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::power_law: return "power_law";
    case Regime::logarithmic: return "logarithmic";
    case Regime::plateau: return "plateau";
    case Regime::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (f.intercept + f.slope * x[i]);
    ss_res += e * e;
  }
  f.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return f;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

DecayFit decay_fit(const DistanceSequence& seq, const DecayFitOptions& opt) {
  if (seq.size() < 8) throw Error(ErrorKind::InvalidArgument, "decay_fit needs at least 8 points");
  DecayFit out;
  const DistancePoint& last = seq.back();
  const int n_max = last.n;
  out.window_start = std::max(1, n_max / 2);

  auto value_at = [&](int n) {
    const DistancePoint* best = &seq.front();
    for (const auto& pt : seq)
      if (std::abs(pt.n - n) < std::abs(best->n - n)) best = &pt;
    return best->dist_sq;
  };

  if (last.dist_sq <= opt.converged_floor) {
    out.regime = Regime::power_law;
    out.slope = -std::numeric_limits<double>::infinity();
    out.detail = "distance below " + fmt(opt.converged_floor) + ": treated as converged";
    return out;
  }

  const double step = std::abs(last.dist_sq - seq[seq.size() - 2].dist_sq);
  if (step < opt.plateau_step && last.dist_sq > opt.plateau_floor) {
    out.regime = Regime::plateau;
    out.limit = last.dist_sq;
    out.detail = "successive difference " + fmt(step) + " below " + fmt(opt.plateau_step);
    return out;
  }

  // Extrapolate from N/4, N/2, N assuming geometric differences.
  {
    const double a = value_at(n_max / 4), b = value_at(n_max / 2), c = last.dist_sq;
    const double d1 = b - a, d2 = c - b;
    if (d1 != 0.0) {
      const double rho = d2 / d1;
      if (rho > 0.0 && rho <= opt.aitken_max_ratio) {
        const double limit = c + d2 * rho / (1.0 - rho);
        if (limit > opt.plateau_floor && limit >= opt.aitken_min_fraction * c) {
          out.regime = Regime::plateau;
          out.limit = limit;
          out.detail = "extrapolated limit " + fmt(limit) + " (difference ratio " + fmt(rho) + ")";
          return out;
        }
      }
    }
  }

  std::vector<double> lx, llx, ly;
  for (const auto& pt : seq) {
    if (pt.n < out.window_start || !(pt.dist_sq > 0.0)) continue;
    lx.push_back(std::log(static_cast<double>(pt.n)));
    ly.push_back(std::log(pt.dist_sq));
    llx.push_back(pt.n >= 2 ? std::log(std::log(static_cast<double>(pt.n))) : std::nan(""));
  }
  if (lx.size() < 3) {
    out.detail = "too few positive points in the fit window";
    return out;
  }

  const LineFit pw = fit_line(lx, ly);
  if (pw.r_squared > opt.min_r_squared && pw.slope <= opt.max_power_slope) {
    out.regime = Regime::power_law;
    out.slope = pw.slope;
    out.r_squared = pw.r_squared;
    out.detail = "log-log slope " + fmt(pw.slope) + ", R^2 " + fmt(pw.r_squared);
    return out;
  }

  std::vector<double> gx, gy, inv;
  for (std::size_t i = 0; i < llx.size(); ++i) {
    if (std::isnan(llx[i])) continue;
    gx.push_back(llx[i]);
    gy.push_back(ly[i]);
    inv.push_back(std::exp(-ly[i]));
  }
  if (gx.size() >= 3) {
    const LineFit lg = fit_line(gx, gy);
    std::vector<double> lnx;
    for (double v : gx) lnx.push_back(std::exp(v));
    const LineFit recip = fit_line(lnx, inv);
    if (lg.r_squared > opt.min_r_squared && lg.slope >= opt.log_slope_lo &&
        lg.slope <= opt.log_slope_hi) {
      out.regime = Regime::logarithmic;
      out.slope = lg.slope;
      out.r_squared = lg.r_squared;
      out.detail = "log-loglog slope " + fmt(lg.slope) + ", R^2 " + fmt(lg.r_squared) +
                   "; 1/dist vs log N slope " + fmt(recip.slope);
      return out;
    }
    out.detail = "no model: log-log slope " + fmt(pw.slope) + " (R^2 " + fmt(pw.r_squared) +
                 "), log-loglog slope " + fmt(lg.slope) + " (R^2 " + fmt(lg.r_squared) + ")";
  } else {
    out.detail = "no model: log-log slope " + fmt(pw.slope) + " (R^2 " + fmt(pw.r_squared) + ")";
  }
  out.slope = pw.slope;
  out.r_squared = pw.r_squared;
  return out;
}

double orthocomplement_recurrence_check(const BivariateSeries& p_in, WeightPair w, int box) {
  const BivariateSeries p = trim(p_in);
  const Bidegree d{p.max_k(), p.max_l()};
  if (box < 0) throw Error(ErrorKind::InvalidArgument, "box must be nonnegative");
  std::vector<Box> rows;
  for (int k = 0; k + d.m <= box; ++k)
    for (int l = 0; l + d.n <= box; ++l) rows.push_back({k, l});
  const int side = box + 1;
  const int ncols = side * side;
  if (rows.empty()) return 0.0;

  const auto terms = support(p);
  // constraint(a, c) = conj(p_{c - a}) W(c); a complement vector f has constraint f = 0.
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows.size()), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const Term& t : terms) {
      const int k = rows[i].k + t.k, l = rows[i].l + t.l;
      C(static_cast<Eigen::Index>(i), k * side + l) = std::conj(t.c) * coeff_weight(k, l, w);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(C, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double tol = 1e-12 * (sv.size() > 0 ? sv(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol) ++rank;
  if (rank == ncols) return 0.0;

  double worst = 0.0;
  for (Eigen::Index j = rank; j < ncols; ++j) {
    Eigen::VectorXcd b = svd.matrixV().col(j);
    for (int k = 0; k <= box; ++k)
      for (int l = 0; l <= box; ++l) b(k * side + l) *= coeff_weight(k, l, w);
    b /= b.cwiseAbs().maxCoeff();
    for (const Box& a : rows) {
      Complex acc{0.0, 0.0};
      for (const Term& t : terms) acc += std::conj(t.c) * b((a.k + t.k) * side + a.l + t.l);
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

}  // namespace cyclab
