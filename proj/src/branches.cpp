#include "cyclab/branches.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <functional>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "cyclab/errors.hpp"
#include "cyclab/roots.hpp"

namespace cyclab {

const char* to_string(SingularKind k) {
  return k == SingularKind::branch ? "branch" : "leading_degeneration";
}

namespace {

// Coefficients of p(., z2) in z1, ascending.
std::vector<Complex> z1_coefficients(const BivariateSeries& p, Complex z2) {
  std::vector<Complex> c(static_cast<std::size_t>(p.max_k()) + 1);
  for (int k = 0; k <= p.max_k(); ++k) c[k] = poly_eval(p.row(k), z2);
  return c;
}

Complex sylvester_resultant(const std::vector<Complex>& f) {
  const int m = static_cast<int>(f.size()) - 1;
  const auto g = poly_derivative(f);  // formal degree m - 1
  const int N = 2 * m - 1;
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(N, N);
  for (int i = 0; i < m - 1; ++i)
    for (int j = 0; j <= m; ++j) S(i, i + j) = f[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= m - 1; ++j) S(m - 1 + i, i + j) = g[m - 1 - j];
  return S.partialPivLu().determinant();
}

constexpr double kClusterRadius = 1e-3;

double max_abs(const std::vector<Complex>& v) {
  double s = 0.0;
  for (Complex x : v)
    if (!is_infinite(x)) s = std::max(s, std::abs(x));
  return s;
}

}  // namespace

std::vector<Complex> discriminant_polynomial(const BivariateSeries& p_in) {
  const BivariateSeries p = trim(p_in);
  const int m = p.max_k(), n = p.max_l();
  if (m < 1) throw Error(ErrorKind::DegenerateInput, "p has z1-degree 0");
  const int M = std::max((2 * m - 1) * n + 1, 4);
  std::vector<Complex> vals(static_cast<std::size_t>(M));
  for (int i = 0; i < M; ++i) {
    const Complex z2 = std::polar(1.0, 2.0 * std::numbers::pi * i / M);
    vals[i] = sylvester_resultant(z1_coefficients(p, z2));
  }
  std::vector<Complex> c(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) {
    Complex acc{0.0, 0.0};
    for (int i = 0; i < M; ++i) acc += vals[i] * std::polar(1.0, -2.0 * std::numbers::pi * double(i) * j / M);
    c[j] = acc / double(M);
  }
  return c;
}

std::vector<SingularPoint> singular_set(const BivariateSeries& p_in) {
  const BivariateSeries p = trim(p_in);
  if (!depends_on(p, Axis::z2)) {
    throw Error(ErrorKind::DegenerateInput, "p does not depend on z2; its singular set is empty");
  }
  const int m = p.max_k();
  const auto disc = discriminant_polynomial(p);
  const double scale = max_abs(disc);
  const double pscale = p.max_abs() * (m + 1);
  if (scale <= 1e-10 * std::pow(pscale, 2 * m - 1)) {
    throw Error(ErrorKind::DegenerateInput, "discriminant vanishes identically: p has a repeated factor");
  }
  std::vector<Complex> trimmed = disc;
  while (trimmed.size() > 1 && std::abs(trimmed.back()) <= 1e-10 * scale) trimmed.pop_back();
  auto roots = poly_roots(trimmed, 0.0);

  // Merge numerically split multiple roots (single linkage; a root of
  // multiplicity k spreads over about eps^(1/k)).
  std::vector<int> label(roots.size());
  std::iota(label.begin(), label.end(), 0);
  std::function<int(int)> find = [&](int x) { return label[x] == x ? x : label[x] = find(label[x]); };
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) <= kClusterRadius * std::max(1.0, std::abs(roots[i])))
        label[find(static_cast<int>(i))] = find(static_cast<int>(j));
  std::vector<std::vector<Complex>> clusters;
  std::vector<int> slot(roots.size(), -1);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const int r = find(static_cast<int>(i));
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(clusters.size());
      clusters.emplace_back();
    }
    clusters[slot[r]].push_back(roots[i]);
  }

  const auto Am = slice_z1(p, m);
  const auto Am1 = slice_z1(p, m - 1);
  auto slice_scale = [&](const std::vector<Complex>& s, Complex a) {
    double t = 0.0;
    for (std::size_t l = 0; l < s.size(); ++l) t += std::abs(s[l]) * std::pow(std::max(1.0, std::abs(a)), l);
    return std::max(t, p.max_abs());
  };

  std::vector<SingularPoint> out;
  for (const auto& cl : clusters) {
    Complex a{0.0, 0.0};
    for (Complex r : cl) a += r;
    a /= double(cl.size());
    const double rel = std::abs(poly_eval(disc, a)) / scale;
    const bool lead_zero = std::abs(poly_eval(Am, a)) <= 1e-6 * slice_scale(Am, a);
    if (!lead_zero) {
      out.push_back({a, SingularKind::branch, rel});
      continue;
    }
    if (std::abs(poly_eval(Am1, a)) <= 1e-6 * slice_scale(Am1, a)) {
      out.push_back({a, SingularKind::leading_degeneration, rel});
      continue;
    }
    // Degree drops by one: a branch only if the remaining finite roots collide.
    const auto finite = poly_roots(z1_coefficients(p, a), 1e-6);
    bool repeated = false;
    for (std::size_t i = 0; i < finite.size(); ++i)
      for (std::size_t j = i + 1; j < finite.size(); ++j)
        if (std::abs(finite[i] - finite[j]) <= 1e-4 * std::max(1.0, std::abs(finite[i]))) repeated = true;
    if (repeated) out.push_back({a, SingularKind::branch, rel});
  }
  std::sort(out.begin(), out.end(), [](const SingularPoint& x, const SingularPoint& y) {
    if (x.a.real() != y.a.real()) return x.a.real() < y.a.real();
    return x.a.imag() < y.a.imag();
  });
  return out;
}

std::vector<Complex> branch_values(const BivariateSeries& p, Complex z2) {
  const int m = p.max_k();
  const auto A = z1_coefficients(p, z2);
  std::vector<Complex> h;
  h.reserve(static_cast<std::size_t>(m));
  if (std::abs(A[m]) >= std::abs(A[0])) {
    // z1-roots r; h = 1/r, with missing roots at infinity giving h = 0.
    for (Complex r : poly_roots(A)) h.push_back(r == Complex{0.0, 0.0} ? complex_infinity() : 1.0 / r);
    while (static_cast<int>(h.size()) < m) h.push_back(0.0);
  } else {
    // Roots of sum_k A_k h^(m-k); missing roots are h = infinity.
    std::vector<Complex> rev(A.rbegin(), A.rend());
    h = poly_roots(rev);
    while (static_cast<int>(h.size()) < m) h.push_back(complex_infinity());
  }
  return h;
}

namespace {

struct Matching {
  std::vector<int> perm;  // new value perm[j] continues old branch j
  double best = 0.0;
  double second = std::numeric_limits<double>::infinity();
};

Matching match(const std::vector<Complex>& prev, const std::vector<Complex>& next) {
  const int m = static_cast<int>(prev.size());
  Matching out;
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  if (m <= 7) {
    out.best = std::numeric_limits<double>::infinity();
    do {
      double cost = 0.0;
      for (int j = 0; j < m; ++j) cost += chordal_distance(prev[j], next[perm[j]]);
      if (cost < out.best) {
        out.second = out.best;
        out.best = cost;
        out.perm = perm;
      } else if (cost < out.second) {
        out.second = cost;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }
  // Greedy for many sheets.
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  out.perm.assign(static_cast<std::size_t>(m), -1);
  for (int j = 0; j < m; ++j) {
    double best = std::numeric_limits<double>::infinity();
    int bi = -1;
    for (int i = 0; i < m; ++i) {
      if (used[i]) continue;
      const double d = chordal_distance(prev[j], next[i]);
      if (d < best) {
        best = d;
        bi = i;
      }
    }
    used[bi] = 1;
    out.perm[j] = bi;
    out.best += best;
  }
  return out;
}

double min_separation(const std::vector<Complex>& v) {
  double s = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) s = std::min(s, chordal_distance(v[i], v[j]));
  return s;
}

double distance_to(const std::vector<SingularPoint>& S, Complex z) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& s : S) d = std::min(d, std::abs(z - s.a));
  return d;
}

std::vector<SingularPoint> singular_or_empty(const BivariateSeries& p) {
  if (!depends_on(p, Axis::z2) || p.max_k() < 1) return {};
  return singular_set(p);
}

}  // namespace

BranchTrack track_branches(const BivariateSeries& p_in, const std::vector<Complex>& path,
                           const std::vector<SingularPoint>& singular) {
  const BivariateSeries p = trim(p_in);
  if (path.empty()) throw Error(ErrorKind::InvalidArgument, "empty path");
  if (p.max_k() < 1) throw Error(ErrorKind::DegenerateInput, "p has z1-degree 0");
  constexpr double kMaxStep = 0.02;
  constexpr double kClearance = 1e-3;

  BranchTrack track;
  auto check = [&](Complex z) {
    if (distance_to(singular, z) < kClearance) {
      throw Error(ErrorKind::InvalidArgument, "path passes within 1e-3 of a singular point");
    }
  };
  check(path.front());
  track.nodes.push_back(path.front());
  track.values.push_back(branch_values(p, path.front()));

  for (std::size_t seg = 1; seg < path.size(); ++seg) {
    const Complex target = path[seg];
    while (std::abs(target - track.nodes.back()) > 0.0) {
      const Complex pos = track.nodes.back();
      const Complex dir = (target - pos) / std::abs(target - pos);
      double step = std::min({kMaxStep, 0.1 * distance_to(singular, pos), std::abs(target - pos)});
      for (;;) {
        const Complex cand = step >= std::abs(target - pos) ? target : pos + step * dir;
        check(cand);
        const auto vals = branch_values(p, cand);
        const Matching mt = match(track.values.back(), vals);
        const double sep = min_separation(vals);
        if (mt.best > 0.25 * sep && step > 1e-10) {
          step *= 0.5;
          continue;
        }
        if (mt.second - mt.best < 1e-9) {
          throw Error(ErrorKind::MatchingAmbiguity, "branch matching is ambiguous; refine the path");
        }
        std::vector<Complex> ordered(vals.size());
        for (std::size_t j = 0; j < vals.size(); ++j) ordered[j] = vals[mt.perm[j]];
        track.nodes.push_back(cand);
        track.values.push_back(std::move(ordered));
        break;
      }
    }
  }

  const int m = static_cast<int>(track.values.front().size());
  track.permutation.resize(static_cast<std::size_t>(m));
  std::iota(track.permutation.begin(), track.permutation.end(), 0);
  if (path.size() > 1 && std::abs(path.back() - path.front()) < 1e-12) {
    const auto& first = track.values.front();
    const auto& last = track.values.back();
    const Matching mt = match(last, first);
    if (mt.second - mt.best < 1e-9) {
      throw Error(ErrorKind::MatchingAmbiguity, "loop closure matching is ambiguous");
    }
    track.permutation = mt.perm;
  }
  return track;
}

BranchTrack track_branches(const BivariateSeries& p, const std::vector<Complex>& path) {
  return track_branches(p, path, singular_or_empty(trim(p)));
}

std::vector<Complex> circle_path(Complex center, double radius, int segments) {
  std::vector<Complex> path;
  for (int i = 0; i < segments; ++i) {
    path.push_back(center + std::polar(radius, 2.0 * std::numbers::pi * i / segments));
  }
  path.push_back(path.front());
  return path;
}

std::vector<int> monodromy_around(const BivariateSeries& p, Complex a,
                                  const std::vector<SingularPoint>& singular) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& s : singular)
    if (std::abs(s.a - a) > kClusterRadius * std::max(1.0, std::abs(a))) d = std::min(d, std::abs(s.a - a));
  const double radius = std::min(0.25, 0.25 * d);
  return track_branches(p, circle_path(a, radius), singular).permutation;
}

bool is_identity(const std::vector<int>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

bool is_transposition(const std::vector<int>& perm) {
  int moved = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] != static_cast<int>(i)) {
      ++moved;
      if (perm[perm[i]] != static_cast<int>(i)) return false;
    }
  }
  return moved == 2;
}

std::string one_line(const std::vector<int>& perm) {
  std::string s = "[";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(perm[i] + 1);
  }
  return s + "]";
}

namespace {

double radical_inverse(std::uint64_t i, std::uint64_t base) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= double(base);
    r += f * double(i % base);
    i /= base;
  }
  return r;
}

}  // namespace

Complex halton_disk_point(std::uint64_t i) {
  const double u = radical_inverse(i, 2), v = radical_inverse(i, 3);
  return std::polar(std::sqrt(u), 2.0 * std::numbers::pi * v);
}

HopfReport hopf_ratio(const BivariateSeries& p_in, int sample_n, std::uint64_t seed) {
  const BivariateSeries p = trim(p_in);
  const auto S = singular_or_empty(p);
  const int m = p.max_k(), n = p.max_l();
  HopfReport rep;
  rep.min_ratio = std::numeric_limits<double>::infinity();
  int multiplicity_checks = 0;
  for (std::uint64_t i = seed + 1; rep.samples < sample_n; ++i) {
    const Complex z = halton_disk_point(i);
    if (distance_to(S, z) < 1e-2 || std::abs(z) >= 1.0) continue;
    ++rep.samples;
    const double denom = 1.0 - std::norm(z);
    for (Complex h : branch_values(p, z)) {
      if (is_infinite(h)) {
        rep.max_abs_h = std::numeric_limits<double>::infinity();
        continue;
      }
      rep.max_abs_h = std::max(rep.max_abs_h, std::abs(h));
      const double ratio = (1.0 - std::norm(h)) / denom;
      if (ratio < rep.min_ratio) {
        rep.min_ratio = ratio;
        rep.argmin = z;
      }
      if (multiplicity_checks < 64 && std::abs(h) > 1e-12) {
        ++multiplicity_checks;
        // z2 with some branch equal to h: roots of sum_k A_k(z2) h^(m-k).
        std::vector<Complex> q(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
        for (int k = 0; k <= m; ++k) {
          const Complex hk = std::pow(h, m - k);
          for (int l = 0; l <= n; ++l) q[l] += p(k, l) * hk;
        }
        int inside = 0;
        for (Complex r : poly_roots(q))
          if (std::abs(r) < 1.0) ++inside;
        rep.max_multiplicity = std::max(rep.max_multiplicity, inside);
      }
    }
  }
  return rep;
}

ExponentFit branch_exponent(const BivariateSeries& p_in, Complex a, const std::vector<double>& radii) {
  const BivariateSeries p = trim(p_in);
  const Complex dir = std::abs(a) > 0.0 ? -a / std::abs(a) : Complex{1.0, 0.0};
  ExponentFit fit;
  std::vector<double> x, y;
  for (double rho : radii) {
    const Complex z = a + rho * dir;
    const double delta = 1e-3 * rho;
    const auto v0 = branch_values(p, z);
    const auto vp = branch_values(p, z + delta * dir);
    const auto vm = branch_values(p, z - delta * dir);
    const auto mp = match(v0, vp), mm = match(v0, vm);
    double deriv = 0.0;
    for (std::size_t j = 0; j < v0.size(); ++j) {
      const Complex hp = vp[mp.perm[j]], hm = vm[mm.perm[j]];
      if (is_infinite(hp) || is_infinite(hm)) continue;
      deriv = std::max(deriv, std::abs(hp - hm) / (2.0 * delta));
    }
    fit.radii.push_back(rho);
    fit.derivative.push_back(deriv);
    if (deriv > 0.0) {
      x.push_back(std::log(rho));
      y.push_back(std::log(deriv));
    }
  }
  if (x.size() >= 2) {
    const double nn = double(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      mx += x[i];
      my += y[i];
    }
    mx /= nn;
    my /= nn;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sxx += (x[i] - mx) * (x[i] - mx);
      sxy += (x[i] - mx) * (y[i] - my);
      syy += (y[i] - my) * (y[i] - my);
    }
    fit.slope = sxy / sxx;
    double res = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double e = y[i] - my - fit.slope * (x[i] - mx);
      res += e * e;
    }
    fit.r_squared = syy > 0 ? 1.0 - res / syy : 1.0;
  }
  fit.no_blowup = fit.slope >= -0.05;
  return fit;
}

double reciprocal_branch_residual(const BivariateSeries& p_in, const std::vector<Complex>& samples) {
  const BivariateSeries p = trim(p_in);
  double worst = 0.0;
  for (Complex z2 : samples) {
    if (std::abs(z2) == 0.0) continue;
    const Complex w = 1.0 / z2;
    // z2-roots zeta of p(w, .), i.e. zeta = 1 / g_j(w).
    std::vector<Complex> c(static_cast<std::size_t>(p.max_l()) + 1, Complex{0.0, 0.0});
    for (int l = 0; l <= p.max_l(); ++l) c[l] = poly_eval(slice_z2(p, l), w);
    for (Complex zeta : poly_roots(c)) {
      double best = std::numeric_limits<double>::infinity();
      for (Complex h : branch_values(p, zeta))
        if (!is_infinite(h)) best = std::min(best, std::abs(h - z2));
      worst = std::max(worst, best / std::max(1.0, std::abs(z2)));
    }
  }
  return worst;
}

}  // namespace cyclab
