#include "cyclab/zerosets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "cyclab/branches.hpp"
#include "cyclab/errors.hpp"
#include "cyclab/parallel.hpp"
#include "cyclab/roots.hpp"

namespace cyclab {

const char* to_string(TorusClass c) {
  switch (c) {
    case TorusClass::empty: return "empty";
    case TorusClass::finite: return "finite";
    case TorusClass::curve: return "curve";
  }
  return "empty";
}

const char* to_string(Face f) {
  switch (f) {
    case Face::torus: return "torus";
    case Face::z1_circle: return "z1_circle";
    case Face::z2_circle: return "z2_circle";
  }
  return "torus";
}

const char* to_string(Irreducibility v) {
  switch (v) {
    case Irreducibility::irreducible: return "irreducible";
    case Irreducibility::reducible: return "reducible";
    case Irreducibility::unknown: return "unknown";
  }
  return "unknown";
}

ReflectionTest reflection_test(const BivariateSeries& p) {
  const BivariateSeries q = trim(p);
  if (q.is_zero()) throw Error(ErrorKind::InvalidArgument, "reflection_test: p is zero");
  const BivariateSeries r = reflect(q);
  int bk = 0, bl = 0;
  for (int k = 0; k <= q.max_k(); ++k)
    for (int l = 0; l <= q.max_l(); ++l)
      if (std::abs(q(k, l)) > std::abs(q(bk, bl))) {
        bk = k;
        bl = l;
      }
  ReflectionTest t;
  t.lambda = r(bk, bl) / q(bk, bl);
  double dev = 0.0;
  for (int k = 0; k <= q.max_k(); ++k)
    for (int l = 0; l <= q.max_l(); ++l) dev = std::max(dev, std::abs(r(k, l) - t.lambda * q(k, l)));
  t.deviation = dev / q.max_abs();
  t.proportional = t.deviation < 1e-10;
  return t;
}

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

double angle_distance(const TorusZero& a, const TorusZero& b) {
  return std::max(std::abs(wrap_angle(a.s - b.s)), std::abs(wrap_angle(a.t - b.t)));
}

void sort_points(std::vector<TorusZero>& pts) {
  std::sort(pts.begin(), pts.end(), [](const TorusZero& a, const TorusZero& b) {
    return a.s != b.s ? a.s < b.s : a.t < b.t;
  });
}

// Damped Gauss-Newton on (Re p, Im p) in angle coordinates.
TorusZero refine(const BivariateSeries& p, const BivariateSeries& d1, const BivariateSeries& d2,
                 double s, double t) {
  const double stop = 1e-14 * p.max_abs();
  double mu = 1e-8;
  auto eval = [&](double a, double b) { return evaluate(p, std::polar(1.0, a), std::polar(1.0, b)); };
  Complex f = eval(s, t);
  for (int it = 0; it < 50 && std::abs(f) >= stop; ++it) {
    const Complex z1 = std::polar(1.0, s), z2 = std::polar(1.0, t);
    const Complex ps = Complex{0.0, 1.0} * z1 * evaluate(d1, z1, z2);
    const Complex pt = Complex{0.0, 1.0} * z2 * evaluate(d2, z1, z2);
    // Normal equations of the 2x2 real Jacobian [[Re ps, Re pt], [Im ps, Im pt]].
    const double a11 = std::norm(ps), a22 = std::norm(pt);
    const double a12 = ps.real() * pt.real() + ps.imag() * pt.imag();
    const double g1 = ps.real() * f.real() + ps.imag() * f.imag();
    const double g2 = pt.real() * f.real() + pt.imag() * f.imag();
    bool improved = false;
    double step_norm = 0.0;
    for (int tries = 0; tries < 30; ++tries) {
      const double damp = mu * std::max(a11 + a22, 1e-300);
      const double b11 = a11 + damp, b22 = a22 + damp;
      const double det = b11 * b22 - a12 * a12;
      if (!(det > 0.0)) {
        mu *= 10.0;
        continue;
      }
      const double ds = -(b22 * g1 - a12 * g2) / det;
      const double dt = -(b11 * g2 - a12 * g1) / det;
      const Complex fn = eval(s + ds, t + dt);
      if (std::abs(fn) < std::abs(f)) {
        s += ds;
        t += dt;
        f = fn;
        mu = std::max(mu * 0.1, 1e-15);
        step_norm = std::hypot(ds, dt);
        improved = true;
        break;
      }
      mu *= 10.0;
    }
    if (!improved || step_norm < 1e-13) break;
  }
  return {wrap_angle(s), wrap_angle(t), std::abs(f)};
}

TorusZeroSet one_variable_zeros(const std::vector<Complex>& c, Face face) {
  TorusZeroSet out;
  out.face = face;
  for (Complex r : poly_roots(c)) {
    if (std::abs(std::abs(r) - 1.0) > 1e-8) continue;
    const double s = wrap_angle(std::arg(r));
    out.points.push_back({s, 0.0, std::abs(poly_eval(c, std::polar(1.0, s)))});
  }
  sort_points(out.points);
  out.cls = out.points.empty() ? TorusClass::empty : TorusClass::finite;
  out.note = std::string("p depends on ") + (face == Face::z1_circle ? "z1" : "z2") +
             " only; zeros listed on that unit circle";
  return out;
}

}  // namespace

TorusZeroSet torus_zero_search(const BivariateSeries& p_in, int grid_n) {
  const BivariateSeries p = trim(p_in);
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "torus_zero_search: p is zero");
  if (grid_n < 8) throw Error(ErrorKind::InvalidArgument, "grid_n must be at least 8");
  const bool dep1 = depends_on(p, Axis::z1), dep2 = depends_on(p, Axis::z2);
  if (!dep1 && !dep2) return {};
  if (!dep2) return one_variable_zeros(slice_z2(p, 0), Face::z1_circle);
  if (!dep1) return one_variable_zeros(slice_z1(p, 0), Face::z2_circle);

  const ReflectionTest rt = reflection_test(p);
  TorusZeroSet out;
  if (rt.proportional) {
    out.cls = TorusClass::curve;
    out.lambda = rt.lambda;
    for (int j = 0; j < grid_n; ++j) {
      const double t = wrap_angle(-kPi + 2.0 * kPi * (j + 0.5) / grid_n);
      const Complex z2 = std::polar(1.0, t);
      std::vector<Complex> c(static_cast<std::size_t>(p.max_k()) + 1);
      for (int k = 0; k <= p.max_k(); ++k) c[k] = poly_eval(p.row(k), z2);
      for (Complex r : poly_roots(c)) {
        if (std::abs(std::abs(r) - 1.0) > 1e-6) continue;
        const double s = wrap_angle(std::arg(r));
        out.points.push_back({s, t, std::abs(evaluate(p, std::polar(1.0, s), z2))});
      }
    }
    sort_points(out.points);
    out.note = "reflection proportional to p";
    return out;
  }

  const BivariateSeries d1 = partial_derivative(p, Axis::z1);
  const BivariateSeries d2 = partial_derivative(p, Axis::z2);
  const double h = 2.0 * kPi / grid_n;
  double lipschitz = 0.0;
  for (const Term& term : support(p)) lipschitz += std::abs(term.c) * (term.k + term.l);
  const double threshold = lipschitz * h;

  const auto N = static_cast<std::size_t>(grid_n);
  std::vector<double> grid(N * N);
  parallel_for(N, [&](std::size_t i) {
    const Complex z1 = std::polar(1.0, h * double(i));
    for (std::size_t j = 0; j < N; ++j) grid[i * N + j] = std::abs(evaluate(p, z1, std::polar(1.0, h * double(j))));
  });

  std::vector<std::pair<std::size_t, std::size_t>> minima;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      const double v = grid[i * N + j];
      if (v > threshold) continue;
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const std::size_t ii = (i + N + di) % N, jj = (j + N + dj) % N;
          if (grid[ii * N + jj] < v) {
            is_min = false;
            break;
          }
        }
      }
      if (is_min) minima.emplace_back(i, j);
    }
  }

  std::vector<TorusZero> refined(minima.size());
  parallel_for(minima.size(), [&](std::size_t c) {
    refined[c] = refine(p, d1, d2, h * double(minima[c].first), h * double(minima[c].second));
  });

  std::vector<TorusZero> accepted;
  for (const TorusZero& z : refined) {
    if (z.residual >= 1e-8) continue;
    bool merged = false;
    for (TorusZero& a : accepted) {
      if (angle_distance(a, z) < 1e-6) {
        if (z.residual < a.residual) a = z;
        merged = true;
        break;
      }
    }
    if (!merged) accepted.push_back(z);
  }
  for (std::size_t i = 0; i < accepted.size(); ++i)
    for (std::size_t j = i + 1; j < accepted.size(); ++j)
      if (angle_distance(accepted[i], accepted[j]) < 1e-4) out.resolution_warning = true;
  if (out.resolution_warning) out.note = "refined zeros cluster near the merge radius; increase grid_n";
  if (accepted.size() > static_cast<std::size_t>(std::max(grid_n / 4, 8))) {
    out.resolution_warning = true;
    out.note = "zeros form a curve although the reflection is not proportional; likely reducible";
  }

  sort_points(accepted);
  out.points = std::move(accepted);
  out.cls = out.points.empty() ? TorusClass::empty : TorusClass::finite;
  return out;
}

namespace {

struct SweepResult {
  double min_mod = std::numeric_limits<double>::infinity();
  std::optional<std::array<Complex, 2>> witness;
  bool side_violation = false;
  int degenerate = 0;
};

// z1-roots of p(., z2) over the closed-disk grid of z2.
StabilityReport sweep(const BivariateSeries& p, int radii, int angles) {
  const int m = p.max_k();
  std::vector<SweepResult> rows(static_cast<std::size_t>(radii));
  parallel_for(rows.size(), [&](std::size_t i) {
    const double r = double(i) / double(radii - 1);
    const int na = i == 0 ? 1 : angles;
    SweepResult& res = rows[i];
    for (int j = 0; j < na; ++j) {
      const Complex z2 = std::polar(r, 2.0 * kPi * j / angles);
      std::vector<Complex> c(static_cast<std::size_t>(m) + 1);
      double cmax = 0.0;
      for (int k = 0; k <= m; ++k) {
        c[k] = poly_eval(p.row(k), z2);
        cmax = std::max(cmax, std::abs(c[k]));
      }
      if (std::abs(c[m]) <= 1e-12 * cmax) ++res.degenerate;
      for (Complex root : poly_roots(c)) {
        const double mod = std::abs(root);
        res.min_mod = std::min(res.min_mod, mod);
        if (mod < 1.0 - 1e-9) {
          if (i + 1 < static_cast<std::size_t>(radii)) {
            if (!res.witness) res.witness = std::array<Complex, 2>{root, z2};
          } else {
            res.side_violation = true;
          }
        }
      }
    }
  });
  StabilityReport rep;
  rep.min_root_modulus = std::numeric_limits<double>::infinity();
  for (const auto& res : rows) {
    rep.per_radius_min.push_back(res.min_mod);
    rep.min_root_modulus = std::min(rep.min_root_modulus, res.min_mod);
    if (res.witness && !rep.witness) rep.witness = res.witness;
    if (res.side_violation) rep.sides_zero_free = false;
    rep.degenerate_slices += res.degenerate;
  }
  rep.zero_free = !rep.witness.has_value();
  return rep;
}

// No zeros with z1 on the circle and z2 in the open disk.
bool circle_face_clear(const BivariateSeries& p, int angles) {
  const BivariateSeries t = transpose(p);
  if (t.max_k() < 1) return true;
  for (int j = 0; j < angles; ++j) {
    const Complex z1 = std::polar(1.0, 2.0 * kPi * j / angles);
    std::vector<Complex> c(static_cast<std::size_t>(t.max_k()) + 1);
    for (int k = 0; k <= t.max_k(); ++k) c[k] = poly_eval(t.row(k), z1);
    for (Complex root : poly_roots(c))
      if (std::abs(root) < 1.0 - 1e-9) return false;
  }
  return true;
}

}  // namespace

StabilityReport stability_check(const BivariateSeries& p_in, int radii, int angles) {
  const BivariateSeries p = trim(p_in);
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "stability_check: p is zero");
  if (radii < 2 || angles < 1) throw Error(ErrorKind::InvalidArgument, "stability grid too small");
  if (!depends_on(p, Axis::z1) && !depends_on(p, Axis::z2)) {
    StabilityReport rep;
    rep.min_root_modulus = std::numeric_limits<double>::infinity();
    return rep;
  }
  const bool swap = !depends_on(p, Axis::z1);
  const BivariateSeries q = swap ? transpose(p) : p;
  StabilityReport rep = sweep(q, radii, angles);
  if (!circle_face_clear(q, angles)) rep.sides_zero_free = false;
  if (swap) {
    rep.sweep_axis = Axis::z1;
    if (rep.witness) rep.witness = std::array<Complex, 2>{(*rep.witness)[1], (*rep.witness)[0]};
  }
  return rep;
}

namespace {

BivariateSeries hint_from(std::vector<Complex> g, Axis axis) {
  // Normalise to constant term 1 when possible, otherwise monic.
  if (std::abs(g[0]) > 1e-12) {
    const Complex c = g[0];
    for (Complex& x : g) x /= c;
  }
  const int d = static_cast<int>(g.size()) - 1;
  BivariateSeries h(axis == Axis::z1 ? Box{d, 0} : Box{0, d});
  for (int i = 0; i <= d; ++i) {
    const Complex v = std::abs(g[i]) < 1e-13 ? Complex{0.0, 0.0} : g[i];
    if (axis == Axis::z1) h.at(i, 0) = v; else h.at(0, i) = v;
  }
  return h;
}

std::vector<Complex> content(const BivariateSeries& p, Axis axis) {
  const int count = axis == Axis::z1 ? p.max_l() : p.max_k();
  std::vector<Complex> g;
  for (int j = 0; j <= count; ++j) {
    auto s = axis == Axis::z1 ? slice_z2(p, j) : slice_z1(p, j);
    if (std::all_of(s.begin(), s.end(), [](Complex c) { return c == Complex{0.0, 0.0}; })) continue;
    g = g.empty() ? s : poly_gcd(g, s);
    if (g.size() == 1) break;
  }
  return g;
}

}  // namespace

IrreducibilityReport heuristic_irreducibility(const BivariateSeries& p_in) {
  const BivariateSeries p = trim(p_in);
  IrreducibilityReport rep;
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "heuristic_irreducibility: p is zero");
  const bool dep1 = depends_on(p, Axis::z1), dep2 = depends_on(p, Axis::z2);
  if (!dep1 && !dep2) {
    rep.reason = "constant polynomial";
    return rep;
  }
  if (!dep1 || !dep2) {
    const Axis ax = dep1 ? Axis::z1 : Axis::z2;
    const auto c = dep1 ? slice_z2(p, 0) : slice_z1(p, 0);
    if (c.size() == 2) {
      rep.verdict = Irreducibility::irreducible;
      rep.reason = "one-variable polynomial of degree 1";
      return rep;
    }
    const Complex r = poly_roots(c).front();
    rep.verdict = Irreducibility::reducible;
    rep.factor_hint = hint_from({-r, 1.0}, ax);
    rep.reason = "one-variable polynomial of degree > 1 splits into linear factors";
    return rep;
  }

  for (Axis ax : {Axis::z1, Axis::z2}) {
    const auto g = content(p, ax);
    if (g.size() > 1) {
      rep.verdict = Irreducibility::reducible;
      rep.factor_hint = hint_from(g, ax);
      rep.reason = std::string("coefficient slices share a factor in ") + (ax == Axis::z1 ? "z1" : "z2");
      return rep;
    }
  }

  if (p.max_k() == 1 || p.max_l() == 1) {
    rep.verdict = Irreducibility::irreducible;
    rep.reason = "degree 1 in one variable and no one-variable factor";
    return rep;
  }

  try {
    const auto S = singular_set(p);
    const int m = p.max_k();
    std::vector<int> parent(static_cast<std::size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& s : S) {
      const auto perm = monodromy_around(p, s.a, S);
      for (int j = 0; j < m; ++j) parent[find(j)] = find(perm[j]);
    }
    int orbits = 0;
    for (int j = 0; j < m; ++j)
      if (find(j) == j) ++orbits;
    if (orbits == 1) {
      rep.verdict = Irreducibility::irreducible;
      rep.reason = "monodromy acts transitively on the z1-sheets";
    } else {
      rep.verdict = Irreducibility::reducible;
      rep.reason = "monodromy has " + std::to_string(orbits) + " orbits on the z1-sheets";
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegenerateInput) {
      rep.verdict = Irreducibility::reducible;
      rep.reason = e.what();
    } else {
      rep.verdict = Irreducibility::unknown;
      rep.reason = std::string("monodromy inconclusive: ") + e.what();
    }
  }
  return rep;
}

}  // namespace cyclab
