#include "cyclab/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cyclab/errors.hpp"

namespace cyclab {

BivariateSeries::BivariateSeries(Box box) : rows_(box.k + 1), cols_(box.l + 1) {
  if (box.k < 0 || box.l < 0) {
    throw Error(ErrorKind::InvalidArgument, "series box must be nonnegative");
  }
  data_.assign(static_cast<std::size_t>(rows_) * cols_, Complex{0.0, 0.0});
}

BivariateSeries BivariateSeries::from_rows(const std::vector<std::vector<Complex>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorKind::InvalidArgument, "coefficient matrix must be nonempty");
  }
  const int cols = static_cast<int>(rows.front().size());
  BivariateSeries f(Box{static_cast<int>(rows.size()) - 1, cols - 1});
  for (int k = 0; k < f.rows_; ++k) {
    if (static_cast<int>(rows[k].size()) != cols) {
      throw Error(ErrorKind::InvalidArgument, "coefficient matrix must be rectangular");
    }
    std::copy(rows[k].begin(), rows[k].end(),
              f.data_.begin() + static_cast<std::ptrdiff_t>(k) * cols);
  }
  if (!f.is_finite()) {
    throw Error(ErrorKind::InvalidArgument, "coefficients must be finite");
  }
  return f;
}

BivariateSeries BivariateSeries::constant(Complex c) {
  BivariateSeries f(Box{0, 0});
  f.at(0, 0) = c;
  return f;
}

BivariateSeries BivariateSeries::monomial(int k, int l, Complex c) {
  BivariateSeries f(Box{k, l});
  f.at(k, l) = c;
  return f;
}

Complex& BivariateSeries::at(int k, int l) {
  if (k < 0 || l < 0 || k >= rows_ || l >= cols_) {
    throw Error(ErrorKind::InvalidArgument,
                "coefficient index (" + std::to_string(k) + "," + std::to_string(l) +
                    ") outside box");
  }
  return data_[static_cast<std::size_t>(k) * cols_ + l];
}

bool BivariateSeries::is_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](Complex c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

double BivariateSeries::max_abs() const {
  double m = 0.0;
  for (Complex c : data_) m = std::max(m, std::abs(c));
  return m;
}

std::vector<Term> support(const BivariateSeries& f) {
  std::vector<Term> terms;
  for (int k = 0; k <= f.max_k(); ++k) {
    for (int l = 0; l <= f.max_l(); ++l) {
      const Complex c = f(k, l);
      if (c != Complex{0.0, 0.0}) terms.push_back({k, l, c});
    }
  }
  return terms;
}

BivariateSeries truncate(const BivariateSeries& f, Box box) {
  BivariateSeries g(box);
  const int kk = std::min(box.k, f.max_k());
  const int ll = std::min(box.l, f.max_l());
  for (int k = 0; k <= kk; ++k)
    for (int l = 0; l <= ll; ++l) g.at(k, l) = f(k, l);
  return g;
}

namespace {

Box union_box(const BivariateSeries& f, const BivariateSeries& g) {
  return {std::max(f.max_k(), g.max_k()), std::max(f.max_l(), g.max_l())};
}

}  // namespace

BivariateSeries add(const BivariateSeries& f, const BivariateSeries& g) {
  BivariateSeries h(union_box(f, g));
  for (int k = 0; k <= h.max_k(); ++k)
    for (int l = 0; l <= h.max_l(); ++l) h.at(k, l) = f(k, l) + g(k, l);
  return h;
}

BivariateSeries subtract(const BivariateSeries& f, const BivariateSeries& g) {
  return add(f, scale(g, -1.0));
}

BivariateSeries scale(const BivariateSeries& f, Complex c) {
  BivariateSeries h(f.box());
  for (int k = 0; k <= h.max_k(); ++k)
    for (int l = 0; l <= h.max_l(); ++l) h.at(k, l) = c * f(k, l);
  return h;
}

BivariateSeries multiply(const BivariateSeries& f, const BivariateSeries& g, Box box) {
  // Loop over the sparser operand's support; the other is read densely.
  const auto sf = support(f);
  const auto sg = support(g);
  const bool f_sparse = sf.size() <= sg.size();
  const auto& terms = f_sparse ? sf : sg;
  const BivariateSeries& dense = f_sparse ? g : f;

  BivariateSeries h(box);
  for (const Term& t : terms) {
    const int kmax = std::min(box.k - t.k, dense.max_k());
    const int lmax = std::min(box.l - t.l, dense.max_l());
    for (int k = 0; k <= kmax; ++k) {
      const auto drow = dense.row(k);
      for (int l = 0; l <= lmax; ++l) {
        h.at(t.k + k, t.l + l) += t.c * drow[l];
      }
    }
  }
  return h;
}

BivariateSeries reciprocal(const BivariateSeries& f, Box box) {
  const Complex f00 = f(0, 0);
  if (std::abs(f00) == 0.0) {
    throw Error(ErrorKind::ZeroConstantTerm, "reciprocal: f(0,0) == 0");
  }
  std::vector<Term> rest;
  for (const Term& t : support(f)) {
    if ((t.k != 0 || t.l != 0) && t.k <= box.k && t.l <= box.l) rest.push_back(t);
  }

  // g_{kl} = -(1/f00) sum_{(i,j) != 0} f_{ij} g_{k-i,l-j}, solved in order of
  // increasing k + l so every right-hand term is already known.
  BivariateSeries g(box);
  const Complex inv = 1.0 / f00;
  for (int d = 0; d <= box.k + box.l; ++d) {
    const int kmin = std::max(0, d - box.l);
    const int kmax = std::min(d, box.k);
    for (int k = kmin; k <= kmax; ++k) {
      const int l = d - k;
      Complex acc = (k == 0 && l == 0) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      for (const Term& t : rest) {
        if (t.k <= k && t.l <= l) acc -= t.c * g(k - t.k, l - t.l);
      }
      g.at(k, l) = acc * inv;
    }
  }
  return g;
}

BivariateSeries dilate_z1(const BivariateSeries& f, double r) {
  BivariateSeries h(f.box());
  double rk = 1.0;
  for (int k = 0; k <= f.max_k(); ++k) {
    for (int l = 0; l <= f.max_l(); ++l) h.at(k, l) = rk * f(k, l);
    rk *= r;
  }
  return h;
}

BivariateSeries dilate_z2(const BivariateSeries& f, double r) {
  return transpose(dilate_z1(transpose(f), r));
}

BivariateSeries reflect(const BivariateSeries& p) {
  const BivariateSeries q = trim(p);
  const Bidegree d{q.max_k(), q.max_l()};
  BivariateSeries h(q.box());
  for (int k = 0; k <= d.m; ++k)
    for (int l = 0; l <= d.n; ++l) h.at(k, l) = std::conj(q(d.m - k, d.n - l));
  return h;
}

std::optional<std::vector<Complex>> diagonal_extract(const BivariateSeries& f) {
  for (const Term& t : support(f)) {
    if (t.k != t.l) return std::nullopt;
  }
  const int n = std::min(f.max_k(), f.max_l());
  std::vector<Complex> F(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) F[j] = f(j, j);
  return F;
}

BivariateSeries embed_diagonal(std::span<const Complex> F) {
  const int n = F.empty() ? 0 : static_cast<int>(F.size()) - 1;
  BivariateSeries f(Box{n, n});
  for (int j = 0; j <= n && !F.empty(); ++j) f.at(j, j) = F[j];
  return f;
}

Complex evaluate(const BivariateSeries& f, Complex z1, Complex z2) {
  Complex acc{0.0, 0.0};
  for (int k = f.max_k(); k >= 0; --k) {
    const auto r = f.row(k);
    Complex inner{0.0, 0.0};
    for (int l = f.max_l(); l >= 0; --l) inner = inner * z2 + r[l];
    acc = acc * z1 + inner;
  }
  return acc;
}

BivariateSeries partial_derivative(const BivariateSeries& f, Axis axis) {
  if (axis == Axis::z2) return transpose(partial_derivative(transpose(f), Axis::z1));
  BivariateSeries h(Box{std::max(0, f.max_k() - 1), f.max_l()});
  for (int k = 1; k <= f.max_k(); ++k)
    for (int l = 0; l <= f.max_l(); ++l) h.at(k - 1, l) = static_cast<double>(k) * f(k, l);
  return h;
}

BivariateSeries transpose(const BivariateSeries& f) {
  BivariateSeries h(Box{f.max_l(), f.max_k()});
  for (int k = 0; k <= f.max_k(); ++k)
    for (int l = 0; l <= f.max_l(); ++l) h.at(l, k) = f(k, l);
  return h;
}

std::vector<Complex> slice_z1(const BivariateSeries& p, int j) {
  std::vector<Complex> a(static_cast<std::size_t>(p.max_l()) + 1);
  for (int l = 0; l <= p.max_l(); ++l) a[l] = p(j, l);
  return a;
}

std::vector<Complex> slice_z2(const BivariateSeries& p, int j) {
  std::vector<Complex> b(static_cast<std::size_t>(p.max_k()) + 1);
  for (int k = 0; k <= p.max_k(); ++k) b[k] = p(k, j);
  return b;
}

Bidegree bidegree(const BivariateSeries& p, double threshold) {
  Bidegree d{0, 0};
  for (int k = 0; k <= p.max_k(); ++k) {
    for (int l = 0; l <= p.max_l(); ++l) {
      if (std::abs(p(k, l)) > threshold) {
        d.m = std::max(d.m, k);
        d.n = std::max(d.n, l);
      }
    }
  }
  return d;
}

BivariateSeries trim(const BivariateSeries& p, double threshold) {
  const Bidegree d = bidegree(p, threshold);
  return truncate(p, Box{d.m, d.n});
}

bool depends_on(const BivariateSeries& p, Axis axis, double threshold) {
  const Bidegree d = bidegree(p, threshold);
  return axis == Axis::z1 ? d.m > 0 : d.n > 0;
}

namespace {

std::vector<Complex> poly_mul(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> c(a.size() + b.size() - 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

BivariateSeries mobius_z2(const BivariateSeries& p, Complex a) {
  const BivariateSeries q = trim(p);
  const int n = q.max_l();
  const std::vector<Complex> num{-a, 1.0};               // z2 - a
  const std::vector<Complex> den{1.0, -std::conj(a)};    // 1 - conj(a) z2

  // Precompute (z2 - a)^l (1 - conj(a) z2)^(n - l) for l = 0..n.
  std::vector<std::vector<Complex>> basis;
  for (int l = 0; l <= n; ++l) {
    std::vector<Complex> b{1.0};
    for (int i = 0; i < l; ++i) b = poly_mul(b, num);
    for (int i = 0; i < n - l; ++i) b = poly_mul(b, den);
    basis.push_back(std::move(b));
  }

  BivariateSeries h(q.box());
  for (int k = 0; k <= q.max_k(); ++k) {
    for (int l = 0; l <= n; ++l) {
      const Complex c = q(k, l);
      if (c == Complex{0.0, 0.0}) continue;
      for (int j = 0; j <= n; ++j) h.at(k, j) += c * basis[l][j];
    }
  }
  return h;
}

}  // namespace cyclab
