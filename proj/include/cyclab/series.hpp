#pragma once

// Truncated bivariate power series with dense complex coefficients.
//
// coeff(k, l) multiplies z1^k z2^l. The truncation box (K, L) is the largest
// stored power in each variable; a polynomial is a series whose box equals
// its bidegree. All operations take their output box explicitly and never
// grow the truncation implicitly.

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace cyclab {

using Complex = std::complex<double>;

// Largest stored exponent per variable (inclusive).
struct Box {
  int k = 0;
  int l = 0;
  friend bool operator==(const Box&, const Box&) = default;
};

struct Bidegree {
  int m = 0;  // degree in z1
  int n = 0;  // degree in z2
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

enum class Axis { z1, z2 };

// Coefficient magnitude below which trailing slices are treated as zero when
// the bidegree of a numerically computed polynomial is determined.
inline constexpr double kBidegreeThreshold = 1e-12;

class BivariateSeries {
 public:
  BivariateSeries() : BivariateSeries(Box{0, 0}) {}
  explicit BivariateSeries(Box box);
  // rows[k][l] is the coefficient of z1^k z2^l; rows must be rectangular.
  static BivariateSeries from_rows(const std::vector<std::vector<Complex>>& rows);
  static BivariateSeries constant(Complex c);
  static BivariateSeries monomial(int k, int l, Complex c = 1.0);

  Box box() const { return {rows_ - 1, cols_ - 1}; }
  int max_k() const { return rows_ - 1; }
  int max_l() const { return cols_ - 1; }

  // Zero outside the stored box.
  Complex operator()(int k, int l) const {
    if (k < 0 || l < 0 || k >= rows_ || l >= cols_) return 0.0;
    return data_[static_cast<std::size_t>(k) * cols_ + l];
  }
  Complex& at(int k, int l);

  std::span<const Complex> data() const { return data_; }
  std::span<const Complex> row(int k) const {
    return {data_.data() + static_cast<std::size_t>(k) * cols_,
            static_cast<std::size_t>(cols_)};
  }

  bool is_finite() const;
  double max_abs() const;
  bool is_zero() const { return max_abs() == 0.0; }

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<Complex> data_;
};

// Nonzero entries of a series, used to drive sparse convolution loops.
struct Term {
  int k;
  int l;
  Complex c;
};
std::vector<Term> support(const BivariateSeries& f);

BivariateSeries truncate(const BivariateSeries& f, Box box);
BivariateSeries add(const BivariateSeries& f, const BivariateSeries& g);
BivariateSeries subtract(const BivariateSeries& f, const BivariateSeries& g);
BivariateSeries scale(const BivariateSeries& f, Complex c);

// Cauchy product truncated to `box`.
BivariateSeries multiply(const BivariateSeries& f, const BivariateSeries& g, Box box);

// g with multiply(f, g, box) == 1 inside the box. Throws ZeroConstantTerm
// when f(0,0) == 0.
BivariateSeries reciprocal(const BivariateSeries& f, Box box);

// f(r z1, z2) and f(z1, r z2).
BivariateSeries dilate_z1(const BivariateSeries& f, double r);
BivariateSeries dilate_z2(const BivariateSeries& f, double r);

// z1^m z2^n conj(p(1/conj z1, 1/conj z2)) for the exact bidegree (m, n).
BivariateSeries reflect(const BivariateSeries& p);

// F with f(z1, z2) = F(z1 z2), or nullopt when an off-diagonal coefficient is
// nonzero.
std::optional<std::vector<Complex>> diagonal_extract(const BivariateSeries& f);
BivariateSeries embed_diagonal(std::span<const Complex> F);

Complex evaluate(const BivariateSeries& f, Complex z1, Complex z2);

BivariateSeries partial_derivative(const BivariateSeries& f, Axis axis);

// Swap the roles of z1 and z2.
BivariateSeries transpose(const BivariateSeries& f);

// A_j(z2): coefficient of z1^j as a polynomial in z2 (ascending powers).
std::vector<Complex> slice_z1(const BivariateSeries& p, int j);
// B_j(z1): coefficient of z2^j as a polynomial in z1.
std::vector<Complex> slice_z2(const BivariateSeries& p, int j);

Bidegree bidegree(const BivariateSeries& p, double threshold = kBidegreeThreshold);
// Drop trailing slices below the threshold so that box == bidegree.
BivariateSeries trim(const BivariateSeries& p, double threshold = kBidegreeThreshold);

bool depends_on(const BivariateSeries& p, Axis axis, double threshold = kBidegreeThreshold);

// (1 - conj(a) z2)^n p(z1, (z2 - a)/(1 - conj(a) z2)), n the z2-degree of p.
// The slice z2 = 0 of p becomes the slice z2 = a of the result.
BivariateSeries mobius_z2(const BivariateSeries& p, Complex a);

}  // namespace cyclab
