#pragma once

// Univariate polynomial utilities. Coefficient vectors are in ascending
// powers: c[0] + c[1] x + ... + c[d] x^d.

#include <complex>
#include <span>
#include <vector>

namespace cyclab {

using Complex = std::complex<double>;

Complex poly_eval(std::span<const Complex> c, Complex x);
std::vector<Complex> poly_derivative(std::span<const Complex> c);
std::vector<Complex> poly_multiply(std::span<const Complex> a, std::span<const Complex> b);

// Degree after dropping leading coefficients with |c_k| <= rel_tol * max|c|.
// Returns -1 for the zero polynomial.
int effective_degree(std::span<const Complex> c, double rel_tol = 1e-14);

// All finite roots via the eigenvalues of the balanced companion matrix,
// each polished by a few Newton steps. Leading coefficients below the
// relative tolerance are dropped, so a degree drop simply yields fewer roots.
std::vector<Complex> poly_roots(std::span<const Complex> c, double rel_tol = 1e-14);

// Distance on the Riemann sphere; infinite values (either component inf)
// denote the point at infinity.
double chordal_distance(Complex a, Complex b);
bool is_infinite(Complex z);
Complex complex_infinity();

// Monic-normalised gcd by Euclid with relative remainder threshold. Used only
// for structural hints, so the tolerance is loose.
std::vector<Complex> poly_gcd(std::vector<Complex> a, std::vector<Complex> b, double tol = 1e-9);

}  // namespace cyclab
