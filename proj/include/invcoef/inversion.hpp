#pragma once

// Inverse-function machinery built on Lagrange inversion, plus the
// transforms between normalized functions on the disc and meromorphic
// functions z + b_0 + b_1/z + ... near infinity.

#include <vector>

#include "invcoef/rational.hpp"
#include "invcoef/series.hpp"

namespace invcoef {

/// g(z) = z + b_0 + b_1/z + ... + b_M/z^M.
///
/// Stored through the substitution u = 1/z as the Taylor series
/// u * g(1/u) = 1 + b_0 u + b_1 u^2 + ..., so all arithmetic runs on
/// TaylorSeries.
class LaurentTail {
 public:
  /// From u*g(1/u); the constant term must be 1.
  explicit LaurentTail(TaylorSeries scaled);

  /// From b_0..b_M.
  static LaurentTail from_coefficients(const std::vector<Rational>& b);

  int order() const { return scaled_.order() - 1; }
  const Rational& b(int n) const { return scaled_[n + 1]; }
  std::vector<Rational> coefficients() const;

  /// u * g(1/u).
  const TaylorSeries& scaled() const { return scaled_; }

  friend bool operator==(const LaurentTail&, const LaurentTail&) = default;

 private:
  TaylorSeries scaled_;
};

/// (f(z)/z)^{-t} through order n, computed as the integer power of the
/// reciprocal of f/z. Requires n <= order(f) - 1.
TaylorSeries negative_power_coeffs(const TaylorSeries& f, long t, int n);

/// F = f^{-1} through order n with gamma_k = (1/k) [z^{k-1}] (f/z)^{-k}.
TaylorSeries revert_lagrange(const TaylorSeries& f, int n);

/// Coefficient of w^n in F(w)^t where F = f^{-1}, computed from the
/// coefficients of negative powers of f:
///   b_n^{(t)} = (t/n) [z^{-t}] f(z)^{-n},  n != 0.
/// Throws ZeroIndex for n == 0 (see log_derivative_coeffs).
Rational inverse_power_coeff(const TaylorSeries& f, long t, long n);

/// Coefficient of w^n in F(w)^t by direct expansion of a normalized F.
/// Independent of the Lagrange route; used as its oracle.
Rational power_coeff(const TaylorSeries& F, long t, long n);

/// z f'(z) / f(z); constant term 1.
TaylorSeries log_derivative_coeffs(const TaylorSeries& f);

/// F / F' = w + delta_2 w^2 + ...
TaylorSeries ratio_F_over_Fprime(const TaylorSeries& F);

/// g(z) = 1 / f(1/z), so that b_n = [z^{n+1}] z/f(z).
LaurentTail to_meromorphic(const TaylorSeries& f);

/// The normalized f with g = 1/f(1/z).
TaylorSeries from_meromorphic(const LaurentTail& g);

/// Coefficients of g^{-1}(w) - w = sum_{n>=0} gt_n w^{-n} for g = 1/f(1/z),
/// by Laurent manipulation of F = revert_iterative(f): gt_n = [u^{n+1}] u/F(u).
std::vector<Rational> meromorphic_inverse_laurent(const TaylorSeries& f, int n);

/// Same coefficients through Lagrange inversion: gt_0 = [z] z f'/f and
/// gt_n = -(1/n) [z^{n+1}] (f/z)^{-n} for n >= 1.
std::vector<Rational> meromorphic_inverse_lagrange(const TaylorSeries& f, int n);

/// gt_0..gt_n; computes both routes and throws RouteMismatch if they differ.
/// Requires order(f) >= n + 2.
std::vector<Rational> meromorphic_inverse(const TaylorSeries& f, int n);

}  // namespace invcoef
