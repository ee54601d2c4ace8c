#pragma once

// Scalar-generic construction of class members from a Schwarz series.
// Shared by the exact constructors and the numeric search.

#include "invcoef/series.hpp"

namespace invcoef::detail {

template <class T>
Series<T> janowski_p(const T& A, const T& B, const Series<T>& w) {
  const int n = w.order();
  return divide(Series<T>::one(n) + A * w, Series<T>::one(n) + B * w);
}

// exp(int_0^z (p(t) - 1)/t dt) through order m, from p of order >= m + 1.
template <class T>
Series<T> exp_integral_of_quotient(const Series<T>& p, int m) {
  const Series<T> q = p.truncated(m + 1) - Series<T>::one(m + 1);
  return exp(integrate(shift_down(q)).truncated(m));
}

/// z f'/f = p  =>  f = z exp(int (p - 1)/t).  w of order >= n.
template <class T>
Series<T> starlike_member(const T& A, const T& B, const Series<T>& w, int n) {
  const Series<T> p = janowski_p(A, B, w.truncated(n));
  return shift_up(exp_integral_of_quotient(p, n - 1));
}

/// 1 + z f''/f' = p  =>  f' = exp(int (p - 1)/t).
template <class T>
Series<T> convex_member(const T& A, const T& B, const Series<T>& w, int n) {
  const Series<T> p = janowski_p(A, B, w.truncated(n));
  return integrate(exp_integral_of_quotient(p, n - 1));
}

/// f' = (1 + w)/(1 + B w).
template <class T>
Series<T> noshiro_member(const T& B, const Series<T>& w, int n) {
  const T one = ScalarTraits<T>::from_int(1);
  return integrate(janowski_p(one, B, w.truncated(n - 1)));
}

}  // namespace invcoef::detail
