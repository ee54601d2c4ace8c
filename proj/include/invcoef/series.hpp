#pragma once

// Truncated formal power series at the origin.
//
// A Series<T> holds c_0..c_N and stands for c_0 + c_1 z + ... + c_N z^N +
// O(z^{N+1}). N is the truncation order; every operation returns the
// largest order at which its result is determined by its inputs:
//
//   a + b, a - b, a * b, a / b        min(order(a), order(b))
//   outer o inner (valuation v >= 1)  min(order(outer) * v, order(inner))
//   d/dz a                            order(a) - 1
//   integral_0^z a                    order(a) + 1
//   exp, log, a^e, reversion          order(a)
//
// Two instantiations are used: TaylorSeries over exact rationals and
// FloatSeries over std::complex<double> (numeric search only).

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invcoef/errors.hpp"
#include "invcoef/rational.hpp"

namespace invcoef {

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational from_int(long v) { return Rational(v); }
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& q) { return sgn(q) == 0; }
  static bool is_one(const Rational& q) { return q == 1; }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static std::complex<double> from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static std::complex<double> from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
  static bool is_zero(const std::complex<double>& c) { return c == 0.0; }
  static bool is_one(const std::complex<double>& c) { return c == 1.0; }
};

template <class T>
class Series {
 public:
  using scalar_type = T;
  using traits = ScalarTraits<T>;

  /// The zero series of order 0.
  Series() : coeffs_(1, traits::from_int(0)) {}

  /// Coefficients c_0..c_N; the order is size - 1.
  explicit Series(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw OrderError("a series needs at least one coefficient");
  }

  Series(std::initializer_list<T> coeffs) : Series(std::vector<T>(coeffs)) {}

  /// Coefficients padded with zeros (or cut) to the requested order.
  static Series from_coeffs(std::vector<T> coeffs, int order) {
    if (order < 0) throw OrderError("negative order");
    coeffs.resize(static_cast<std::size_t>(order) + 1, traits::from_int(0));
    return Series(std::move(coeffs));
  }

  static Series constant(const T& c, int order) {
    return from_coeffs({c}, order);
  }

  static Series zero(int order) { return constant(traits::from_int(0), order); }
  static Series one(int order) { return constant(traits::from_int(1), order); }

  /// c * z^k truncated at `order`.
  static Series monomial(const T& c, int k, int order) {
    Series s = zero(order);
    if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
    return s;
  }

  /// The identity series z.
  static Series identity(int order) { return monomial(traits::from_int(1), 1, order); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const T& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

  /// Coefficient of z^k, or zero beyond the stored range. Callers that need
  /// a guaranteed-correct value must check k <= order() themselves.
  T coeff(int k) const {
    return (k >= 0 && k <= order()) ? coeffs_[static_cast<std::size_t>(k)] : traits::from_int(0);
  }

  std::span<const T> coeffs() const { return coeffs_; }

  Series truncated(int new_order) const {
    if (new_order > order()) {
      throw OrderError("cannot raise order " + std::to_string(order()) + " to " +
                       std::to_string(new_order));
    }
    if (new_order < 0) throw OrderError("negative order");
    return Series(std::vector<T>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
  }

  /// True when c_0 == 0 and c_1 == 1.
  bool normalized() const {
    return traits::is_zero(coeffs_[0]) && order() >= 1 && traits::is_one(coeffs_[1]);
  }

  /// Index of the first nonzero coefficient, or order()+1 if none is known.
  int valuation() const {
    for (int k = 0; k <= order(); ++k) {
      if (!traits::is_zero((*this)[k])) return k;
    }
    return order() + 1;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

  Series operator-() const {
    std::vector<T> out(coeffs_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = -coeffs_[k];
    return Series(std::move(out));
  }

  friend Series operator+(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<T> out(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out[k] = a[k] + b[k];
    return Series(std::move(out));
  }

  friend Series operator-(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<T> out(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out[k] = a[k] - b[k];
    return Series(std::move(out));
  }

  /// Cauchy product.
  friend Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<T> out(static_cast<std::size_t>(n) + 1, traits::from_int(0));
    for (int i = 0; i <= n; ++i) {
      if (traits::is_zero(a[i])) continue;
      for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    }
    return Series(std::move(out));
  }

  friend Series operator*(const T& c, const Series& a) {
    std::vector<T> out(a.coeffs_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = c * a.coeffs_[k];
    return Series(std::move(out));
  }

 private:
  std::vector<T> coeffs_;
};

using TaylorSeries = Series<Rational>;
using FloatSeries = Series<std::complex<double>>;

/// a / b by the linear recurrence; requires b(0) != 0.
template <class T>
Series<T> divide(const Series<T>& a, const Series<T>& b) {
  using tr = ScalarTraits<T>;
  if (tr::is_zero(b[0])) throw ZeroConstantTerm("divisor has zero constant term");
  const int n = std::min(a.order(), b.order());
  std::vector<T> q(static_cast<std::size_t>(n) + 1);
  const T inv = tr::from_int(1) / b[0];
  for (int k = 0; k <= n; ++k) {
    T acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc * inv;
  }
  return Series<T>(std::move(q));
}

template <class T>
Series<T> reciprocal(const Series<T>& b) {
  return divide(Series<T>::one(b.order()), b);
}

/// a(z) / z; requires a(0) == 0. Order drops by one.
template <class T>
Series<T> shift_down(const Series<T>& a) {
  if (!ScalarTraits<T>::is_zero(a[0])) throw DomainError("shift_down needs a(0) == 0");
  if (a.order() < 1) throw OrderError("shift_down needs order >= 1");
  auto c = a.coeffs();
  return Series<T>(std::vector<T>(c.begin() + 1, c.end()));
}

/// z * a(z). Order rises by one.
template <class T>
Series<T> shift_up(const Series<T>& a) {
  std::vector<T> out;
  out.reserve(a.coeffs().size() + 1);
  out.push_back(ScalarTraits<T>::from_int(0));
  for (const T& c : a.coeffs()) out.push_back(c);
  return Series<T>(std::move(out));
}

/// outer(inner(z)); requires inner(0) == 0. Horner evaluation.
template <class T>
Series<T> compose(const Series<T>& outer, const Series<T>& inner) {
  using tr = ScalarTraits<T>;
  if (!tr::is_zero(inner[0])) throw NonzeroInnerConstant("inner series has nonzero constant term");
  const int v = inner.valuation();
  const long by_outer = static_cast<long>(outer.order()) * v;
  const int n = static_cast<int>(std::min<long>(by_outer, inner.order()));
  const Series<T> in = inner.truncated(n);
  Series<T> acc = Series<T>::constant(outer[outer.order()], n);
  for (int k = outer.order() - 1; k >= 0; --k) {
    acc = acc * in + Series<T>::constant(outer[k], n);
  }
  return acc;
}

template <class T>
Series<T> differentiate(const Series<T>& a) {
  if (a.order() < 1) throw OrderError("derivative of an order-0 series carries no information");
  std::vector<T> out(static_cast<std::size_t>(a.order()));
  for (int k = 1; k <= a.order(); ++k) out[k - 1] = ScalarTraits<T>::from_int(k) * a[k];
  return Series<T>(std::move(out));
}

/// Integral from 0; the constant of integration is always 0.
template <class T>
Series<T> integrate(const Series<T>& a) {
  std::vector<T> out(static_cast<std::size_t>(a.order()) + 2);
  out[0] = ScalarTraits<T>::from_int(0);
  for (int k = 0; k <= a.order(); ++k) out[k + 1] = a[k] / ScalarTraits<T>::from_int(k + 1);
  return Series<T>(std::move(out));
}

/// exp(a) for a(0) == 0: n b_n = sum_{k=1}^{n} k a_k b_{n-k}.
template <class T>
Series<T> exp(const Series<T>& a) {
  using tr = ScalarTraits<T>;
  if (!tr::is_zero(a[0])) throw DomainError("exp needs a(0) == 0");
  const int n = a.order();
  std::vector<T> b(static_cast<std::size_t>(n) + 1, tr::from_int(0));
  b[0] = tr::from_int(1);
  for (int m = 1; m <= n; ++m) {
    T acc = tr::from_int(0);
    for (int k = 1; k <= m; ++k) acc += tr::from_int(k) * a[k] * b[m - k];
    b[m] = acc / tr::from_int(m);
  }
  return Series<T>(std::move(b));
}

/// log(a) for a(0) == 1: n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}.
template <class T>
Series<T> log(const Series<T>& a) {
  using tr = ScalarTraits<T>;
  if (!tr::is_one(a[0])) throw DomainError("log needs a(0) == 1");
  const int n = a.order();
  std::vector<T> b(static_cast<std::size_t>(n) + 1, tr::from_int(0));
  for (int m = 1; m <= n; ++m) {
    T acc = tr::from_int(m) * a[m];
    for (int k = 1; k < m; ++k) acc -= tr::from_int(k) * b[k] * a[m - k];
    b[m] = acc / tr::from_int(m);
  }
  return Series<T>(std::move(b));
}

/// a^e for integer e by binary powering; negative e goes through the
/// reciprocal (requires a(0) != 0).
template <class T>
Series<T> pow_int(const Series<T>& a, long e) {
  Series<T> base = e < 0 ? reciprocal(a) : a;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Series<T> result = Series<T>::one(a.order());
  while (k != 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

/// a^e for a(0) == 1 and rational e: the binomial series
/// sum_k binom(e, k) u^k with c_{k+1} = c_k (e - k) / (k + 1), composed
/// with u = a - 1.
template <class T>
Series<T> pow_rational(const Series<T>& a, const Rational& e) {
  using tr = ScalarTraits<T>;
  if (!tr::is_one(a[0])) throw DomainError("pow_rational needs a(0) == 1");
  const int n = a.order();
  const T ex = tr::from_rational(e);
  std::vector<T> binom(static_cast<std::size_t>(n) + 1);
  binom[0] = tr::from_int(1);
  for (int k = 0; k < n; ++k) {
    binom[k + 1] = binom[k] * (ex - tr::from_int(k)) / tr::from_int(k + 1);
  }
  return compose(Series<T>(std::move(binom)), a - Series<T>::one(n));
}

/// Compositional inverse of a normalized f, solved order by order from
/// f(F(w)) = w. Keeps the table P[j][m] = [w^m] F^j; column m only needs
/// gamma_1..gamma_{m-1}, so each gamma_m is fixed before it is used.
template <class T>
Series<T> revert_iterative(const Series<T>& f) {
  using tr = ScalarTraits<T>;
  if (!f.normalized()) throw NotNormalized("reversion needs f(0) = 0 and f'(0) = 1");
  const int n = f.order();
  const T zero = tr::from_int(0);
  std::vector<T> gamma(static_cast<std::size_t>(n) + 1, zero);
  gamma[1] = tr::from_int(1);
  // powers[j][m] = [w^m] F^j, for 1 <= j <= m <= n.
  std::vector<std::vector<T>> powers(static_cast<std::size_t>(n) + 1,
                                     std::vector<T>(static_cast<std::size_t>(n) + 1, zero));
  if (n >= 1) powers[1][1] = gamma[1];
  for (int m = 2; m <= n; ++m) {
    // [w^m] F^j = sum_{i=1}^{m-j+1} gamma_i [w^{m-i}] F^{j-1}.
    for (int j = 2; j <= m; ++j) {
      T acc = zero;
      for (int i = 1; i <= m - j + 1; ++i) acc += gamma[i] * powers[j - 1][m - i];
      powers[j][m] = acc;
    }
    // [w^m] f(F) = gamma_m + sum_{j>=2} a_j [w^m] F^j = 0.
    T acc = zero;
    for (int j = 2; j <= m; ++j) acc += f[j] * powers[j][m];
    gamma[m] = -acc;
    powers[1][m] = gamma[m];
  }
  return Series<T>(std::move(gamma));
}

/// "[c0, c1, ...]" with exact rational strings; used for report witnesses.
std::string format_prefix(const TaylorSeries& s, int max_terms = 12);

}  // namespace invcoef
