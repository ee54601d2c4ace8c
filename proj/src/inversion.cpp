#include "invcoef/inversion.hpp"

#include <string>

#include "invcoef/errors.hpp"

namespace invcoef {

namespace {

void require_normalized(const TaylorSeries& f, const char* what) {
  if (!f.normalized()) throw NotNormalized(std::string(what) + " needs f(0) = 0 and f'(0) = 1");
}

void require_order(const TaylorSeries& f, int needed, const char* what) {
  if (f.order() < needed) {
    throw OrderError(std::string(what) + " needs order >= " + std::to_string(needed) + ", got " +
                     std::to_string(f.order()));
  }
}

}  // namespace

LaurentTail::LaurentTail(TaylorSeries scaled) : scaled_(std::move(scaled)) {
  if (scaled_[0] != 1) throw DomainError("a Laurent tail has leading coefficient exactly 1");
  if (scaled_.order() < 1) throw OrderError("a Laurent tail needs b_0");
}

LaurentTail LaurentTail::from_coefficients(const std::vector<Rational>& b) {
  std::vector<Rational> c;
  c.reserve(b.size() + 1);
  c.emplace_back(1);
  c.insert(c.end(), b.begin(), b.end());
  return LaurentTail(TaylorSeries(std::move(c)));
}

std::vector<Rational> LaurentTail::coefficients() const {
  auto c = scaled_.coeffs();
  return {c.begin() + 1, c.end()};
}

TaylorSeries negative_power_coeffs(const TaylorSeries& f, long t, int n) {
  require_normalized(f, "negative_power_coeffs");
  require_order(f, n + 1, "negative_power_coeffs");
  const TaylorSeries quotient = shift_down(f.truncated(n + 1));
  return pow_int(reciprocal(quotient), t);
}

TaylorSeries revert_lagrange(const TaylorSeries& f, int n) {
  require_normalized(f, "revert_lagrange");
  require_order(f, n, "revert_lagrange");
  std::vector<Rational> gamma(static_cast<std::size_t>(n) + 1);
  gamma[1] = 1;
  if (n < 2) return TaylorSeries(std::move(gamma));
  // h = z/f; h^k accumulated one factor at a time.
  const TaylorSeries h = reciprocal(shift_down(f.truncated(n)));
  TaylorSeries power = h;
  for (int k = 2; k <= n; ++k) {
    power = power * h;
    gamma[k] = power[k - 1] / k;
  }
  return TaylorSeries(std::move(gamma));
}

Rational inverse_power_coeff(const TaylorSeries& f, long t, long n) {
  require_normalized(f, "inverse_power_coeff");
  if (n == 0) throw ZeroIndex("n = 0 is defined through the logarithmic derivative");
  // f^{-n} = z^{-n} (f/z)^{-n}, so [z^{-t}] f^{-n} = [z^{n-t}] (f/z)^{-n}.
  const long idx = n - t;
  if (idx < 0 || t == 0) return Rational(0);
  require_order(f, static_cast<int>(idx) + 1, "inverse_power_coeff");
  const TaylorSeries quotient = shift_down(f.truncated(static_cast<int>(idx) + 1));
  const TaylorSeries powered = pow_int(quotient, -n);
  return rat(t, n) * powered[static_cast<int>(idx)];
}

Rational power_coeff(const TaylorSeries& F, long t, long n) {
  require_normalized(F, "power_coeff");
  // F^t = w^t (F/w)^t.
  const long idx = n - t;
  if (idx < 0) return Rational(0);
  require_order(F, static_cast<int>(idx) + 1, "power_coeff");
  const TaylorSeries quotient = shift_down(F.truncated(static_cast<int>(idx) + 1));
  return pow_int(quotient, t)[static_cast<int>(idx)];
}

TaylorSeries log_derivative_coeffs(const TaylorSeries& f) {
  require_normalized(f, "log_derivative_coeffs");
  return divide(differentiate(f), shift_down(f));
}

TaylorSeries ratio_F_over_Fprime(const TaylorSeries& F) {
  require_normalized(F, "ratio_F_over_Fprime");
  return shift_up(divide(shift_down(F), differentiate(F)));
}

LaurentTail to_meromorphic(const TaylorSeries& f) {
  require_normalized(f, "to_meromorphic");
  require_order(f, 2, "to_meromorphic");
  return LaurentTail(reciprocal(shift_down(f)));
}

TaylorSeries from_meromorphic(const LaurentTail& g) {
  return shift_up(reciprocal(g.scaled()));
}

std::vector<Rational> meromorphic_inverse_laurent(const TaylorSeries& f, int n) {
  require_normalized(f, "meromorphic_inverse");
  require_order(f, n + 2, "meromorphic_inverse");
  const TaylorSeries F = revert_iterative(f.truncated(n + 2));
  // 1/F(1/w) = w * (u/F(u)) with u = 1/w.
  const TaylorSeries scaled = reciprocal(shift_down(F));
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[k] = scaled[k + 1];
  return out;
}

std::vector<Rational> meromorphic_inverse_lagrange(const TaylorSeries& f, int n) {
  require_normalized(f, "meromorphic_inverse");
  require_order(f, n + 2, "meromorphic_inverse");
  const TaylorSeries g = f.truncated(n + 2);
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  out[0] = log_derivative_coeffs(g)[1];
  const TaylorSeries h = reciprocal(shift_down(g));
  TaylorSeries power = TaylorSeries::one(h.order());
  for (int k = 1; k <= n; ++k) {
    power = power * h;
    Rational v = -power[k + 1] / k;
    out[k] = v;
  }
  return out;
}

std::vector<Rational> meromorphic_inverse(const TaylorSeries& f, int n) {
  auto laurent = meromorphic_inverse_laurent(f, n);
  auto lagrange = meromorphic_inverse_lagrange(f, n);
  for (int k = 0; k <= n; ++k) {
    if (laurent[k] != lagrange[k]) {
      throw RouteMismatch("gt_" + std::to_string(k) + ": Laurent route " + to_string(laurent[k]) +
                          " vs Lagrange route " + to_string(lagrange[k]));
    }
  }
  return laurent;
}

}  // namespace invcoef
