#include "invcoef/bounds.hpp"

#include <string>

#include "invcoef/errors.hpp"

namespace invcoef {

namespace {

std::string params(const Rational& A, const Rational& B) {
  return " (got A=" + to_string(A) + ", B=" + to_string(B) + ")";
}

void require_generalized(const Rational& A, const Rational& B) {
  if (!(B >= -1 && B <= 1 && A > 1)) {
    throw RegimeError("requires -1 <= B <= 1 < A" + params(A, B));
  }
}

void require_class_params(const Rational& A, const Rational& B) {
  if (!(A > B && B >= -1 && B <= 1)) throw RegimeError("requires A > B and -1 <= B <= 1" + params(A, B));
}

void require_beta(const Rational& beta) {
  if (beta <= 1) throw RegimeError("requires beta > 1 (got beta=" + to_string(beta) + ")");
}

void require_index(int n, int lo, const char* what) {
  if (n < lo) {
    throw RegimeError(std::string(what) + " requires n >= " + std::to_string(lo) + " (got n=" +
                      std::to_string(n) + ")");
  }
}

}  // namespace

Rational bound_starlike_inverse(const Rational& A, const Rational& B, int n) {
  require_generalized(A, B);
  require_index(n, 2, "starlike inverse bound");
  Rational prod = 1;
  for (int m = 0; m <= n - 2; ++m) prod *= (n * (A - B) + m * B) / (m + 1);
  return prod / n;
}

bool power_schur_applies(const Rational& A, const Rational& B, long t, int s) {
  const Rational threshold = (s - 1) * (1 - B) / (A - B);
  return Rational(t) >= threshold;
}

Rational bound_power_schur(const Rational& A, const Rational& B, long t, int s) {
  require_class_params(A, B);
  require_index(s, 1, "power bound");
  if (!power_schur_applies(A, B, t, s)) {
    throw ConditionNotMet("power bound needs t >= (s-1)(1-B)/(A-B) (got t=" + std::to_string(t) +
                          ", s=" + std::to_string(s) + ")" + params(A, B));
  }
  Rational prod = 1;
  for (int m = 0; m <= s - 1; ++m) prod *= ((A - B) * t + m * B) / (m + 1);
  return prod;
}

Rational bound_delta_starlike(const Rational& beta, int n) {
  require_beta(beta);
  require_index(n, 2, "starlike delta bound");
  Rational value = 2 * (beta - 1);
  for (int j = 2; j <= n - 1; ++j) value *= (2 * (n - 1) * (beta - 1) + j) / j;
  return value;
}

Bound bound_merom_coeff(const Rational& A, const Rational& B, int n) {
  require_generalized(A, B);
  require_index(n, 0, "meromorphic coefficient bound");
  Rational prod = 1;
  for (int m = 0; m <= n; ++m) prod *= ((A - B) + m * B) / (m + 1);
  const bool proven = n * (1 - B) <= A - B;
  return {prod, proven};
}

Rational bound_merom_inverse(const Rational& A, const Rational& B, int n) {
  require_generalized(A, B);
  require_index(n, 0, "meromorphic inverse bound");
  if (n == 0) return A - B;
  Rational prod = 1;
  for (int m = 0; m <= n; ++m) prod *= ((A - B) * n + m * B) / (m + 1);
  return prod / n;
}

std::vector<Rational> noshiro_inverse_coeffs(const Rational& B, int n) {
  if (!(B >= -1 && B < 1)) throw RegimeError("requires -1 <= B < 1 (got B=" + to_string(B) + ")");
  require_index(n, 1, "noshiro inverse coefficients");
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
  a[1] = 1;
  if (n >= 2) a[2] = (1 - B) / 2;
  if (n >= 3) a[3] = (3 - B) * a[2] / 3;
  for (int k = 3; k + 1 <= n; ++k) {
    Rational acc = (1 - B + k) * a[k];
    for (int i = 1; i <= k - 2; ++i) acc += (i + 1) * a[i + 1] * a[k - i];
    a[k + 1] = acc / (k + 1);
  }
  return a;
}

Rational bound_convex_beta(const Rational& beta, int n) {
  require_beta(beta);
  require_index(n, 2, "convex inverse bound");
  Rational prod = 1;
  for (int m = 0; m <= n - 2; ++m) prod *= (2 * (beta - 1) + m * (2 * beta - 1)) / (m + 1);
  return prod / n;
}

Rational bound_delta_convex(const Rational& beta, int n) {
  require_beta(beta);
  require_index(n, 2, "convex delta bound");
  if (n == 2) return beta - 1;
  Rational prod = 2 * (beta - 1) / (n * (n - 1));
  for (int m = 0; m <= n - 3; ++m) prod *= (2 * beta + m * (2 * beta - 1)) / (m + 1);
  return prod;
}

Bound bound_convex_general(const Rational& A, const Rational& B, int n) {
  require_generalized(A, B);
  require_index(n, 2, "convex inverse bound");
  Rational prod = 1;
  for (int m = 0; m <= n - 2; ++m) prod *= ((A - B) + m * A) / (m + 1);
  return {prod / n, n <= 6};
}

ProductSumSides product_sum_sides(const Rational& A, const Rational& B, long t, int m) {
  require_class_params(A, B);
  require_index(m, 1, "product-sum identity");
  const Rational base = (A - B) * t;
  // squares[k] = P_k^2.
  std::vector<Rational> squares(static_cast<std::size_t>(m) + 1);
  squares[0] = 1;
  for (int k = 1; k <= m; ++k) {
    Rational factor = (base + B * (k - 1)) / k;
    squares[k] = squares[k - 1] * factor * factor;
  }
  ProductSumSides out;
  out.lhs = Rational(m) * m * squares[m];
  out.rhs = base * base;
  for (int k = 1; k <= m - 1; ++k) {
    Rational shifted = base + B * k;
    out.rhs += (shifted * shifted - k * k) * squares[k];
  }
  return out;
}

TaylorSeries convex_coeff_recursion(const TaylorSeries& b, int n) {
  if (n < 1) throw OrderError("convex_coeff_recursion needs n >= 1");
  if (n > b.order() + 1) {
    throw OrderError("convex_coeff_recursion: order " + std::to_string(n) + " needs b through " +
                     std::to_string(n - 1));
  }
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
  a[1] = 1;
  for (int k = 2; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k - 1; ++i) acc += (k - i) * b[i] * a[k - i];
    a[k] = acc / ((k - 1) * k);
  }
  return TaylorSeries(std::move(a));
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::InverseCoeff: return "inverse";
    case BoundKind::DeltaCoeff: return "delta";
    case BoundKind::MeromCoeff: return "merom-coeff";
    case BoundKind::MeromInverseCoeff: return "merom-inverse";
    case BoundKind::NoshiroInverseCoeff: return "noshiro-inverse";
  }
  return "?";
}

BoundTable make_bound_table(const ClassSpec& spec, BoundKind kind, int n_lo, int n_hi) {
  BoundTable table{spec, kind, {}};
  const auto beta = beta_of(spec);
  auto need_beta = [&]() -> Rational {
    if (!beta) throw RegimeError("delta bounds require B = 1" + params(spec.A, spec.B));
    return *beta;
  };
  std::vector<Rational> noshiro;
  if (kind == BoundKind::NoshiroInverseCoeff) noshiro = noshiro_inverse_coeffs(spec.B, n_hi);
  for (int n = n_lo; n <= n_hi; ++n) {
    BoundRow row{n, Rational(0), true};
    switch (kind) {
      case BoundKind::InverseCoeff:
        if (spec.kind == ClassKind::Starlike) {
          row.bound = bound_starlike_inverse(spec.A, spec.B, n);
        } else if (spec.kind == ClassKind::Convex) {
          if (beta) {
            require_generalized(spec.A, spec.B);
            row.bound = bound_convex_beta(*beta, n);
          } else {
            const Bound b = bound_convex_general(spec.A, spec.B, n);
            row.bound = b.value;
            row.proven = b.proven;
          }
        } else {
          throw RegimeError("inverse bounds exist for starlike and convex classes only");
        }
        break;
      case BoundKind::DeltaCoeff:
        if (spec.kind == ClassKind::Starlike) {
          row.bound = bound_delta_starlike(need_beta(), n);
        } else if (spec.kind == ClassKind::Convex) {
          row.bound = bound_delta_convex(need_beta(), n);
        } else {
          throw RegimeError("delta bounds exist for starlike and convex classes only");
        }
        break;
      case BoundKind::MeromCoeff: {
        const Bound b = bound_merom_coeff(spec.A, spec.B, n);
        row.bound = b.value;
        row.proven = b.proven;
        break;
      }
      case BoundKind::MeromInverseCoeff:
        row.bound = bound_merom_inverse(spec.A, spec.B, n);
        break;
      case BoundKind::NoshiroInverseCoeff:
        require_index(n, 2, "noshiro inverse coefficients");
        row.bound = noshiro[static_cast<std::size_t>(n)];
        break;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

BoundTable make_convex_general_table(const Rational& A, const Rational& B, int n_lo, int n_hi) {
  BoundTable table{ClassSpec{ClassKind::Convex, A, B}, BoundKind::InverseCoeff, {}};
  for (int n = n_lo; n <= n_hi; ++n) {
    const Bound b = bound_convex_general(A, B, n);
    table.rows.push_back(BoundRow{n, b.value, b.proven});
  }
  return table;
}

}  // namespace invcoef
