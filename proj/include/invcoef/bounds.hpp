#pragma once

// Closed-form coefficient bounds, evaluated exactly. Empty products are 1.

#include <array>
#include <string>
#include <vector>

#include "invcoef/classes.hpp"
#include "invcoef/rational.hpp"
#include "invcoef/series.hpp"

namespace invcoef {

/// A bound value with a flag telling whether it is a proven estimate at
/// this index (false marks an evaluated-but-unproven extension).
struct Bound {
  Rational value;
  bool proven = true;
};

/// |gamma_n| for inverses of starlike members, n >= 2, -1 <= B <= 1 < A:
/// (1/n) prod_{m=0}^{n-2} (n(A-B) + mB)/(m+1).
Rational bound_starlike_inverse(const Rational& A, const Rational& B, int n);

/// |[z^s] (f/z)^{-t}| <= prod_{m=0}^{s-1} ((A-B)t + mB)/(m+1), valid when
/// t >= (s-1)(1-B)/(A-B). Throws ConditionNotMet below that threshold.
Rational bound_power_schur(const Rational& A, const Rational& B, long t, int s);

/// Whether t clears the threshold of bound_power_schur.
bool power_schur_applies(const Rational& A, const Rational& B, long t, int s);

/// |delta_n| for F/F' of starlike members with A = 2 beta - 1, B = 1.
Rational bound_delta_starlike(const Rational& beta, int n);

/// |b_n| for meromorphic starlike members; proven iff n(1-B) <= A-B.
Bound bound_merom_coeff(const Rational& A, const Rational& B, int n);

/// |gt_n| for inverses of meromorphic starlike members: A-B at n = 0, else
/// (1/n) prod_{m=0}^{n} ((A-B)n + mB)/(m+1).
Rational bound_merom_inverse(const Rational& A, const Rational& B, int n);

/// A_2..A_n of the inverse of int_0^z (1-t)/(1-Bt) dt by the recursion
///   2A_2 = 1-B, 3A_3 = (3-B)A_2,
///   (k+1)A_{k+1} = (1-B+k)A_k + sum_{i=1}^{k-2} (i+1)A_{i+1}A_{k-i}.
/// Index 0 and 1 of the returned vector hold 0 and 1.
std::vector<Rational> noshiro_inverse_coeffs(const Rational& B, int n);

/// |gamma_n| for inverses of convex members with A = 2 beta - 1, B = 1.
Rational bound_convex_beta(const Rational& beta, int n);

/// |delta_n| for F/F' of convex members with A = 2 beta - 1, B = 1.
Rational bound_delta_convex(const Rational& beta, int n);

/// |gamma_n| for inverses of convex members in the generalized regime:
/// (1/n) prod_{m=0}^{n-2} ((A-B) + mA)/(m+1). Proven for n = 2..6 only.
Bound bound_convex_general(const Rational& A, const Rational& B, int n);

struct ProductSumSides {
  Rational lhs;
  Rational rhs;
};

/// Both sides of the product-sum identity
///   m^2 P_m^2 = (A-B)^2 t^2 + sum_{k=1}^{m-1} (((A-B)t + Bk)^2 - k^2) P_k^2,
/// with P_k = prod_{j=0}^{k-1} ((A-B)t + Bj)/(j+1).
ProductSumSides product_sum_sides(const Rational& A, const Rational& B, long t, int m);

/// Explicit polynomial expressions for the first inverse coefficients of
/// convex members in terms of the Caratheodory coefficients c_1..c_5.
struct ConvexClosedForms {
  std::array<Rational, 7> a{};      ///< a[2..6]
  std::array<Rational, 7> gamma{};  ///< gamma[2..6], directly in c
  std::array<Rational, 7> gamma_from_a{};  ///< gamma[2..6] through a_2..a_6
  Rational p, q, r, s;
};

/// Requires -1 <= B <= 1 < A. c[0..4] hold c_1..c_5.
ConvexClosedForms convex_closed_forms(const Rational& A, const Rational& B,
                                    const std::array<Rational, 5>& c);

/// The four auxiliary polynomials alone.
Rational poly_p(const Rational& A, const Rational& B);
Rational poly_q(const Rational& A, const Rational& B);
Rational poly_r(const Rational& A, const Rational& B);
Rational poly_s(const Rational& A, const Rational& B);

/// f = z + sum a_n z^n from the recursion
///   (n-1) n a_n = sum_{k=1}^{n-1} (n-k) b_k a_{n-k},
/// where b holds the coefficients of p - 1 with p = 1 + z f''/f'.
TaylorSeries convex_coeff_recursion(const TaylorSeries& b, int n);

enum class BoundKind { InverseCoeff, DeltaCoeff, MeromCoeff, MeromInverseCoeff, NoshiroInverseCoeff };

std::string_view to_string(BoundKind kind);

struct BoundRow {
  int n = 0;
  Rational bound;
  bool proven = true;
};

struct BoundTable {
  ClassSpec spec;
  BoundKind kind = BoundKind::InverseCoeff;
  std::vector<BoundRow> rows;
};

/// Rows n_lo..n_hi of the bound family selected by (spec.kind, kind).
/// Convex inverse bounds use the beta form when B = 1 (proven for all n)
/// and the generalized form otherwise. Throws RegimeError.
BoundTable make_bound_table(const ClassSpec& spec, BoundKind kind, int n_lo, int n_hi);

/// Generalized convex form for every B, including B = 1.
BoundTable make_convex_general_table(const Rational& A, const Rational& B, int n_lo, int n_hi);

}  // namespace invcoef
