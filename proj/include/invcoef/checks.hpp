#pragma once

// Exact verification checks. Every equality or sharpness claim is compared
// with rational equality; inequality claims with exact rational order.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "invcoef/bounds.hpp"
#include "invcoef/classes.hpp"
#include "invcoef/report.hpp"

namespace invcoef {

/// Bound families that a mutation can corrupt (harness self-test).
enum class Mutation { None, StarlikeInverse, ConvexInverse, NoshiroInverse, MeromInverse, MeromCoeff, Oracle };

std::string_view to_string(Mutation m);
std::optional<Mutation> parse_mutation(std::string_view name);

struct CheckOptions {
  bool unproven = false;  ///< Record rows outside the proven ranges as observations.
  Mutation mutation = Mutation::None;
  int schur_tmax = 10;    ///< Largest t for the negative-power bound.
  int schur_smax = 10;    ///< Largest s for the negative-power bound.
  bool oracle_rows = true;  ///< Run oracle equivalence on each constructed series.
};

/// revert_lagrange(f) == revert_iterative(f), coefficient by coefficient.
/// Mutation::Oracle shifts the top Lagrange coefficient by one.
VerificationReport check_oracle_equivalence(const TaylorSeries& f, const std::string& label,
                                            Mutation mutation = Mutation::None);

/// Reverts (or transforms) the extremal function of `spec` and compares each
/// coefficient with its bound by exact equality, for n up to N.
VerificationReport check_extremal_attainment(const ClassSpec& spec, int N,
                                             const CheckOptions& opts = {});

/// Builds the member generated by `w`, checks its defining relation, the
/// coefficient bound on its p-series, the negative-power bound, and
/// |gamma_n| <= bound for n <= N.
VerificationReport check_member_bounds(const ClassSpec& spec, const SchwarzSpec& w, int N,
                                       const CheckOptions& opts = {});

/// inverse_power_coeff(f, t, n) == [w^n] F^t for 0 < |t| <= tmax, 1 <= n <= nmax.
/// Requires order(f) >= nmax + tmax + 1.
VerificationReport check_schur_relation(const TaylorSeries& f, int tmax, int nmax,
                                        const std::string& label);

/// Builds p_1 = (1 + w)/(1 - w), reads c_1..c_5, and checks that the
/// closed forms for a_2..a_6 and gamma_2..gamma_6 agree with the recursion
/// route f <- p = phi((p_1 - 1)/(p_1 + 1)), phi(z) = (1 - A z)/(1 - B z).
inline constexpr int kClosedFormOrder = 6;

/// p_1 = (1 + w)/(1 - w) to order 6.
TaylorSeries closed_form_carath_series(const SchwarzSpec& w);
/// The f produced by the recursion route of the pipeline below.
TaylorSeries closed_form_recursion_series(const Rational& A, const Rational& B, const SchwarzSpec& w);

VerificationReport check_closed_form_pipeline(const Rational& A, const Rational& B, const SchwarzSpec& w);

/// `samples` seeded draws of (A, B, t, m) in the regime A > B, -1 <= B <= 1.
VerificationReport check_product_sum(std::uint64_t seed, int samples);

/// p, q, r, s > 0 on -1 <= B <= 1 < A <= a_max with the given grid step,
/// plus the A = 1 anchor values on the B grid.
VerificationReport check_closed_form_positivity(const Rational& step, const Rational& a_max);

/// A_n > 0 and equality with the reverted extremal for n <= N.
VerificationReport check_noshiro_recursion(const Rational& B, int N);

/// Bound value with the configured mutation applied (scaled by 999/1000).
Rational apply_mutation(const Rational& bound, Mutation family, const CheckOptions& opts);

/// "kind(A,B)".
std::string spec_label(const ClassSpec& spec);

}  // namespace invcoef
