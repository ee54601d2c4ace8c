#pragma once

// Members and extremal functions of the starlike, convex, Noshiro-type and
// meromorphic starlike classes defined by subordination to
// (1 + A z) / (1 + B z).

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "invcoef/inversion.hpp"
#include "invcoef/rational.hpp"
#include "invcoef/series.hpp"

namespace invcoef {

enum class ClassKind { Starlike, Convex, Noshiro, MeromorphicStarlike };

enum class Regime { Janowski, Generalized, Invalid };

std::string_view to_string(ClassKind kind);
std::string_view to_string(Regime regime);
/// Accepts "starlike", "convex", "noshiro", "meromorphic".
std::optional<ClassKind> parse_class_kind(std::string_view name);

struct ClassSpec {
  ClassKind kind = ClassKind::Starlike;
  Rational A;
  Rational B;
};

/// Janowski when -1 <= B < A <= 1, Generalized when -1 <= B <= 1 < A.
/// Invalid if A <= B, B lies outside [-1, 1], or a Noshiro spec has A != 1.
Regime validate(const ClassSpec& spec);

/// (A + 1) / 2 when B == 1, so that A = 2 beta - 1.
std::optional<Rational> beta_of(const ClassSpec& spec);

/// w(z) = sigma * z^j * ((a + z) / (1 + a z))^e.
struct SchwarzSpec {
  int j = 1;
  Rational a = 0;
  int e = 0;
  int sigma = 1;
};

std::string describe(const SchwarzSpec& w);

/// Taylor coefficients of the Schwarz function through order n.
/// Throws ParameterOutOfRange if |a| >= 1, j < 1, e not in {0,1} or
/// sigma not in {+1,-1}.
TaylorSeries schwarz_series(const SchwarzSpec& w, int n);

/// p = (1 + A w) / (1 + B w).
TaylorSeries janowski_p(const Rational& A, const Rational& B, const TaylorSeries& w);

using ClassFunction = std::variant<TaylorSeries, LaurentTail>;

/// The member generated by the Schwarz series w, exact through order n:
///   Starlike             z f'/f = p:        f = z exp(int_0^z (p(t) - 1)/t dt)
///   Convex               1 + z f''/f' = p:  f = int_0^z exp(int_0^s (p(t) - 1)/t dt) ds
///   Noshiro              f' = (1 + w)/(1 + B w)
///   MeromorphicStarlike  1 / f(1/z) for the starlike member
/// Requires order(w) >= n. Throws InvalidSpec or NonSchwarz.
ClassFunction member(const ClassSpec& spec, const TaylorSeries& w, int n);

/// member() for the three Taylor kinds; throws InvalidSpec for meromorphic.
TaylorSeries member_series(const ClassSpec& spec, const TaylorSeries& w, int n);

/// The sharpness function of each class, exact through order n.
ClassFunction extremal(const ClassSpec& spec, int n);
TaylorSeries extremal_series(const ClassSpec& spec, int n);

/// The Schwarz parameters at which member() reproduces extremal().
SchwarzSpec extremal_schwarz(ClassKind kind);

/// -f(-z): a_n -> (-1)^{n-1} a_n.
TaylorSeries rotate_half_turn(const TaylorSeries& f);

}  // namespace invcoef
