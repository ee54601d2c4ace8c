#include "invcoef/classes.hpp"

#include <sstream>

#include "invcoef/detail/member_kernel.hpp"
#include "invcoef/errors.hpp"

namespace invcoef {

std::string_view to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::Starlike: return "starlike";
    case ClassKind::Convex: return "convex";
    case ClassKind::Noshiro: return "noshiro";
    case ClassKind::MeromorphicStarlike: return "meromorphic";
  }
  return "?";
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Janowski: return "janowski";
    case Regime::Generalized: return "generalized";
    case Regime::Invalid: return "invalid";
  }
  return "?";
}

std::optional<ClassKind> parse_class_kind(std::string_view name) {
  if (name == "starlike") return ClassKind::Starlike;
  if (name == "convex") return ClassKind::Convex;
  if (name == "noshiro") return ClassKind::Noshiro;
  if (name == "meromorphic") return ClassKind::MeromorphicStarlike;
  return std::nullopt;
}

Regime validate(const ClassSpec& spec) {
  if (spec.A <= spec.B || spec.B < -1 || spec.B > 1) return Regime::Invalid;
  if (spec.kind == ClassKind::Noshiro && spec.A != 1) return Regime::Invalid;
  return spec.A > 1 ? Regime::Generalized : Regime::Janowski;
}

std::optional<Rational> beta_of(const ClassSpec& spec) {
  if (spec.B != 1) return std::nullopt;
  Rational beta = (spec.A + 1) / 2;
  return beta;
}

std::string describe(const SchwarzSpec& w) {
  std::ostringstream os;
  os << "w(j=" << w.j << ",a=" << to_string(w.a) << ",e=" << w.e << ",sigma=" << w.sigma << ")";
  return os.str();
}

TaylorSeries schwarz_series(const SchwarzSpec& w, int n) {
  if (abs(w.a) >= 1) throw ParameterOutOfRange("Blaschke parameter needs |a| < 1, got " + to_string(w.a));
  if (w.j < 1) throw ParameterOutOfRange("monomial valuation j must be >= 1");
  if (w.e != 0 && w.e != 1) throw ParameterOutOfRange("Blaschke exponent e must be 0 or 1");
  if (w.sigma != 1 && w.sigma != -1) throw ParameterOutOfRange("sign must be +1 or -1");
  TaylorSeries factor = TaylorSeries::one(n);
  if (w.e == 1) {
    const TaylorSeries num = TaylorSeries::from_coeffs({w.a, Rational(1)}, n);
    const TaylorSeries den = TaylorSeries::from_coeffs({Rational(1), w.a}, n);
    factor = divide(num, den);
  }
  const TaylorSeries monomial = TaylorSeries::monomial(Rational(w.sigma), w.j, n);
  return monomial * factor;
}

TaylorSeries janowski_p(const Rational& A, const Rational& B, const TaylorSeries& w) {
  return detail::janowski_p(A, B, w);
}

namespace {

void require_valid(const ClassSpec& spec) {
  if (validate(spec) == Regime::Invalid) {
    throw InvalidSpec(std::string(to_string(spec.kind)) + " with A=" + to_string(spec.A) +
                      ", B=" + to_string(spec.B) +
                      " violates A > B, -1 <= B <= 1 (and A = 1 for noshiro)");
  }
}

}  // namespace

ClassFunction member(const ClassSpec& spec, const TaylorSeries& w, int n) {
  require_valid(spec);
  if (sgn(w[0]) != 0) throw NonSchwarz("Schwarz function needs w(0) = 0");
  if (n < 1) throw OrderError("member needs n >= 1");
  if (w.order() < n) throw OrderError("Schwarz series order below requested order");
  switch (spec.kind) {
    case ClassKind::Starlike:
      return detail::starlike_member(spec.A, spec.B, w, n);
    case ClassKind::Convex:
      return detail::convex_member(spec.A, spec.B, w, n);
    case ClassKind::Noshiro:
      return detail::noshiro_member(spec.B, w, n);
    case ClassKind::MeromorphicStarlike: {
      const ClassSpec starlike{ClassKind::Starlike, spec.A, spec.B};
      return to_meromorphic(std::get<TaylorSeries>(member(starlike, w, n)));
    }
  }
  throw InvalidSpec("unknown class kind");
}

TaylorSeries member_series(const ClassSpec& spec, const TaylorSeries& w, int n) {
  if (spec.kind == ClassKind::MeromorphicStarlike) {
    throw InvalidSpec("meromorphic members are Laurent tails, not Taylor series");
  }
  return std::get<TaylorSeries>(member(spec, w, n));
}

ClassFunction extremal(const ClassSpec& spec, int n) {
  require_valid(spec);
  if (n < 1) throw OrderError("extremal needs n >= 1");
  const Rational& A = spec.A;
  const Rational& B = spec.B;
  switch (spec.kind) {
    case ClassKind::Starlike: {
      // z (1 + B z)^{(A-B)/B}, or z e^{A z} when B = 0.
      if (sgn(B) == 0) {
        return shift_up(exp(TaylorSeries::monomial(A, 1, n - 1)));
      }
      const TaylorSeries base = TaylorSeries::from_coeffs({Rational(1), B}, n - 1);
      return shift_up(pow_rational(base, Rational((A - B) / B)));
    }
    case ClassKind::Convex: {
      // f' = (1 - B z)^{(A-B)/B}, or e^{-A z} when B = 0.
      if (sgn(B) == 0) {
        return integrate(exp(TaylorSeries::monomial(Rational(-A), 1, n - 1)));
      }
      const TaylorSeries base = TaylorSeries::from_coeffs({Rational(1), Rational(-B)}, n - 1);
      return integrate(pow_rational(base, Rational((A - B) / B)));
    }
    case ClassKind::Noshiro: {
      // f' = (1 - z)/(1 - B z).
      const TaylorSeries num = TaylorSeries::from_coeffs({Rational(1), Rational(-1)}, n - 1);
      const TaylorSeries den = TaylorSeries::from_coeffs({Rational(1), Rational(-B)}, n - 1);
      return integrate(divide(num, den));
    }
    case ClassKind::MeromorphicStarlike: {
      const ClassSpec starlike{ClassKind::Starlike, A, B};
      return to_meromorphic(std::get<TaylorSeries>(extremal(starlike, n)));
    }
  }
  throw InvalidSpec("unknown class kind");
}

TaylorSeries extremal_series(const ClassSpec& spec, int n) {
  if (spec.kind == ClassKind::MeromorphicStarlike) {
    throw InvalidSpec("meromorphic extremals are Laurent tails, not Taylor series");
  }
  return std::get<TaylorSeries>(extremal(spec, n));
}

SchwarzSpec extremal_schwarz(ClassKind kind) {
  switch (kind) {
    case ClassKind::Starlike:
    case ClassKind::MeromorphicStarlike:
      return SchwarzSpec{1, Rational(0), 0, 1};
    case ClassKind::Convex:
    case ClassKind::Noshiro:
      return SchwarzSpec{1, Rational(0), 0, -1};
  }
  return {};
}

TaylorSeries rotate_half_turn(const TaylorSeries& f) {
  std::vector<Rational> out(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k % 2 == 0) out[k] = -out[k];
  }
  return TaylorSeries(std::move(out));
}

}  // namespace invcoef
