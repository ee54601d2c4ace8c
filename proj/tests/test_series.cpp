#include <random>

#include "doctest.h"
#include "invcoef/errors.hpp"
#include "invcoef/series.hpp"
#include "test_util.hpp"

using namespace invcoef;
using testutil::Q;
using testutil::S;

TEST_SUITE("series") {
  TEST_CASE("rational parsing") {
    CHECK(parse_rational("5/2") == rat(5, 2));
    CHECK(parse_rational("-1/2") == rat(-1, 2));
    CHECK(parse_rational("+3") == 3);
    CHECK(parse_rational("4/6") == rat(2, 3));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK(rat(3, -6) == rat(-1, 2));
  }

  TEST_CASE("add and multiply") {
    CHECK(S({"1", "1"}) + S({"1", "-1"}) == S({"2", "0"}));
    CHECK(S({"1", "1", "0"}) * S({"1", "1", "0"}) == S({"1", "2", "1"}));
    const TaylorSeries f = S({"0", "1", "2", "1"});
    CHECK(f * TaylorSeries::one(3) == f);
    // Orders combine by minimum.
    CHECK((S({"1", "1"}) + S({"1", "1", "1"})).order() == 1);
    CHECK((S({"1", "1"}) * S({"1", "1", "1"})).order() == 1);
  }

  TEST_CASE("divide") {
    const TaylorSeries q = divide(S({"1", "3", "0", "0", "0"}), S({"1", "1", "0", "0", "0"}));
    CHECK(q == S({"1", "2", "-2", "2", "-2"}));
    CHECK(reciprocal(S({"1", "-1", "0", "0"})) == S({"1", "1", "1", "1"}));
    CHECK_THROWS_AS(divide(S({"1", "1"}), S({"0", "1"})), ZeroConstantTerm);
  }

  TEST_CASE("compose") {
    const TaylorSeries z = TaylorSeries::identity(2);
    CHECK(compose(S({"1", "1", "1"}), z) == S({"1", "1", "1"}));
    const TaylorSeries geo = reciprocal(S({"1", "-1", "0", "0"}));
    CHECK(compose(geo, S({"0", "2", "0", "0"})) == S({"1", "2", "4", "8"}));
    CHECK_THROWS_AS(compose(geo, S({"1", "1", "0", "0"})), NonzeroInnerConstant);
    CHECK(compose(S({"1", "1", "1", "1"}), S({"0", "0", "1"})).order() == 2);
  }

  TEST_CASE("differentiate and integrate") {
    CHECK(differentiate(S({"0", "1", "1"})) == S({"1", "2"}));
    CHECK(integrate(S({"1", "-1"})) == S({"0", "1", "-1/2"}));
    CHECK(integrate(S({"1", "-2", "1"})) == S({"0", "1", "-1", "1/3"}));
    CHECK_THROWS_AS(differentiate(S({"1"})), OrderError);
  }

  TEST_CASE("exp and log") {
    CHECK(exp(TaylorSeries::zero(4)) == TaylorSeries::one(4));
    CHECK(exp(S({"0", "3", "0", "0"})) == S({"1", "3", "9/2", "9/2"}));
    CHECK(log(S({"1", "1", "0", "0", "0"})) == S({"0", "1", "-1/2", "1/3", "-1/4"}));
    CHECK_THROWS_AS(exp(S({"1", "1"})), DomainError);
    CHECK_THROWS_AS(log(S({"2", "1"})), DomainError);
  }

  TEST_CASE("powers") {
    CHECK(pow_int(S({"1", "1", "0"}), 2) == S({"1", "2", "1"}));
    CHECK(pow_rational(S({"1", "-1", "0", "0"}), rat(1, 2)) == S({"1", "-1/2", "-1/8", "-1/16"}));
    CHECK(pow_rational(S({"1", "1", "0"}), Rational(0)) == TaylorSeries::one(2));
    CHECK(pow_int(S({"1", "1", "0"}), -1) == S({"1", "-1", "1"}));
    CHECK_THROWS_AS(pow_rational(S({"2", "1"}), rat(1, 2)), DomainError);
  }

  TEST_CASE("revert_iterative") {
    CHECK(revert_iterative(TaylorSeries::identity(6)) == TaylorSeries::identity(6));
    const TaylorSeries F = revert_iterative(S({"0", "1", "2", "1", "0", "0"}));
    CHECK(F == S({"0", "1", "-2", "7", "-30", "143"}));
    const TaylorSeries G = revert_iterative(S({"0", "1", "-1/2", "0", "0"}));
    CHECK(G == S({"0", "1", "1/2", "1/2", "5/8"}));
    CHECK_THROWS_AS(revert_iterative(S({"0", "2", "1"})), NotNormalized);
    CHECK_THROWS_AS(revert_iterative(S({"1", "1", "1"})), NotNormalized);
  }

  // Random rational series with small entries; the seed is fixed.
  std::vector<TaylorSeries> random_series(int count, int order, bool normalized) {
    std::mt19937_64 eng(7);
    std::vector<TaylorSeries> out;
    for (int i = 0; i < count; ++i) {
      std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
      for (auto& x : c) x = rat(static_cast<long>(eng() % 11) - 5, static_cast<long>(eng() % 4) + 1);
      if (normalized) {
        c[0] = 0;
        c[1] = 1;
      }
      out.emplace_back(std::move(c));
    }
    return out;
  }

  TEST_CASE("property: algebraic laws") {
    const auto xs = random_series(6, 8, false);
    for (std::size_t i = 0; i + 2 < xs.size(); ++i) {
      const auto &a = xs[i], &b = xs[i + 1], &c = xs[i + 2];
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }

  TEST_CASE("property: log(exp(a)) = a and power additivity") {
    for (auto a : random_series(5, 8, false)) {
      a = a - TaylorSeries::constant(a[0], a.order());
      CHECK(log(exp(a)) == a);
      const TaylorSeries u = exp(a);
      CHECK(pow_rational(u, rat(1, 3)) * pow_rational(u, rat(2, 3)) == u);
      CHECK(pow_rational(u, Rational(3)) == pow_int(u, 3));
      CHECK(pow_int(u, 2) * pow_int(u, -5) == pow_int(u, -3));
    }
  }

  TEST_CASE("property: compose(f, revert(f)) = identity") {
    for (const auto& f : random_series(5, 10, true)) {
      const TaylorSeries F = revert_iterative(f);
      CHECK(compose(f, F) == TaylorSeries::identity(10));
      CHECK(compose(F, f) == TaylorSeries::identity(10));
    }
  }

  TEST_CASE("property: truncation commutes with arithmetic") {
    const auto xs = random_series(4, 10, true);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      const auto &a = xs[i], &b = xs[i + 1];
      CHECK((a * b).truncated(5) == a.truncated(5) * b.truncated(5));
      CHECK(revert_iterative(a).truncated(5) == revert_iterative(a.truncated(5)));
      CHECK(compose(a, b).truncated(5) == compose(a.truncated(5), b.truncated(5)));
    }
    CHECK_THROWS_AS(xs[0].truncated(12), OrderError);
  }

  TEST_CASE("complex instantiation") {
    using C = std::complex<double>;
    const FloatSeries f({C(0), C(1), C(2), C(1), C(0), C(0)});
    const FloatSeries F = revert_iterative(f);
    CHECK(F[5].real() == doctest::Approx(143.0));
    CHECK(F[4].real() == doctest::Approx(-30.0));
  }
}
