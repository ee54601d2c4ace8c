#include "doctest.h"
#include "invcoef/classes.hpp"
#include "invcoef/errors.hpp"
#include "invcoef/inversion.hpp"
#include "test_util.hpp"

using namespace invcoef;
using testutil::Q;
using testutil::S;

TEST_SUITE("inversion") {
  TEST_CASE("negative_power_coeffs") {
    const TaylorSeries z = TaylorSeries::identity(6);
    CHECK(negative_power_coeffs(z, 4, 5) == TaylorSeries::one(5));
    const TaylorSeries f = S({"0", "1", "2", "1", "0", "0", "0"});
    CHECK(negative_power_coeffs(f, 3, 4)[1] == -6);
    const TaylorSeries g = divide(TaylorSeries::identity(6), S({"1", "-1", "0", "0", "0", "0", "0"}));
    CHECK(negative_power_coeffs(g, 3, 4) == S({"1", "-3", "3", "-1", "0"}));
  }

  TEST_CASE("revert_lagrange") {
    CHECK(revert_lagrange(TaylorSeries::identity(5), 5) == TaylorSeries::identity(5));
    CHECK(revert_lagrange(S({"0", "1", "2", "1", "0", "0"}), 5)[3] == 7);
    const TaylorSeries f4 = S({"0", "1", "-1", "1/3", "0", "0"});
    CHECK(revert_lagrange(f4, 5)[4] == rat(10, 3));
  }

  TEST_CASE("inverse_power_coeff (Schur relation)") {
    const TaylorSeries g = divide(TaylorSeries::identity(8), S({"1", "-1", "0", "0", "0", "0", "0", "0", "0"}));
    CHECK(inverse_power_coeff(g, 2, 3) == -2);
    CHECK(power_coeff(revert_iterative(g), 2, 3) == -2);
    const TaylorSeries z = TaylorSeries::identity(10);
    for (long t = 1; t <= 4; ++t) {
      for (long n = 1; n <= 6; ++n) CHECK(inverse_power_coeff(z, t, n) == (n == t ? 1 : 0));
    }
    const TaylorSeries f = S({"0", "1", "2", "1", "0", "0", "0", "0"});
    const TaylorSeries F = revert_iterative(f);
    for (long n = 2; n <= 5; ++n) CHECK(inverse_power_coeff(f, 1, n) == F[static_cast<int>(n)]);
    CHECK_THROWS_AS(inverse_power_coeff(f, 1, 0), ZeroIndex);
  }

  TEST_CASE("log_derivative_coeffs") {
    CHECK(log_derivative_coeffs(TaylorSeries::identity(4)) == TaylorSeries::one(3));
    CHECK(log_derivative_coeffs(S({"0", "1", "2", "1", "0", "0"})) == S({"1", "2", "-2", "2", "-2"}));
    const TaylorSeries f = extremal_series(ClassSpec{ClassKind::Starlike, 3, 0}, 6);
    CHECK(log_derivative_coeffs(f) == S({"1", "3", "0", "0", "0", "0"}));
  }

  TEST_CASE("ratio_F_over_Fprime") {
    CHECK(ratio_F_over_Fprime(TaylorSeries::identity(5)) == TaylorSeries::identity(5));
    const TaylorSeries F1 = revert_iterative(S({"0", "1", "-1", "1/3", "0", "0"}));
    const TaylorSeries r1 = ratio_F_over_Fprime(F1);
    CHECK(r1[2] == -1);
    CHECK(r1[3] == rat(-4, 3));
    const TaylorSeries F2 = revert_iterative(S({"0", "1", "-2", "1", "0", "0"}));
    const TaylorSeries r2 = ratio_F_over_Fprime(F2);
    CHECK(r2[2] == -2);
    CHECK(r2[3] == -6);
  }

  TEST_CASE("to_meromorphic") {
    const LaurentTail id = to_meromorphic(TaylorSeries::identity(6));
    for (int n = 0; n <= id.order(); ++n) CHECK(id.b(n) == 0);
    const LaurentTail g = to_meromorphic(S({"0", "1", "2", "1", "0", "0", "0", "0"}));
    for (int n = 0; n <= g.order(); ++n) CHECK(g.b(n) == Rational((n % 2 == 0 ? -1 : 1) * (n + 2)));
    const LaurentTail h = to_meromorphic(extremal_series(ClassSpec{ClassKind::Starlike, 3, 0}, 8));
    Rational fact = 1, pw = -3;
    for (int n = 0; n <= h.order(); ++n) {
      fact *= n + 1;
      CHECK(h.b(n) == pw / fact);
      pw *= -3;
    }
  }

  TEST_CASE("meromorphic inverse") {
    const auto id = meromorphic_inverse(TaylorSeries::identity(8), 5);
    for (const auto& c : id) CHECK(c == 0);
    const TaylorSeries f = S({"0", "1", "2", "1", "0", "0", "0", "0"});
    const auto gt = meromorphic_inverse(f, 2);
    CHECK(gt[0] == 2);
    CHECK(gt[1] == -3);
    CHECK(gt[2] == 10);
    CHECK(meromorphic_inverse_laurent(f, 5) == meromorphic_inverse_lagrange(f, 5));
    CHECK_THROWS_AS(meromorphic_inverse(f, 6), OrderError);
  }

  TEST_CASE("meromorphic round trip") {
    for (const auto& f : {S({"0", "1", "2", "1", "0", "0"}), S({"0", "1", "-1/3", "5/7", "2", "-1"})}) {
      CHECK(from_meromorphic(to_meromorphic(f)) == f);
    }
  }

  TEST_CASE("oracle: reversions, meromorphic coefficients, F/F'") {
    const auto& o = testutil::oracle();
    for (const auto& e : o["extremals"]) {
      const TaylorSeries f = testutil::S(e["f"]), F = testutil::S(e["F"]);
      CHECK(revert_iterative(f) == F);
      CHECK(revert_lagrange(f, f.order()) == F);
    }
    for (const auto& m : o["merom"]) {
      const ClassSpec spec{ClassKind::Starlike, Q(m["A"]), Q(m["B"])};
      const TaylorSeries f = extremal_series(spec, 12);
      const LaurentTail g = to_meromorphic(f);
      const auto gt = meromorphic_inverse(f, 8);
      for (int n = 0; n <= 8; ++n) {
        CHECK(g.b(n) == Q(m["b"][n]));
        CHECK(gt[static_cast<std::size_t>(n)] == Q(m["gt"][n]));
      }
    }
    for (const auto& r : o["ratios"]) {
      const TaylorSeries F = testutil::S(r["F"]);
      const TaylorSeries d = ratio_F_over_Fprime(F);
      const TaylorSeries expected = testutil::S(r["ratio"]);
      CHECK(testutil::same_prefix(d, expected, d.order()));
    }
  }
}
