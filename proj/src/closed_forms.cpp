// Explicit polynomials for a_2..a_6 and gamma_2..gamma_6 of convex members
// in terms of Caratheodory coefficients. Transcribed once; the values
// p(1,B) = 12(1-B)^2, q(1,B) = 128(1-B)^2, r(1,B) = 12(1-B)^2 and
// s(1,B) = 20(1-B)^3 lock the transcription in the unit tests.

#include <string>

#include "invcoef/bounds.hpp"
#include "invcoef/errors.hpp"

namespace invcoef {

Rational poly_p(const Rational& A, const Rational& B) {
  return 4 * (23 * A * A - 17 * A * B - 29 * A + 3 * B * B + 11 * B + 9);
}

Rational poly_q(const Rational& A, const Rational& B) {
  return 8 * (101 * A * A - 81 * A * B - 121 * A + 16 * B * B + 49 * B + 36);
}

Rational poly_r(const Rational& A, const Rational& B) {
  return 4 * (127 * A * A - 58 * A * B - 196 * A + 3 * B * B + 52 * B + 72);
}

Rational poly_s(const Rational& A, const Rational& B) {
  const Rational A2 = A * A;
  const Rational B2 = B * B;
  return 4 * (163 * A2 * A - 160 * A2 * B - 329 * A2 + 50 * A * B2 + 220 * A * B + 219 * A -
              5 * B2 * B - 35 * B2 - 75 * B - 48);
}

ConvexClosedForms convex_closed_forms(const Rational& A, const Rational& B,
                                    const std::array<Rational, 5>& c) {
  if (!(B >= -1 && B <= 1 && A > 1)) {
    throw RegimeError("requires -1 <= B <= 1 < A (got A=" + to_string(A) + ", B=" + to_string(B) + ")");
  }
  const Rational& c1 = c[0];
  const Rational& c2 = c[1];
  const Rational& c3 = c[2];
  const Rational& c4 = c[3];
  const Rational& c5 = c[4];
  const Rational c1_2 = c1 * c1;
  const Rational c1_3 = c1_2 * c1;
  const Rational c1_4 = c1_3 * c1;
  const Rational c1_5 = c1_4 * c1;
  const Rational AB = A - B;
  const Rational A2 = A * A;
  const Rational B2 = B * B;

  ConvexClosedForms out;
  auto& a = out.a;
  a[2] = -AB * c1 / 4;
  a[3] = AB * ((A - 2 * B + 1) * c1_2 - 2 * c2) / 24;
  a[4] = -AB *
         ((A - 2 * B + 1) * (A - 3 * B + 2) * c1_3 - 2 * (3 * A - 7 * B + 4) * c1 * c2 + 8 * c3) /
         192;
  a[5] = AB *
         (-4 * (3 * A2 - 17 * A * B + 11 * A + 23 * B2 - 29 * B + 9) * c1_2 * c2 +
          (A - 2 * B + 1) * (A - 3 * B + 2) * (A - 4 * B + 3) * c1_4 +
          16 * (2 * A - 5 * B + 3) * c1 * c3 + 12 * (A - 3 * B + 2) * c2 * c2 - 48 * c4) /
         1920;
  {
    const Rational t1 = -(A - 5 * B + 4) * (A - 4 * B + 3) * (A - 3 * B + 2) * (A - 2 * B + 1) * c1_5;
    const Rational t2 = 4 *
                        (5 * A2 * A - 50 * A2 * B + 35 * A2 + 160 * A * B2 - 220 * A * B + 75 * A -
                         163 * B2 * B + 329 * B2 - 219 * B + 48) *
                        c1_3 * c2;
    const Rational t3 = -16 * (5 * A2 - 30 * A * B + 20 * A + 43 * B2 - 56 * B + 18) * c1_2 * c3;
    const Rational t4 = 32 * (5 * A - 17 * B + 12) * c2 * c3;
    const Rational t5 = -4 * (15 * A2 - 100 * A * B + 70 * A + 157 * B2 - 214 * B + 72) * c1 * c2 * c2;
    const Rational t6 = 48 * (5 * A - 13 * B + 8) * c1 * c4;
    const Rational t7 = -384 * c5;
    a[6] = AB * (t1 + t2 + t3 + t4 + t5 + t6 + t7) / 23040;
  }

  // Reversion of f = z + a_2 z^2 + ... through w^6.
  auto& g = out.gamma_from_a;
  g[2] = -a[2];
  g[3] = 2 * a[2] * a[2] - a[3];
  g[4] = -5 * a[2] * a[2] * a[2] + 5 * a[2] * a[3] - a[4];
  g[5] = 14 * a[2] * a[2] * a[2] * a[2] - 21 * a[2] * a[2] * a[3] + 6 * a[2] * a[4] +
         3 * a[3] * a[3] - a[5];
  {
    const Rational a2_2 = a[2] * a[2];
    const Rational inner = -6 * a2_2 * a2_2 * a[2] + 12 * a2_2 * a[2] * a[3] - 4 * a2_2 * a[4] +
                           a[2] * (a[5] - 4 * a[3] * a[3]) + a[3] * a[4];
    g[6] = 7 * inner - a[6];
  }

  out.p = poly_p(A, B);
  out.q = poly_q(A, B);
  out.r = poly_r(A, B);
  out.s = poly_s(A, B);

  const Rational f2 = 2 * A - B - 1;
  const Rational f3 = 3 * A - B - 2;
  const Rational f4 = 4 * A - B - 3;
  const Rational f5 = 5 * A - B - 4;
  auto& gc = out.gamma;
  gc[2] = AB * c1 / 4;
  gc[3] = AB * (f2 * c1_2 + 2 * c2) / 24;
  gc[4] = AB * (f2 * f3 * c1_3 + 2 * (7 * A - 3 * B - 4) * c1 * c2 + 8 * c3) / 192;
  gc[5] = AB *
          (out.p * c1_2 * c2 + f2 * f3 * f4 * c1_4 + 8 * (11 * A - 5 * B - 6) * c1 * c3 +
           4 * (7 * A - B - 6) * c2 * c2 + 48 * c4) /
          1920;
  gc[6] = AB *
          (out.q * c1_2 * c3 + out.r * c1 * c2 * c2 + 384 * f2 * c1 * c4 + out.s * c1_3 * c2 +
           f2 * f3 * f4 * f5 * c1_5 + 16 * (25 * A - B - 24) * c2 * c3 + 384 * c5) /
          23040;
  return out;
}

}  // namespace invcoef
