#include "invcoef/checks.hpp"

#include <random>
#include <string>

#include "invcoef/errors.hpp"
#include "invcoef/inversion.hpp"

namespace invcoef {

namespace {

std::string idx(const std::string& base, const char* name, long n) {
  return base + "/" + name + "_" + pad_index(n);
}

std::string n_input(int n) { return "n=" + std::to_string(n); }

void require_valid(const ClassSpec& spec) {
  if (validate(spec) == Regime::Invalid) {
    throw InvalidSpec(spec_label(spec) + " violates A > B, -1 <= B <= 1 (and A = 1 for noshiro)");
  }
}

// |c_k| <= A - B for the p-series of a member.
void check_p_coefficients(VerificationReport& rep, const std::string& base, const TaylorSeries& p,
                          const Rational& spread) {
  for (int k = 1; k <= p.order(); ++k) {
    rep.expect_abs_at_most(idx(base, "c", k), "p-coefficient-bound", n_input(k), spread, p[k],
                           "p=" + format_prefix(p));
  }
}

void check_inverse_rows(VerificationReport& rep, const std::string& base, const ClassSpec& spec,
                        const TaylorSeries& F, const CheckOptions& opts, bool equality) {
  const int N = F.order();
  const std::string witness = "F=" + format_prefix(F);
  const auto beta = beta_of(spec);
  std::vector<Rational> noshiro;
  if (spec.kind == ClassKind::Noshiro) noshiro = noshiro_inverse_coeffs(spec.B, N);
  for (int n = 2; n <= N; ++n) {
    Rational bound;
    bool proven = true;
    const char* claim = "";
    switch (spec.kind) {
      case ClassKind::Starlike:
        bound = apply_mutation(bound_starlike_inverse(spec.A, spec.B, n), Mutation::StarlikeInverse, opts);
        claim = "starlike-inverse-bound";
        break;
      case ClassKind::Convex:
        if (beta) {
          bound = apply_mutation(bound_convex_beta(*beta, n), Mutation::ConvexInverse, opts);
          claim = "convex-beta-inverse-bound";
        } else {
          const Bound b = bound_convex_general(spec.A, spec.B, n);
          bound = apply_mutation(b.value, Mutation::ConvexInverse, opts);
          proven = b.proven;
          claim = "convex-general-inverse-bound";
        }
        break;
      case ClassKind::Noshiro:
        bound = apply_mutation(noshiro[static_cast<std::size_t>(n)], Mutation::NoshiroInverse, opts);
        claim = "noshiro-inverse-bound";
        break;
      case ClassKind::MeromorphicStarlike:
        return;
    }
    const std::string id = idx(base, "gamma", n);
    if (!proven) {
      // Extremal rows beyond the proven range are always recorded; member
      // rows only on request.
      if (equality || opts.unproven) rep.observe(id, claim, n_input(n), bound, F[n]);
      continue;
    }
    if (equality) {
      rep.expect_equal(id, claim, n_input(n), bound, abs(F[n]), witness);
    } else {
      rep.expect_abs_at_most(id, claim, n_input(n), bound, F[n], witness);
    }
  }
}

void check_delta_rows(VerificationReport& rep, const std::string& base, ClassKind kind,
                      const Rational& beta, const TaylorSeries& F, bool equality) {
  const TaylorSeries D = ratio_F_over_Fprime(F);
  const std::string witness = "F/F'=" + format_prefix(D);
  const char* claim = kind == ClassKind::Starlike ? "starlike-delta-bound" : "convex-delta-bound";
  for (int n = 2; n <= D.order(); ++n) {
    const Rational bound =
        kind == ClassKind::Starlike ? bound_delta_starlike(beta, n) : bound_delta_convex(beta, n);
    if (equality) {
      rep.expect_equal(idx(base, "delta", n), claim, n_input(n), bound, abs(D[n]), witness);
    } else {
      rep.expect_abs_at_most(idx(base, "delta", n), claim, n_input(n), bound, D[n], witness);
    }
  }
}

void check_meromorphic_rows(VerificationReport& rep, const std::string& base, const ClassSpec& spec,
                            const TaylorSeries& f, int N, const CheckOptions& opts, bool equality) {
  const LaurentTail g = to_meromorphic(f);
  const std::string g_witness = "g scaled=" + format_prefix(g.scaled());
  for (int n = 0; n <= std::min(N, g.order()); ++n) {
    const Bound b = bound_merom_coeff(spec.A, spec.B, n);
    const Rational bound = apply_mutation(b.value, Mutation::MeromCoeff, opts);
    const std::string id = idx(base, "b", n);
    if (!b.proven) {
      if (equality || opts.unproven) rep.observe(id, "merom-coeff-bound", n_input(n), bound, g.b(n));
      continue;
    }
    if (equality) {
      rep.expect_equal(id, "merom-coeff-bound", n_input(n), bound, abs(g.b(n)), g_witness);
    } else {
      rep.expect_abs_at_most(id, "merom-coeff-bound", n_input(n), bound, g.b(n), g_witness);
    }
  }

  std::vector<Rational> gt;
  try {
    gt = meromorphic_inverse(f, N);
  } catch (const RouteMismatch& e) {
    rep.expect_true(base + "/gt_routes", "merom-inverse-routes", "f=" + format_prefix(f),
                    "Laurent route == Lagrange route", e.what(), false, "f=" + format_prefix(f));
    return;
  }
  rep.expect_true(base + "/gt_routes", "merom-inverse-routes", "N=" + std::to_string(N),
                  "Laurent route == Lagrange route", "agree", true);
  std::string gt_witness = "gt=[";
  for (std::size_t k = 0; k < gt.size() && k < 12; ++k) gt_witness += (k ? ", " : "") + to_string(gt[k]);
  gt_witness += "]";
  for (int n = 0; n <= N; ++n) {
    const Rational bound = apply_mutation(bound_merom_inverse(spec.A, spec.B, n), Mutation::MeromInverse, opts);
    if (equality) {
      rep.expect_equal(idx(base, "gt", n), "merom-inverse-bound", n_input(n), bound, abs(gt[n]), gt_witness);
    } else {
      rep.expect_abs_at_most(idx(base, "gt", n), "merom-inverse-bound", n_input(n), bound, gt[n], gt_witness);
    }
  }
}

}  // namespace

std::string_view to_string(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::StarlikeInverse: return "starlike-inverse";
    case Mutation::ConvexInverse: return "convex-inverse";
    case Mutation::NoshiroInverse: return "noshiro-inverse";
    case Mutation::MeromInverse: return "merom-inverse";
    case Mutation::MeromCoeff: return "merom-coeff";
    case Mutation::Oracle: return "oracle";
  }
  return "?";
}

std::optional<Mutation> parse_mutation(std::string_view name) {
  for (Mutation m : {Mutation::None, Mutation::StarlikeInverse, Mutation::ConvexInverse,
                     Mutation::NoshiroInverse, Mutation::MeromInverse, Mutation::MeromCoeff, Mutation::Oracle}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

Rational apply_mutation(const Rational& bound, Mutation family, const CheckOptions& opts) {
  if (opts.mutation == Mutation::None || opts.mutation != family) return bound;
  return bound * rat(999, 1000);
}

std::string spec_label(const ClassSpec& spec) {
  return std::string(to_string(spec.kind)) + "(" + to_string(spec.A) + "," + to_string(spec.B) + ")";
}

VerificationReport check_oracle_equivalence(const TaylorSeries& f, const std::string& label, Mutation mutation) {
  VerificationReport rep("oracle-equivalence");
  const TaylorSeries iterative = revert_iterative(f);
  TaylorSeries lagrange = revert_lagrange(f, f.order());
  if (mutation == Mutation::Oracle) {
    std::vector<Rational> c(lagrange.coeffs().begin(), lagrange.coeffs().end());
    c.back() += 1;
    lagrange = TaylorSeries(std::move(c));
  }
  int first_diff = -1;
  for (int k = 0; k <= f.order(); ++k) {
    if (iterative[k] != lagrange[k]) {
      first_diff = k;
      break;
    }
  }
  const bool same = first_diff < 0;
  rep.expect_true(label + "/oracle", "oracle-equivalence", "N=" + std::to_string(f.order()),
                  "revert_lagrange == revert_iterative",
                  same ? "identical" : "differ at w^" + std::to_string(first_diff), same,
                  "f=" + format_prefix(f, 40) + " iterative=" + format_prefix(iterative) +
                      " lagrange=" + format_prefix(lagrange));
  return rep;
}

VerificationReport check_extremal_attainment(const ClassSpec& spec, int N, const CheckOptions& opts) {
  require_valid(spec);
  VerificationReport rep("extremal-attainment");
  const std::string base = spec_label(spec) + "/extremal";
  if (N < 2) return rep;
  const Regime regime = validate(spec);
  if (spec.kind != ClassKind::Noshiro && regime != Regime::Generalized) {
    rep.skip(base, "regime", "bounds are stated for -1 <= B <= 1 < A only");
    return rep;
  }
  const auto beta = beta_of(spec);
  switch (spec.kind) {
    case ClassKind::Starlike: {
      const TaylorSeries f = extremal_series(spec, N);
      if (opts.oracle_rows) rep.append(check_oracle_equivalence(f, base));
      check_inverse_rows(rep, base, spec, revert_iterative(f), opts, true);
      if (beta) {
        // The half-turn rotation of the extremal attains the F/F' bounds.
        const TaylorSeries g = rotate_half_turn(f);
        if (opts.oracle_rows) rep.append(check_oracle_equivalence(g, base + "-rotated"));
        check_delta_rows(rep, base + "-rotated", ClassKind::Starlike, *beta, revert_iterative(g), true);
      }
      break;
    }
    case ClassKind::Convex: {
      const TaylorSeries f = extremal_series(spec, N);
      if (opts.oracle_rows) rep.append(check_oracle_equivalence(f, base));
      const TaylorSeries F = revert_iterative(f);
      check_inverse_rows(rep, base, spec, F, opts, true);
      if (beta) check_delta_rows(rep, base, ClassKind::Convex, *beta, F, true);
      break;
    }
    case ClassKind::Noshiro: {
      const TaylorSeries f = extremal_series(spec, N);
      if (opts.oracle_rows) rep.append(check_oracle_equivalence(f, base));
      check_inverse_rows(rep, base, spec, revert_iterative(f), opts, true);
      break;
    }
    case ClassKind::MeromorphicStarlike: {
      const ClassSpec starlike{ClassKind::Starlike, spec.A, spec.B};
      const TaylorSeries f = extremal_series(starlike, N + 2);
      if (opts.oracle_rows) rep.append(check_oracle_equivalence(f, base));
      check_meromorphic_rows(rep, base, spec, f, N, opts, true);
      break;
    }
  }
  return rep;
}

VerificationReport check_member_bounds(const ClassSpec& spec, const SchwarzSpec& ws, int N,
                                       const CheckOptions& opts) {
  require_valid(spec);
  VerificationReport rep("member-bounds");
  const std::string base = spec_label(spec) + "/member[" + describe(ws) + "]";
  if (N < 2) return rep;
  const Regime regime = validate(spec);
  const bool generalized = regime == Regime::Generalized;
  const auto beta = beta_of(spec);
  const Rational spread = spec.A - spec.B;

  switch (spec.kind) {
    case ClassKind::Starlike:
    case ClassKind::MeromorphicStarlike: {
      const bool merom = spec.kind == ClassKind::MeromorphicStarlike;
      const int order = merom ? N + 2 : N;
      const TaylorSeries w = schwarz_series(ws, order);
      const ClassSpec starlike{ClassKind::Starlike, spec.A, spec.B};
      const TaylorSeries f = member_series(starlike, w, order);
      const TaylorSeries p = janowski_p(spec.A, spec.B, w);
      const TaylorSeries zf_over_f = log_derivative_coeffs(f);
      rep.expect_true(base + "/certificate", "membership-certificate", "z f'/f - p",
                      "0 through order " + std::to_string(order - 1), format_prefix(zf_over_f - p.truncated(order - 1)),
                      zf_over_f == p.truncated(order - 1), "f=" + format_prefix(f));
      check_p_coefficients(rep, base, p, spread);
      if (opts.oracle_rows) rep.append(check_oracle_equivalence(f, base));
      if (!merom) {
        const TaylorSeries F = revert_iterative(f);
        if (generalized) check_inverse_rows(rep, base, spec, F, opts, false);
        // Negative powers of f/z.
        const int smax = std::min(opts.schur_smax, N - 1);
        for (long t = 1; t <= opts.schur_tmax; ++t) {
          const TaylorSeries powered = negative_power_coeffs(f, t, smax);
          for (int s = 1; s <= smax; ++s) {
            const std::string id = base + "/negpow_t" + pad_index(t) + "_s" + pad_index(s);
            const std::string inputs = "t=" + std::to_string(t) + ",s=" + std::to_string(s);
            if (power_schur_applies(spec.A, spec.B, t, s)) {
              rep.expect_abs_at_most(id, "negative-power-bound", inputs,
                                     bound_power_schur(spec.A, spec.B, t, s), powered[s],
                                     "(f/z)^-t=" + format_prefix(powered));
            } else if (opts.unproven) {
              Rational prod = 1;
              for (int m = 0; m <= s - 1; ++m) prod *= (spread * t + m * spec.B) / (m + 1);
              rep.observe(id, "negative-power-bound", inputs, abs(prod), powered[s]);
            }
          }
        }
        if (beta) check_delta_rows(rep, base, ClassKind::Starlike, *beta, F, false);
      } else {
        const LaurentTail g = to_meromorphic(f);
        rep.expect_true(base + "/round_trip", "meromorphic-round-trip", "1/f(1/z) and back",
                        "recovers f", "", from_meromorphic(g) == f, "f=" + format_prefix(f));
        if (generalized) check_meromorphic_rows(rep, base, spec, f, N, opts, false);
      }
      break;
    }
    case ClassKind::Convex: {
      const TaylorSeries w = schwarz_series(ws, N);
      const TaylorSeries f = member_series(spec, w, N);
      const TaylorSeries p = janowski_p(spec.A, spec.B, w);
      const TaylorSeries d1 = differentiate(f);
      const TaylorSeries d2 = differentiate(d1);
      const TaylorSeries lhs = TaylorSeries::one(N - 1) + shift_up(divide(d2, d1));
      rep.expect_true(base + "/certificate", "membership-certificate", "1 + z f''/f' - p",
                      "0 through order " + std::to_string(N - 1), format_prefix(lhs - p.truncated(N - 1)),
                      lhs == p.truncated(N - 1), "f=" + format_prefix(f));
      check_p_coefficients(rep, base, p, spread);
      if (opts.oracle_rows) rep.append(check_oracle_equivalence(f, base));
      const TaylorSeries F = revert_iterative(f);
      if (generalized) {
        check_inverse_rows(rep, base, spec, F, opts, false);
        if (beta) check_delta_rows(rep, base, ClassKind::Convex, *beta, F, false);
      }
      break;
    }
    case ClassKind::Noshiro: {
      const TaylorSeries w = schwarz_series(ws, N);
      const TaylorSeries f = member_series(spec, w, N);
      const TaylorSeries p = janowski_p(Rational(1), spec.B, w.truncated(N - 1));
      rep.expect_true(base + "/certificate", "membership-certificate", "f' - (1+w)/(1+Bw)",
                      "0 through order " + std::to_string(N - 1), format_prefix(differentiate(f) - p),
                      differentiate(f) == p, "f=" + format_prefix(f));
      check_p_coefficients(rep, base, p, spread);
      if (opts.oracle_rows) rep.append(check_oracle_equivalence(f, base));
      check_inverse_rows(rep, base, spec, revert_iterative(f), opts, false);
      break;
    }
  }
  return rep;
}

VerificationReport check_schur_relation(const TaylorSeries& f, int tmax, int nmax, const std::string& label) {
  if (!f.normalized()) throw NotNormalized("schur relation needs a normalized f");
  if (f.order() < nmax + tmax + 1) {
    throw OrderError("schur relation needs order >= " + std::to_string(nmax + tmax + 1));
  }
  VerificationReport rep("schur-relation");
  const TaylorSeries F = revert_iterative(f);
  for (long t = -tmax; t <= tmax; ++t) {
    if (t == 0) continue;
    for (long n = 1; n <= nmax; ++n) {
      const Rational lagrange = inverse_power_coeff(f, t, n);
      const Rational direct = power_coeff(F, t, n);
      rep.expect_equal(label + "/schur_t" + pad_index(t) + "_n" + pad_index(n), "schur-relation",
                       "t=" + std::to_string(t) + ",n=" + std::to_string(n), direct, lagrange,
                       "f=" + format_prefix(f, 24));
    }
  }
  return rep;
}

TaylorSeries closed_form_carath_series(const SchwarzSpec& ws) {
  const TaylorSeries w = schwarz_series(ws, kClosedFormOrder);
  const TaylorSeries one = TaylorSeries::one(kClosedFormOrder);
  return divide(one + w, one - w);
}

TaylorSeries closed_form_recursion_series(const Rational& A, const Rational& B, const SchwarzSpec& ws) {
  // p = phi((p1 - 1)/(p1 + 1)), f from the coefficient recursion.
  const TaylorSeries p1 = closed_form_carath_series(ws);
  const TaylorSeries one = TaylorSeries::one(kClosedFormOrder);
  const TaylorSeries u = divide(p1 - one, p1 + one);
  const TaylorSeries phi = divide(TaylorSeries::from_coeffs({Rational(1), Rational(-A)}, kClosedFormOrder),
                                  TaylorSeries::from_coeffs({Rational(1), Rational(-B)}, kClosedFormOrder));
  const TaylorSeries p = compose(phi, u);
  return convex_coeff_recursion(p - one, kClosedFormOrder);
}

VerificationReport check_closed_form_pipeline(const Rational& A, const Rational& B, const SchwarzSpec& ws) {
  if (!(B >= -1 && B <= 1 && A > 1)) {
    throw RegimeError("requires -1 <= B <= 1 < A (got A=" + to_string(A) + ", B=" + to_string(B) + ")");
  }
  VerificationReport rep("convex-closed-forms");
  const std::string base = "convex(" + to_string(A) + "," + to_string(B) + ")/closed_forms[" + describe(ws) + "]";
  constexpr int kOrder = kClosedFormOrder;
  const TaylorSeries p1 = closed_form_carath_series(ws);
  std::array<Rational, 5> c;
  for (int i = 0; i < 5; ++i) {
    c[i] = p1[i + 1];
    rep.expect_abs_at_most(idx(base, "c", i + 1), "caratheodory-bound", n_input(i + 1), Rational(2), c[i],
                           "p1=" + format_prefix(p1));
  }
  const ConvexClosedForms closed = convex_closed_forms(A, B, c);
  const TaylorSeries f = closed_form_recursion_series(A, B, ws);
  const TaylorSeries F = revert_iterative(f);
  const std::string witness = "c=(" + to_string(c[0]) + "," + to_string(c[1]) + "," + to_string(c[2]) + "," +
                              to_string(c[3]) + "," + to_string(c[4]) + ") f=" + format_prefix(f) +
                              " F=" + format_prefix(F);
  for (int k = 2; k <= kOrder; ++k) {
    rep.expect_equal(idx(base, "a", k), "closed-form-a", n_input(k), f[k], closed.a[k], witness);
    rep.expect_equal(idx(base, "gamma", k), "closed-form-gamma", n_input(k), F[k], closed.gamma[k], witness);
    rep.expect_equal(idx(base, "gamma_via_a", k), "closed-form-gamma", n_input(k), F[k],
                     closed.gamma_from_a[k], witness);
  }
  // w = z gives p = phi(z): the extremal, where the bound is attained.
  if (ws.j == 1 && ws.e == 0 && ws.sigma == 1) {
    for (int k = 2; k <= kOrder; ++k) {
      const Rational bound = bound_convex_general(A, B, k).value;
      rep.expect_equal(idx(base, "attained", k), "convex-general-attained", n_input(k), bound, abs(F[k]),
                       witness);
    }
  }
  return rep;
}

VerificationReport check_product_sum(std::uint64_t seed, int samples) {
  VerificationReport rep("product-sum-identity");
  std::mt19937_64 engine(seed);
  // Raw engine output reduced by modulo; mt19937_64 output is fully specified,
  // so draws are identical on every platform.
  auto draw = [&engine](long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine() % span);
  };
  for (int i = 0; i < samples; ++i) {
    const Rational B = rat(draw(-8, 8), 8);
    const Rational A = B + rat(draw(1, 80), 8);
    const long t = draw(-5, 5);
    const int m = static_cast<int>(draw(1, 12));
    const ProductSumSides sides = product_sum_sides(A, B, t, m);
    const std::string inputs = "A=" + to_string(A) + ",B=" + to_string(B) + ",t=" + std::to_string(t) +
                               ",m=" + std::to_string(m);
    rep.expect_equal("product-sum/sample_" + pad_index(i), "product-sum-identity", inputs, sides.rhs,
                     sides.lhs);
  }
  return rep;
}

VerificationReport check_closed_form_positivity(const Rational& step, const Rational& a_max) {
  VerificationReport rep("closed-form-positivity");
  using Poly = Rational (*)(const Rational&, const Rational&);
  const std::array<std::pair<const char*, Poly>, 4> polys{
      {{"p", poly_p}, {"q", poly_q}, {"r", poly_r}, {"s", poly_s}}};
  std::vector<Rational> bs;
  for (Rational b = -1; b <= 1; b += step) bs.push_back(b);
  std::vector<Rational> as;
  for (Rational a = 1 + step; a <= a_max; a += step) as.push_back(a);

  for (const auto& [name, poly] : polys) {
    bool first = true;
    Rational min_value;
    std::string argmin;
    for (const Rational& a : as) {
      for (const Rational& b : bs) {
        const Rational v = poly(a, b);
        if (first || v < min_value) {
          min_value = v;
          argmin = "A=" + to_string(a) + ",B=" + to_string(b);
          first = false;
        }
      }
    }
    rep.expect_true(std::string("closed_forms/positivity_") + name, "closed-form-positivity",
                    "grid step " + to_string(step) + ", A <= " + to_string(a_max) + ", " +
                        std::to_string(as.size() * bs.size()) + " points",
                    "min > 0", first ? "empty grid" : to_string(min_value) + " at " + argmin,
                    !first && min_value > 0, argmin);
  }

  // Values at A = 1: 12(1-B)^2, 128(1-B)^2, 12(1-B)^2, 20(1-B)^3.
  int i = 0;
  for (const Rational& b : bs) {
    const Rational d = 1 - b;
    const std::string inputs = "B=" + to_string(b);
    rep.expect_equal("closed_forms/anchor_p_" + pad_index(i), "closed-form-anchor", inputs,
                     Rational(12 * d * d), poly_p(Rational(1), b));
    rep.expect_equal("closed_forms/anchor_q_" + pad_index(i), "closed-form-anchor", inputs,
                     Rational(128 * d * d), poly_q(Rational(1), b));
    rep.expect_equal("closed_forms/anchor_r_" + pad_index(i), "closed-form-anchor", inputs,
                     Rational(12 * d * d), poly_r(Rational(1), b));
    rep.expect_equal("closed_forms/anchor_s_" + pad_index(i), "closed-form-anchor", inputs,
                     Rational(20 * d * d * d), poly_s(Rational(1), b));
    ++i;
  }
  return rep;
}

VerificationReport check_noshiro_recursion(const Rational& B, int N) {
  VerificationReport rep("noshiro-recursion");
  const std::string base = "noshiro(1," + to_string(B) + ")/recursion";
  const std::vector<Rational> coeffs = noshiro_inverse_coeffs(B, N);
  const TaylorSeries G = revert_iterative(extremal_series(ClassSpec{ClassKind::Noshiro, 1, B}, N));
  for (int n = 2; n <= N; ++n) {
    rep.expect_true(idx(base, "positive", n), "noshiro-positivity", n_input(n), "> 0",
                    to_string(coeffs[n]), coeffs[n] > 0);
    rep.expect_equal(idx(base, "A", n), "noshiro-recursion", n_input(n), G[n], coeffs[n],
                     "G=" + format_prefix(G));
  }
  return rep;
}

}  // namespace invcoef
