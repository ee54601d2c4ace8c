#include <algorithm>

#include "doctest.h"
#include "invcoef/checks.hpp"
#include "invcoef/errors.hpp"
#include "invcoef/inversion.hpp"
#include "invcoef/suite.hpp"
#include "test_util.hpp"

using namespace invcoef;
using testutil::Q;
using testutil::S;

namespace {

std::size_t count_claim(const VerificationReport& rep, const std::string& claim, Verdict v) {
  return static_cast<std::size_t>(std::count_if(rep.cases().begin(), rep.cases().end(), [&](const CaseResult& c) {
    return c.claim == claim && c.verdict == v;
  }));
}

}  // namespace

TEST_SUITE("verification") {
  TEST_CASE("extremal attainment") {
    const VerificationReport s = check_extremal_attainment({ClassKind::Starlike, 3, 1}, 5);
    CHECK(s.ok());
    CHECK(count_claim(s, "starlike-inverse-bound", Verdict::Pass) == 4);
    const VerificationReport m = check_extremal_attainment({ClassKind::MeromorphicStarlike, 3, 1}, 2);
    CHECK(m.ok());
    CHECK(count_claim(m, "merom-inverse-bound", Verdict::Pass) == 3);
    const VerificationReport n = check_extremal_attainment({ClassKind::Noshiro, 1, 0}, 4);
    CHECK(n.ok());
    CHECK(count_claim(n, "noshiro-inverse-bound", Verdict::Pass) == 3);
    CHECK_THROWS_AS(check_extremal_attainment({ClassKind::Starlike, 1, 1}, 5), InvalidSpec);
  }

  TEST_CASE("member bounds") {
    const VerificationReport a = check_member_bounds({ClassKind::Starlike, 3, 1}, {2, 0, 0, 1}, 8);
    CHECK(a.ok());
    CHECK(a.summary().pass > 0);
    const VerificationReport b = check_member_bounds({ClassKind::Starlike, 3, 1}, {1, 0, 0, 1}, 8);
    CHECK(b.ok());
    bool equality = false;
    for (const auto& c : b.cases()) equality = equality || (c.claim == "starlike-inverse-bound" && c.note == "equality");
    CHECK(equality);
    CHECK(check_member_bounds({ClassKind::Noshiro, 1, -1}, {1, rat(1, 3), 1, 1}, 10).ok());
    CHECK_THROWS_AS(check_member_bounds({ClassKind::Starlike, 3, 1}, {1, 1, 1, 1}, 8), ParameterOutOfRange);
  }

  TEST_CASE("schur relation") {
    const TaylorSeries g = divide(TaylorSeries::identity(10), S({"1", "-1", "0", "0", "0", "0", "0", "0", "0", "0", "0"}));
    CHECK(check_schur_relation(g, 3, 5, "z/(1-z)").ok());
    CHECK(check_schur_relation(TaylorSeries::identity(12), 3, 8, "z").ok());
    CHECK_THROWS_AS(check_schur_relation(TaylorSeries::identity(5), 3, 8, "z"), OrderError);
  }

  TEST_CASE("closed-form pipeline") {
    const VerificationReport r = check_closed_form_pipeline(3, 1, {1, 0, 0, 1});
    CHECK(r.ok());
    CHECK(count_claim(r, "convex-general-attained", Verdict::Pass) == 5);
    CHECK(check_closed_form_pipeline(3, 1, {2, 0, 0, 1}).ok());
    CHECK(check_closed_form_pipeline(rat(5, 2), rat(-1, 2), {1, rat(-2, 5), 1, -1}).ok());
    // w = 0 cannot be written in the family; z^7 agrees with 0 through order 6.
    const VerificationReport zero = check_closed_form_pipeline(4, 0, {7, 0, 0, 1});
    CHECK(zero.ok());
  }

  TEST_CASE("product-sum identity and positivity") {
    CHECK(check_product_sum(1, 200).ok());
    CHECK(check_product_sum(1, 200).cases().size() == 200);
    const VerificationReport p = check_closed_form_positivity(rat(1, 2), 4);
    CHECK(p.ok());
  }

  TEST_CASE("noshiro recursion") {
    for (const Rational B : {Rational(-1), rat(-1, 2), Rational(0), rat(1, 2)}) {
      CHECK(check_noshiro_recursion(B, 12).ok());
    }
  }

  TEST_CASE("oracle equivalence") {
    CHECK(check_oracle_equivalence(S({"0", "1", "2", "1", "0", "0", "0"}), "f").ok());
  }

  TEST_CASE("mutation produces failures with witnesses") {
    CheckOptions opts;
    opts.mutation = Mutation::StarlikeInverse;
    const VerificationReport r = check_extremal_attainment({ClassKind::Starlike, 3, 1}, 5, opts);
    CHECK_FALSE(r.ok());
    for (const auto& c : r.cases()) {
      if (c.verdict == Verdict::Fail) CHECK(c.witness.has_value());
    }
  }

  TEST_CASE("unproven rows are recorded as observations") {
    CheckOptions opts;
    opts.unproven = true;
    const VerificationReport r = check_extremal_attainment({ClassKind::Convex, 3, 0}, 8, opts);
    CHECK(r.ok());
    bool observed = false;
    for (const auto& c : r.cases()) {
      if (c.id.find("gamma_00007") != std::string::npos) {
        observed = true;
        CHECK(c.verdict == Verdict::Skipped);
        CHECK_FALSE(c.proven);
        CHECK(c.note.rfind("observed", 0) == 0);
      }
    }
    CHECK(observed);
  }

  TEST_CASE("suite: empty grid and N = 0") {
    SuiteConfig cfg;
    cfg.class_name = "starlike";
    cfg.N = 0;
    VerificationReport r = run_suite(cfg);
    CHECK(r.cases().empty());
    CHECK(r.status() == "skipped");
    cfg.N = 6;
    cfg.e_values.clear();
    r = run_suite(cfg);
    CHECK(r.cases().empty());
  }

  TEST_CASE("suite: small run is green and deterministic, serial == parallel") {
    SuiteConfig cfg;
    cfg.class_name = "convex";
    cfg.A = 3;
    cfg.B = 0;
    cfg.N = 8;
    cfg.j_max = 2;
    cfg.a_min = rat(-1, 2);
    cfg.a_max = rat(1, 2);
    cfg.a_step = rat(1, 2);
    cfg.product_sum_samples = 50;
    cfg.search_n_max = 4;
    cfg.theta_steps = 4;
    const VerificationReport par = run_suite(cfg);
    CHECK(par.ok());
    cfg.parallel = false;
    const VerificationReport ser = run_suite(cfg);
    REQUIRE(par.cases().size() == ser.cases().size());
    for (std::size_t i = 0; i < par.cases().size(); ++i) {
      CHECK(par.cases()[i].id == ser.cases()[i].id);
      CHECK(par.cases()[i].actual == ser.cases()[i].actual);
    }
    // Gate rows come first in execution; after sorting, the ids are unique.
    for (std::size_t i = 1; i < par.cases().size(); ++i) CHECK(par.cases()[i - 1].id != par.cases()[i].id);
  }
}
