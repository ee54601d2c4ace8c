#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "invcoef/errors.hpp"
#include "invcoef/serialize.hpp"
#include "invcoef/suite.hpp"
#include "test_util.hpp"

using namespace invcoef;
using testutil::Q;
using testutil::run;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("invcoef_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("parse") {
    const SuiteConfig cfg = parse_config(
        "# comment\nclass = convex\nA = 5/2   # trailing\nB = -1/2\nN = 12\ne = 1\nsigma = -1\n"
        "format = csv\nexact_only = true\nmutate = convex-inverse\n");
    CHECK(cfg.class_name == "convex");
    CHECK(cfg.A == rat(5, 2));
    CHECK(cfg.B == rat(-1, 2));
    CHECK(cfg.N == 12);
    CHECK(cfg.e_values == std::vector<int>{1});
    CHECK(cfg.sigmas == std::vector<int>{-1});
    CHECK(cfg.format == OutputFormat::Csv);
    CHECK(cfg.exact_only);
    CHECK(cfg.mutation == Mutation::ConvexInverse);
  }

  TEST_CASE("errors carry line and field") {
    try {
      parse_config("N = 5\nA = 0.5\n", "x.conf");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("x.conf:2") != std::string::npos);
      CHECK(msg.find("'A'") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config("bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("N 5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("e = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("class = spiral\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/file.conf"), ConfigError);
  }

  TEST_CASE("default grid size") {
    const SuiteConfig cfg;
    // j in 1..3; e = 0 gives a = 0 only; e = 1 gives 19 values of a; two signs.
    CHECK(schwarz_grid(cfg).size() == 3u * (1 + 19) * 2);
    CHECK(suite_specs(cfg).size() == 14u);
  }
}

TEST_SUITE("serialize") {
  TEST_CASE("csv quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  }

  TEST_CASE("rationals survive a round trip") {
    const BoundTable t = make_bound_table({ClassKind::Starlike, rat(5, 2), rat(-1, 2)}, BoundKind::InverseCoeff, 2, 8);
    const auto j = nlohmann::json::parse(render(t, OutputFormat::Json));
    CHECK(j["A"] == "5/2");
    for (std::size_t i = 0; i < t.rows.size(); ++i) CHECK(Q(j["rows"][i]["bound"]) == t.rows[i].bound);
  }

  TEST_CASE("json and csv carry the same content") {
    VerificationReport rep("x");
    rep.expect_equal("a/1", "claim", "n=1", rat(7, 3), rat(7, 3));
    rep.expect_abs_at_most("a/2", "claim", "n=2, \"q\"", 2, rat(-5, 2), "w,x");
    const auto j = nlohmann::json::parse(render(rep, OutputFormat::Json));
    const std::string csv = render(rep, OutputFormat::Csv);
    CHECK(j["summary"]["fail"] == 1);
    CHECK(j["cases"][1]["witness"] == "w,x");
    CHECK(csv.find("a/1,claim,n=1,7/3,7/3,pass,true,,\r\n") != std::string::npos);
    CHECK(csv.find("\"n=2, \"\"q\"\"\",<= 2,-5/2,fail") != std::string::npos);
  }

  TEST_CASE("extremal listing") {
    const ExtremalListing s = make_extremal_listing({ClassKind::Starlike, 3, 1}, 5);
    const std::vector<Rational> a{1, 2, 1, 0, 0}, g{1, -2, 7, -30, 143};
    for (int i = 0; i < 5; ++i) {
      CHECK(s.rows[i].coeff == a[i]);
      CHECK(s.rows[i].inverse == g[i]);
      CHECK(*s.rows[i].inverse_bound == abs(g[i]));
    }
    const ExtremalListing n = make_extremal_listing({ClassKind::Noshiro, 1, 0}, 4);
    CHECK(n.rows[1].coeff == rat(-1, 2));
    CHECK(n.rows[3].inverse == rat(5, 8));
    const ExtremalListing m = make_extremal_listing({ClassKind::MeromorphicStarlike, 3, 1}, 3);
    CHECK(m.rows[0].coeff == -2);
    CHECK(m.rows[1].coeff == 3);
    CHECK(m.rows[2].coeff == -4);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("bound") {
    const auto r = run(testutil::cli() + " bound --class starlike --A 3 --B 1 --n 2..5 --format csv");
    CHECK(r.status == 0);
    CHECK(r.out == "n,bound,decimal,proven\r\n2,2,2,true\r\n3,7,7,true\r\n4,30,30,true\r\n5,143,143,true\r\n");
    const auto g = run(testutil::cli() + " bound --class convex-general --A 3 --B 1 --n 7 --format json");
    CHECK(g.status == 0);
    CHECK(nlohmann::json::parse(g.out)["rows"][0]["proven"] == false);
    const auto e = run(testutil::cli() + " bound --class starlike --A 1 --B 1 --n 2 2>&1");
    CHECK(e.status == 2);
    CHECK(e.out.find("RegimeError") != std::string::npos);
    CHECK(run(testutil::cli() + " bound --class starlike --A 0.5 --B 0 2>/dev/null").status == 2);
    CHECK(run(testutil::cli() + " frobnicate 2>/dev/null").status == 2);
  }

  TEST_CASE("extremal") {
    const auto r = run(testutil::cli() + " extremal --class meromorphic --A 3 --B 1 --N 3 --format json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"][0]["b"] == "-2");
    CHECK(j["rows"][2]["gt"] == "10");
  }

  TEST_CASE("search") {
    const auto r = run(testutil::cli() + " search --class starlike --A 3 --B 1 --n 3");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["best_value"].get<double>() == doctest::Approx(7.0));
    CHECK(std::abs(j["gap"].get<double>()) <= 1e-9);
    const auto g = run(testutil::cli() + " search --class starlike --A 3 --B 1 --n 3 --j 2..3");
    CHECK(nlohmann::json::parse(g.out)["gap"].get<double>() > 0);
  }

  TEST_CASE("verify exit codes") {
    const std::string small =
        "class = starlike\nA = 3\nB = 1\nN = 8\nj_max = 2\na_min = -1/2\na_max = 1/2\na_step = 1/2\n"
        "product_sum_samples = 20\nsearch_n_max = 3\ntheta_steps = 4\n";
    const std::string ok = write_temp("ok.conf", small);
    const auto r = run(testutil::cli() + " verify --config " + ok);
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["status"] == "pass");
    const auto m = run(testutil::cli() + " verify --config " + ok + " --mutate starlike-inverse");
    CHECK(m.status == 1);
    const auto mj = nlohmann::json::parse(m.out);
    bool witnessed = false;
    for (const auto& c : mj["cases"]) witnessed = witnessed || (c["verdict"] == "fail" && c["witness"].is_string());
    CHECK(witnessed);
    const std::string zero = write_temp("zero.conf", "class = starlike\nN = 0\n");
    const auto z = run(testutil::cli() + " verify --config " + zero);
    CHECK(z.status == 0);
    const auto zj = nlohmann::json::parse(z.out);
    CHECK(zj["status"] == "skipped");
    CHECK(zj["cases"].empty());
    const std::string bad = write_temp("bad.conf", "class = starlike\ncolour = blue\n");
    CHECK(run(testutil::cli() + " verify --config " + bad + " 2>/dev/null").status == 2);
    const auto csv = run(testutil::cli() + " verify --config " + ok + " --format csv");
    CHECK(csv.out.rfind("id,claim,inputs,expected,actual,verdict,proven,note,witness\r\n", 0) == 0);
  }
}
