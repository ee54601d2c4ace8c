#include "doctest.h"
#include "invcoef/errors.hpp"
#include "invcoef/search.hpp"

using namespace invcoef;

TEST_SUITE("search") {
  TEST_CASE("grid enumeration") {
    SearchGrid g;
    CHECK(enumerate_grid(g).size() == 3u * (1 + 19) * 2 * 16);
    g.e_values = {0};
    g.theta_steps = 1;
    CHECK(enumerate_grid(g).size() == 3u * 2);
  }

  TEST_CASE("starlike n=3 finds the bound at the extremal point") {
    const SearchResult r = sharpness_search({ClassKind::Starlike, 3, 1}, 3, SearchGrid{});
    CHECK(r.best_value == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(r.best.j == 1);
    CHECK(r.best.e == 0);
    CHECK(r.best.sigma == 1);
    CHECK(r.best.theta_index == 0);
    CHECK(std::abs(r.gap) <= 1e-9);
  }

  TEST_CASE("convex extremal point is w = -z") {
    const SearchResult r3 = sharpness_search({ClassKind::Convex, 3, 1}, 3, SearchGrid{});
    CHECK(r3.best_value == doctest::Approx(5.0 / 3).epsilon(1e-12));
    CHECK(r3.best.sigma == -1);
    const SearchResult r4 = sharpness_search({ClassKind::Convex, 3, 1}, 4, SearchGrid{});
    CHECK(r4.best_value == doctest::Approx(10.0 / 3).epsilon(1e-12));
  }

  TEST_CASE("grid without the extremal point has a gap") {
    SearchGrid g;
    g.j_min = 2;
    const SearchResult r = sharpness_search({ClassKind::Starlike, 3, 1}, 2, g);
    CHECK_FALSE(r.extremal_in_grid);
    CHECK(r.gap > 0.1);
    CHECK(r.extremal_value == doctest::Approx(2.0));
  }

  TEST_CASE("serial and parallel agree exactly") {
    SearchGrid g;
    g.theta_steps = 8;
    for (const ClassSpec spec : {ClassSpec{ClassKind::Starlike, rat(5, 2), rat(-1, 2)},
                                 ClassSpec{ClassKind::Convex, 3, 0}, ClassSpec{ClassKind::Noshiro, 1, rat(-1, 2)},
                                 ClassSpec{ClassKind::MeromorphicStarlike, 3, 1}}) {
      for (int n = spec.kind == ClassKind::MeromorphicStarlike ? 0 : 2; n <= 5; ++n) {
        const SearchResult a = sharpness_search_serial(spec, n, g);
        const SearchResult b = sharpness_search(spec, n, g);
        CHECK(a.best_value == b.best_value);
        CHECK(a.best.j == b.best.j);
        CHECK(a.best.a == b.best.a);
        CHECK(a.best.theta_index == b.best.theta_index);
        CHECK(a.best_value <= a.bound * (1 + 1e-9));
      }
    }
  }

  TEST_CASE("invalid specs") {
    CHECK_THROWS_AS(sharpness_search({ClassKind::Starlike, 1, 1}, 3, SearchGrid{}), InvalidSpec);
  }
}
