#include "invcoef/search.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "invcoef/bounds.hpp"
#include "invcoef/detail/member_kernel.hpp"
#include "invcoef/errors.hpp"

namespace invcoef {

namespace {

using cplx = std::complex<double>;

FloatSeries numeric_schwarz(const SearchPoint& p, int n) {
  FloatSeries factor = FloatSeries::one(n);
  if (p.e == 1) {
    factor = divide(FloatSeries::from_coeffs({cplx(p.a), cplx(1.0)}, n),
                    FloatSeries::from_coeffs({cplx(1.0), cplx(p.a)}, n));
  }
  const cplx rot = std::polar(1.0, p.theta) * static_cast<double>(p.sigma);
  return FloatSeries::monomial(rot, p.j, n) * factor;
}

// Values within this relative distance are ties. A tie goes to the
// unrotated point (theta = 0), then to the earlier grid point, so the serial
// and parallel reductions pick the same maximizer.
constexpr double kTieTolerance = 1e-12;

SearchResult finish(const ClassSpec& spec, int n, const SearchGrid& grid,
                    const std::vector<SearchPoint>& points, const std::vector<double>& values) {
  SearchResult r;
  r.spec = spec;
  r.n = n;
  r.grid = grid.describe();
  r.points = points.size();
  r.bound = search_bound(spec, n);
  const SchwarzSpec ext = extremal_schwarz(spec.kind);
  auto is_extremal = [&ext](const SearchPoint& p) {
    return p.j == ext.j && p.e == ext.e && p.sigma == ext.sigma && p.theta_index == 0;
  };
  // Among ties prefer the extremal point, then any unrotated point.
  auto rank = [&](const SearchPoint& p) { return is_extremal(p) ? 2 : p.theta_index == 0 ? 1 : 0; };
  bool have = false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const bool better = values[i] > r.best_value * (1.0 + kTieTolerance);
    const bool tie_preferred =
        values[i] >= r.best_value * (1.0 - kTieTolerance) && rank(points[i]) > rank(r.best);
    if (!have || better || tie_preferred) {
      r.best = points[i];
      r.best_value = values[i];
      have = true;
    }
  }
  r.gap = r.bound - r.best_value;

  SearchPoint ext_point{ext.j, 0.0, ext.e, ext.sigma, 0, 0.0};
  r.extremal_value = numeric_inverse_coeff(spec, ext_point, n);
  for (const auto& p : points) {
    if (is_extremal(p)) {
      r.extremal_in_grid = true;
      break;
    }
  }
  return r;
}

void require_search_spec(const ClassSpec& spec, int n) {
  if (validate(spec) == Regime::Invalid) throw InvalidSpec("search needs a valid class spec");
  if (n < (spec.kind == ClassKind::MeromorphicStarlike ? 0 : 2)) throw InvalidSpec("search index too small");
}

}  // namespace

std::string SearchGrid::describe() const {
  std::ostringstream os;
  os << "j=" << j_min << ".." << j_max << "; a=" << a_min << ".." << a_max << " step " << a_step << "; e={";
  for (std::size_t i = 0; i < e_values.size(); ++i) os << (i ? "," : "") << e_values[i];
  os << "}; sigma={";
  for (std::size_t i = 0; i < sigmas.size(); ++i) os << (i ? "," : "") << sigmas[i];
  os << "}; theta=2pi k/" << theta_steps;
  return os.str();
}

std::vector<SearchPoint> enumerate_grid(const SearchGrid& grid) {
  std::vector<SearchPoint> out;
  std::vector<double> as;
  if (grid.a_step > 0 && grid.a_max >= grid.a_min) {
    const long count = std::lround(std::floor((grid.a_max - grid.a_min) / grid.a_step + 1e-9));
    for (long i = 0; i <= count; ++i) {
      const double a = grid.a_min + static_cast<double>(i) * grid.a_step;
      if (std::abs(a) < 1.0) as.push_back(std::abs(a) < 1e-12 ? 0.0 : a);
    }
  }
  for (int j = grid.j_min; j <= grid.j_max; ++j) {
    for (int e : grid.e_values) {
      const std::vector<double> a_values = e == 0 ? std::vector<double>{0.0} : as;
      for (double a : a_values) {
        for (int sigma : grid.sigmas) {
          for (int k = 0; k < grid.theta_steps; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / grid.theta_steps;
            out.push_back(SearchPoint{j, a, e, sigma, k, theta});
          }
        }
      }
    }
  }
  return out;
}

FloatSeries numeric_member(const ClassSpec& spec, const SearchPoint& point, int n) {
  const cplx A(spec.A.get_d());
  const cplx B(spec.B.get_d());
  const FloatSeries w = numeric_schwarz(point, n);
  switch (spec.kind) {
    case ClassKind::Starlike:
    case ClassKind::MeromorphicStarlike:
      return detail::starlike_member(A, B, w, n);
    case ClassKind::Convex:
      return detail::convex_member(A, B, w, n);
    case ClassKind::Noshiro:
      return detail::noshiro_member(B, w, n);
  }
  throw InvalidSpec("unknown class kind");
}

double numeric_inverse_coeff(const ClassSpec& spec, const SearchPoint& point, int n) {
  if (spec.kind == ClassKind::MeromorphicStarlike) {
    // gt_n = [u^{n+1}] u/F(u).
    const FloatSeries F = revert_iterative(numeric_member(spec, point, n + 2));
    return std::abs(reciprocal(shift_down(F))[n + 1]);
  }
  const FloatSeries F = revert_iterative(numeric_member(spec, point, n));
  return std::abs(F[n]);
}

double search_bound(const ClassSpec& spec, int n) {
  switch (spec.kind) {
    case ClassKind::Starlike:
      return bound_starlike_inverse(spec.A, spec.B, n).get_d();
    case ClassKind::Convex: {
      if (const auto beta = beta_of(spec)) {
        if (spec.A > 1) return bound_convex_beta(*beta, n).get_d();
      }
      return bound_convex_general(spec.A, spec.B, n).value.get_d();
    }
    case ClassKind::Noshiro:
      return noshiro_inverse_coeffs(spec.B, n)[static_cast<std::size_t>(n)].get_d();
    case ClassKind::MeromorphicStarlike:
      return bound_merom_inverse(spec.A, spec.B, n).get_d();
  }
  return 0.0;
}

SearchResult sharpness_search_serial(const ClassSpec& spec, int n, const SearchGrid& grid) {
  require_search_spec(spec, n);
  const std::vector<SearchPoint> points = enumerate_grid(grid);
  std::vector<double> values(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) values[i] = numeric_inverse_coeff(spec, points[i], n);
  return finish(spec, n, grid, points, values);
}

SearchResult sharpness_search(const ClassSpec& spec, int n, const SearchGrid& grid) {
  require_search_spec(spec, n);
  const std::vector<SearchPoint> points = enumerate_grid(grid);
  std::vector<double> values(points.size());
  const auto count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < count; ++i) values[i] = numeric_inverse_coeff(spec, points[i], n);
  return finish(spec, n, grid, points, values);
}

}  // namespace invcoef
