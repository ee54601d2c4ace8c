#pragma once

// Floating-point sweep of the Schwarz family for the largest inverse
// coefficient. The exact suite never uses these values for equality checks.

#include <cstddef>
#include <string>
#include <vector>

#include "invcoef/classes.hpp"

namespace invcoef {

struct SearchGrid {
  int j_min = 1;
  int j_max = 3;
  double a_min = -0.9;
  double a_max = 0.9;
  double a_step = 0.1;
  std::vector<int> e_values{0, 1};
  std::vector<int> sigmas{1, -1};
  int theta_steps = 16;  ///< theta = 2 pi k / theta_steps, k = 0..theta_steps-1.

  std::string describe() const;
};

/// One Schwarz function w(z) = e^{i theta} sigma z^j ((a + z)/(1 + a z))^e.
struct SearchPoint {
  int j = 1;
  double a = 0.0;
  int e = 0;
  int sigma = 1;
  int theta_index = 0;
  double theta = 0.0;
};

struct SearchResult {
  ClassSpec spec;
  int n = 0;
  std::string grid;
  std::size_t points = 0;
  SearchPoint best;
  double best_value = 0.0;
  double bound = 0.0;
  double gap = 0.0;  ///< bound - best_value.
  bool extremal_in_grid = false;
  double extremal_value = 0.0;  ///< Value at the extremal Schwarz point, in grid or not.
};

/// Grid points in a fixed order: j, e, a (a is fixed to 0 when e = 0), sigma, theta.
std::vector<SearchPoint> enumerate_grid(const SearchGrid& grid);

/// |gamma_n| of the inverse of the member generated by the point; for the
/// meromorphic class, |gt_n| of the inverse at infinity.
double numeric_inverse_coeff(const ClassSpec& spec, const SearchPoint& point, int n);

/// Exact bound for the searched coefficient, as a double.
double search_bound(const ClassSpec& spec, int n);

/// Serial reference implementation.
SearchResult sharpness_search_serial(const ClassSpec& spec, int n, const SearchGrid& grid);

/// OpenMP implementation; returns the same result as the serial one.
SearchResult sharpness_search(const ClassSpec& spec, int n, const SearchGrid& grid);

/// Float coefficients of the grid member, exposed for tests and benches.
FloatSeries numeric_member(const ClassSpec& spec, const SearchPoint& point, int n);

}  // namespace invcoef
