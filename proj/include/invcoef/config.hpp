#pragma once

// Suite configuration: a flat "key = value" file, one entry per line,
// '#' starts a comment. Unknown keys are rejected.
//
//   class          starlike | convex | noshiro | meromorphic | all
//   A, B           exact rationals ("3", "5/2", "-1/2")
//   N              truncation order of the exact sweeps
//   j_min, j_max   monomial valuation range of the Schwarz grid
//   a_min, a_max, a_step   Blaschke parameter range (exact rationals)
//   e              comma list from {0, 1}; empty means an empty grid
//   sigma          comma list from {1, -1}
//   seed           seed of the sampled identity checks
//   format         json | csv | text
//   exact_only     true | false  (skip the numeric search)
//   unproven       true | false  (record rows outside the proven ranges)
//   parallel       true | false
//   mutate         none | starlike-inverse | convex-inverse | noshiro-inverse
//                  | merom-inverse | merom-coeff | oracle
//   product_sum_samples number of sampled identity checks
//   search_n_max   largest coefficient index of the numeric search
//   theta_steps    rotations per Schwarz point in the numeric search

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "invcoef/checks.hpp"
#include "invcoef/classes.hpp"
#include "invcoef/rational.hpp"

namespace invcoef {

enum class OutputFormat { Json, Csv, Text };

std::string_view to_string(OutputFormat f);

struct SuiteConfig {
  std::string class_name = "all";
  Rational A = 3;
  Rational B = 1;
  int N = 20;
  int j_min = 1;
  int j_max = 3;
  Rational a_min = rat(-9, 10);
  Rational a_max = rat(9, 10);
  Rational a_step = rat(1, 10);
  std::vector<int> e_values{0, 1};
  std::vector<int> sigmas{1, -1};
  std::uint64_t seed = 20161201;
  OutputFormat format = OutputFormat::Json;
  bool exact_only = false;
  bool unproven = false;
  bool parallel = true;
  Mutation mutation = Mutation::None;
  int product_sum_samples = 1000;
  int search_n_max = 6;
  int theta_steps = 16;
};

/// Throws ConfigError naming the line and field on any problem.
SuiteConfig parse_config(std::string_view text, const std::string& source = "<config>");
SuiteConfig load_config(const std::string& path);

/// Class specs covered by the configuration.
std::vector<ClassSpec> suite_specs(const SuiteConfig& cfg);

/// Exact Schwarz grid: j, then e, then a (only for e = 1), then sigma.
std::vector<SchwarzSpec> schwarz_grid(const SuiteConfig& cfg);

}  // namespace invcoef
