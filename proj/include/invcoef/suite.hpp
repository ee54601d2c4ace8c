#pragma once

// The full verification run driven by a SuiteConfig.

#include "invcoef/config.hpp"
#include "invcoef/report.hpp"
#include "invcoef/search.hpp"

namespace invcoef {

/// Relative tolerance of the numeric sharpness rows.
inline constexpr double kSearchRelTol = 1e-9;

/// Numeric grid mirroring the exact Schwarz grid of the configuration.
SearchGrid search_grid(const SuiteConfig& cfg);

/// Runs the oracle-equivalence gate over every series the suite constructs,
/// then (only if the gate is green) the theorem checks and the numeric
/// search. N = 0 or an empty Schwarz grid yields an empty report.
/// cfg.parallel selects the OpenMP task loop; results are identical.
VerificationReport run_suite(const SuiteConfig& cfg);

/// Converts a search result into one report row.
void add_search_case(VerificationReport& rep, const SearchResult& r);

}  // namespace invcoef
