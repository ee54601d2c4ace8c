#pragma once

// JSON (stable field order), CSV (header row, RFC 4180 quoting) and plain
// text renderings. Rationals are written as "p/q" strings; decimal columns
// are annotations only.

#include <optional>
#include <string>
#include <vector>

#include "invcoef/bounds.hpp"
#include "invcoef/config.hpp"
#include "invcoef/report.hpp"
#include "invcoef/search.hpp"

namespace invcoef {

/// Extremal function of a class next to its reversion and the bounds.
struct ExtremalRow {
  int n = 0;
  Rational coeff;                  ///< a_n (Taylor) or b_n (meromorphic).
  std::optional<Rational> coeff_bound;
  Rational inverse;                ///< gamma_n, or gt_n for the meromorphic class.
  std::optional<Rational> inverse_bound;
  bool proven = true;
};

struct ExtremalListing {
  ClassSpec spec;
  int N = 0;
  std::vector<ExtremalRow> rows;
};

/// Taylor classes: rows n = 1..N. Meromorphic class: rows n = 0..N.
/// Bound columns are empty outside the regimes where bounds are stated.
ExtremalListing make_extremal_listing(const ClassSpec& spec, int N);

std::string render(const VerificationReport& rep, OutputFormat format);
std::string render(const BoundTable& table, OutputFormat format);
std::string render(const ExtremalListing& listing, OutputFormat format);
std::string render(const SearchResult& result, OutputFormat format);

/// One CSV field with RFC 4180 quoting.
std::string csv_field(const std::string& s);

/// Fixed-precision decimal annotation.
std::string decimal(const Rational& q);

}  // namespace invcoef
