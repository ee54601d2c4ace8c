#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invcoef/rational.hpp"

namespace invcoef {

enum class Verdict { Pass, Fail, Skipped };

std::string_view to_string(Verdict v);

struct CaseResult {
  std::string id;
  std::string claim;     ///< Short tag of the estimate or identity under test.
  std::string inputs;
  std::string expected;  ///< Exact rational, or a predicate such as "<= 143".
  std::string actual;
  Verdict verdict = Verdict::Pass;
  bool proven = true;    ///< False for rows outside the proven range.
  std::string note;
  std::optional<std::string> witness;  ///< Set on every Fail.
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string suite = {}) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CaseResult>& cases() const { return cases_; }

  void add(CaseResult c);
  void append(const VerificationReport& other);
  /// Stable sort by case id.
  void sort_cases();

  Summary summary() const;
  bool ok() const { return summary().fail == 0; }
  /// "fail" if any case failed, "skipped" if there are no passing cases, else "pass".
  std::string_view status() const;

  // Helpers that build one case each. `witness` is attached on Fail.
  void expect_equal(std::string id, std::string claim, std::string inputs, const Rational& expected,
                    const Rational& actual, const std::string& witness = {});
  /// |actual| <= bound.
  void expect_abs_at_most(std::string id, std::string claim, std::string inputs,
                          const Rational& bound, const Rational& actual,
                          const std::string& witness = {});
  void expect_true(std::string id, std::string claim, std::string inputs, std::string expected,
                   std::string actual, bool holds, const std::string& witness = {});
  /// An unproven row: always Skipped, the note records how |actual| compares
  /// with the bound ("observed-sharp-unproven", "observed-below",
  /// "observed-exceeds").
  void observe(std::string id, std::string claim, std::string inputs, const Rational& bound,
               const Rational& actual);
  void skip(std::string id, std::string claim, std::string note);

 private:
  std::string suite_;
  std::vector<CaseResult> cases_;
};

/// Zero-padded index for case ids, so that sorting by id keeps numeric order.
std::string pad_index(long n);

}  // namespace invcoef
