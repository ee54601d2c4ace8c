#include "invcoef/report.hpp"

#include <algorithm>
#include <cstdio>

namespace invcoef {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

std::string pad_index(long n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, n < 0 ? "m%05ld" : "%05ld", n < 0 ? -n : n);
  return buf;
}

void VerificationReport::add(CaseResult c) { cases_.push_back(std::move(c)); }

void VerificationReport::append(const VerificationReport& other) {
  cases_.insert(cases_.end(), other.cases_.begin(), other.cases_.end());
}

void VerificationReport::sort_cases() {
  std::stable_sort(cases_.begin(), cases_.end(),
                   [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
}

Summary VerificationReport::summary() const {
  Summary s;
  for (const auto& c : cases_) {
    switch (c.verdict) {
      case Verdict::Pass: ++s.pass; break;
      case Verdict::Fail: ++s.fail; break;
      case Verdict::Skipped: ++s.skipped; break;
    }
  }
  return s;
}

std::string_view VerificationReport::status() const {
  const Summary s = summary();
  if (s.fail) return "fail";
  if (s.pass == 0) return "skipped";
  return "pass";
}

void VerificationReport::expect_equal(std::string id, std::string claim, std::string inputs,
                                      const Rational& expected, const Rational& actual,
                                      const std::string& witness) {
  CaseResult c{std::move(id), std::move(claim), std::move(inputs), to_string(expected),
               to_string(actual), expected == actual ? Verdict::Pass : Verdict::Fail, true, {}, {}};
  if (c.verdict == Verdict::Fail) c.witness = witness.empty() ? c.inputs : witness;
  add(std::move(c));
}

void VerificationReport::expect_abs_at_most(std::string id, std::string claim, std::string inputs,
                                            const Rational& bound, const Rational& actual,
                                            const std::string& witness) {
  const bool holds = abs(actual) <= bound;
  CaseResult c{std::move(id), std::move(claim), std::move(inputs), "<= " + to_string(bound),
               to_string(actual), holds ? Verdict::Pass : Verdict::Fail, true, {}, {}};
  if (holds && abs(actual) == bound) c.note = "equality";
  if (!holds) c.witness = witness.empty() ? c.inputs : witness;
  add(std::move(c));
}

void VerificationReport::expect_true(std::string id, std::string claim, std::string inputs,
                                     std::string expected, std::string actual, bool holds,
                                     const std::string& witness) {
  CaseResult c{std::move(id), std::move(claim), std::move(inputs), std::move(expected),
               std::move(actual), holds ? Verdict::Pass : Verdict::Fail, true, {}, {}};
  if (!holds) c.witness = witness.empty() ? c.inputs : witness;
  add(std::move(c));
}

void VerificationReport::observe(std::string id, std::string claim, std::string inputs,
                                 const Rational& bound, const Rational& actual) {
  CaseResult c{std::move(id), std::move(claim), std::move(inputs), "<= " + to_string(bound),
               to_string(actual), Verdict::Skipped, true, {}, {}};
  c.proven = false;
  const Rational mag = abs(actual);
  c.note = mag == bound ? "observed-sharp-unproven" : (mag < bound ? "observed-below" : "observed-exceeds");
  add(std::move(c));
}

void VerificationReport::skip(std::string id, std::string claim, std::string note) {
  CaseResult c{std::move(id), std::move(claim), "", "", "", Verdict::Skipped, true, {}, {}};
  c.note = std::move(note);
  add(std::move(c));
}

}  // namespace invcoef
