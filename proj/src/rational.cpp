#include "invcoef/rational.hpp"

#include <cctype>

#include "invcoef/errors.hpp"

namespace invcoef {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw ParseError("empty rational");

  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digits_before = false;
  bool digits_after = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digits_after : digits_before) = true;
    } else if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else {
      throw ParseError("malformed rational '" + s + "' (expected p or p/q)");
    }
  }
  if (!digits_before || (seen_slash && !digits_after)) {
    throw ParseError("malformed rational '" + s + "' (expected p or p/q)");
  }
  if (s[0] == '+') s.erase(0, 1);

  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
    throw ParseError("malformed rational '" + s + "'");
  }
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace invcoef

#include "invcoef/series.hpp"

namespace invcoef {

std::string format_prefix(const TaylorSeries& s, int max_terms) {
  std::string out = "[";
  const int n = std::min(s.order(), max_terms - 1);
  for (int k = 0; k <= n; ++k) {
    if (k) out += ", ";
    out += to_string(s[k]);
  }
  if (n < s.order()) out += ", ...";
  out += "]";
  return out;
}

}  // namespace invcoef
