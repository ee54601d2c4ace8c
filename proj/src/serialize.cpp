#include "invcoef/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "invcoef/checks.hpp"
#include "invcoef/errors.hpp"
#include "invcoef/inversion.hpp"
#include "json.hpp"

namespace invcoef {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string opt_string(const std::optional<Rational>& q) { return q ? to_string(*q) : std::string(); }

Json opt_json(const std::optional<Rational>& q) { return q ? Json(to_string(*q)) : Json(nullptr); }

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

// Left-aligned plain table.
std::string text_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string out;
    for (std::size_t c = 0; c < r.size(); ++c) {
      out += r[c];
      if (c + 1 < r.size()) out += std::string(width[c] - r[c].size() + 2, ' ');
    }
    return out + "\n";
  };
  std::string out = line(header);
  for (const auto& r : rows) out += line(r);
  return out;
}

Json spec_json(const ClassSpec& spec) {
  Json j;
  j["class"] = std::string(to_string(spec.kind));
  j["A"] = to_string(spec.A);
  j["B"] = to_string(spec.B);
  j["regime"] = std::string(to_string(validate(spec)));
  return j;
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string decimal(const Rational& q) { return fmt_double(to_double(q)); }

ExtremalListing make_extremal_listing(const ClassSpec& spec, int N) {
  if (validate(spec) == Regime::Invalid) throw InvalidSpec(spec_label(spec) + " violates A > B, -1 <= B <= 1");
  ExtremalListing out{spec, N, {}};
  const bool bounded = spec.kind == ClassKind::Noshiro || validate(spec) == Regime::Generalized;
  if (spec.kind == ClassKind::MeromorphicStarlike) {
    const TaylorSeries f = extremal_series(ClassSpec{ClassKind::Starlike, spec.A, spec.B}, N + 2);
    const LaurentTail g = to_meromorphic(f);
    const std::vector<Rational> gt = meromorphic_inverse(f, N);
    for (int n = 0; n <= N; ++n) {
      ExtremalRow row;
      row.n = n;
      row.coeff = g.b(n);
      row.inverse = gt[static_cast<std::size_t>(n)];
      if (bounded) {
        const Bound b = bound_merom_coeff(spec.A, spec.B, n);
        row.coeff_bound = b.value;
        row.proven = b.proven;
        row.inverse_bound = bound_merom_inverse(spec.A, spec.B, n);
      }
      out.rows.push_back(std::move(row));
    }
    return out;
  }
  if (N < 1) throw OrderError("extremal listing needs N >= 1");
  const TaylorSeries f = extremal_series(spec, N);
  const TaylorSeries F = revert_iterative(f);
  std::optional<BoundTable> table;
  if (bounded && N >= 2) {
    table = spec.kind == ClassKind::Noshiro ? make_bound_table(spec, BoundKind::NoshiroInverseCoeff, 2, N)
                                            : make_bound_table(spec, BoundKind::InverseCoeff, 2, N);
  }
  for (int n = 1; n <= N; ++n) {
    ExtremalRow row;
    row.n = n;
    row.coeff = f[n];
    row.inverse = F[n];
    if (n == 1) {
      row.inverse_bound = Rational(1);
    } else if (table) {
      const BoundRow& b = table->rows[static_cast<std::size_t>(n - 2)];
      row.inverse_bound = b.bound;
      row.proven = b.proven;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string render(const VerificationReport& rep, OutputFormat format) {
  const Summary s = rep.summary();
  switch (format) {
    case OutputFormat::Json: {
      Json j;
      j["suite"] = rep.suite();
      j["status"] = std::string(rep.status());
      j["summary"] = Json{{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}};
      j["cases"] = Json::array();
      for (const auto& c : rep.cases()) {
        Json cj;
        cj["id"] = c.id;
        cj["claim"] = c.claim;
        cj["inputs"] = c.inputs;
        cj["expected"] = c.expected;
        cj["actual"] = c.actual;
        cj["verdict"] = std::string(to_string(c.verdict));
        cj["proven"] = c.proven;
        cj["note"] = c.note;
        cj["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
        j["cases"].push_back(std::move(cj));
      }
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = csv_line({"id", "claim", "inputs", "expected", "actual", "verdict", "proven", "note", "witness"});
      for (const auto& c : rep.cases()) {
        out += csv_line({c.id, c.claim, c.inputs, c.expected, c.actual, std::string(to_string(c.verdict)),
                         c.proven ? "true" : "false", c.note, c.witness.value_or("")});
      }
      return out;
    }
    case OutputFormat::Text: {
      std::ostringstream out;
      out << "suite " << rep.suite() << ": " << rep.status() << " (pass " << s.pass << ", fail " << s.fail
          << ", skipped " << s.skipped << ")\n";
      for (const auto& c : rep.cases()) {
        if (c.verdict == Verdict::Pass) continue;
        out << to_string(c.verdict) << "  " << c.id << "  expected " << c.expected << ", actual " << c.actual;
        if (!c.note.empty()) out << "  [" << c.note << "]";
        out << "\n";
        if (c.witness) out << "    witness: " << *c.witness << "\n";
      }
      return out.str();
    }
  }
  return {};
}

std::string render(const BoundTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      Json j = spec_json(table.spec);
      j["kind"] = std::string(to_string(table.kind));
      j["rows"] = Json::array();
      for (const auto& r : table.rows) {
        j["rows"].push_back(Json{{"n", r.n}, {"bound", to_string(r.bound)}, {"decimal", decimal(r.bound)},
                                 {"proven", r.proven}});
      }
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = csv_line({"n", "bound", "decimal", "proven"});
      for (const auto& r : table.rows) {
        out += csv_line({std::to_string(r.n), to_string(r.bound), decimal(r.bound), r.proven ? "true" : "false"});
      }
      return out;
    }
    case OutputFormat::Text: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : table.rows) {
        rows.push_back({std::to_string(r.n), to_string(r.bound), decimal(r.bound), r.proven ? "yes" : "no"});
      }
      return spec_label(table.spec) + " " + std::string(to_string(table.kind)) + "\n" +
             text_table({"n", "bound", "decimal", "proven"}, rows);
    }
  }
  return {};
}

std::string render(const ExtremalListing& listing, OutputFormat format) {
  const bool merom = listing.spec.kind == ClassKind::MeromorphicStarlike;
  const std::string coeff = merom ? "b" : "a";
  const std::string inverse = merom ? "gt" : "gamma";
  switch (format) {
    case OutputFormat::Json: {
      Json j = spec_json(listing.spec);
      j["N"] = listing.N;
      j["rows"] = Json::array();
      for (const auto& r : listing.rows) {
        Json rj;
        rj["n"] = r.n;
        rj[coeff] = to_string(r.coeff);
        if (merom) rj[coeff + "_bound"] = opt_json(r.coeff_bound);
        rj[inverse] = to_string(r.inverse);
        rj[inverse + "_bound"] = opt_json(r.inverse_bound);
        rj["proven"] = r.proven;
        j["rows"].push_back(std::move(rj));
      }
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::vector<std::string> header{"n", coeff};
      if (merom) header.push_back(coeff + "_bound");
      header.insert(header.end(), {inverse, inverse + "_bound", "proven"});
      std::string out = csv_line(header);
      for (const auto& r : listing.rows) {
        std::vector<std::string> f{std::to_string(r.n), to_string(r.coeff)};
        if (merom) f.push_back(opt_string(r.coeff_bound));
        f.insert(f.end(), {to_string(r.inverse), opt_string(r.inverse_bound), r.proven ? "true" : "false"});
        out += csv_line(f);
      }
      return out;
    }
    case OutputFormat::Text: {
      std::vector<std::string> header{"n", coeff};
      if (merom) header.push_back("bound");
      header.insert(header.end(), {inverse, "bound", "proven"});
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : listing.rows) {
        std::vector<std::string> f{std::to_string(r.n), to_string(r.coeff)};
        if (merom) f.push_back(r.coeff_bound ? to_string(*r.coeff_bound) : "-");
        f.insert(f.end(), {to_string(r.inverse), r.inverse_bound ? to_string(*r.inverse_bound) : "-",
                           r.proven ? "yes" : "no"});
        rows.push_back(std::move(f));
      }
      return spec_label(listing.spec) + " extremal, N=" + std::to_string(listing.N) + "\n" + text_table(header, rows);
    }
  }
  return {};
}

std::string render(const SearchResult& r, OutputFormat format) {
  const auto& b = r.best;
  switch (format) {
    case OutputFormat::Json: {
      Json j = spec_json(r.spec);
      j["n"] = r.n;
      j["grid"] = r.grid;
      j["points"] = r.points;
      j["best"] = Json{{"j", b.j}, {"a", b.a}, {"e", b.e}, {"sigma", b.sigma}, {"theta_index", b.theta_index},
                       {"theta", b.theta}};
      j["best_value"] = r.best_value;
      j["bound"] = r.bound;
      j["gap"] = r.gap;
      j["extremal_in_grid"] = r.extremal_in_grid;
      j["extremal_value"] = r.extremal_value;
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = csv_line({"class", "A", "B", "n", "points", "j", "a", "e", "sigma", "theta", "best_value",
                                  "bound", "gap", "extremal_in_grid", "extremal_value"});
      out += csv_line({std::string(to_string(r.spec.kind)), to_string(r.spec.A), to_string(r.spec.B),
                       std::to_string(r.n), std::to_string(r.points), std::to_string(b.j), fmt_double(b.a),
                       std::to_string(b.e), std::to_string(b.sigma), fmt_double(b.theta), fmt_double(r.best_value),
                       fmt_double(r.bound), fmt_double(r.gap), r.extremal_in_grid ? "true" : "false",
                       fmt_double(r.extremal_value)});
      return out;
    }
    case OutputFormat::Text: {
      std::ostringstream out;
      out << spec_label(r.spec) << " n=" << r.n << " over " << r.points << " points (" << r.grid << ")\n"
          << "best " << fmt_double(r.best_value) << " at j=" << b.j << " a=" << fmt_double(b.a) << " e=" << b.e
          << " sigma=" << b.sigma << " theta=" << fmt_double(b.theta) << "\n"
          << "bound " << fmt_double(r.bound) << " gap " << fmt_double(r.gap) << "\n";
      return out.str();
    }
  }
  return {};
}

}  // namespace invcoef
