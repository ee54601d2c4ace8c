// invcoef: bound tables, extremal listings, verification runs and the
// numeric sharpness search.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config/regime error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "invcoef/bounds.hpp"
#include "invcoef/errors.hpp"
#include "invcoef/search.hpp"
#include "invcoef/serialize.hpp"
#include "invcoef/suite.hpp"

using namespace invcoef;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int to_int(const std::string& s, const std::string& what) {
  int v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError(what + ": expected an integer, got '" + s + "'");
  return v;
}

// "2..5" or "7".
std::pair<int, int> parse_range(const std::string& s, const std::string& what) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(s, what);
    return {v, v};
  }
  const int lo = to_int(s.substr(0, dots), what);
  const int hi = to_int(s.substr(dots + 2), what);
  if (lo > hi) throw UsageError(what + ": empty range '" + s + "'");
  return {lo, hi};
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw UsageError("--format: expected json, csv or text");
}

ClassSpec make_spec(const std::string& cls, const std::string& A, const std::string& B) {
  const std::string name = cls == "convex-general" ? "convex" : cls;
  const auto kind = parse_class_kind(name);
  if (!kind) throw UsageError("--class: unknown class '" + cls + "'");
  ClassSpec spec{*kind, *kind == ClassKind::Noshiro ? Rational(1) : parse_rational(A), parse_rational(B)};
  if (*kind == ClassKind::Noshiro && A != "1" && !A.empty()) {
    if (parse_rational(A) != 1) throw InvalidSpec("the Noshiro class has A = 1");
  }
  return spec;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(to_int(item, what));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse-coefficient bounds for Janowski-type classes in exact arithmetic"};
  app.require_subcommand(1);

  std::string cls, A_str, B_str, format_str = "text";

  auto* bound = app.add_subcommand("bound", "Print a table of coefficient bounds");
  std::string kind_str = "inverse", n_range = "2..6";
  bound->add_option("--class", cls, "starlike | convex | convex-general | noshiro | meromorphic")->required();
  bound->add_option("--kind", kind_str, "inverse | delta | coeff");
  bound->add_option("--A", A_str, "A as an exact rational");
  bound->add_option("--B", B_str, "B as an exact rational")->required();
  bound->add_option("--n", n_range, "index or range lo..hi");
  bound->add_option("--format", format_str, "json | csv | text");

  auto* ext = app.add_subcommand("extremal", "List the extremal function and its inverse");
  int N = 10;
  ext->add_option("--class", cls, "starlike | convex | noshiro | meromorphic")->required();
  ext->add_option("--A", A_str, "A as an exact rational");
  ext->add_option("--B", B_str, "B as an exact rational")->required();
  ext->add_option("--N", N, "truncation order");
  ext->add_option("--format", format_str, "json | csv | text");

  auto* ver = app.add_subcommand("verify", "Run the verification suite");
  std::string config_path, out_path, verify_format, mutate;
  bool unproven = false, exact_only = false, serial = false;
  ver->add_option("--config", config_path, "suite configuration file")->required();
  ver->add_option("--out", out_path, "write the report here instead of standard output");
  ver->add_option("--format", verify_format, "json | csv | text (overrides the config)");
  ver->add_flag("--unproven", unproven, "record rows outside the proven ranges");
  ver->add_flag("--exact-only", exact_only, "skip the numeric search");
  ver->add_flag("--serial", serial, "run without OpenMP");
  ver->add_option("--mutate", mutate, "corrupt one bound family (harness self-test)");

  auto* srch = app.add_subcommand("search", "Numeric sharpness search over the Schwarz grid");
  int n_search = 2;
  std::string j_range = "1..3", e_list = "0,1", sigma_list = "1,-1";
  SearchGrid grid;
  std::string search_format = "json";
  srch->add_option("--class", cls, "starlike | convex | noshiro | meromorphic")->required();
  srch->add_option("--A", A_str, "A as an exact rational");
  srch->add_option("--B", B_str, "B as an exact rational")->required();
  srch->add_option("--n", n_search, "coefficient index")->required();
  srch->add_option("--j", j_range, "valuation range lo..hi");
  srch->add_option("--a-min", grid.a_min);
  srch->add_option("--a-max", grid.a_max);
  srch->add_option("--a-step", grid.a_step);
  srch->add_option("--e", e_list, "comma list from {0,1}");
  srch->add_option("--sigma", sigma_list, "comma list from {1,-1}");
  srch->add_option("--theta-steps", grid.theta_steps);
  srch->add_flag("--serial", serial, "run without OpenMP");
  srch->add_option("--format", search_format, "json | csv | text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bound->parsed()) {
      const auto [lo, hi] = parse_range(n_range, "--n");
      const OutputFormat fmt = parse_format(format_str);
      const ClassSpec spec = make_spec(cls, A_str.empty() ? "1" : A_str, B_str);
      BoundTable table;
      if (cls == "convex-general") {
        if (kind_str != "inverse") throw UsageError("convex-general has inverse bounds only");
        table = make_convex_general_table(spec.A, spec.B, lo, hi);
      } else if (spec.kind == ClassKind::MeromorphicStarlike) {
        if (kind_str == "coeff") table = make_bound_table(spec, BoundKind::MeromCoeff, lo, hi);
        else if (kind_str == "inverse") table = make_bound_table(spec, BoundKind::MeromInverseCoeff, lo, hi);
        else throw UsageError("meromorphic bounds: --kind coeff or inverse");
      } else if (spec.kind == ClassKind::Noshiro) {
        if (kind_str != "inverse") throw UsageError("noshiro has inverse bounds only");
        table = make_bound_table(spec, BoundKind::NoshiroInverseCoeff, lo, hi);
      } else if (kind_str == "inverse") {
        table = make_bound_table(spec, BoundKind::InverseCoeff, lo, hi);
      } else if (kind_str == "delta") {
        table = make_bound_table(spec, BoundKind::DeltaCoeff, lo, hi);
      } else {
        throw UsageError("--kind: expected inverse, delta or coeff");
      }
      std::cout << render(table, fmt);
      return kExitOk;
    }
    if (ext->parsed()) {
      const OutputFormat fmt = parse_format(format_str);
      const ClassSpec spec = make_spec(cls, A_str.empty() ? "1" : A_str, B_str);
      std::cout << render(make_extremal_listing(spec, N), fmt);
      return kExitOk;
    }
    if (ver->parsed()) {
      SuiteConfig cfg = load_config(config_path);
      if (!verify_format.empty()) cfg.format = parse_format(verify_format);
      if (unproven) cfg.unproven = true;
      if (exact_only) cfg.exact_only = true;
      if (serial) cfg.parallel = false;
      if (!mutate.empty()) {
        const auto m = parse_mutation(mutate);
        if (!m) throw UsageError("--mutate: unknown mutation '" + mutate + "'");
        cfg.mutation = *m;
      }
      const VerificationReport rep = run_suite(cfg);
      const std::string text = render(rep, cfg.format);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write '" + out_path + "'");
        out << text;
        const Summary s = rep.summary();
        std::cerr << "verify: " << rep.status() << " (pass " << s.pass << ", fail " << s.fail << ", skipped "
                  << s.skipped << ")\n";
      }
      return rep.ok() ? kExitOk : kExitFail;
    }
    if (srch->parsed()) {
      const OutputFormat fmt = parse_format(search_format);
      const ClassSpec spec = make_spec(cls, A_str.empty() ? "1" : A_str, B_str);
      std::tie(grid.j_min, grid.j_max) = parse_range(j_range, "--j");
      grid.e_values = parse_int_list(e_list, "--e");
      grid.sigmas = parse_int_list(sigma_list, "--sigma");
      const SearchResult r = serial ? sharpness_search_serial(spec, n_search, grid) : sharpness_search(spec, n_search, grid);
      std::cout << render(r, fmt);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
