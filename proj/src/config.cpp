#include "invcoef/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "invcoef/errors.hpp"

namespace invcoef {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

struct FieldError {
  std::string message;
};

long parse_int(const std::string& v) {
  long out = 0;
  const auto* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) throw FieldError{"expected an integer, got '" + v + "'"};
  return out;
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw FieldError{"expected true or false, got '" + v + "'"};
}

Rational parse_exact(const std::string& v) {
  try {
    return parse_rational(v);
  } catch (const ParseError& e) {
    throw FieldError{e.what()};
  }
}

std::vector<int> parse_int_list(const std::string& v, std::initializer_list<int> allowed) {
  std::vector<int> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const long x = parse_int(item);
    bool ok = false;
    for (int a : allowed) ok = ok || a == x;
    if (!ok) throw FieldError{"value " + item + " not allowed"};
    out.push_back(static_cast<int>(x));
  }
  return out;
}

}  // namespace

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "?";
}

SuiteConfig parse_config(std::string_view text, const std::string& source) {
  SuiteConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    const std::string where = source + ":" + std::to_string(line_no);
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key = trim(std::string_view(stripped).substr(0, eq));
    const std::string value = trim(std::string_view(stripped).substr(eq + 1));
    try {
      if (key == "class") {
        if (value != "all" && !parse_class_kind(value)) throw FieldError{"unknown class '" + value + "'"};
        cfg.class_name = value;
      } else if (key == "A") {
        cfg.A = parse_exact(value);
      } else if (key == "B") {
        cfg.B = parse_exact(value);
      } else if (key == "N") {
        const long n = parse_int(value);
        if (n < 0 || n > 200) throw FieldError{"N must lie in 0..200"};
        cfg.N = static_cast<int>(n);
      } else if (key == "j_min") {
        cfg.j_min = static_cast<int>(parse_int(value));
        if (cfg.j_min < 1) throw FieldError{"j_min must be >= 1"};
      } else if (key == "j_max") {
        cfg.j_max = static_cast<int>(parse_int(value));
      } else if (key == "a_min") {
        cfg.a_min = parse_exact(value);
      } else if (key == "a_max") {
        cfg.a_max = parse_exact(value);
      } else if (key == "a_step") {
        cfg.a_step = parse_exact(value);
        if (cfg.a_step <= 0) throw FieldError{"a_step must be positive"};
      } else if (key == "e") {
        cfg.e_values = parse_int_list(value, {0, 1});
      } else if (key == "sigma") {
        cfg.sigmas = parse_int_list(value, {1, -1});
      } else if (key == "seed") {
        const long s = parse_int(value);
        if (s < 0) throw FieldError{"seed must be non-negative"};
        cfg.seed = static_cast<std::uint64_t>(s);
      } else if (key == "format") {
        if (value == "json") cfg.format = OutputFormat::Json;
        else if (value == "csv") cfg.format = OutputFormat::Csv;
        else if (value == "text") cfg.format = OutputFormat::Text;
        else throw FieldError{"expected json, csv or text"};
      } else if (key == "exact_only") {
        cfg.exact_only = parse_bool(value);
      } else if (key == "unproven") {
        cfg.unproven = parse_bool(value);
      } else if (key == "parallel") {
        cfg.parallel = parse_bool(value);
      } else if (key == "mutate") {
        const auto m = parse_mutation(value);
        if (!m) throw FieldError{"unknown mutation '" + value + "'"};
        cfg.mutation = *m;
      } else if (key == "product_sum_samples") {
        const long n = parse_int(value);
        if (n < 0) throw FieldError{"must be non-negative"};
        cfg.product_sum_samples = static_cast<int>(n);
      } else if (key == "search_n_max") {
        const long n = parse_int(value);
        if (n < 0 || n > 30) throw FieldError{"must lie in 0..30"};
        cfg.search_n_max = static_cast<int>(n);
      } else if (key == "theta_steps") {
        const long n = parse_int(value);
        if (n < 1) throw FieldError{"must be >= 1"};
        cfg.theta_steps = static_cast<int>(n);
      } else {
        throw ConfigError(where + ": unknown key '" + key + "'");
      }
    } catch (const FieldError& e) {
      throw ConfigError(where + ": field '" + key + "': " + e.message);
    }
  }
  return cfg;
}

SuiteConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

std::vector<ClassSpec> suite_specs(const SuiteConfig& cfg) {
  if (cfg.class_name != "all") {
    const ClassKind kind = *parse_class_kind(cfg.class_name);
    return {ClassSpec{kind, kind == ClassKind::Noshiro ? Rational(1) : cfg.A, cfg.B}};
  }
  return {
      {ClassKind::Starlike, 3, 1},
      {ClassKind::Starlike, 3, 0},
      {ClassKind::Starlike, rat(5, 2), rat(-1, 2)},
      {ClassKind::Convex, 2, 1},
      {ClassKind::Convex, 3, 1},
      {ClassKind::Convex, 5, 1},
      {ClassKind::Convex, 3, 0},
      {ClassKind::Convex, rat(5, 2), rat(-1, 2)},
      {ClassKind::Noshiro, 1, -1},
      {ClassKind::Noshiro, 1, rat(-1, 2)},
      {ClassKind::Noshiro, 1, 0},
      {ClassKind::Noshiro, 1, rat(1, 2)},
      {ClassKind::MeromorphicStarlike, 3, 1},
      {ClassKind::MeromorphicStarlike, 3, 0},
  };
}

std::vector<SchwarzSpec> schwarz_grid(const SuiteConfig& cfg) {
  std::vector<Rational> as;
  for (Rational a = cfg.a_min; a <= cfg.a_max; a += cfg.a_step) {
    if (abs(a) < 1) as.push_back(a);
  }
  std::vector<SchwarzSpec> out;
  for (int j = cfg.j_min; j <= cfg.j_max; ++j) {
    for (int e : cfg.e_values) {
      const std::vector<Rational> a_values = e == 0 ? std::vector<Rational>{Rational(0)} : as;
      for (const Rational& a : a_values) {
        for (int sigma : cfg.sigmas) out.push_back(SchwarzSpec{j, a, e, sigma});
      }
    }
  }
  return out;
}

}  // namespace invcoef
