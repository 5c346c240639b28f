#include "quasidim/app/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace quasidim::app {

namespace {

std::string position_message(const std::string& what, std::size_t line, std::size_t column) {
  std::ostringstream os;
  os << "config:" << line << ":" << column << ": " << what;
  return os.str();
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidArgument("expected a number, got '" + std::string(s) + "'");
  }
  return v;
}

template <class Int>
Int parse_int(std::string_view s) {
  s = trim(s);
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidArgument("expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

bool parse_bool(std::string_view s) {
  s = trim(s);
  if (s == "true" || s == "yes" || s == "on" || s == "1") return true;
  if (s == "false" || s == "no" || s == "off" || s == "0") return false;
  throw InvalidArgument("expected a boolean, got '" + std::string(s) + "'");
}

template <class T, class F>
std::vector<T> parse_list(std::string_view s, F item) {
  std::vector<T> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(item(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

using Setter = std::function<void(ExperimentConfig&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table{
      {"grid.n", [](auto& c, auto v) { c.grid.n = parse_int<std::size_t>(v); }},
      {"grid.half_width", [](auto& c, auto v) { c.grid.half_width = parse_double(v); }},
      {"grid.center", [](auto& c, auto v) { c.grid.center = parse_complex(v); }},
      {"generator.kind", [](auto& c, auto v) { c.generator.kind = parse_generator_kind(trim(v)); }},
      {"generator.antisymmetrize", [](auto& c, auto v) { c.generator.antisymmetrize = parse_bool(v); }},
      {"generator.support_radius", [](auto& c, auto v) { c.generator.support_radius = parse_double(v); }},
      {"generator.support_center", [](auto& c, auto v) { c.generator.support_center = parse_complex(v); }},
      {"generator.bumps", [](auto& c, auto v) { c.generator.bumps = parse_int<int>(v); }},
      {"generator.axis_clearance", [](auto& c, auto v) { c.generator.axis_clearance = parse_double(v); }},
      {"experiment.seed", [](auto& c, auto v) { c.seed = parse_int<std::uint64_t>(v); }},
      {"experiment.seeds", [](auto& c, auto v) { c.seeds = parse_int<std::size_t>(v); }},
      {"experiment.k", [](auto& c, auto v) { c.k_values = parse_list<double>(v, parse_double); }},
      {"experiment.rho", [](auto& c, auto v) { c.rho = parse_double(v); }},
      {"experiment.rhos", [](auto& c, auto v) { c.rho_values = parse_list<double>(v, parse_double); }},
      {"experiment.lambdas", [](auto& c, auto v) { c.lambdas = parse_list<cplx>(v, parse_complex); }},
      {"solver.tol", [](auto& c, auto v) { c.solver.tol = parse_double(v); }},
      {"solver.max_iter", [](auto& c, auto v) { c.solver.max_iter = parse_int<int>(v); }},
      {"solver.residual_acceptance", [](auto& c, auto v) { c.solver.residual_acceptance = parse_double(v); }},
      {"decompose.tol", [](auto& c, auto v) { c.decompose.tol = parse_double(v); }},
      {"decompose.curve_points", [](auto& c, auto v) { c.decompose.curve_points = parse_int<std::size_t>(v); }},
      {"thermo.intervals", [](auto& c, auto v) { c.thermo.intervals = parse_int<std::size_t>(v); }},
      {"thermo.qs_samples", [](auto& c, auto v) { c.thermo.qs_samples = parse_int<std::size_t>(v); }},
      {"thermo.circle_radius", [](auto& c, auto v) { c.thermo.circle_radius = parse_double(v); }},
      {"thermo.circle_points", [](auto& c, auto v) { c.thermo.circle_points = parse_int<std::size_t>(v); }},
      {"thermo.random_distributions",
       [](auto& c, auto v) { c.thermo.random_distributions = parse_int<std::size_t>(v); }},
      {"harnack.densities", [](auto& c, auto v) { c.harnack.densities = parse_int<std::size_t>(v); }},
      {"harnack.radii", [](auto& c, auto v) { c.harnack.radii = parse_list<double>(v, parse_double); }},
      {"harnack.samples", [](auto& c, auto v) { c.harnack.samples = parse_int<std::size_t>(v); }},
      {"harnack.degree", [](auto& c, auto v) { c.harnack.degree = parse_int<int>(v); }},
      {"harnack.slack", [](auto& c, auto v) { c.harnack.harnack_slack = parse_double(v); }},
      {"harnack.schwarz_slack", [](auto& c, auto v) { c.harnack.schwarz_slack = parse_double(v); }},
      {"dimension.box_coarsest", [](auto& c, auto v) { c.dimension.box_coarsest = parse_int<int>(v); }},
      {"dimension.box_finest", [](auto& c, auto v) { c.dimension.box_finest = parse_int<int>(v); }},
      {"dimension.ladder_min", [](auto& c, auto v) { c.dimension.ladder_min = parse_int<int>(v); }},
      {"dimension.ladder_max", [](auto& c, auto v) { c.dimension.ladder_max = parse_int<int>(v); }},
      {"dimension.curve_points", [](auto& c, auto v) { c.dimension.curve_points = parse_int<std::size_t>(v); }},
      {"output.dir", [](auto& c, auto v) { c.out_dir = std::string(trim(v)); }},
  };
  return table;
}

}  // namespace

ConfigError::ConfigError(const std::string& what, std::size_t line, std::size_t column)
    : FormatError(position_message(what, line, column)), line_(line), column_(column) {}

cplx parse_complex(std::string_view text) {
  std::string s;
  for (const char c : text) {
    if (!is_space(c)) s.push_back(c);
  }
  if (s.empty()) throw InvalidArgument("expected a complex number, got ''");
  if (s.back() != 'i') return {parse_double(s), 0.0};
  s.pop_back();
  // split at the last sign that is not the leading one and not part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const auto imag_part = [](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t);
  };
  if (split == std::string::npos) return {0.0, imag_part(s)};
  return {parse_double(std::string_view(s).substr(0, split)), imag_part(std::string_view(s).substr(split))};
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  std::string section;
  std::size_t line_no = 0;
  std::istringstream lines{std::string(text)};
  for (std::string owned; std::getline(lines, owned);) {
    ++line_no;
    std::string_view line = owned;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string_view::npos) line = line.substr(0, comment);
    const std::size_t indent = line.find_first_not_of(" \t\r");
    if (indent == std::string_view::npos) continue;
    const std::size_t col = indent + 1;
    const std::string_view body = trim(line);

    if (body.front() == '[') {
      if (body.back() != ']') throw ConfigError("unterminated section header", line_no, col + body.size());
      section = std::string(trim(body.substr(1, body.size() - 2)));
      if (section.empty()) throw ConfigError("empty section name", line_no, col + 1);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line_no, col);
    const std::string_view key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("missing key before '='", line_no, eq + 1);
    const std::string_view value_raw = line.substr(eq + 1);
    const std::size_t value_col = eq + 2 + std::min(value_raw.find_first_not_of(" \t"), value_raw.size());
    if (trim(value_raw).empty()) throw ConfigError("missing value for '" + std::string(key) + "'", line_no, value_col);

    const std::string full = section.empty() ? std::string(key) : section + "." + std::string(key);
    const auto it = setters().find(full);
    if (it == setters().end()) throw ConfigError("unknown key '" + full + "'", line_no, col);
    try {
      it->second(cfg, trim(value_raw));
    } catch (const InvalidArgument& e) {
      throw ConfigError(std::string(e.what()) + " for '" + full + "'", line_no, value_col);
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void ExperimentConfig::validate() const {
  grid.validate();
  if (k_values.empty()) throw InvalidArgument("experiment.k must list at least one value");
  for (const double k : k_values) {
    if (!(k >= 0.0 && k < 1.0)) throw InvalidArgument("every k must lie in [0, 1)");
  }
  if (!(rho > 0.0 && rho < 1.0)) throw InvalidArgument("experiment.rho must lie in (0, 1)");
  for (const double r : rho_values) {
    if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("every rho must lie in (0, 1)");
  }
  for (const cplx l : lambdas) {
    if (!(std::abs(l) <= rho)) throw InvalidArgument("every lambda must satisfy |lambda| <= rho");
  }
  if (seeds == 0) throw InvalidArgument("experiment.seeds must be positive");
  if (!(solver.tol > 0.0) || solver.max_iter <= 0) throw InvalidArgument("invalid solver settings");
  if (thermo.intervals < 2 || thermo.circle_points < 8) {
    throw InvalidArgument("thermo needs intervals >= 2 and circle_points >= 8");
  }
  if (dimension.ladder_max - dimension.ladder_min < 3) throw InvalidArgument("dimension ladder needs >= 4 rungs");
}

}  // namespace quasidim::app
