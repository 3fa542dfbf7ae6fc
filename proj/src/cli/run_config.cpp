#include "pwell/cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace pwell::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& v) {
  double out = 0;
  const auto* end = v.data() + v.size();
  const auto r = std::from_chars(v.data(), end, out);
  if (r.ec != std::errc() || r.ptr != end) throw ConfigError(key + ": not a number: '" + v + "'");
  return out;
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
  std::int64_t out = 0;
  const auto* end = v.data() + v.size();
  const auto r = std::from_chars(v.data(), end, out);
  if (r.ec != std::errc() || r.ptr != end) throw ConfigError(key + ": not an integer: '" + v + "'");
  return out;
}

std::string real_text(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(trim(cur));
  return parts;
}

}  // namespace

TGrid parse_grid(const std::string& text) {
  const auto p = split(text, ':');
  if (p.size() != 4) throw ConfigError("t grid must look like min:max:points:log|linear, got '" + text + "'");
  TGrid g;
  g.t_min = parse_real("t", p[0]);
  g.t_max = parse_real("t", p[1]);
  const auto n = parse_int("t", p[2]);
  if (n < 1 || n > 1000000) throw ConfigError("t: points must be between 1 and 1000000");
  g.points = int(n);
  if (p[3] == "log") g.log_spacing = true;
  else if (p[3] == "linear") g.log_spacing = false;
  else throw ConfigError("t: spacing must be log or linear, got '" + p[3] + "'");
  return g;
}

std::string format_grid(const TGrid& g) {
  return real_text(g.t_min) + ":" + real_text(g.t_max) + ":" + std::to_string(g.points) + ":" +
         (g.log_spacing ? "log" : "linear");
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "stat", "N", "t", "digits", "working-digits", "max-digits", "abs-tol", "rel-tol",
      "jobs", "out", "format", "approx", "kind", "at"};
  return keys;
}

void apply_setting(RunConfig& cfg, const std::string& raw_key, const std::string& raw_value) {
  std::string key = trim(raw_key);
  std::replace(key.begin(), key.end(), '_', '-');
  const std::string v = trim(raw_value);
  if (key == "stat") {
    if (v == "boson") cfg.statistics = Statistics::boson();
    else if (v == "fermion") cfg.statistics = Statistics::fermion();
    else throw ConfigError("stat must be boson or fermion, got '" + v + "'");
  } else if (key == "N") {
    cfg.particles_N = parse_int(key, v);
  } else if (key == "t") {
    cfg.t_grid = parse_grid(v);
  } else if (key == "digits") {
    cfg.output.digits = int(parse_int(key, v));
  } else if (key == "working-digits") {
    cfg.precision.working_digits = int(parse_int(key, v));
  } else if (key == "max-digits") {
    cfg.precision.max_digits = int(parse_int(key, v));
  } else if (key == "abs-tol") {
    cfg.precision.target_abs_error = parse_real(key, v);
  } else if (key == "rel-tol") {
    cfg.precision.target_rel_error = parse_real(key, v);
  } else if (key == "jobs") {
    cfg.jobs = int(parse_int(key, v));
  } else if (key == "out") {
    cfg.output.path = v;
  } else if (key == "format") {
    if (v == "csv") cfg.output.format = OutputFormat::csv;
    else if (v == "json") cfg.output.format = OutputFormat::json;
    else throw ConfigError("format must be csv or json, got '" + v + "'");
  } else if (key == "approx") {
    cfg.approximations.clear();
    for (auto& a : split(v, ','))
      if (!a.empty()) cfg.approximations.push_back(a);
  } else if (key == "kind") {
    cfg.report_kind = v;
  } else if (key == "at") {
    if (v.empty()) cfg.at.reset();
    else cfg.at = parse_real(key, v);
  } else {
    throw ConfigError("unknown setting '" + key + "'");
  }
}

void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key=value");
    try {
      apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  apply_config_text(cfg, text.str(), path);
}

void RunConfig::validate() const {
  if (particles_N < 1) throw ConfigError("N must be at least 1");
  if (!(t_grid.t_min > 0)) throw ConfigError("t: t_min must be positive");
  if (t_grid.points > 1 && !(t_grid.t_min < t_grid.t_max)) throw ConfigError("t: need t_min < t_max");
  if (t_grid.points < 1) throw ConfigError("t: points must be at least 1");
  if (output.digits < 1) throw ConfigError("digits must be at least 1");
  if (output.digits > precision.working_digits)
    throw ConfigError("digits must not exceed the working precision (" + std::to_string(precision.working_digits) + ")");
  if (jobs < 0) throw ConfigError("jobs must be non-negative");
  if (at && !(*at >= 0)) throw ConfigError("at must be non-negative");
  try {
    precision.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

std::string RunConfig::to_key_values() const {
  std::ostringstream s;
  s << "stat=" << to_string(statistics) << "\n";
  s << "N=" << particles_N << "\n";
  s << "t=" << format_grid(t_grid) << "\n";
  s << "digits=" << output.digits << "\n";
  s << "working-digits=" << precision.working_digits << "\n";
  s << "max-digits=" << precision.max_digits << "\n";
  s << "abs-tol=" << real_text(precision.target_abs_error) << "\n";
  s << "rel-tol=" << real_text(precision.target_rel_error) << "\n";
  s << "jobs=" << jobs << "\n";
  s << "out=" << output.path << "\n";
  s << "format=" << (output.format == OutputFormat::csv ? "csv" : "json") << "\n";
  s << "approx=";
  for (std::size_t i = 0; i < approximations.size(); ++i) s << (i ? "," : "") << approximations[i];
  s << "\n";
  s << "kind=" << report_kind << "\n";
  s << "at=" << (at ? real_text(*at) : "") << "\n";
  return s.str();
}

}  // namespace pwell::cli
