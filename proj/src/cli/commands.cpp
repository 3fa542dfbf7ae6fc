#include "pwell/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pwell/equilibrium.hpp"
#include "pwell/exact_curve.hpp"
#include "pwell/high_temp.hpp"
#include "pwell/low_temp.hpp"
#include "pwell/mid_temp_boson.hpp"
#include "pwell/mid_temp_fermion.hpp"
#include "pwell/sweep.hpp"

namespace pwell::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Approximation {
  std::string name;
  std::optional<StatisticsKind> only;
  std::function<double(std::int64_t, double, Statistics)> eval;
};

const std::vector<Approximation>& registry() {
  static const std::vector<Approximation> r = {
      {"high_leading", std::nullopt,
       [](std::int64_t N, double t, Statistics) { return delta_f_asymptote(N, t, AsymptoteOrder::leading); }},
      {"high_next", std::nullopt,
       [](std::int64_t N, double t, Statistics s) { return delta_f_asymptote(N, t, AsymptoteOrder::next, s); }},
      {"boson_medium_exactS", StatisticsKind::boson,
       [](std::int64_t N, double t, Statistics) {
         return delta_f_medium_boson(N, t, solve_t_alpha(WellSide::plus(), N, t, TAlphaMethod::exact_S_solve),
                                     solve_t_alpha(WellSide::minus(), N, t, TAlphaMethod::exact_S_solve));
       }},
      {"boson_quad_naive", StatisticsKind::boson,
       [](std::int64_t N, double t, Statistics) { return delta_f_quadratic(ApproximantVariant::naive, N, t); }},
      {"boson_quad_improved", StatisticsKind::boson,
       [](std::int64_t N, double t, Statistics) { return delta_f_quadratic(ApproximantVariant::improved, N, t); }},
      {"fermion_quadrature", StatisticsKind::fermion,
       [](std::int64_t N, double t, Statistics) { return delta_f_medium_fermion(N, t, FermiVariant::quadrature); }},
      {"fermion_stoner", StatisticsKind::fermion,
       [](std::int64_t N, double t, Statistics) { return delta_f_medium_fermion(N, t, FermiVariant::stoner); }},
      {"fermion_tanh", StatisticsKind::fermion,
       [](std::int64_t N, double t, Statistics) {
         return delta_f_medium_fermion(N, t, FermiVariant::tanh_surrogate);
       }},
      {"boson_two_level", StatisticsKind::boson,
       [](std::int64_t N, double t, Statistics) { return boson_two_level_delta_f(N, t); }},
      {"fermion_two_level", StatisticsKind::fermion,
       [](std::int64_t N, double t, Statistics) { return fermion_step_delta_f(N, t, StepModel::two_level); }},
      {"fermion_semi_four", StatisticsKind::fermion,
       [](std::int64_t N, double t, Statistics) { return fermion_step_delta_f(N, t, StepModel::semi_four_level); }},
  };
  return r;
}

int out_digits(const RunConfig& cfg) { return std::min(cfg.output.digits, 17); }

// Simple table: ordered columns, every cell already formatted.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << "\n";
  }
}

Json table_json(const Table& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row = Json::object();
    for (std::size_t i = 0; i < r.size(); ++i) row[t.columns[i]] = r[i];
    rows.push_back(std::move(row));
  }
  return rows;
}

Json config_json(const RunConfig& cfg) {
  Json c = Json::object();
  c["statistics"] = to_string(cfg.statistics);
  c["N"] = std::to_string(cfg.particles_N);
  c["t"] = format_grid(cfg.t_grid);
  c["digits"] = std::to_string(cfg.output.digits);
  c["working_digits"] = std::to_string(cfg.precision.working_digits);
  c["abs_tol"] = format_number(cfg.precision.target_abs_error, 15);
  return c;
}

// Writes to the configured path, or to `out` when none is set.
bool emit(const RunConfig& cfg, std::ostream& out, std::ostream& err, const std::string& text) {
  if (cfg.output.path.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(cfg.output.path, std::ios::binary);
  if (!f) {
    err << "cannot open output file '" << cfg.output.path << "'\n";
    return false;
  }
  f << text;
  return bool(f);
}

double regime_scale(const RunConfig& cfg) {
  const double n = double(cfg.particles_N);
  return cfg.statistics.is_boson() ? n : n * n;
}

const char* regime_window(double t, double scale) {
  if (t < 0.05 * scale) return "low";
  if (t <= 20 * scale) return "medium";
  return "high";
}

std::optional<std::vector<CurvePoint>> oracle_curve(const RunConfig& cfg, std::ostream& err) {
  const auto grid = make_grid(cfg.t_grid.t_min, cfg.t_grid.t_max, cfg.t_grid.points, cfg.t_grid.log_spacing);
  const auto sweep = sweep_curve(cfg.statistics, cfg.particles_N, grid, cfg.precision, cfg.jobs);
  if (!sweep.ok()) {
    for (const auto& f : sweep.failures)
      err << "numeric failure at t = " << format_number(f.t, 17) << ": " << f.message << "\n";
    return std::nullopt;
  }
  std::vector<CurvePoint> pts;
  for (const auto& p : sweep.points) pts.push_back(*p);
  return pts;
}

}  // namespace

const std::vector<std::string>& approximation_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& a : registry()) v.push_back(a.name);
    return v;
  }();
  return names;
}

std::string format_number(double v, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, std::clamp(digits, 1, 17));
  return std::string(buf, r.ptr);
}

int cmd_curve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto pts = oracle_curve(cfg, err);
  if (!pts) return kExitNumeric;
  const int d = out_digits(cfg);
  Table t{{"t", "alpha_plus", "alpha_minus", "f_plus", "f_minus", "delta_f", "delta_f_error"}, {}};
  for (const auto& p : *pts) {
    t.rows.push_back({format_number(p.t, d), format_number(p.alpha_plus, d), format_number(p.alpha_minus, d),
                      format_number(p.f_plus, d), format_number(p.f_minus, d), format_number(p.delta_f, d),
                      format_number(p.delta_f_error, 3)});
  }
  std::ostringstream s;
  if (cfg.output.format == OutputFormat::csv) {
    write_csv(s, t);
  } else {
    Json j = Json::object();
    j["schema_version"] = kSchemaVersion;
    j["command"] = "curve";
    j["config"] = config_json(cfg);
    j["rows"] = table_json(t);
    s << j.dump(2) << "\n";
  }
  return emit(cfg, out, err, s.str()) ? kExitOk : kExitConfig;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.approximations.empty()) {
    err << "compare needs --approx with one or more of:";
    for (auto& n : approximation_names()) err << " " << n;
    err << "\n";
    return kExitConfig;
  }
  std::vector<const Approximation*> chosen;
  for (const auto& name : cfg.approximations) {
    auto it = std::find_if(registry().begin(), registry().end(), [&](auto& a) { return a.name == name; });
    if (it == registry().end()) {
      err << "unknown approximation '" << name << "'; valid names:";
      for (auto& n : approximation_names()) err << " " << n;
      err << "\n";
      return kExitConfig;
    }
    if (it->only && *it->only != cfg.statistics.kind) {
      err << "approximation '" << name << "' does not apply to " << to_string(cfg.statistics) << "s\n";
      return kExitConfig;
    }
    chosen.push_back(&*it);
  }
  const auto pts = oracle_curve(cfg, err);
  if (!pts) return kExitNumeric;

  const int d = out_digits(cfg);
  const double scale = regime_scale(cfg);
  Table rows{{"t", "approximation", "value", "oracle", "abs_error", "rel_error", "status"}, {}};
  std::map<std::pair<std::string, std::string>, std::vector<double>> rel_by_window;
  for (const auto* a : chosen) {
    for (const auto& p : *pts) {
      std::string value, abs_e, rel_e, status = "ok";
      try {
        const double v = a->eval(cfg.particles_N, p.t, cfg.statistics);
        const double ae = std::abs(v - p.delta_f);
        const double re = ae / std::abs(p.delta_f);
        value = format_number(v, d);
        abs_e = format_number(ae, d);
        rel_e = format_number(re, d);
        rel_by_window[{a->name, regime_window(p.t, scale)}].push_back(re);
      } catch (const Error& e) {
        status = "out_of_domain";
      }
      rows.rows.push_back({format_number(p.t, d), a->name, value, format_number(p.delta_f, d), abs_e, rel_e, status});
    }
  }
  Table summary{{"approximation", "window", "count", "max_rel_error", "median_rel_error"}, {}};
  for (const auto* a : chosen) {
    for (const char* w : {"low", "medium", "high"}) {
      auto it = rel_by_window.find({a->name, w});
      if (it == rel_by_window.end()) continue;
      auto v = it->second;
      std::sort(v.begin(), v.end());
      const double median = v.size() % 2 ? v[v.size() / 2] : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
      summary.rows.push_back({a->name, w, std::to_string(v.size()), format_number(v.back(), d), format_number(median, d)});
    }
  }
  std::ostringstream s;
  if (cfg.output.format == OutputFormat::csv) {
    write_csv(s, rows);
    s << "\n";
    write_csv(s, summary);
  } else {
    Json j = Json::object();
    j["schema_version"] = kSchemaVersion;
    j["command"] = "compare";
    j["config"] = config_json(cfg);
    j["rows"] = table_json(rows);
    j["summary"] = table_json(summary);
    s << j.dump(2) << "\n";
  }
  return emit(cfg, out, err, s.str()) ? kExitOk : kExitConfig;
}

int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> kinds = {"minimum", "inflections", "equilibrium_shift", "transfer", "zero_t"};
  const auto& kind = cfg.report_kind;
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
    err << "unknown report kind '" << kind << "'; valid kinds: minimum inflections equilibrium_shift transfer zero_t\n";
    return kExitConfig;
  }
  if (kind == "inflections" && cfg.statistics.is_boson()) {
    err << "inflections report requires --stat fermion\n";
    return kExitConfig;
  }
  const int d = out_digits(cfg);
  const std::int64_t N = cfg.particles_N;
  const double n = double(N);
  std::vector<std::pair<std::string, std::string>> fields;
  auto put = [&](const std::string& k, double v) { fields.emplace_back(k, format_number(v, d)); };
  auto put_text = [&](const std::string& k, const std::string& v) { fields.emplace_back(k, v); };

  if (kind == "minimum") {
    const auto m = locate_minimum(cfg.statistics, N, cfg.precision);
    const double scale = cfg.statistics.is_boson() ? n : n * n;
    put("t_min", m.t_min);
    put("delta_f_min", m.delta_f_min);
    put("delta_f_error", m.delta_f_error);
    put_text("scale", cfg.statistics.is_boson() ? "N" : "N^2");
    put("t_min_scaled", m.t_min / scale);
    put("delta_f_min_scaled", m.delta_f_min / scale);
    put_text("method", "golden-section in log t after a 17-probe unimodality scan");
  } else if (kind == "inflections") {
    const auto r = locate_inflections(cfg.statistics, N, cfg.precision);
    const auto model = step_inflection_points(StepModel::semi_four_level);
    put("t_begin", r.t_begin);
    put("t_end", r.t_end);
    put("t_begin_over_N", r.t_begin / n);
    put("t_end_over_N", r.t_end / n);
    put("t_end_over_t_begin", r.t_end / r.t_begin);
    put_text("sign_changes", std::to_string(r.sign_changes.size()));
    put("semi_four_level_t_begin_over_N", model.first);
    put("semi_four_level_t_end_over_N", model.second);
    put_text("method", "second divided difference on a 241-point log grid, refined by Brent");
  } else if (kind == "equilibrium_shift") {
    const double t = cfg.at.value_or(0.0);
    const auto s = t > 0 ? shift_finite_t(cfg.statistics, N, t, cfg.precision) : shift_zero_t(cfg.statistics, N);
    put("t", t);
    put("xi", s.xi);
    put("N_xi", n * s.xi);
    put("r_ratio", s.r_ratio);
    put_text("method", s.method == ShiftMethod::zero_t_closed_form ? "zero_t_closed_form" : "finite_t_solve");
  } else if (kind == "transfer") {
    const auto tr = transfer_zero_t(cfg.statistics, N);
    put("N_plus", tr.N_plus);
    put("N_minus", tr.N_minus);
    put_text("N_plus_rounded", std::to_string(tr.N_plus_rounded));
    put_text("N_minus_rounded", std::to_string(tr.N_minus_rounded));
    put("ratio", tr.N_plus / tr.N_minus);
  } else {
    const auto z = zero_t_forces(cfg.statistics, N);
    put("f_plus", to_double(z.f_plus));
    put("f_minus", to_double(z.f_minus));
    put("delta_f", to_double(z.delta_f));
    put_text("f_plus_exact", z.f_plus.str());
    put_text("f_minus_exact", z.f_minus.str());
    put_text("delta_f_exact", z.delta_f.str());
  }

  std::ostringstream s;
  if (cfg.output.format == OutputFormat::csv) {
    s << "key,value\n";
    s << "report," << kind << "\nstatistics," << to_string(cfg.statistics) << "\nN," << N << "\n";
    for (auto& [k, v] : fields) s << k << "," << v << "\n";
  } else {
    Json j = Json::object();
    j["schema_version"] = kSchemaVersion;
    j["command"] = "report";
    j["report"] = kind;
    j["config"] = config_json(cfg);
    Json f = Json::object();
    for (auto& [k, v] : fields) f[k] = v;
    j["fields"] = std::move(f);
    s << j.dump(2) << "\n";
  }
  return emit(cfg, out, err, s.str()) ? kExitOk : kExitConfig;
}

int cmd_show_config(const RunConfig& cfg, std::ostream& out) {
  out << cfg.to_key_values();
  return kExitOk;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Net force on a Dirichlet/Neumann partition in a 1D quantum well"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  bool show_flag = false;
  app.add_flag("--show-config", show_flag, "print the effective settings and exit");

  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  const std::map<std::string, std::string> help = {
      {"stat", "boson or fermion"},
      {"N", "particles per half well"},
      {"t", "temperature grid min:max:points:log|linear"},
      {"digits", "significant digits of numeric output fields"},
      {"working-digits", "initial working precision in decimal digits"},
      {"max-digits", "precision ceiling for escalation"},
      {"abs-tol", "absolute error target"},
      {"rel-tol", "relative error target"},
      {"jobs", "worker threads for sweeps (0 = runtime default)"},
      {"out", "output file (default stdout)"},
      {"format", "csv or json"},
      {"approx", "comma-separated approximation names for compare"},
      {"kind", "report kind: minimum, inflections, equilibrium_shift, transfer, zero_t"},
      {"at", "temperature for point reports such as equilibrium_shift"},
  };
  for (const auto& key : config_keys()) options[key] = app.add_option("--" + key, values[key], help.at(key));
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file, applied before individual flags");

  auto* curve = app.add_subcommand("curve", "oracle force curve on a temperature grid");
  auto* compare = app.add_subcommand("compare", "approximations against the oracle");
  auto* report = app.add_subcommand("report", "minimum, inflections, equilibrium shift, transfer or zero-T values");
  auto* show = app.add_subcommand("show-config", "print the effective settings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  RunConfig cfg;
  try {
    if (const char* env = std::getenv("PARTITION_WELL_CONFIG"); env && *env) apply_config_file(cfg, env);
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    for (const auto& key : config_keys())
      if (options[key]->count() > 0) apply_setting(cfg, key, values[key]);
    cfg.validate();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (show_flag || show->parsed()) return cmd_show_config(cfg, out);
    if (curve->parsed()) return cmd_curve(cfg, out, err);
    if (compare->parsed()) return cmd_compare(cfg, out, err);
    if (report->parsed()) return cmd_report(cfg, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.kind() == ErrorKind::invalid_argument ? kExitConfig : kExitNumeric;
  }
  err << app.help();
  return kExitConfig;
}

}  // namespace pwell::cli
