#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pwell/core_model.hpp"
#include "pwell/precision.hpp"

namespace pwell::cli {

/// Raised for anything the user can fix in flags or config files (exit 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TGrid {
  double t_min = 0.01;
  double t_max = 1e6;
  int points = 200;
  bool log_spacing = true;
};

enum class OutputFormat { csv, json };

struct OutputSettings {
  OutputFormat format = OutputFormat::csv;
  std::string path;  // empty writes to stdout
  int digits = 12;   // significant digits per numeric field
};

struct RunConfig {
  Statistics statistics = Statistics::boson();
  std::int64_t particles_N = 100;
  TGrid t_grid;
  PrecisionPolicy precision;
  OutputSettings output;
  int jobs = 0;
  std::vector<std::string> approximations;
  std::string report_kind = "minimum";
  std::optional<double> at;  // temperature for point reports

  void validate() const;
  /// All settings as key=value lines, in the same syntax the config file accepts.
  std::string to_key_values() const;
};

/// Recognised keys of the config file and of `--key value` flags.
const std::vector<std::string>& config_keys();

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Applies `key=value` lines; blank lines and lines starting with '#' are skipped.
void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& origin);

void apply_config_file(RunConfig& cfg, const std::string& path);

TGrid parse_grid(const std::string& text);

std::string format_grid(const TGrid& grid);

}  // namespace pwell::cli
