#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pwell/cli/run_config.hpp"

namespace pwell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kSchemaVersion = 1;

/// Names accepted by `compare --approx`.
const std::vector<std::string>& approximation_names();

/// Decimal text with `digits` significant digits (at most 17), independent of locale.
std::string format_number(double v, int digits);

int cmd_curve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_show_config(const RunConfig& cfg, std::ostream& out);

/// Full command-line entry point. Settings are layered as defaults, then the
/// file named by PARTITION_WELL_CONFIG, then --config, then individual flags.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pwell::cli
