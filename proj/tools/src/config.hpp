#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ftwave/profiles.hpp"

namespace ftwave::cli {

enum ExitCode : int { kOk = 0, kConfig = 2, kIo = 3, kNoSolution = 4, kVerifyFailed = 5 };

/// Failure carrying the process exit code.
class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

struct RunConfig {
  ModelParams params;
  std::optional<double> mu;
  std::optional<double> omega_min;
  std::optional<double> omega_max;
  double omega_step = 0.05;
  std::filesystem::path out_dir = ".";
  std::vector<std::string> formats{"csv", "json"};
  bool verify = false;
  /// Zero selects the automatic extent.
  double grid_half_extent = 0.0;
  int grid_points = 4000;
  std::string suite = "all";

  bool wants(const std::string& format) const;
};

/// Splits "csv,json" and rejects anything outside {csv, json, svg}.
std::vector<std::string> parse_formats(const std::string& list);

/// Applies keys named like the flags: "sigma", "omega-min", "grid.points" or {"grid": {"points": ...}}.
void apply_json(RunConfig& config, const nlohmann::json& doc);

nlohmann::json read_config_file(const std::filesystem::path& path);

}  // namespace ftwave::cli
